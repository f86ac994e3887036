"""Cross-validation of the reduction algorithm against the
interpolation oracle: actual dimensions are computed as coranks of
condition matrices at random points over large prime fields, so
agreement on a sweep is strong evidence of correctness."""

from fatpoints import (OracleConfig, QuadricSystem, compare_systems,
                       enumerate_systems, mismatches, oracle_dim_p2,
                       oracle_dim_quadric, quadric_to_plane, vdim_quadric)

cfg = OracleConfig(samples=2, seed=7)

systems = list(enumerate_systems(dmax=5, mmax=3, rmax=6))
rows = compare_systems(systems, cfg)
bad = mismatches(rows)
print(f"sweep d <= 5, m <= 3, r <= 6: {len(rows)} systems, "
      f"{len(bad)} mismatches")
for row in rows[:8]:
    print(f"    {row.system}: fast = {row.fast_dim}, "
          f"oracle = {row.oracle_dim}")
print("    ...")
print()

print("quadric <-> plane birational correspondence (dimensions match):")
for q in [QuadricSystem((2, 2), (2, 1, 1)), QuadricSystem((3, 2), (2, 2, 1)),
          QuadricSystem((4, 4), (3, 2, 2, 2))]:
    img = quadric_to_plane(q)
    print(f"    {q} -> {img}: vdim {vdim_quadric(q)}, "
          f"oracle {oracle_dim_quadric(q, cfg)} vs {oracle_dim_p2(img, cfg)}")
