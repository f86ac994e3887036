"""Dimensions of a few linear systems of surfaces in P^3, with the
reduction trace: fixed-plane removal, cubic Cremona reflections, and
the closed formula at the standard-form terminal."""

from fatpoints import SystemP3, full_dim

EXAMPLES = [
    SystemP3(3, (3, 3, 3)),        # cone over three triple points
    SystemP3(6, (4, 4, 4)),
    SystemP3(4, (3, 3, 3, 3, 3)),  # empty
    SystemP3(6, (3, 3, 3, 3, 3)),
    SystemP3(5, (4, 4, 2, 2)),
    SystemP3(12, (7,) * 8),
]

for s in EXAMPLES:
    rep = full_dim(s)
    tag = "special" if rep.special else "non-special"
    print(f"{s}:  dim = {rep.dim}, vdim = {rep.vdim}, "
          f"speciality = {rep.speciality}  ({tag})")
    for step in rep.trace:
        print(f"    {step.kind:13s} {step.before} -> {step.after}")
    print(f"    terminal standard form: {rep.terminal}")
    print()
