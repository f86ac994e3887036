"""(-1)-curves on the blow-up of P^3 at up to eight general points.

Enumerates the Weyl-orbit of the line through two points under cubic
Cremona reflections, then shows how the classes meeting a system
negatively account for its speciality."""

from fatpoints import (SystemP3, enumerate_minus_one, full_dim,
                       negative_curves, pair)

print("(-1)-curve classes through <= 8 points, degree <= 6:")
for c in enumerate_minus_one(8, degree_bound=6):
    print(f"    {c}")
print()

for s in [SystemP3(3, (3, 3, 3)), SystemP3(4, (3, 3)),
          SystemP3(6, (4, 4, 4))]:
    rep = full_dim(s)
    print(f"{s}: dim = {rep.dim}, vdim = {rep.vdim}, "
          f"speciality = {rep.speciality}")
    for rec in negative_curves(s):
        print(f"    meets {rec.curve} with excess t = {rec.t} "
              f"(pairing {pair(rec.curve, s)}), "
              f"contributes {rec.contribution}")
    print()
