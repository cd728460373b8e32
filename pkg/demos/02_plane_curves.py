"""Characteristic classes of singular plane curves.

For a plane curve with isolated singularities the Milnor class is the sum
of the Milnor numbers of its singular points, placed on ``[P0]``.  The CSM
class integrates to the topological Euler characteristic.
"""

from milnorclass import HypersurfaceProblem, characteristic_classes, total_tjurina_number

curves = {
    "smooth cubic": "x^3 + y^3 + z^3",
    "nodal cubic": "y^2*z - x^3 - x^2*z",
    "cuspidal cubic": "y^2*z - x^3",
    "three lines": "x*y*z",
    "tricuspidal quartic": "x^2*y^2 + y^2*z^2 + z^2*x^2 - 2*x*y*z*(x + y + z)",
}

print(f"{'curve':<20} {'degrees':<12} {'csm':<20} {'milnor':<8} chi  tau")
for name, text in curves.items():
    prob = HypersurfaceProblem.from_string(2, text)
    r = characteristic_classes(prob)
    print(f"{name:<20} {str(r.degrees.g):<12} {str(r.csm):<20} {str(r.milnor):<8} "
          f"{str(r.euler):<4} {total_tjurina_number(prob)}")

# The Euler characteristic of a smooth curve of degree d is 2 - (d-1)(d-2);
# each singular point lowers the total by its Milnor number.
