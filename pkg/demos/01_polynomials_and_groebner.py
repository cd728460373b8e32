"""Exact polynomials, Groebner bases and Hilbert series.

Run with ``python demos/01_polynomials_and_groebner.py``.
"""

from milnorclass import (
    buchberger,
    hilbert_dimension_degree,
    normal_form,
    parse_polynomial,
    quotient_dimension,
    saturate_by_poly,
)

# Polynomials parse from plain text; coefficients are exact rationals.
f = parse_polynomial("y^2*z - x^3 - x^2*z", 3)
print("f          =", f)
print("f(1, 1, 0) =", f.evaluate((1, 1, 0)))

# A reduced grevlex basis of a small affine ideal, and a normal form.
x, y = parse_polynomial("x", 2), parse_polynomial("y", 2)
gb = buchberger([x**2 - y, y**2 - x])
print("basis      =", [str(g) for g in gb])
print("NF(x^5)    =", normal_form(x**5, gb))
print("dim Q[x,y]/I =", quotient_dimension(gb))

# Hilbert polynomial of a homogeneous ideal: the twisted cubic is a curve of degree 3.
a, b, c, d = (parse_polynomial(v, 4) for v in "xyzw")
twisted = buchberger([a * c - b**2, b * d - c**2, a * d - b * c])
print("twisted cubic (dim, deg) =", hilbert_dimension_degree(twisted))

# Saturation strips an embedded component: (x^2, x*y) : y^inf = (x).
print("(x^2, xy) : y^inf =", [str(g) for g in saturate_by_poly([x**2, x * y], y)])
