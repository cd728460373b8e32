"""Non-isolated singularities and stratified formulas.

The union of two planes ``xy = 0`` in P^3 is singular along a line.  The
constructible function mu equals -1 on that line, and both stratified
formulas reproduce the Milnor class computed from the projective degrees.
"""

from milnorclass import (
    ChowClass,
    HypersurfaceProblem,
    StratPoset,
    Stratum,
    alpha,
    characteristic_classes,
    csm_of_linear_subspace,
    sectional_milnor_class,
    stratified_milnor_class,
)

r = characteristic_classes(HypersurfaceProblem.from_string(3, "x*y"))
print("projective degrees:", r.degrees.g)
print("segre :", r.segre.segre)
print("csm   :", r.csm, f"(chi = {r.euler})")
print("milnor:", r.milnor)

# The line stratum: closure class c_*(P^1), and a generic quadric Z' meets it in 2 points.
line = Stratum("line", dim=1, mu=-1,
               closure_csm=csm_of_linear_subspace(1, 3),
               closure_cap_zprime_csm=ChowClass.point(3) * 2)
poset = StratPoset(n=3, d=2, strata=(line,))
print("alpha :", alpha(poset))
print("stratified formula:", stratified_milnor_class(poset))
print("sectional formula :", sectional_milnor_class(poset))

# The same data ships as JSON for the command line:
#   milnorclass strata --input tests/data/two_planes.json
