"""Specializing to a nearby smooth hypersurface.

Deform ``f`` to ``f - t g`` with ``g`` generic of the same degree.  The
specialization of the constant function 1 is 1 on ``Z ∩ Z'`` and
``1 + (-1)^(n-1) mu`` elsewhere; its CSM class equals the Fulton class,
which is the CSM class of any smooth member of the family.
"""

from milnorclass import (
    ChowClass,
    HypersurfaceProblem,
    StratPoset,
    Stratum,
    characteristic_classes,
    csm_of_linear_subspace,
    fulton_class,
    sigma_f,
    specialization_class,
)

r = characteristic_classes(HypersurfaceProblem.from_string(3, "x*y"))

# Refine the singular line so that the two points on the quadric Z' are strata.
point = csm_of_linear_subspace(0, 3)
strata = (
    Stratum("line", 1, -1, csm_of_linear_subspace(1, 3), ChowClass.point(3) * 2),
    Stratum("p1", 0, -1, point),
    Stratum("p2", 0, -1, point),
)
poset = StratPoset(3, 2, strata, (("line", "p1"), ("line", "p2")))

sigma = sigma_f(poset, zprime_meets={"p1", "p2"})
print("sigma values:", sigma.values, "generic value:", sigma.generic)
print("c_*(sigma)   :", sigma.csm(r.csm))
print("from formula :", specialization_class(poset, r.csm))
print("fulton class :", fulton_class(3, 2))
