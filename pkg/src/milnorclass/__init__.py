"""Fulton, CSM and Milnor classes of projective hypersurfaces, computed exactly.

>>> from milnorclass import HypersurfaceProblem, characteristic_classes
>>> report = characteristic_classes(HypersurfaceProblem.from_string(2, "y^2*z - x^3"))
>>> str(report.milnor), report.euler
('2[P0]', Fraction(2, 1))
"""

from .charclass import (
    ClassReport,
    DegenerateInputError,
    HypersurfaceProblem,
    NonGenericSampleError,
    ProjectiveDegrees,
    characteristic_classes,
    csm_chi_and_mu,
    csm_class,
    fulton_class,
    milnor_class,
    projective_degrees,
    segre_class,
    total_tjurina_number,
)
from .chow import BlowupSeries, ChowClass, SegreData, csm_of_linear_subspace, pushforward_series
from .groebner import (
    GREVLEX,
    GroebnerBasis,
    MonomialOrder,
    buchberger,
    hilbert_dimension_degree,
    normal_form,
    quotient_dimension,
    radical_membership,
    saturate_by_poly,
)
from .polyring import AmbientSpec, Polynomial, SplitMix64, parse_polynomial, partial
from .strata import (
    ConstructibleFunction,
    StratPoset,
    Stratum,
    alpha,
    load_stratification,
    reconstruct_mu,
    sectional_milnor_class,
    sigma_f,
    specialization_class,
    stratified_milnor_class,
)

__version__ = "0.1.0"
