"""Real-exponent generalized Pythagorean relation a^n + b^n = c^n.

Vertex angles, the negative-degree critical degree, triangle areas at fixed
leg or fixed perimeter, and independent checks of the closed forms.
"""

from ._validation import (
    DomainError,
    ExcludedDomainError,
    Exclusion,
    InconclusiveBracketError,
    NoCriticalDegreeError,
    RatioAtLeastTwoError,
    SideRatio,
)
from .angle import (
    AngleOutcome,
    TriangleClass,
    angle_stationarity_residual,
    classify_triangle,
    cos_vertex_arg,
    extremal_isosceles_angle,
    limit_angle_neg_inf,
    limit_angle_pos_inf,
    vertex_angle,
)
from .area import (
    AreaFamily,
    AreaValue,
    TriangleSides,
    area_dgamma_condition_residual,
    area_dn_stationarity_residual,
    area_fixed_leg,
    area_fixed_perimeter,
    area_from_angle,
    area_isosceles_extremal,
    area_limit_neg_inf_fixed_leg,
    area_limit_neg_inf_fixed_perimeter,
    area_limit_pos_inf_fixed_perimeter,
    area_max_fixed_perimeter_isosceles,
    perimeter,
    side_lengths,
)
from .claims import ClaimRecord, run_claims_report
from .critical import CriticalDegree, is_real_domain, ncrit_residual, solve_ncrit
from .oracles import finite_difference, heron_area, law_of_cosines_residual

__version__ = "0.1.0"
