from polynorm.norm.route_parent import NormRoute
from polynorm.norm.definition import DefinitionNorm, DEFINITION_ROUTE, norm_def, active_pair
from polynorm.norm.width import GeometricNorm, GEOMETRIC_ROUTE, norm_geometric
from polynorm.norm.specialized import (
    Indeterminate, SpecializedNorm, SPECIALIZED_ROUTE, norm_specialized
)
from polynorm.norm.decomposition import (
    Factorization, factor_norms, norm_decomposed, segment_forms, format_norm_formula,
    factor_ball_vertices
)
from polynorm.norm.ball import NormBall, reduced_ball, reduced_newton_polytope
from polynorm.norm.symmetric import (
    centered_newton_polytope, reduced_dual_newton_polytope, symmetric_ball,
    symmetric_facet_formula, half_space_presentation_symmetric
)

NORM_ROUTES = {
    route.name: route for route in (DEFINITION_ROUTE, GEOMETRIC_ROUTE, SPECIALIZED_ROUTE)
}
