from polynorm.poly import LaurentPolynomial, parse
from polynorm.lattice import LatticeReduction, reduce
from polynorm.polytope import HalfSpace, Polytope
from polynorm.norm import (
    NORM_ROUTES, Factorization, Indeterminate, NormBall, norm_def, norm_geometric,
    norm_specialized, norm_decomposed, reduced_ball, symmetric_ball
)
