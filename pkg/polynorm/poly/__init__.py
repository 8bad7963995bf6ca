from polynorm.poly.laurent import (
    LaurentPolynomial, UnivariatePolynomial, multiply, power, support,
    symmetry_center, symmetry_sign, specialize, degree_span, substitute_monomials
)
from polynorm.poly.parser import parse, tokenize, infer_variables
