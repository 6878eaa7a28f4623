from ._core import (
    Net,
    parse_formula,
    translate,
    smallest_net,
    lambda_net,
    detour_net,
    random_net,
    groebner,
    reduced_groebner,
    verify,
)

__all__ = [
    "Net",
    "parse_formula",
    "translate",
    "smallest_net",
    "lambda_net",
    "detour_net",
    "random_net",
    "groebner",
    "reduced_groebner",
    "verify",
]
