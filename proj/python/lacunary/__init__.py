"""Umbral verification of Laguerre lacunary generating functions."""

from fractions import Fraction

from . import _lacunary
from ._lacunary import (
    ConfigError,
    DomainError,
    LacunaryError,
    NotFound,
    assoc_laguerre,
    bessel_i,
    borel_j0,
    check_coefficients,
    derive_aux_polynomial,
    h_tricomi,
    hermite,
    laguerre,
    laguerre_derivative_suite,
    list_cases,
    mittag_leffler,
    pseudo_gaussian_suite,
    registry_ids,
    tricomi,
    verify,
    wright,
)

__all__ = [
    "ConfigError",
    "DomainError",
    "LacunaryError",
    "NotFound",
    "assoc_laguerre",
    "assoc_laguerre_exact",
    "bessel_i",
    "borel_j0",
    "check_coefficients",
    "cli",
    "derive_aux_polynomial",
    "h_tricomi",
    "hermite",
    "laguerre",
    "laguerre_derivative_suite",
    "laguerre_exact",
    "lambda_poly_exact",
    "list_cases",
    "mittag_leffler",
    "pseudo_gaussian_suite",
    "registry_ids",
    "tricomi",
    "umbral_laguerre",
    "verify",
    "wright",
]


def _q(v):
    return str(Fraction(v))


def laguerre_exact(n, x, y=1):
    return Fraction(_lacunary.laguerre_exact(n, _q(x), _q(y)))


def assoc_laguerre_exact(n, alpha, x, y=1):
    return Fraction(_lacunary.assoc_laguerre_exact(n, _q(alpha), _q(x), _q(y)))


def lambda_poly_exact(n, alpha, beta, x, y=1):
    return Fraction(_lacunary.lambda_poly_exact(n, int(alpha), int(beta), _q(x), _q(y)))


def umbral_laguerre(n, x, y=1):
    """(y - c x)^n reduced against the vacuum."""
    return Fraction(_lacunary.umbral_laguerre(n, _q(x), _q(y)))


def cli(*args):
    """Runs the command-line front end in-process; returns (exit_code, stdout, stderr)."""
    return tuple(_lacunary.cli_main([str(a) for a in args]))
