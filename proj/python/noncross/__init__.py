"""Non-crossing partitions, free cumulants and dual Coxeter systems.

Exact values come back as ``fractions.Fraction``; partitions use the text
form ``"1|2 6 7|3 5|4|8"``.
"""
from fractions import Fraction

from . import _noncross as _core
from ._noncross import (
    CapExceeded,
    CoxeterContext,
    chain_census,
    enumerate_nc,
    interval_f_vector,
    is_noncrossing,
    join,
    kreweras,
    meet,
    mobius,
    nc_count,
    nc_pair_count,
    rank,
    reduced_euler_characteristic,
    refine_le,
    rotate,
    run_cli,
)

__all__ = [
    "CapExceeded", "CoxeterContext", "chain_census", "clt_scaled_moments", "cumulants_to_moments",
    "enumerate_nc", "estimate_moment", "free_add", "free_bessel_moments", "free_mult",
    "free_poisson_moments", "interval_f_vector", "is_noncrossing", "join", "kreweras", "meet",
    "mobius", "moments_to_cumulants", "nc_count", "nc_pair_count", "r_transform", "rank",
    "reduced_euler_characteristic", "refine_le", "rotate", "run_cli", "s_transform",
    "semicircle_moments",
]


def _wire(xs):
    return [str(Fraction(x)) for x in xs]


def _exact(xs):
    return [Fraction(x) for x in xs]


def cumulants_to_moments(kappa):
    return _exact(_core.cumulants_to_moments(_wire(kappa)))


def moments_to_cumulants(moments):
    return _exact(_core.moments_to_cumulants(_wire(moments)))


def free_add(m1, m2):
    return _exact(_core.free_add(_wire(m1), _wire(m2)))


def free_mult(m1, m2, route="kreweras"):
    return _exact(_core.free_mult(_wire(m1), _wire(m2), route))


def r_transform(moments):
    """Coefficients of z^0..z^N."""
    return _exact(_core.r_transform(_wire(moments)))


def s_transform(moments):
    """Coefficients of z^0..z^(N-1)."""
    return _exact(_core.s_transform(_wire(moments)))


def semicircle_moments(order):
    return _exact(_core.semicircle_moments(order))


def free_poisson_moments(order):
    return _exact(_core.free_poisson_moments(order))


def free_bessel_moments(l, order):
    return _exact(_core.free_bessel_moments(l, order))


def clt_scaled_moments(kappa, summands):
    """m_k of the normalised sum times sqrt(N) for odd k (as is for even k)."""
    return _exact(_core.clt_scaled_moments(_wire(kappa), summands))


def estimate_moment(family, l, k, n, trials, seed=1, threads=1):
    d = _core.estimate_moment(family, l, k, n, trials, seed, threads)
    d["target"] = Fraction(d["target"])
    return d
