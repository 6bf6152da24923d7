"""Cantor's algorithm on Jacobians of odd-degree hyperelliptic curves."""

import itertools
import logging

import numpy as np

from ..core.errors import ValidationError
from .curve import HyperellipticCurve, MumfordDivisor

logger = logging.getLogger(__name__)


def negate(d: MumfordDivisor, curve: HyperellipticCurve) -> MumfordDivisor:
    """The hyperelliptic involution (u, v) -> (u, -v)."""
    return MumfordDivisor(d.u, tuple(curve.ring.neg(list(d.v))))


def cantor_add(d1: MumfordDivisor, d2: MumfordDivisor, curve: HyperellipticCurve) -> MumfordDivisor:
    """Composition followed by reduction to weight at most g."""
    R = curve.ring
    f = list(curve.f)
    u1, v1, u2, v2 = list(d1.u), list(d1.v), list(d2.u), list(d2.v)
    if not u1 or not u2:
        raise ValidationError("Divisor with zero u")

    # composition: d = s1 u1 + s2 u2 + s3 (v1 + v2)
    d0, e1, e2 = R.xgcd(u1, u2)
    d, c1, c2 = R.xgcd(d0, R.add(v1, v2))
    s1, s2, s3 = R.mul(c1, e1), R.mul(c1, e2), c2
    u = R.exact_quo(R.mul(u1, u2), R.mul(d, d))
    numer = R.add(R.add(R.mul(R.mul(s1, u1), v2), R.mul(R.mul(s2, u2), v1)),
                  R.mul(s3, R.add(R.mul(v1, v2), f)))
    v = R.rem(R.exact_quo(numer, d), u)

    # reduction
    while R.deg(u) > curve.genus:
        u = R.monic(R.exact_quo(R.sub(f, R.mul(v, v)), u))
        v = R.rem(R.neg(v), u)
    u = R.monic(u)
    v = R.rem(v, u)
    return MumfordDivisor(tuple(u), tuple(v))


def scalar_mul(k: int, d: MumfordDivisor, curve: HyperellipticCurve) -> MumfordDivisor:
    """k * d by double-and-add; negative k uses the involution."""
    if k < 0:
        return scalar_mul(-k, negate(d, curve), curve)
    out = curve.identity
    base = d
    while k:
        if k & 1:
            out = cantor_add(out, base, curve)
        base = cantor_add(base, base, curve)
        k >>= 1
    return out


def random_divisor(curve: HyperellipticCurve, rng: np.random.Generator, max_tries: int = 256) -> MumfordDivisor:
    """A reduced divisor from a random monic u of degree <= g and a random admissible v.

    Admissible v are found by trying all polynomials of degree below deg u.
    """
    R = curve.ring
    F = curve.field
    f = list(curve.f)
    g = curve.genus
    for _ in range(max_tries):
        deg_u = int(rng.integers(0, g + 1))
        if deg_u == 0:
            return curve.identity
        u = [1] + [int(c) for c in rng.integers(0, F.order, size=deg_u)]
        candidates = []
        for coeffs in itertools.product(range(F.order), repeat=deg_u):
            v = R.strip(coeffs)
            if not R.rem(R.sub(R.mul(v, v), f), u):
                candidates.append(v)
        if candidates:
            v = candidates[int(rng.integers(0, len(candidates)))]
            return MumfordDivisor(tuple(u), tuple(v))
    raise ValidationError("No admissible divisor found", {"tries": max_tries})
