"""Point counts, the zeta numerator and the Jacobian order."""

import logging
import math
from typing import List, NamedTuple, Optional

import numpy as np

from ..core.errors import ArithmeticCheckError
from .cantor import random_divisor, scalar_mul
from .curve import HyperellipticCurve

logger = logging.getLogger(__name__)

POINT_COUNT_LIMIT = 4096


def point_count(curve: HyperellipticCurve, i: int) -> int:
    """#C(F_(q^i)): q^i + 1 + sum over x of chi(f(x)), one point at infinity."""
    ext = curve.field.extension(i)
    xs = np.arange(ext.order, dtype=np.int64)
    values = ext.evaluate(list(curve.f), xs)
    return ext.order + 1 + int(ext.chi_table[values].sum())


class ZetaData(NamedTuple):
    """P(T) = 1 + a_1 T + ... + a_2g T^2g with h = P(1)."""
    counts: List[int]
    coefficients: List[int]
    h: int
    verified_degree: Optional[int]


def l_polynomial(q: int, g: int, counts: List[int]) -> List[int]:
    """Coefficients a_0 .. a_2g from N_1 .. N_g, completed by a_(2g-i) = q^(g-i) a_i."""
    power_sums = [q ** (i + 1) + 1 - counts[i] for i in range(g)]
    e = [1]
    for k in range(1, g + 1):
        # Newton: k e_k = sum_{i=1..k} (-1)^(i-1) e_(k-i) p_i
        total = sum((-1) ** (i - 1) * e[k - i] * power_sums[i - 1] for i in range(1, k + 1))
        if total % k:
            raise ArithmeticCheckError("Newton identities give a non-integral coefficient", {"k": k})
        e.append(total // k)
    a = [(-1) ** k * e[k] for k in range(g + 1)]
    full = a + [0] * g
    for i in range(g):
        full[2 * g - i] = q ** (g - i) * a[i]
    return full


def predicted_count(q: int, coefficients: List[int], i: int) -> int:
    """N_i implied by P(T): q^i + 1 - sum of i-th powers of the reciprocal roots."""
    twog = len(coefficients) - 1
    e = [(-1) ** k * coefficients[k] for k in range(twog + 1)]
    p = []
    for k in range(1, i + 1):
        # p_k = sum_{j=1..k-1} (-1)^(j-1) e_j p_(k-j) + (-1)^(k-1) k e_k
        val = sum((-1) ** (j - 1) * e[j] * p[k - j - 1] for j in range(1, min(k, twog + 1)))
        if k <= twog:
            val += (-1) ** (k - 1) * k * e[k]
        p.append(val)
    return q ** i + 1 - p[i - 1]


def weil_interval(q: int, g: int):
    return (math.sqrt(q) - 1) ** (2 * g), (math.sqrt(q) + 1) ** (2 * g)


def jacobian_order(curve: HyperellipticCurve, check_degree: bool = True) -> ZetaData:
    """h = P(1) from point counts over F_(q^i), i <= g.

    When F_(q^(g+1)) is small enough its point count is compared with the
    one predicted by the completed polynomial, which tests the functional
    equation; a mismatch raises ArithmeticCheckError.
    """
    q, g = curve.q, curve.genus
    counts = [point_count(curve, i) for i in range(1, g + 1)]
    coeffs = l_polynomial(q, g, counts)
    h = sum(coeffs)
    verified = None
    if check_degree and q ** (g + 1) <= POINT_COUNT_LIMIT:
        actual = point_count(curve, g + 1)
        expected = predicted_count(q, coeffs, g + 1)
        if actual != expected:
            raise ArithmeticCheckError(
                f"Functional equation fails: N_{g + 1} = {actual}, predicted {expected}",
                {"f": list(curve.f), "q": q},
            )
        verified = g + 1
    low, high = weil_interval(q, g)
    if not (low - 1e-9 <= h <= high + 1e-9):
        raise ArithmeticCheckError(f"h = {h} outside the Weil interval [{low:.3f}, {high:.3f}]",
                                   {"f": list(curve.f), "q": q})
    return ZetaData(counts, coeffs, h, verified)


def check_annihilation(curve: HyperellipticCurve, h: int, rng: np.random.Generator, count: int) -> None:
    """Raise ArithmeticCheckError unless h kills ``count`` random divisors."""
    for _ in range(count):
        d = random_divisor(curve, rng)
        if not scalar_mul(h, d, curve).is_identity:
            raise ArithmeticCheckError(f"h = {h} does not annihilate {d}", {"f": list(curve.f)})
