"""The Cohen-Lenstra measure and its moment identities."""

import logging
import math
from fractions import Fraction
from typing import Dict, NamedTuple

from ..core.errors import ValidationError
from ..models.abelian import AbelianLGroupType
from .abelian import aut_order, groups_up_to, sur_count

logger = logging.getLogger(__name__)

DEFAULT_TRUNCATION = 40


class MassEstimate(NamedTuple):
    """A truncated infinite-product quantity: value and a bound on |true - value|."""
    value: float
    error: float
    exact_partial: Fraction

    @property
    def interval(self):
        return (self.value - self.error, self.value + self.error)


def eta_partial(l: int, k: int) -> Fraction:
    """prod_{i=1..k} (1 - l^-i)."""
    if k < 1:
        raise ValidationError(f"truncation_k must be >= 1, got {k}")
    out = Fraction(1)
    for i in range(1, k + 1):
        out *= 1 - Fraction(1, l ** i)
    return out


def tail_sum(l: int, k: int) -> Fraction:
    """sum_{i>k} l^-i = l^-k / (l - 1)."""
    return Fraction(1, l ** k * (l - 1))


def eta(l: int, k: int = DEFAULT_TRUNCATION) -> MassEstimate:
    """prod_{i>=1} (1 - l^-i); the infinite product lies in [P_k (1 - tail), P_k]."""
    partial = eta_partial(l, k)
    error = partial * tail_sum(l, k)
    return MassEstimate(float(partial), float(error), partial)


def mu_mass(A: AbelianLGroupType, truncation_k: int = DEFAULT_TRUNCATION) -> MassEstimate:
    """mu(A) = prod_{i>=1}(1 - l^-i) / |Aut(A)|, truncated at i = truncation_k."""
    base = eta(A.l, truncation_k)
    aut = aut_order(A)
    return MassEstimate(float(base.exact_partial / aut), float(Fraction(base.error) / aut),
                        base.exact_partial / aut)


def trivial_mass_readings(l: int, truncation_k: int = DEFAULT_TRUNCATION) -> Dict[str, float]:
    """Both quantities attached to the trivial group, labelled by formula."""
    value = eta(l, truncation_k).value
    return {"prod(1-l^-i)": value, "1-prod(1-l^-i)": 1 - value}


def beta_constant(l: int, k: int = DEFAULT_TRUNCATION) -> MassEstimate:
    """prod_{i>=1}(1 - l^-i)^-1 - 1.

    With P_inf in [P_k (1 - t), P_k], 1/P_inf - 1 lies in
    [1/P_k - 1, 1/(P_k (1 - t)) - 1].
    """
    partial = eta_partial(l, k)
    t = tail_sum(l, k)
    low = 1 / partial - 1
    high = 1 / (partial * (1 - t)) - 1
    return MassEstimate(float(low), float(high - low), low)


def total_mass(l: int, max_size: int, truncation_k: int = DEFAULT_TRUNCATION) -> Fraction:
    """sum of mu(B) over |B| <= l^max_size, with the truncated product."""
    eta_k = eta_partial(l, truncation_k)
    return sum((eta_k / aut_order(B) for B in groups_up_to(l, max_size)), Fraction(0))


class MomentIdentity(NamedTuple):
    value: float
    beta_partial: float
    beta_limit: float
    beta_error: float
    groups: int


def truncated_moment_identity(A: AbelianLGroupType, order_cap: int,
                              truncation_k: int = DEFAULT_TRUNCATION) -> MomentIdentity:
    """sum over |B| <= order_cap of mu(B) |Sur(B, A)|, and the partial beta sum.

    The first approaches 1 from below as the cap grows; the second is
    sum over B != A of |Sur(B, A)| / |Aut(B)|, approaching beta_constant.
    """
    max_size = round(math.log(order_cap, A.l)) if order_cap > 1 else 0
    if A.l ** max_size != order_cap:
        raise ValidationError(f"order_cap {order_cap} is not a power of {A.l}")
    eta_k = eta_partial(A.l, truncation_k)
    moment = Fraction(0)
    beta = Fraction(0)
    groups = groups_up_to(A.l, max_size)
    for B in groups:
        s = sur_count(B, A)
        if not s:
            continue
        share = Fraction(s, aut_order(B))
        moment += eta_k * share
        if B.partition != A.partition:
            beta += share
    limit = beta_constant(A.l, truncation_k)
    logger.debug(f"Moment sum for {A.label()} through {order_cap}: {float(moment):.6f}")
    return MomentIdentity(float(moment), float(beta), limit.value, limit.error, len(groups))
