"""Integer-order Bessel functions of the first kind and their positive zeros.

Double precision and self-contained: an ascending power series where it is
cancellation-safe, Miller downward recurrence with even-order normalization
everywhere else.  Absolute error stays below 1e-12 for |z| <= 200 and
|order| <= 50, which covers every drive amplitude this package touches
(the effective Bessel argument 4*g1/Omega rarely exceeds ~60).

Negative orders and negative arguments are folded back with the parity
identity J_{-n}(z) = (-1)^n J_n(z) = J_n(-z) before evaluation.
"""

from __future__ import annotations

import math
import operator
from functools import lru_cache

__all__ = ["bessel_j", "bessel_zero"]

# Terms of the ascending series reach ~I_n(z) in magnitude before they decay,
# so double-precision cancellation caps the usable range at I_n(z) ~ 1e2.
# z <= 7 + order/2 keeps the absolute rounding error comfortably under 1e-13.
_SERIES_BASE = 7.0

_RESCALE = 1e250  # magnitude guard for the unnormalized Miller recurrence


def bessel_j(order: int, z: float) -> float:
    """J_order(z) for integer order.

    Parameters
    ----------
    order : int
        Any integer; folded to non-negative order by parity.
    z : float
        Finite real argument.
    """
    order = operator.index(order)
    z = float(z)
    if not math.isfinite(z):
        raise ValueError(f"bessel_j argument must be finite, got {z!r}")
    sign = 1.0
    if order < 0:
        order = -order
        if order % 2:
            sign = -sign
    if z < 0.0:
        z = -z
        if order % 2:
            sign = -sign
    if z == 0.0:
        return 1.0 if order == 0 else 0.0
    if z <= _SERIES_BASE + 0.5 * order:
        return sign * _ascending_series(order, z)
    return sign * _miller(order, z)


def _ascending_series(order: int, z: float) -> float:
    # J_n(z) = sum_m (-1)^m (z/2)^(2m+n) / (m! (m+n)!), Kahan-compensated.
    half = 0.5 * z
    term = half**order / math.factorial(order)
    total = term
    comp = 0.0
    zq = half * half
    m = 1
    while True:
        term *= -zq / (m * (m + order))
        y = term - comp
        t = total + y
        comp = (t - total) - y
        total = t
        if abs(term) <= 1e-17 * abs(total) + 5e-324 or m > 500:
            return total
        m += 1


def _miller(order: int, z: float) -> float:
    # Downward recurrence f_{m-1} = (2m/z) f_m - f_{m+1} from a start index
    # safely above both the target order and the turning point m ~ z, then
    # normalize with J_0 + 2*(J_2 + J_4 + ...) = 1.
    top = max(order, int(z) + 1)
    start = top + 18 + int(14.0 * max(z, 1.0) ** (1.0 / 3.0)) + 2 * int(math.sqrt(order + 1))
    if start % 2:
        start += 1
    fp = 0.0  # f at index m+1
    fc = 1e-30  # f at index m
    jval = fc if order == start else 0.0
    ssum = 2.0 * fc  # start index is even and >= 2
    for m in range(start, 0, -1):
        fm = (2.0 * m / z) * fc - fp
        fp = fc
        fc = fm
        idx = m - 1
        if idx == order:
            jval = fc
        if idx == 0:
            ssum += fc
        elif idx % 2 == 0:
            ssum += 2.0 * fc
        if abs(fc) > _RESCALE:
            inv = 1.0 / _RESCALE
            fc *= inv
            fp *= inv
            ssum *= inv
            jval *= inv
    return jval / ssum


@lru_cache(maxsize=4096)
def bessel_zero(order: int, index: int) -> float:
    """index-th positive zero of J_order (index counts from 1).

    Sign-change scan in steps of pi/4 starting just above |order| (the first
    zero of J_n sits beyond sqrt(n(n+2))), then bisection down to a bracket a
    few ulps wide.  The residual |J_order(zero)| lands near machine level,
    well below the guaranteed 1e-11.
    """
    order = abs(operator.index(order))  # zeros are parity-invariant
    index = operator.index(index)
    if index < 1:
        raise ValueError(f"zero index must be >= 1, got {index}")
    step = 0.25 * math.pi  # consecutive zeros are never closer than ~3.1
    x = max(float(order), 0.5)
    limit = x + 4.0 * (order + 1.0) ** (1.0 / 3.0) + (index + 6) * math.pi + 10.0
    f_prev = bessel_j(order, x)
    found = 0
    while x < limit:
        x_next = x + step
        f_next = bessel_j(order, x_next)
        if f_next == 0.0:
            found += 1
            if found == index:
                return x_next
        elif f_prev * f_next < 0.0:
            found += 1
            if found == index:
                return _bisect(order, x, x_next, f_prev)
        x, f_prev = x_next, f_next
    raise RuntimeError(
        f"failed to bracket zero {index} of J_{order} inside [{max(order, 0.5)}, {limit:.2f}]"
    )


def _bisect(order: int, a: float, b: float, fa: float) -> float:
    fa_neg = fa < 0.0
    while b - a > 4.0 * math.ulp(b):
        mid = 0.5 * (a + b)
        if mid <= a or mid >= b:
            break
        fm = bessel_j(order, mid)
        if fm == 0.0:
            return mid
        if (fm < 0.0) != fa_neg:
            b = mid
        else:
            a = mid
    return 0.5 * (a + b)
