"""Exact checks on nonnegative integer coefficient sequences.

Sequences are plain tuples (or any sequence) of Python ints, lowest degree
first.  Nothing here touches floating point: comparisons are done by
cross-multiplying integers and root counting uses ``Fraction`` arithmetic.
"""
from __future__ import annotations

import itertools
import math
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from .errors import DegreeTooSmall, GroundSizeOutOfRange, IndexOutOfRange, ZeroPolynomial
from .topology import MAX_N, PartitionType

CoeffSeq = tuple[int, ...]


def _seq(s: Sequence[int]) -> CoeffSeq:
    s = tuple(s)
    if not s:
        raise ValueError("coefficient sequence must be nonempty")
    return s


def mode_interval(s: Sequence[int]) -> tuple[int, int] | None:
    """Return ``(k0, k1)``, the first and last mode, if ``s`` is unimodal."""
    s = _seq(s)
    n = len(s) - 1
    i = 0
    while i < n and s[i] <= s[i + 1]:
        i += 1
    # s[i] is the maximum if the rest never rises again
    k1 = i
    while i < n and s[i] >= s[i + 1]:
        i += 1
    if i != n:
        return None
    top = s[k1]
    k0 = k1
    while k0 > 0 and s[k0 - 1] == top:
        k0 -= 1
    return k0, k1


def is_unimodal(s: Sequence[int]) -> bool:
    return mode_interval(s) is not None


def is_log_concave(s: Sequence[int]) -> bool:
    s = _seq(s)
    return all(s[j] * s[j] >= s[j - 1] * s[j + 1] for j in range(1, len(s) - 1))


def is_slc(s: Sequence[int]) -> bool:
    s = _seq(s)
    return all(s[j] * s[j] > s[j - 1] * s[j + 1] for j in range(1, len(s) - 1))


def has_internal_zeros(s: Sequence[int]) -> bool:
    nz = [j for j, a in enumerate(_seq(s)) if a != 0]
    return bool(nz) and nz[-1] - nz[0] + 1 != len(nz)


def newton_check(s: Sequence[int]) -> bool:
    """Newton's inequalities ``a_j^2 j (n-j) >= (j+1)(n-j+1) a_{j-1} a_{j+1}``."""
    s = _seq(s)
    n = len(s) - 1
    if n < 2:
        raise DegreeTooSmall("Newton's inequalities need degree >= 2")
    return all(
        s[j] * s[j] * j * (n - j) >= (j + 1) * (n - j + 1) * s[j - 1] * s[j + 1]
        for j in range(1, n)
    )


def max_lc_ratio(s: Sequence[int]) -> Fraction | float:
    """Largest ``d`` with ``u_j^2 >= d u_{j-1} u_{j+1}`` at every internal ``j``.

    Returns ``math.inf`` when no internal product ``u_{j-1} u_{j+1}`` is positive.
    """
    s = _seq(s)
    best: Fraction | float = math.inf
    for j in range(1, len(s) - 1):
        den = s[j - 1] * s[j + 1]
        if den > 0:
            r = Fraction(s[j] * s[j], den)
            if r < best:
                best = r
    return best


def convolve(a: Sequence[int], b: Sequence[int]) -> CoeffSeq:
    a, b = _seq(a), _seq(b)
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return tuple(out)


def reverse(s: Sequence[int]) -> CoeffSeq:
    return _seq(s)[::-1]


# -- real-rootedness ---------------------------------------------------------

Poly = list  # list of Fraction/int, lowest degree first, no trailing zeros


def _trim(p: Poly) -> Poly:
    while p and p[-1] == 0:
        p.pop()
    return p


def _derivative(p: Poly) -> Poly:
    return [k * c for k, c in enumerate(p)][1:]


def _divmod(a: Poly, b: Poly) -> tuple[Poly, Poly]:
    a = [Fraction(c) for c in a]
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 1)
    lead = Fraction(b[-1])
    while len(a) >= len(b) and a:
        shift = len(a) - len(b)
        f = a[-1] / lead
        q[shift] = f
        for k, c in enumerate(b):
            a[shift + k] -= f * c
        a.pop()
        _trim(a)
    return _trim(q), a


def _gcd(a: Poly, b: Poly) -> Poly:
    a, b = _trim(list(a)), _trim(list(b))
    while b:
        a, b = b, _divmod(a, b)[1]
    return [Fraction(c) / a[-1] for c in a]


def _eval(p: Poly, x: Fraction) -> Fraction:
    acc = Fraction(0)
    for c in reversed(p):
        acc = acc * x + c
    return acc


def _sign_changes(values) -> int:
    signs = [v > 0 for v in values if v != 0]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def sturm_chain(p: Poly) -> list[Poly]:
    chain = [list(p), _derivative(p)]
    while len(chain[-1]) > 1:
        r = _divmod(chain[-2], chain[-1])[1]
        if not r:
            break
        chain.append([-c for c in r])
    return chain


def count_distinct_real_roots(p: Sequence[int]) -> int:
    """Number of distinct real roots of a nonzero polynomial (Sturm's theorem)."""
    p = _trim([Fraction(c) for c in p])
    if not p:
        raise ZeroPolynomial("the zero polynomial has no finite root count")
    if len(p) == 1:
        return 0
    bound = 1 + max(abs(c) for c in p[:-1]) / abs(p[-1])
    chain = sturm_chain(p)
    lo = _sign_changes(_eval(q, -bound) for q in chain)
    hi = _sign_changes(_eval(q, bound) for q in chain)
    return lo - hi


@lru_cache(maxsize=1 << 16)
def _is_real_rooted(s: CoeffSeq) -> bool:
    p = list(s)
    _trim(p)
    if not p:
        raise ZeroPolynomial("the zero polynomial has no roots to classify")
    k = 0
    while p[k] == 0:
        k += 1
    p = p[k:]
    degree = len(p) - 1
    if degree == 0:
        return True
    g = _gcd(p, _derivative(p))
    squarefree = _divmod(p, g)[0]
    sq_degree = len(squarefree) - 1
    return count_distinct_real_roots(squarefree) == sq_degree


def is_real_rooted(s: Sequence[int]) -> bool:
    """True when every complex root of ``sum s[j] x**j`` is real.

    Strips a power of ``x``, reduces to the square-free part via the gcd with
    the derivative, and compares its Sturm count of distinct real roots to its
    degree.
    """
    return _is_real_rooted(tuple(s))


# -- partition products ------------------------------------------------------


def _check_alpha(alpha: PartitionType | Sequence[int]) -> PartitionType:
    if not isinstance(alpha, PartitionType):
        alpha = PartitionType(tuple(alpha))
    if alpha.n > MAX_N:
        raise GroundSizeOutOfRange(f"partition of {alpha.n} exceeds cap {MAX_N}")
    return alpha


def expand_binomial_product(alpha: PartitionType | Sequence[int]) -> CoeffSeq:
    """Coefficients of ``prod_i (1 + x**i) ** alpha_i``."""
    alpha = _check_alpha(alpha)
    out: CoeffSeq = (1,)
    for i, count in enumerate(alpha.alpha, start=1):
        factor = (1,) + (0,) * (i - 1) + (1,)
        for _ in range(count):
            out = convolve(out, factor)
    return out


def partition_coefficient(alpha: PartitionType | Sequence[int], m: int) -> int:
    """Sum of ``prod_i C(alpha_i, j_i)`` over all ``(j_1..j_l)`` with ``sum i*j_i = m``."""
    alpha = _check_alpha(alpha)
    if not 0 <= m <= alpha.n:
        raise IndexOutOfRange(f"index {m} outside 0..{alpha.n}")
    total = 0
    for js in itertools.product(*(range(a + 1) for a in alpha.alpha)):
        if sum(i * j for i, j in enumerate(js, start=1)) == m:
            total += math.prod(math.comb(a, j) for a, j in zip(alpha.alpha, js))
    return total


def integer_partitions(n: int):
    """Yield the partitions of ``n`` as nonincreasing tuples of parts."""

    def rec(remaining, largest):
        if remaining == 0:
            yield ()
            return
        for part in range(min(remaining, largest), 0, -1):
            for rest in rec(remaining - part, part):
                yield (part,) + rest

    yield from rec(n, n)


def to_json(s: Sequence[int]) -> list[str]:
    return [str(c) for c in s]


def from_json(obj) -> CoeffSeq:
    if not isinstance(obj, list) or not obj:
        raise ValueError("coefficient sequence must be a nonempty JSON array")
    out = tuple(int(c) for c in obj)
    if any(c < 0 for c in out):
        raise ValueError("coefficients must be nonnegative")
    return out
