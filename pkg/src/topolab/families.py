"""Catalog of named topology constructions and their claimed polynomials.

Most recipes start from the discrete topology on ``X_k = {x1, ..., xk}`` and
adjoin a few extra open sets involving the remaining points ``a, b, c, d``
(or ``y1, ..., yi``).  The topology is always produced by closure, so every
union the hand count relies on is generated mechanically; the claimed
polynomial is expanded independently from its closed form.

Point naming: ``x1..xk`` are bits ``0..k-1``; ``a, b, c, d`` (or
``y1, y2, ...``) are bits ``k, k+1, ...`` in that order; an unsubscripted
``x`` is the last point ``xk`` of ``X_k``, so it never collides with
``x1..xj`` for the ranges of ``j`` used below.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Callable, Sequence

from . import polyprops as pp
from .errors import ParamOutOfRange, UnknownFamily
from .topology import (
    PartitionType,
    Topology,
    cotopology,
    discrete,
    disjoint_union,
    full_mask,
    generate_from_subbasis,
    minimal_open_sets,
    open_polynomial,
    partition_blocks,
    partition_topology,
    validate,
)

# -- polynomial shorthand ----------------------------------------------------


def _binom_row(e: int) -> tuple[int, ...]:
    if e < 0:
        raise ValueError("negative exponent in closed form")
    return pp.expand_binomial_product((e,)) if e else (1,)


def term(coef, xpow: int, onepx: int) -> tuple[int, ...]:
    """``coef * x**xpow * (1+x)**onepx``; ``coef`` is an int or a coefficient tuple."""
    base = (coef,) if isinstance(coef, int) else tuple(coef)
    return (0,) * xpow + pp.convolve(base, _binom_row(onepx))


def poly_sum(n: int, *terms: Sequence[int]) -> tuple[int, ...]:
    out = [0] * (n + 1)
    for t in terms:
        if len(t) > n + 1 and any(t[n + 1 :]):
            raise ValueError("closed form exceeds degree n")
        for k, c in enumerate(t[: n + 1]):
            out[k] += c
    return tuple(out)


# -- recipe helpers ----------------------------------------------------------

_NAME = re.compile(r"^(x|[abcd]|y)(\d*)$")


def _point(name: str, k: int) -> int:
    """Bit index of a named point when ``X_k`` is the discrete part."""
    m = _NAME.match(name)
    if not m:
        raise ValueError(f"bad point name {name!r}")
    letter, idx = m.groups()
    if letter == "x":
        return k - 1 if not idx else int(idx) - 1
    if letter == "y":
        return k + int(idx) - 1
    return k + "abcd".index(letter)


def adjoin(n: int, k: int, *sets: str) -> Topology:
    """Close ``P(X_k)`` together with the named sets, e.g. ``adjoin(n, n-2, "a x1")``."""
    masks = [1 << i for i in range(k)]
    for names in sets:
        m = 0
        for name in names.split():
            i = _point(name, k)
            if not 0 <= i < n:
                raise ParamOutOfRange(f"point {name} does not exist for n={n}")
            m |= 1 << i
        masks.append(m)
    masks.append(full_mask(n))
    return generate_from_subbasis(n, masks)


def xs(j: int) -> str:
    return " ".join(f"x{i}" for i in range(1, j + 1))


def ys(lo: int, hi: int) -> list[str]:
    return [f"y{i}" for i in range(lo, hi + 1)]


# -- catalog -----------------------------------------------------------------


@dataclass(frozen=True)
class Family:
    """A catalog entry: a construction recipe plus its claimed invariants.

    ``params`` maps each extra parameter name to a function of ``n`` giving
    its inclusive ``(lo, hi)`` range.  ``claimed`` returns the transcribed
    closed forms keyed by variant; ``"statement"`` is always present.
    """

    key: str
    min_n: int
    description: str
    build: Callable[..., Topology]
    claimed: Callable[..., dict[str, tuple[int, ...]]]
    card: Callable[..., int | None]
    minimal: Callable[..., int]
    params: dict[str, Callable[[int], tuple[int, int]]] = field(default_factory=dict)

    def param_ranges(self, n: int) -> dict[str, tuple[int, int]]:
        return {name: rng(n) for name, rng in self.params.items()}

    def param_grid(self, n: int) -> list[dict[str, int]]:
        if n < self.min_n:
            return []
        grid: list[dict[str, int]] = [{}]
        for name, (lo, hi) in self.param_ranges(n).items():
            grid = [dict(g, **{name: v}) for g in grid for v in range(lo, hi + 1)]
        return grid


def _T(*parts):
    """Build ``claimed`` callables from ``(coef, xpow(n, **p), onepx(n, **p))`` triples."""

    def make(n, **p):
        return poly_sum(n, *(term(c, a(n, **p), b(n, **p)) for c, a, b in parts))

    return make


def _const(v):
    return lambda n, **p: v


def _claims(**variants):
    def claimed(n, **p):
        out = {}
        for name, make in variants.items():
            try:
                out[name] = make(n, **p)
            except ValueError:
                # variant is undefined at this n (negative exponent)
                continue
        return out

    return claimed


C = _const
N = lambda off: (lambda n, **p: n + off)  # noqa: E731  ``n + off``


def _cot_reversed(make):
    return lambda n, **p: pp.reverse(make(n, **p))


_FAMILIES: list[Family] = []


def _register(fam: Family) -> None:
    _FAMILIES.append(fam)


# tau1: unique minimal open set, built as cotopologies
_tau1_p1_pre = _T((1, C(0), N(-1)), (1, N(0), C(0)))
_register(Family(
    "tau1-P1", 3, "cotopology of P(X_{n-1}) + {X_n}",
    build=lambda n: cotopology(adjoin(n, n - 1)),
    claimed=_claims(
        statement=_T((1, C(1), N(-1)), (1, C(0), C(0))),
        proof=_cot_reversed(_tau1_p1_pre),
    ),
    card=lambda n: None, minimal=lambda n: 1,
))
_tau1_p2_pre = _T((1, C(2), N(-3)), (1, C(0), N(-2)), (1, N(0), C(0)))
_register(Family(
    "tau1-P2", 3, "cotopology of P(X_{n-2}) + {a,x}",
    build=lambda n: cotopology(adjoin(n, n - 2, "a x")),
    claimed=_claims(
        statement=_T((1, C(2), N(-2)), (1, C(1), N(-3)), (1, C(0), C(0))),
        proof=_cot_reversed(_tau1_p2_pre),
    ),
    card=lambda n: None, minimal=lambda n: 1,
))
_tau1_p3_pre = _T((1, C(3), N(-3)), (2, C(2), N(-4)), (1, C(3), N(-4)), (1, N(0), C(0)))
_register(Family(
    "tau1-P3", 4, "cotopology of P(X_{n-3}) + {a,x}, {b,x}",
    build=lambda n: cotopology(adjoin(n, n - 3, "a x", "b x")),
    claimed=_claims(
        statement=_T((1, C(3), N(-3)), (2, C(2), N(-4)), (1, C(1), N(-4)), (1, C(0), C(0))),
        proof=_cot_reversed(_tau1_p3_pre),
    ),
    card=lambda n: None, minimal=lambda n: 1,
))

# (n-1) minimal open sets
_register(Family(
    "nm1-partition", 2, "partition into one pair and n-2 singletons",
    build=lambda n: partition_topology(partition_blocks(PartitionType.from_block_sizes([1] * (n - 2) + [2]))),
    claimed=_claims(
        statement=_T(((1, 0, 1), C(0), N(-2))),
        proof=_T(((1, 1, 1, 1), C(0), N(-3))),
    ),
    card=lambda n: 2 ** (n - 1), minimal=lambda n: n - 1,
))
_register(Family(
    "nm1-du-chain", 3, "P(X_{n-3}) disjoint union the chain {0, {a,b}, {a,b,c}}",
    build=lambda n: disjoint_union(discrete(n - 3), validate(3, [0, 0b011, 0b111]))
    if n > 3 else validate(3, [0, 0b011, 0b111]),
    claimed=_claims(
        statement=_T(((1, 0, 1, 1), C(0), N(-3))),
        proof=_T(((1, 3, 4, 5, 6, 4, 1), C(0), N(-6))),
    ),
    card=lambda n: 6 * 2 ** (n - 4) if n >= 4 else 3, minimal=lambda n: n - 1,
))
_register(Family(
    "nm1-singletons", 2, "P(X_{n-1}) + {x1..xl, a}",
    build=lambda n, l: adjoin(n, n - 1, f"{xs(l)} a"),
    claimed=_claims(
        statement=_T((1, C(0), N(-1)), (1, lambda n, l: l + 1, lambda n, l: n - l - 1)),
        proof=lambda n, l: pp.convolve(
            term(1, 0, n - l - 1), poly_sum(l + 1, term(1, l + 1, 0), term(1, 0, l))
        ),
    ),
    card=lambda n, l: 2 ** (n - 1) + 2 ** (n - l - 1), minimal=lambda n, l: n - 1,
    params={"l": lambda n: (1, n - 1)},
))

# (n-2) singletons as minimal open sets
_register(Family(
    "nm2-a", 3, "P(X_{n-2}) + {a,x}, {a,b,x,x1..xj}",
    build=lambda n, j: adjoin(n, n - 2, "a x", f"a b x {xs(j)}"),
    claimed=_claims(
        statement=_T((1, C(0), N(-2)), (1, C(2), N(-3)), (1, lambda n, j: j + 3, lambda n, j: n - 3 - j)),
        proof=lambda n, j: pp.convolve(
            term(1, 0, n - 3 - j),
            poly_sum(j + 3, term(1, j + 3, 0), term(1, 2, j), term(1, 0, j + 1)),
        ),
    ),
    card=lambda n, j: 6 * 2 ** (n - 4) + 2 ** (n - 3 - j) if n >= 4 else None,
    minimal=lambda n, j: n - 2,
    params={"j": lambda n: (0, n - 3)},
))
_register(Family(
    "nm2-b", 4, "P(X_{n-2}) + {a,x1,x2}, {a,b,x1,x2}",
    build=lambda n: adjoin(n, n - 2, "a x1 x2", "a b x1 x2"),
    claimed=_claims(
        statement=_T((1, C(0), N(-2)), (1, C(3), N(-4)), (1, C(4), N(-4))),
        factored=_T(((1, 2, 1, 1, 1), C(0), N(-4))),
    ),
    card=lambda n: 6 * 2 ** (n - 4), minimal=lambda n: n - 2,
))
_register(Family(
    "nm2-c", 4, "P(X_{n-2}) + {a,x1}, {b,x1}",
    build=lambda n: adjoin(n, n - 2, "a x1", "b x1"),
    claimed=_claims(
        statement=_T((1, C(0), N(-2)), (2, C(2), N(-3)), (1, C(3), N(-3))),
        factored=_T(((1, 1, 2, 1), C(0), N(-3))),
    ),
    card=lambda n: 10 * 2 ** (n - 4), minimal=lambda n: n - 2,
))
_register(Family(
    "nm2-d", 4, "P(X_{n-2}) + {a,x}, {b,x,x1..xj}",
    build=lambda n, j: adjoin(n, n - 2, "a x", f"b x {xs(j)}"),
    claimed=_claims(
        statement=_T(
            (1, C(0), N(-2)), (1, C(2), N(-3)),
            (1, lambda n, j: j + 2, lambda n, j: n - 3 - j),
            (1, lambda n, j: j + 3, lambda n, j: n - 3 - j),
        ),
    ),
    card=lambda n, j: 6 * 2 ** (n - 4) + 2 ** (n - 2 - j), minimal=lambda n, j: n - 2,
    params={"j": lambda n: (1, n - 3)},
))
_register(Family(
    "nm2-e", 4, "P(X_{n-2}) + {a,x1}, {b,x2}",
    build=lambda n: adjoin(n, n - 2, "a x1", "b x2"),
    claimed=_claims(
        statement=_T((1, C(0), N(-2)), (2, C(2), N(-3)), (1, C(4), N(-4))),
        factored=_T(((1, 2, 3, 2, 1), C(0), N(-4))),
    ),
    card=lambda n: 9 * 2 ** (n - 4), minimal=lambda n: n - 2,
))
_register(Family(
    "nm2-f", 5, "P(X_{n-2}) + {a,x}, {b,x1..xj}",
    build=lambda n, j: adjoin(n, n - 2, "a x", f"b {xs(j)}"),
    claimed=_claims(
        statement=_T(
            (1, C(0), N(-2)), (1, C(2), N(-3)),
            (1, lambda n, j: j + 1, lambda n, j: n - 2 - j),
            (1, lambda n, j: j + 3, lambda n, j: n - j - 3),
        ),
    ),
    card=lambda n, j: 6 * 2 ** (n - 4) + 3 * 2 ** (n - 2 - j), minimal=lambda n, j: n - 2,
    params={"j": lambda n: (2, n - 3)},
))
_register(Family(
    "nm2-g", 4, "P(X_{n-2}) + {a,x1,x2}, {b,x1,x2}",
    build=lambda n: adjoin(n, n - 2, "a x1 x2", "b x1 x2"),
    claimed=_claims(statement=_T((1, C(0), N(-2)), (2, C(3), N(-4)), (1, C(4), N(-4)))),
    card=lambda n: 7 * 2 ** (n - 4), minimal=lambda n: n - 2,
))
_register(Family(
    "nm2-h", 5, "P(X_{n-2}) + {a,x1,x2}, {b,x1,x3}",
    build=lambda n: adjoin(n, n - 2, "a x1 x2", "b x1 x3"),
    claimed=_claims(statement=_T((1, C(0), N(-2)), (2, C(3), N(-4)), (1, C(5), N(-5)))),
    card=lambda n: 13 * 2 ** (n - 5), minimal=lambda n: n - 2,
))
_register(Family(
    "nm2-i", 5, "P(X_{n-2}) + {a,x1,x2}, {b,x1,x2,x3}",
    build=lambda n: adjoin(n, n - 2, "a x1 x2", "b x1 x2 x3"),
    claimed=_claims(
        statement=_T((1, C(0), N(-2)), (1, C(3), N(-4)), (1, C(4), N(-5)), (1, C(5), N(-5))),
    ),
    card=lambda n: 6 * 2 ** (n - 4), minimal=lambda n: n - 2,
))
_register(Family(
    "nm2-j", 6, "P(X_{n-2}) + {a,x1,x2}, {b,x3,x4}",
    build=lambda n: adjoin(n, n - 2, "a x1 x2", "b x3 x4"),
    claimed=_claims(statement=_T((1, C(0), N(-2)), (2, C(3), N(-4)), (1, C(6), N(-6)))),
    card=lambda n: 25 * 2 ** (n - 6), minimal=lambda n: n - 2,
))

# (n-3) singletons as minimal open sets
_NM3 = [
    # key, min_n, sets, statement terms, card, proof terms
    ("nm3-six-1", 4, ("a x1", "a b x1", "a c x1"),
     ((1, 0, -3), (1, 2, -4), (2, 3, -4), (1, 4, -4)), (6, -4),
     ((1, 0, -3), (2, 2, -4), (1, 3, -4), (1, 4, -4))),
    ("nm3-six-2", 5, ("a x1", "b x2", "a c x1"),
     ((1, 0, -3), (2, 2, -4), (1, 3, -4), (1, 4, -5), (1, 5, -5)), (6, -4), None),
    ("nm3-six-3", 4, ("a x1", "b x1", "a b c x1"),
     ((1, 0, -3), (2, 2, -4), (1, 3, -4), (1, 4, -4)), (6, -4), None),
    ("nm3-six-4", 5, ("a x1", "b x1", "a c x1 x2"),
     ((1, 0, -3), (2, 2, -4), (1, 3, -4), (1, 4, -5), (1, 5, -5)), (6, -4), None),
    ("nm3-six-5", 6, ("a x1", "b x2", "c x1 x3"),
     ((1, 0, -3), (2, 2, -4), (1, 3, -5), (2, 4, -5), (1, 5, -6), (1, 6, -6)), (6, -4), None),
    ("nm3-six-6", 6, ("a x1", "b x1", "c x1 x2 x3"),
     ((1, 0, -3), (2, 2, -4), (1, 3, -5), (1, 4, -5), (2, 5, -6), (1, 6, -6)), (6, -4), None),
    ("nm3-seven-1", 4, ("a x1", "b x1", "a c x1"),
     ((1, 0, -3), (2, 2, -4), (2, 3, -4), (1, 4, -4)), (7, -4), None),
    ("nm3-seven-2", 5, ("a x1", "b x1", "c x1 x2"),
     ((1, 0, -3), (2, 2, -4), (1, 3, -4), (1, 3, -5), (2, 4, -5), (1, 5, -5)), (7, -4), None),
    ("nm3-rest-1", 4, ("a x1", "b x1", "c x1"),
     ((1, 0, -3), (3, 2, -4), (3, 3, -4), (1, 4, -4)), (9, -4), None),
    ("nm3-rest-2", 5, ("a x1", "b x1", "c x2"),
     ((1, 0, -3), (3, 2, -4), (1, 3, -4), (2, 4, -5), (1, 5, -5)), (15, -5), None),
    ("nm3-rest-3", 6, ("a x1", "b x2", "c x3"),
     ((1, 0, -3), (3, 2, -4), (3, 4, -5), (1, 6, -6)), (27, -6), None),
    ("nm3-rest-4", 5, ("a x1", "b x2", "c x1 x2"),
     ((1, 0, -3), (2, 2, -4), (1, 3, -5), (3, 4, -5), (1, 5, -5)), (13, -5), None),
    ("nm3-rest-5", 6, ("a x1", "b x1", "c x2 x3"),
     ((1, 0, -3), (2, 2, -4), (1, 3, -4), (1, 3, -5), (2, 5, -6), (1, 6, -6)), (25, -6), None),
]


def _terms(rows):
    return _T(*((c, C(a), N(b)) for c, a, b in rows))


def _card(mult, off):
    return lambda n: mult * 2 ** (n + off)


for _key, _min_n, _sets, _stmt, (_mult, _off), _proof in _NM3:
    _variants = {"statement": _terms(_stmt)}
    if _proof:
        _variants["proof"] = _terms(_proof)
    _register(Family(
        _key, _min_n, "P(X_{n-3}) + " + ", ".join("{" + s.replace(" ", ",") + "}" for s in _sets),
        build=(lambda sets: lambda n: adjoin(n, n - 3, *sets))(_sets),
        claimed=_claims(**_variants),
        card=_card(_mult, _off), minimal=lambda n: n - 3,
    ))

# (n-4) singletons as minimal open sets
_NM4 = [
    ("nm4-1", 5, ("a x1", "b x1", "c x1", "d x1"),
     ((1, 1, -1), (1, 0, -5)), (17, -5)),
    ("nm4-2", 6, ("a x1", "b x1", "c x1", "d x2"),
     ((1, 3, -3), (1, 1, -2), ((1, 1, 1), 0, -6)), (27, -6)),
    ("nm4-3", 5, ("a x1", "b x1", "c x1", "d x1 x2"),
     ((1, 3, -3), (1, 1, -2), (1, 0, -5)), (13, -5)),
    ("nm4-4", 6, ("a x1", "b x1", "c x2", "d x2"),
     ((1, 2, -2), (1, 2, -5), ((1, 2, 3, 1), 0, -6)), (25, -6)),
    ("nm4-5", 5, ("a x1", "b x1", "c x1", "d x1 x2"),
     ((1, 2, -2), (1, 2, -4), (1, 2, -5), (1, 0, -4)), (13, -5)),
]
for _key, _min_n, _sets, _stmt, (_mult, _off) in _NM4:
    _register(Family(
        _key, _min_n, "P(X_{n-4}) + " + ", ".join("{" + s.replace(" ", ",") + "}" for s in _sets),
        build=(lambda sets: lambda n: adjoin(n, n - 4, *sets))(_sets),
        claimed=_claims(statement=_terms(_stmt)),
        card=_card(_mult, _off), minimal=lambda n: n - 4,
    ))

# (n-i) singletons as minimal open sets, 5 <= i <= n-2
_I_RANGE = {"i": lambda n: (5, n - 2)}


def _nmi_sets(i, last):
    return [f"x1 y{t}" for t in range(1, i)] + [last]


_register(Family(
    "nmi-1", 7, "P(X_{n-i}) + {x1,y1}, ..., {x1,yi}",
    build=lambda n, i: adjoin(n, n - i, *_nmi_sets(i, f"x1 y{i}")),
    claimed=_claims(statement=lambda n, i: poly_sum(n, term(1, 1, n - 1), term(1, 0, n - i - 1))),
    card=lambda n, i: 2 ** (n - 1) + 2 ** (n - i - 1), minimal=lambda n, i: n - i,
    params=_I_RANGE,
))
_register(Family(
    "nmi-2", 7, "P(X_{n-i}) + {x1,y1}, ..., {x1,y(i-1)}, {x2,yi}",
    build=lambda n, i: adjoin(n, n - i, *_nmi_sets(i, f"x2 y{i}")),
    claimed=_claims(statement=lambda n, i: poly_sum(
        n, term(1, 3, n - 3), term(1, 1, n - 2), term((1, 1, 1), 0, n - i - 2))),
    card=lambda n, i: 6 * 2 ** (n - 4) + 3 * 2 ** (n - i - 2), minimal=lambda n, i: n - i,
    params=_I_RANGE,
))
_NMI3 = lambda n, i: poly_sum(n, term(1, 3, n - 3), term(1, 1, n - 2), term(1, 0, n - i - 1))  # noqa: E731
_register(Family(
    "nmi-3", 7, "P(X_{n-i}) + {x1,y1}, ..., {x1,y(i-1)}, {x1,x2,yi}",
    build=lambda n, i: adjoin(n, n - i, *_nmi_sets(i, f"x1 x2 y{i}")),
    claimed=_claims(statement=_NMI3),
    card=lambda n, i: 6 * 2 ** (n - 4) + 2 ** (n - i - 1), minimal=lambda n, i: n - i,
    params=_I_RANGE,
))
_register(Family(
    "nmi-3b", 7, "P(X_{n-i}) + {x1,y1}, ..., {x1,y(i-1)}, {x1,y1,yi}",
    build=lambda n, i: adjoin(n, n - i, *_nmi_sets(i, f"x1 y1 y{i}")),
    claimed=_claims(statement=_NMI3),
    card=lambda n, i: 6 * 2 ** (n - 4) + 2 ** (n - i - 1), minimal=lambda n, i: n - i,
    params=_I_RANGE,
))

# large but not unimodal
_register(Family(
    "counterexample", 3, "P(X_{n-2}) + {X_{n-2}, a}, {X_{n-2}, b}",
    build=lambda n: adjoin(n, n - 2, f"{xs(n - 2)} a", f"{xs(n - 2)} b"),
    claimed=_claims(statement=_T((1, C(0), N(-2)), (2, N(-1), C(0)), (1, N(0), C(0)))),
    card=lambda n: 2 ** (n - 2) + 3, minimal=lambda n: n - 2,
))

_BY_KEY = {f.key: f for f in _FAMILIES}
PARTITION_KEY = "partition"


def catalog() -> list[Family]:
    """All parameterized recipes in a stable order (``partition`` is separate)."""
    return list(_FAMILIES)


def catalog_keys() -> list[str]:
    return [f.key for f in _FAMILIES] + [PARTITION_KEY]


def get_family(key: str) -> Family:
    try:
        return _BY_KEY[key]
    except KeyError:
        raise UnknownFamily(f"unknown family {key!r}") from None


# -- instances and reports ---------------------------------------------------


@dataclass(frozen=True)
class FamilyInstance:
    key: str
    n: int
    params: dict
    topology: Topology
    claimed_poly: tuple[int, ...]
    claimed_card: int
    claimed_minimal: int
    variants: dict = field(default_factory=dict)
    card_from_formula: bool = True


@dataclass(frozen=True)
class MatchReport:
    family: str
    n: int
    params: dict
    claimed: tuple[int, ...]
    computed: tuple[int, ...]
    claimed_card: int
    computed_card: int
    card_match: bool
    poly_match: bool
    diff_positions: tuple[int, ...]
    unimodal: bool
    log_concave: bool
    variant_matches: dict
    minimal_count: int
    minimal_match: bool

    @property
    def clean(self) -> bool:
        return self.card_match and self.poly_match and self.minimal_match

    def to_json(self) -> dict:
        return {
            "family": self.family,
            "n": self.n,
            "params": dict(self.params),
            "claimed": pp.to_json(self.claimed),
            "computed": pp.to_json(self.computed),
            "claimed_card": self.claimed_card,
            "computed_card": self.computed_card,
            "card_match": self.card_match,
            "poly_match": self.poly_match,
            "diff_positions": list(self.diff_positions),
            "unimodal": self.unimodal,
            "log_concave": self.log_concave,
            "variant_matches": dict(self.variant_matches),
            "minimal_count": self.minimal_count,
            "minimal_match": self.minimal_match,
        }


def _check_params(fam: Family, n: int, params: dict) -> None:
    if not isinstance(n, int) or n < fam.min_n:
        raise ParamOutOfRange(f"{fam.key} needs n >= {fam.min_n}, got {n!r}")
    ranges = fam.param_ranges(n)
    if set(params) != set(ranges):
        raise ParamOutOfRange(f"{fam.key} takes parameters {sorted(ranges)}, got {sorted(params)}")
    for name, (lo, hi) in ranges.items():
        v = params[name]
        if not isinstance(v, int) or not lo <= v <= hi:
            raise ParamOutOfRange(f"{fam.key}: {name}={v!r} outside {lo}..{hi} for n={n}")


def instantiate(key: str, n: int | None = None, **params) -> FamilyInstance:
    """Build the topology of a catalog entry and expand its claimed closed forms.

    For ``key="partition"`` pass ``alpha`` (a :class:`PartitionType` or a
    tuple of block counts); ``n`` is then optional and must agree with it.
    """
    if key == PARTITION_KEY:
        return _instantiate_partition(n, **params)
    fam = get_family(key)
    _check_params(fam, n, params)
    topology = fam.build(n, **params)
    variants = fam.claimed(n, **params)
    statement = variants["statement"]
    card = fam.card(n, **params)
    from_formula = card is not None
    if card is None:
        card = sum(statement)
    return FamilyInstance(
        key, n, dict(params), topology, statement, card,
        fam.minimal(n, **params), variants, from_formula,
    )


def _instantiate_partition(n, alpha=None, **extra) -> FamilyInstance:
    if extra or alpha is None:
        raise ParamOutOfRange("partition takes exactly one parameter: alpha")
    if not isinstance(alpha, PartitionType):
        try:
            alpha = PartitionType(tuple(alpha))
        except Exception as exc:
            raise ParamOutOfRange(f"bad partition type {alpha!r}") from exc
    if n is not None and n != alpha.n:
        raise ParamOutOfRange(f"partition type {alpha.alpha} has n={alpha.n}, not {n}")
    topology = partition_topology(partition_blocks(alpha))
    claimed = pp.expand_binomial_product(alpha)
    return FamilyInstance(
        PARTITION_KEY, alpha.n, {"alpha": list(alpha.alpha)}, topology, claimed,
        2 ** alpha.blocks, alpha.blocks, {"statement": claimed}, True,
    )


def check(inst: FamilyInstance) -> MatchReport:
    """Compare an instance's claims with its constructed topology."""
    computed = open_polynomial(inst.topology)
    claimed = inst.claimed_poly
    diff = tuple(
        k for k in range(max(len(claimed), len(computed)))
        if (claimed[k] if k < len(claimed) else 0) != (computed[k] if k < len(computed) else 0)
    )
    minimal = len(minimal_open_sets(inst.topology))
    return MatchReport(
        family=inst.key,
        n=inst.n,
        params=dict(inst.params),
        claimed=claimed,
        computed=computed,
        claimed_card=inst.claimed_card,
        computed_card=len(inst.topology),
        card_match=inst.claimed_card == len(inst.topology),
        poly_match=not diff,
        diff_positions=diff,
        unimodal=pp.is_unimodal(computed),
        log_concave=pp.is_log_concave(computed),
        variant_matches={name: tuple(p) == computed for name, p in inst.variants.items()},
        minimal_count=minimal,
        minimal_match=minimal == inst.claimed_minimal,
    )


def sweep(n_min: int = 4, n_max: int = 9) -> list[MatchReport]:
    """Check every catalog entry at every defined ``(n, params)`` in range."""
    reports = []
    for fam in _FAMILIES:
        for n in range(max(n_min, fam.min_n), n_max + 1):
            for params in fam.param_grid(n):
                reports.append(check(instantiate(fam.key, n, **params)))
    return reports
