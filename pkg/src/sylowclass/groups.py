"""Symbolic unitary reflection groups and reflection-subgroup labels.

The infinite family G(m,p,n) (p | m) is one code path: cyclic groups are
stored as G(m,1,1) and the symmetric group Sym(n) as G(1,1,n).  The 34
exceptional groups are carried by their Shephard-Todd index 4..37.  Products
hold a flat, ordered tuple of irreducible factors.

Group spec grammar (CLI and table data):

    G(m,p,n) | G<k> for k in 4..37 | classical aliases (A4, B3, B3(3),
    D4(3), H3, ..., L2..L4, M3, J3(4), K5, N4, O4, C<m>) | products
    separated by "x" or the unicode times sign, with optional "^k" powers.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import total_ordering
from math import gcd

from .valuation import factorization, gcd_many, nu

__all__ = [
    "GroupType",
    "Imprimitive",
    "Exceptional",
    "Product",
    "Cyclic",
    "Sym",
    "TRIVIAL",
    "FeasibleTriple",
    "AugmentedPartition",
    "SubgroupClassLabel",
    "order",
    "order_factored",
    "is_feasible",
    "triple_compare",
    "conjugacy_modulus",
    "alpha_class_count",
    "degrees_imprimitive",
    "parse_group",
    "format_group",
    "irreducible_factors",
    "product_of",
]


@dataclass(frozen=True)
class Imprimitive:
    """G(m,p,n): monomial n x n matrices with m-th root of unity phases whose
    phase exponents sum to 0 mod p, extended by coordinate permutations."""

    m: int
    p: int
    n: int

    def __post_init__(self):
        if self.m < 1 or self.n < 1 or self.p < 1:
            raise ValueError(f"bad parameters G({self.m},{self.p},{self.n})")
        if self.m % self.p:
            raise ValueError(f"p must divide m in G({self.m},{self.p},{self.n})")

    def __repr__(self):
        return f"G({self.m},{self.p},{self.n})"


@dataclass(frozen=True)
class Exceptional:
    """An exceptional irreducible group by Shephard-Todd index 4..37."""

    st: int

    def __post_init__(self):
        if not 4 <= self.st <= 37:
            raise ValueError(f"Shephard-Todd index out of range: {self.st}")

    def __repr__(self):
        return f"G{self.st}"


@dataclass(frozen=True)
class Product:
    """Ordered product of irreducible factors (each non-Product)."""

    factors: tuple

    def __post_init__(self):
        if len(self.factors) < 2:
            raise ValueError("Product needs at least two factors")
        if any(isinstance(f, Product) for f in self.factors):
            raise ValueError("Product factors must be irreducible")

    def __repr__(self):
        return " x ".join(map(repr, self.factors))


GroupType = Imprimitive | Exceptional | Product

TRIVIAL = Imprimitive(1, 1, 1)


def Cyclic(m: int) -> Imprimitive:
    """The cyclic group of order m in its canonical form G(m,1,1)."""
    return Imprimitive(m, 1, 1)


def Sym(n: int) -> Imprimitive:
    """Sym(n) in its canonical form G(1,1,n)."""
    return Imprimitive(1, 1, n)


def normalize(g: GroupType) -> GroupType:
    """Canonical form: G(m,p,1) becomes the cyclic G(m/p,1,1); products are
    flattened, trivial factors dropped, singleton products unwrapped."""
    if isinstance(g, Imprimitive):
        if g.n == 1 and g.p > 1:
            return Imprimitive(g.m // g.p, 1, 1)
        return g
    if isinstance(g, Product):
        factors = []
        for f in g.factors:
            f = normalize(f)
            if f == TRIVIAL:
                continue
            factors.append(f)
        if not factors:
            return TRIVIAL
        if len(factors) == 1:
            return factors[0]
        return Product(tuple(factors))
    return g


def product_of(factors) -> GroupType:
    """Normalized product of arbitrarily many group types."""
    flat = []
    for f in factors:
        f = normalize(f)
        if isinstance(f, Product):
            flat.extend(f.factors)
        elif f != TRIVIAL:
            flat.append(f)
    if not flat:
        return TRIVIAL
    if len(flat) == 1:
        return flat[0]
    return Product(tuple(flat))


def irreducible_factors(g: GroupType) -> tuple:
    g = normalize(g)
    if isinstance(g, Product):
        return g.factors
    return (g,)


# Orders of G4..G37 (Shephard-Todd numbering).  These agree with the |G|
# column of the embedded parabolic table; tables.check_consistency
# re-verifies that.
EXCEPTIONAL_ORDERS = {
    4: 24, 5: 72, 6: 48, 7: 144, 8: 96, 9: 192, 10: 288, 11: 576,
    12: 48, 13: 96, 14: 144, 15: 288, 16: 600, 17: 1200, 18: 1800,
    19: 3600, 20: 360, 21: 720, 22: 240, 23: 120, 24: 336, 25: 648,
    26: 1296, 27: 2160, 28: 1152, 29: 7680, 30: 14400, 31: 46080,
    32: 155520, 33: 51840, 34: 39191040, 35: 51840, 36: 2903040,
    37: 696729600,
}


def order(g: GroupType) -> int:
    """Exact group order; |G(m,p,n)| = m^n n!/p."""
    g = normalize(g)
    if isinstance(g, Imprimitive):
        f = 1
        for i in range(2, g.n + 1):
            f *= i
        return g.m**g.n * f // g.p
    if isinstance(g, Exceptional):
        return EXCEPTIONAL_ORDERS[g.st]
    return _prod(order(f) for f in g.factors)


def _prod(it):
    out = 1
    for x in it:
        out *= x
    return out


def order_factored(g: GroupType) -> str:
    """Order as a factorization string like 2^7*3^2."""
    return format_factorization(order(g))


def format_factorization(n: int) -> str:
    if n == 1:
        return "1"
    return "*".join(
        f"{p}^{e}" if e > 1 else str(p) for p, e in factorization(n)
    )


@total_ordering
@dataclass(frozen=True)
class FeasibleTriple:
    """(m',p',n') with p' | m'; feasible for an ambient G(m,p,n) when
    n' <= n, m' | m and (m'/p') | (m/p)."""

    m: int
    p: int
    n: int

    def __post_init__(self):
        if self.m < 1 or self.p < 1 or self.n < 1 or self.m % self.p:
            raise ValueError(f"bad triple ({self.m},{self.p},{self.n})")

    def sort_key(self):
        # Total order: larger n first, then larger m, then larger p.
        return (self.n, self.m, self.p)

    def __lt__(self, other):
        return self.sort_key() < other.sort_key()

    def __repr__(self):
        return f"({self.m},{self.p},{self.n})"


def triple_compare(a: FeasibleTriple, b: FeasibleTriple) -> int:
    """Total order on feasible triples: by n, then m, then p.  Returns
    -1, 0 or 1."""
    ka, kb = a.sort_key(), b.sort_key()
    return (ka > kb) - (ka < kb)


def is_feasible(t, ambient: tuple[int, int, int]) -> bool:
    """Whether (m',p',n') labels a reflection subgroup of G(m,p,n).

    Accepts a FeasibleTriple or a raw (m',p',n') tuple; a raw tuple with
    p' not dividing m' is simply infeasible rather than an error.
    """
    if not isinstance(t, FeasibleTriple):
        mp, pp, np_ = t
        if mp < 1 or pp < 1 or np_ < 1 or mp % pp:
            return False
        t = FeasibleTriple(mp, pp, np_)
    m, p, n = ambient
    return t.n <= n and m % t.m == 0 and (m // p) % (t.m // t.p) == 0


@dataclass(frozen=True)
class AugmentedPartition:
    """Decreasing sequence of feasible triples whose ranks partition n;
    labels a reflection subgroup class of the ambient G(m,p,n)."""

    triples: tuple[FeasibleTriple, ...]
    ambient: tuple[int, int, int]

    def __post_init__(self):
        m, p, n = self.ambient
        if m < 1 or p < 1 or n < 1 or m % p:
            raise ValueError(f"bad ambient {self.ambient}")
        for t in self.triples:
            if not is_feasible(t, self.ambient):
                raise ValueError(f"triple {t} not feasible for {self.ambient}")
        for a, b in zip(self.triples, self.triples[1:]):
            if a.sort_key() < b.sort_key():
                raise ValueError("triples not decreasing")
        if sum(t.n for t in self.triples) != n:
            raise ValueError("ranks do not partition n")

    def group(self) -> GroupType:
        """The standard reflection subgroup as a group type, trivial
        factors dropped."""
        return product_of(Imprimitive(t.m, t.p, t.n) for t in self.triples)

    def __repr__(self):
        return "[" + ",".join(map(repr, self.triples)) + "]"


def augmented_partition(triples, ambient) -> AugmentedPartition:
    trips = tuple(
        sorted((FeasibleTriple(*t) for t in triples), reverse=True)
    )
    return AugmentedPartition(trips, tuple(ambient))


def conjugacy_modulus(delta: AugmentedPartition) -> int:
    """The modulus k with G_Delta^alpha ~ G_Delta^beta iff alpha/beta lies in
    the k-th roots of unity: k = m / gcd(p, n_1..n_d, m/m_1..m/m_d)."""
    m, p, _ = delta.ambient
    g = gcd_many(
        [p]
        + [t.n for t in delta.triples]
        + [m // t.m for t in delta.triples]
    )
    return m // g


def alpha_class_count(delta: AugmentedPartition) -> int:
    """Number of conjugacy classes among the twists of G_Delta: m / k."""
    m, _, _ = delta.ambient
    return m // conjugacy_modulus(delta)


@dataclass(frozen=True)
class SubgroupClassLabel:
    """An augmented partition plus a twist coset index below the class
    count for that partition."""

    delta: AugmentedPartition
    alpha_index: int = 0

    def __post_init__(self):
        if not 0 <= self.alpha_index < alpha_class_count(self.delta):
            raise ValueError("alpha_index out of range")


def degrees_imprimitive(m: int, p: int, n: int) -> tuple[int, ...]:
    """Invariant degrees m, 2m, ..., (n-1)m, nm/p of G(m,p,n), with trivial
    degree-1 entries dropped (they correspond to fixed coordinates of a
    non-essential action).  The product equals the group order."""
    if m < 1 or n < 1 or p < 1 or m % p:
        raise ValueError(f"need p | m, got ({m},{p},{n})")
    degs = [i * m for i in range(1, n)] + [n * m // p]
    return tuple(sorted(d for d in degs if d > 1))


# ---------------------------------------------------------------------------
# Group spec grammar


_CLASSICAL = {
    "H3": 23, "H4": 30, "F4": 28, "E6": 35, "E7": 36, "E8": 37,
    "L2": 4, "L3": 25, "L4": 32, "M3": 26, "K5": 33, "K6": 34,
    "N4": 29, "O4": 31, "J3(4)": 24, "J3(5)": 27,
}
# Reverse preference for display of exceptional groups.
_CLASSICAL_NAMES = {v: k for k, v in _CLASSICAL.items()}

_G_MPN = re.compile(r"^G\((\d+),(\d+),(\d+)\)$")
_G_ST = re.compile(r"^G(\d+)$")
_POWER = re.compile(r"^(.*?)\^(\d+)$")
_A_N = re.compile(r"^A(\d+)$")
_B_N = re.compile(r"^B(\d+)$")
_B_NK = re.compile(r"^B(\d+)\((\d+)\)$")
_D_N = re.compile(r"^D(\d+)$")
_D_NK = re.compile(r"^D(\d+)\((\d+)\)$")
_C_M = re.compile(r"^C(\d+)$")
_L_N = re.compile(r"^L(\d+)$")


class GroupParseError(ValueError):
    pass


def _parse_atom(token: str) -> GroupType:
    if m := _G_MPN.match(token):
        return normalize(Imprimitive(*map(int, m.groups())))
    if m := _G_ST.match(token):
        k = int(m.group(1))
        if k in (1, 2, 3):
            raise GroupParseError(
                f"G{k} is a family; use G(m,p,n) with explicit parameters"
            )
        return Exceptional(k)
    if token in _CLASSICAL:
        return Exceptional(_CLASSICAL[token])
    if m := _A_N.match(token):
        return Sym(int(m.group(1)) + 1)
    if m := _B_NK.match(token):
        n, k = map(int, m.groups())
        if k == 3:
            return normalize(Imprimitive(3, 1, n))
        if k % 2 == 0:
            # B_n^(2j) = G(2j, j, n); only the (3) and (4) decorations occur
            # in the embedded tables.
            return normalize(Imprimitive(k, k // 2, n))
        raise GroupParseError(f"unknown decoration in {token}")
    if m := _B_N.match(token):
        return normalize(Imprimitive(2, 1, int(m.group(1))))
    if m := _D_NK.match(token):
        n, k = map(int, m.groups())
        return normalize(Imprimitive(k, k, n))
    if m := _D_N.match(token):
        return normalize(Imprimitive(2, 2, int(m.group(1))))
    if m := _L_N.match(token):
        n = int(m.group(1))
        if n == 1:
            return Cyclic(3)
        if n in (2, 3, 4):
            return Exceptional({2: 4, 3: 25, 4: 32}[n])
        raise GroupParseError(f"unknown line group {token}")
    if m := _C_M.match(token):
        return Cyclic(int(m.group(1)))
    raise GroupParseError(f"cannot parse group spec {token!r}")


def parse_group(spec: str) -> GroupType:
    """Parse a group spec string (see module docstring for the grammar)."""
    text = spec.replace("×", "x").replace(" ", "")
    if not text:
        raise GroupParseError("empty group spec")
    # Splitting on "x" must not break atoms; no atom contains a bare "x".
    factors = []
    for token in text.split("x"):
        if not token:
            raise GroupParseError(f"empty factor in {spec!r}")
        power = 1
        if m := _POWER.match(token):
            token, power = m.group(1), int(m.group(2))
            if power < 1:
                raise GroupParseError(f"bad power in {spec!r}")
        if token.startswith("[") and token.endswith("]"):
            token = token[1:-1]
        atom = _parse_atom(token)
        factors.extend([atom] * power)
    return product_of(factors)


def format_group(g: GroupType, classical: bool = False) -> str:
    """Render a group type in the spec grammar.

    With classical=True, exceptional groups get their classical alias
    (H3, E8, ...) when one exists.
    """
    g = normalize(g)
    if isinstance(g, Product):
        parts = []
        run_start = 0
        factors = g.factors
        for i in range(len(factors) + 1):
            if i == len(factors) or (i > run_start and factors[i] != factors[run_start]):
                count = i - run_start
                base = format_group(factors[run_start], classical)
                parts.append(base if count == 1 else f"{base}^{count}")
                run_start = i
        return " x ".join(parts)
    if isinstance(g, Exceptional):
        if classical and g.st in _CLASSICAL_NAMES:
            return _CLASSICAL_NAMES[g.st]
        return f"G{g.st}"
    return f"G({g.m},{g.p},{g.n})"


def group_primes(g: GroupType) -> list[int]:
    """Ascending prime divisors of |G|."""
    return [p for p, _ in factorization(order(g))]
