"""Exact brute-force engine for small G(m,p,n).

Elements are pairs (phases, perm): a vector of phase exponents mod m and a
permutation of the coordinates, acting as e_j -> zeta^phases(perm(j)) *
e_perm(j).  Membership requires the phase exponents to sum to 0 mod p.
All arithmetic is integer arithmetic mod m; fixed spaces and stabilizers
are computed combinatorially from cycle/phase data.

Subgroups are bitsets over the canonical element order.  Subgroup
generation walks right cosets: each new coset H*t*g is one vectorized
gather through the right-multiplication table of the generator g, so
generating a subgroup K costs about |K| integer moves.  Conjugacy classes
are orbits under conjugation by a fixed generating set of the parent
group, again via precomputed index tables.

Everything is exhaustive and capped (default order cap 20000); no
permutation-group machinery beyond tables and orbits is needed at this
scale.
"""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass
from math import factorial

import numpy as np

from .groups import AugmentedPartition, augmented_partition
from .valuation import nu

DEFAULT_ORDER_CAP = 20000


class ResourceLimitError(RuntimeError):
    """The request exceeds the configured enumeration cap."""


class OracleConsistencyError(AssertionError):
    """An internal exactness check failed (never expected)."""


@dataclass(frozen=True)
class MonomialElement:
    """(theta, pi) with per-coordinate phase exponents mod m."""

    m: int
    phases: tuple[int, ...]
    perm: tuple[int, ...]

    def __post_init__(self):
        if len(self.phases) != len(self.perm):
            raise ValueError("phase and permutation length differ")

    @property
    def n(self) -> int:
        return len(self.perm)

    def mul(self, other: "MonomialElement") -> "MonomialElement":
        if self.m != other.m or self.n != other.n:
            raise ValueError("mixed ambient groups")
        pinv = inverse_perm(self.perm)
        phases = tuple(
            (self.phases[j] + other.phases[pinv[j]]) % self.m
            for j in range(self.n)
        )
        perm = tuple(self.perm[other.perm[j]] for j in range(self.n))
        return MonomialElement(self.m, phases, perm)

    def inv(self) -> "MonomialElement":
        pinv = inverse_perm(self.perm)
        phases = tuple((-self.phases[self.perm[i]]) % self.m for i in range(self.n))
        return MonomialElement(self.m, phases, pinv)

    def is_identity(self) -> bool:
        return all(a == 0 for a in self.phases) and all(
            p == i for i, p in enumerate(self.perm))


def inverse_perm(perm: tuple[int, ...]) -> tuple[int, ...]:
    out = [0] * len(perm)
    for i, p in enumerate(perm):
        out[p] = i
    return tuple(out)


def identity_element(m: int, n: int) -> MonomialElement:
    return MonomialElement(m, (0,) * n, tuple(range(n)))


@dataclass(frozen=True)
class FixedSpace:
    """Combinatorial fixed-space basis: one vector per phase-trivial cycle,
    given as (support coordinates ascending, phase exponents relative to the
    smallest coordinate)."""

    m: int
    n: int
    vectors: tuple[tuple[tuple[int, ...], tuple[int, ...]], ...]

    @property
    def dimension(self) -> int:
        return len(self.vectors)


def fixed_space(e: MonomialElement) -> FixedSpace:
    """Fix(e): each perm cycle whose phase exponents sum to 0 mod m spans
    one dimension; the exponent pattern along the cycle pins the vector."""
    n, m = e.n, e.m
    seen = [False] * n
    vectors = []
    for start in range(n):
        if seen[start]:
            continue
        cycle = [start]
        seen[start] = True
        j = e.perm[start]
        while j != start:
            seen[j] = True
            cycle.append(j)
            j = e.perm[j]
        total = sum(e.phases[c] for c in cycle) % m
        if total:
            continue
        # Walk the cycle accumulating x_{pi(i)} = x_i + phases[pi(i)].
        exps = {cycle[0]: 0}
        cur = cycle[0]
        for _ in range(len(cycle) - 1):
            nxt = e.perm[cur]
            exps[nxt] = (exps[cur] + e.phases[nxt]) % m
            cur = nxt
        coords = tuple(sorted(cycle))
        base = exps[coords[0]]
        vectors.append(
            (coords, tuple((exps[c] - base) % m for c in coords)))
    return FixedSpace(m, n, tuple(sorted(vectors)))


class SubgroupHandle:
    """A subgroup of a ConcreteGroup as an element-index bitset with a
    cached order."""

    __slots__ = ("group", "bits", "order")

    def __init__(self, group: "ConcreteGroup", bits: int, order: int):
        self.group = group
        self.bits = bits
        self.order = order

    def indices(self) -> np.ndarray:
        return self.group.bits_to_indices(self.bits)

    def elements(self) -> list[MonomialElement]:
        return [self.group.elements[i] for i in self.indices()]

    def contains(self, other: "SubgroupHandle") -> bool:
        return other.bits & self.bits == other.bits

    def __le__(self, other):
        return other.contains(self)

    def __hash__(self):
        return hash(self.bits)

    def __eq__(self, other):
        return isinstance(other, SubgroupHandle) and self.bits == other.bits

    def __repr__(self):
        return f"<subgroup of order {self.order}>"


@dataclass
class OracleClass:
    """One conjugacy class of subgroups."""

    members: tuple[SubgroupHandle, ...]

    @property
    def order(self) -> int:
        return self.members[0].order

    @property
    def size(self) -> int:
        return len(self.members)

    @property
    def representative(self) -> SubgroupHandle:
        return self.members[0]


class ConcreteGroup:
    """Fully enumerated G(m,p,n) in a canonical element order (identity
    first), with index tables for fast subgroup generation."""

    def __init__(self, m: int, p: int, n: int, order_cap: int = DEFAULT_ORDER_CAP):
        if m < 1 or p < 1 or n < 1 or m % p:
            raise ValueError(f"need p | m, got ({m},{p},{n})")
        size = m**n * factorial(n) // p
        if size > order_cap:
            raise ResourceLimitError(
                f"|G({m},{p},{n})| = {size} exceeds cap {order_cap}")
        self.m, self.p, self.n = m, p, n
        self.size = size
        self._build()

    # -- construction -------------------------------------------------

    def _enumerate_phase_vectors(self):
        m, p, n = self.m, self.p, self.n
        # Free choice of the first n-1 exponents; the last is determined
        # mod p, with m/p lifts.  Avoids filtering all m^n tuples.
        for prefix in itertools.product(range(m), repeat=n - 1):
            rem = (-sum(prefix)) % p
            for t in range(m // p):
                yield prefix + (rem + t * p,)

    def _build(self):
        m, n = self.m, self.n
        perms = list(itertools.permutations(range(n)))
        phase_list = list(self._enumerate_phase_vectors())
        if len(phase_list) * len(perms) != self.size:
            raise OracleConsistencyError("enumeration size mismatch")

        A = np.array(
            [ph for ph in phase_list for _ in perms], dtype=np.int64
        ).reshape(len(phase_list) * len(perms), n)
        P = np.array(perms * len(phase_list), dtype=np.int64).reshape(-1, n)

        codes = self._codes(A, P)
        order_idx = np.argsort(codes, kind="stable")
        self._A = np.ascontiguousarray(A[order_idx])
        self._P = np.ascontiguousarray(P[order_idx])
        self._PINV = np.argsort(self._P, axis=1)
        self._codes_sorted = codes[order_idx]
        if not self.is_identity_index(0):
            raise OracleConsistencyError("identity not first in canonical order")

        self.elements = [
            MonomialElement(m, tuple(int(x) for x in self._A[i]),
                            tuple(int(x) for x in self._P[i]))
            for i in range(self.size)
        ]
        self._index = {
            (e.phases, e.perm): i for i, e in enumerate(self.elements)
        }
        self._right_tables: dict[int, np.ndarray] = {}
        self._left_tables: dict[int, np.ndarray] = {}
        self._reflection_indices: list[int] | None = None
        self._fixed_spaces: list[FixedSpace] | None = None
        self._gen_indices: list[int] | None = None

    def _codes(self, A: np.ndarray, P: np.ndarray) -> np.ndarray:
        m, n = self.m, self.n
        wa = np.array([m ** (n - 1 - j) for j in range(n)], dtype=np.int64)
        wp = np.array([n ** (n - 1 - j) for j in range(n)], dtype=np.int64)
        return (A @ wa) * (n**n) + (P @ wp)

    # -- element access ------------------------------------------------

    def index_of(self, e: MonomialElement) -> int:
        return self._index[(e.phases, e.perm)]

    def is_identity_index(self, i: int) -> bool:
        return bool((self._A[i] == 0).all()) and bool(
            (self._P[i] == np.arange(self.n)).all())

    def bits_to_indices(self, bits: int) -> np.ndarray:
        packed = np.frombuffer(
            bits.to_bytes((self.size + 7) // 8, "little"), dtype=np.uint8)
        bools = np.unpackbits(packed, bitorder="little", count=self.size)
        return np.flatnonzero(bools).astype(np.int64)

    def indices_to_bits(self, idx: np.ndarray) -> int:
        bools = np.zeros(self.size, dtype=np.uint8)
        bools[idx] = 1
        packed = np.packbits(bools, bitorder="little")
        return int.from_bytes(packed.tobytes(), "little")

    def handle(self, idx: np.ndarray) -> SubgroupHandle:
        return SubgroupHandle(self, self.indices_to_bits(idx), int(len(idx)))

    def whole_group_handle(self) -> SubgroupHandle:
        return self.handle(np.arange(self.size, dtype=np.int64))

    # -- multiplication tables ------------------------------------------

    def _table_from_element(self, phases: np.ndarray, perm: np.ndarray,
                            side: str) -> np.ndarray:
        """Index table of x -> x*g (side 'right') or x -> g*x ('left')."""
        m = self.m
        if side == "right":
            new_A = (self._A + phases[self._PINV]) % m
            new_P = self._P[:, perm]
        else:
            pinv = np.argsort(perm)
            new_A = (phases[None, :] + self._A[:, pinv]) % m
            new_P = perm[self._P]
        codes = self._codes(new_A, new_P)
        pos = np.searchsorted(self._codes_sorted, codes)
        if not (self._codes_sorted[pos] == codes).all():
            raise OracleConsistencyError("product left the group")
        return pos.astype(np.int64)

    def right_table(self, g_idx: int) -> np.ndarray:
        tab = self._right_tables.get(g_idx)
        if tab is None:
            tab = self._table_from_element(self._A[g_idx], self._P[g_idx], "right")
            self._right_tables[g_idx] = tab
        return tab

    def left_table(self, g_idx: int) -> np.ndarray:
        tab = self._left_tables.get(g_idx)
        if tab is None:
            tab = self._table_from_element(self._A[g_idx], self._P[g_idx], "left")
            self._left_tables[g_idx] = tab
        return tab

    def inverse_index(self, g_idx: int) -> int:
        return self.index_of(self.elements[g_idx].inv())

    # -- reflections and fixed spaces -----------------------------------

    def fixed_spaces(self) -> list[FixedSpace]:
        if self._fixed_spaces is None:
            self._fixed_spaces = [fixed_space(e) for e in self.elements]
        return self._fixed_spaces

    def reflection_indices(self) -> list[int]:
        if self._reflection_indices is None:
            spaces = self.fixed_spaces()
            self._reflection_indices = [
                i for i in range(self.size)
                if spaces[i].dimension == self.n - 1
            ]
        return self._reflection_indices

    def reflections(self) -> list[MonomialElement]:
        return [self.elements[i] for i in self.reflection_indices()]

    def generator_indices(self) -> list[int]:
        """A small generating set: adjacent transpositions plus two phase
        generators (a difference and a p-step)."""
        if self._gen_indices is not None:
            return self._gen_indices
        m, p, n = self.m, self.p, self.n
        gens: list[int] = []

        def add(phases, perm):
            e = MonomialElement(m, tuple(a % m for a in phases), tuple(perm))
            if not e.is_identity():
                idx = self.index_of(e)
                if idx not in gens:
                    gens.append(idx)

        ident = list(range(n))
        for i in range(n - 1):
            swapped = ident.copy()
            swapped[i], swapped[i + 1] = swapped[i + 1], swapped[i]
            add([0] * n, swapped)
        if m > 1:
            if n > 1:
                add([1, m - 1] + [0] * (n - 2), ident)
            add([p] + [0] * (n - 1), ident)
        self._gen_indices = gens
        return gens


def enumerate_group(m: int, p: int, n: int,
                    order_cap: int = DEFAULT_ORDER_CAP) -> ConcreteGroup:
    """All of G(m,p,n), exactly once each, identity first."""
    return ConcreteGroup(m, p, n, order_cap)


def reflections(g: ConcreteGroup) -> list[MonomialElement]:
    return g.reflections()


# ---------------------------------------------------------------------------
# Subgroup generation


@dataclass
class _SubgroupRecord:
    idx: np.ndarray  # sorted element indices
    gens: tuple[int, ...]  # generating reflection indices (a BFS path)

    @property
    def order(self) -> int:
        return len(self.idx)

    def key(self) -> bytes:
        return self.idx.tobytes()


def _generate_from(group: ConcreteGroup, base_idx: np.ndarray,
                   gen_tables: list[np.ndarray]) -> np.ndarray:
    """Closure of a subgroup (given by base_idx, which must already be
    closed) together with the generators behind gen_tables, which must
    include generators of the base subgroup.

    Walks right cosets: a candidate coset H*t*g is new iff its
    representative index is unmarked, and its elements are one table
    gather away from the elements of H*t.
    """
    member = np.zeros(group.size, dtype=bool)
    member[base_idx] = True
    stack = [(0, base_idx)]
    while stack:
        t, coset = stack.pop()
        for table in gen_tables:
            x = int(table[t])
            if not member[x]:
                new_coset = table[coset]
                member[new_coset] = True
                stack.append((x, new_coset))
    return member


def generate_subgroup(group: ConcreteGroup, element_indices) -> SubgroupHandle:
    """Subgroup generated by arbitrary elements (by index)."""
    tables = [group.right_table(i) for i in element_indices]
    ident = np.array([0], dtype=np.int64)
    member = _generate_from(group, ident, tables)
    return group.handle(np.flatnonzero(member).astype(np.int64))


def all_reflection_subgroups(group: ConcreteGroup,
                             max_subgroups: int = 200000) -> list[_SubgroupRecord]:
    """Closure BFS from the trivial subgroup: repeatedly adjoin one
    reflection and close.  Finds every subgroup generated by reflections."""
    refl = group.reflection_indices()
    refl_arr = np.array(refl, dtype=np.int64)
    refl_tables = {r: group.right_table(r) for r in refl}
    trivial = _SubgroupRecord(np.array([0], dtype=np.int64), ())
    records: dict[bytes, _SubgroupRecord] = {trivial.key(): trivial}
    queue: deque[_SubgroupRecord] = deque([trivial])
    while queue:
        rec = queue.popleft()
        inside = np.isin(refl_arr, rec.idx, assume_unique=True)
        gen_tables = [refl_tables[r] for r in rec.gens]
        for r, already in zip(refl, inside):
            if already:
                continue
            member = _generate_from(
                group, rec.idx, gen_tables + [refl_tables[r]])
            idx = np.flatnonzero(member).astype(np.int64)
            new = _SubgroupRecord(idx, rec.gens + (r,))
            key = new.key()
            if key not in records:
                if len(records) >= max_subgroups:
                    raise ResourceLimitError(
                        f"more than {max_subgroups} reflection subgroups")
                records[key] = new
                queue.append(new)
    return list(records.values())


def _conjugation_tables(group: ConcreteGroup) -> list[tuple[np.ndarray, np.ndarray]]:
    """(left-by-g, right-by-g^{-1}) table pairs over group generators."""
    out = []
    for g_idx in group.generator_indices():
        out.append((group.left_table(g_idx),
                    group.right_table(group.inverse_index(g_idx))))
    return out


def _partition_conjugacy(group: ConcreteGroup,
                         records: dict[bytes, np.ndarray]) -> list[OracleClass]:
    """Partition a conjugation-closed family of subgroups (index arrays
    keyed by their bytes) into conjugacy classes via orbit search over the
    parent's generators."""
    conj = _conjugation_tables(group)
    unvisited = dict(records)
    classes = []
    for key in sorted(records, key=lambda k: (len(records[k]), k)):
        if key not in unvisited:
            continue
        orbit = [key]
        del unvisited[key]
        frontier = [records[key]]
        while frontier:
            idx = frontier.pop()
            for left, right_inv in conj:
                new_idx = np.sort(left[right_inv[idx]])
                new_key = new_idx.tobytes()
                if new_key in unvisited:
                    del unvisited[new_key]
                    orbit.append(new_key)
                    frontier.append(new_idx)
                elif new_key not in records:
                    raise OracleConsistencyError(
                        "conjugate left the subgroup family")
        members = tuple(
            SubgroupHandle(group, group.indices_to_bits(records[k]), len(records[k]))
            for k in sorted(orbit)
        )
        classes.append(OracleClass(members))
    classes.sort(key=lambda c: (c.order, c.members[0].bits))
    return classes


def reflection_subgroup_classes(group: ConcreteGroup,
                                max_subgroups: int = 200000) -> list[OracleClass]:
    """Conjugacy classes of all reflection-generated subgroups."""
    recs = all_reflection_subgroups(group, max_subgroups)
    return _partition_conjugacy(group, {r.key(): r.idx for r in recs})


# ---------------------------------------------------------------------------
# Parabolic subgroups


def pointwise_stabilizer(group: ConcreteGroup, space: FixedSpace) -> SubgroupHandle:
    """All elements fixing every basis vector of the space, by exact phase
    arithmetic mod m (vectorized over the whole group)."""
    mask = _stabilizer_mask(group, space)
    return group.handle(np.flatnonzero(mask).astype(np.int64))


def _stabilizer_mask(group: ConcreteGroup, space: FixedSpace) -> np.ndarray:
    m, n = group.m, group.n
    mask = np.ones(group.size, dtype=bool)
    for coords, exps in space.vectors:
        in_c = np.zeros(n, dtype=bool)
        in_c[list(coords)] = True
        xfull = np.zeros(n, dtype=np.int64)
        xfull[list(coords)] = exps
        for j, xj in zip(coords, exps):
            pre = group._PINV[:, j]
            pre_in = in_c[pre]
            ok = pre_in & ((group._A[:, j] + xfull[pre] - xj) % m == 0)
            mask &= ok
    return mask


def parabolic_classes(group: ConcreteGroup) -> list[OracleClass]:
    """Conjugacy classes of {G_Fix(x) : x in G}: every parabolic subgroup
    is the stabilizer of the fixed space of one of its own elements, so
    this flat set is the full set of parabolic subgroups; the trivial
    subgroup (x = 1) and the whole group (x with minimal fixed space)
    always appear."""
    spaces = {}
    for sp in group.fixed_spaces():
        spaces.setdefault(sp.vectors, sp)
    stabs: dict[bytes, np.ndarray] = {}
    for sp in spaces.values():
        idx = np.flatnonzero(_stabilizer_mask(group, sp)).astype(np.int64)
        stabs.setdefault(idx.tobytes(), idx)
    return _partition_conjugacy(group, stabs)


# ---------------------------------------------------------------------------
# Minimal classes, conjugacy, Sylow construction, identification


def minimal_full_valuation(group: ConcreteGroup, classes: list[OracleClass],
                           ell: int) -> list[OracleClass]:
    """Classes whose order has the full ell-valuation of |G| and none of
    whose members properly contain another such class member."""
    g_val = nu(ell, group.size)
    full = [c for c in classes if nu(ell, c.order) == g_val]
    minimal = []
    for c in full:
        dominated = False
        for other in full:
            if other.order >= c.order:
                continue
            if any(o.bits & a.bits == o.bits
                   for a in c.members for o in other.members):
                dominated = True
                break
        if not dominated:
            minimal.append(c)
    return minimal


def are_conjugate(group: ConcreteGroup, a: SubgroupHandle,
                  b: SubgroupHandle) -> bool:
    """Orbit search from a under conjugation by the parent's generators."""
    if a.order != b.order:
        return False
    if a.bits == b.bits:
        return True
    conj = _conjugation_tables(group)
    target = np.sort(b.indices()).tobytes()
    start = np.sort(a.indices())
    seen = {start.tobytes()}
    frontier = [start]
    while frontier:
        idx = frontier.pop()
        for left, right_inv in conj:
            new_idx = np.sort(left[right_inv[idx]])
            key = new_idx.tobytes()
            if key == target:
                return True
            if key not in seen:
                seen.add(key)
                frontier.append(new_idx)
    return False


def sylow_construct(group: ConcreteGroup, ell: int) -> SubgroupHandle:
    """A concrete ell-Sylow subgroup: diagonal ell-power phase generators
    satisfying the phase-sum constraint, plus the iterated-wreath
    permutation generators of a Sylow subgroup of Sym(n) aligned to
    base-ell blocks.  The generated order must equal the ell-part of |G|,
    which proves it is Sylow."""
    m, p, n = group.m, group.p, group.n
    if group.size % ell:
        raise ValueError(f"{ell} does not divide |G| = {group.size}")
    gens: list[int] = []

    def add(phases, perm):
        e = MonomialElement(m, tuple(a % m for a in phases), tuple(perm))
        if not e.is_identity():
            gens.append(group.index_of(e))

    c = m // ell ** nu(ell, m)
    ident = tuple(range(n))
    if c != m:
        step = (c * ell ** nu(ell, p)) % m
        if step:
            add([step] + [0] * (n - 1), ident)
        for i in range(n - 1):
            phases = [0] * n
            phases[i], phases[i + 1] = c, m - c
            add(phases, ident)

    # Wreath towers over blocks of sizes given by the base-ell digits of n,
    # largest blocks first.
    digits = []
    nn = n
    while nn:
        nn, d = divmod(nn, ell)
        digits.append(d)
    offset = 0
    for i in range(len(digits) - 1, 0, -1):
        for _ in range(digits[i]):
            for t in range(1, i + 1):
                width = ell**t
                perm = list(range(n))
                for j in range(width):
                    perm[offset + j] = offset + (j + ell ** (t - 1)) % width
                add([0] * n, perm)
            offset += ell**i

    handle = generate_subgroup(group, gens) if gens else group.handle(
        np.array([0], dtype=np.int64))
    expected = ell ** nu(ell, group.size)
    if handle.order != expected:
        raise OracleConsistencyError(
            f"Sylow recipe for G({m},{p},{n}) at {ell} generated order "
            f"{handle.order}, expected {expected}")
    return handle


def identify_class(group: ConcreteGroup, h: SubgroupHandle,
                   validate: bool = True) -> AugmentedPartition:
    """Recover the augmented-partition label of a reflection subgroup from
    its orbit and phase structure.

    Blocks are the orbits of the permutation parts.  In each block the
    phase subgroup is read off conjugation-invariantly from the cycle
    phase sums (gcd with m gives m/m_i), the rank is the orbit size, and
    p_i follows from the projected factor order.  With validate the
    subgroup is regenerated from its reflections first; a subgroup not
    generated by reflections is rejected.
    """
    m, p, n = group.m, group.p, group.n
    idx = h.indices()
    if validate:
        refl_set = np.array(group.reflection_indices(), dtype=np.int64)
        inside = idx[np.isin(idx, refl_set, assume_unique=True)]
        regenerated = (generate_subgroup(group, list(map(int, inside)))
                       if len(inside) else group.handle(np.array([0], dtype=np.int64)))
        if regenerated.bits != h.bits:
            raise ValueError("subgroup is not generated by its reflections")

    perms = group._P[idx]
    phases = group._A[idx]

    # Orbits of the permutation action (union-find).
    parent = list(range(n))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for row in perms:
        for j in range(n):
            ra, rb = find(j), find(int(row[j]))
            if ra != rb:
                parent[ra] = rb
    blocks: dict[int, list[int]] = {}
    for j in range(n):
        blocks.setdefault(find(j), []).append(j)

    triples = []
    for block in blocks.values():
        block_set = set(block)
        size = len(block)
        # gcd of all cycle phase sums within the block, against m.
        g = m
        for row_p, row_a in zip(perms, phases):
            seen = set()
            for start in block:
                if start in seen:
                    continue
                total = 0
                j = start
                while True:
                    seen.add(j)
                    total += int(row_a[j])
                    j = int(row_p[j])
                    if j == start:
                        break
                g = _gcd(g, total % m)
        m_i = m // g
        cols = sorted(block)
        projections = {
            (tuple(int(x) for x in row_a[cols]),
             tuple(cols.index(int(row_p[j])) for j in cols))
            for row_p, row_a in zip(perms, phases)
        }
        factor_order = len(projections)
        p_i = m_i**size * factorial(size) // factor_order
        if m_i**size * factorial(size) % factor_order or m_i % p_i:
            raise ValueError(
                f"block {block} does not project onto an imprimitive factor")
        triples.append((m_i, p_i, size))

    return augmented_partition(triples, (m, p, n))


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return a
