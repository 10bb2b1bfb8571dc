"""Finite groups as validated Cayley tables, plus their cyclic-subgroup structure.

Groups are plain multiplication tables over 0-based element indices with the
identity pinned at index 0.  Constructors cover the families needed for the
small-group catalog (cyclic, dihedral, dicyclic, symmetric, alternating and
direct products); everything else is ingested through :func:`validate_table`.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache, reduce


class GroupError(ValueError):
    """A multiplication table fails one of the group axioms."""


@dataclass(frozen=True)
class GroupTable:
    """A finite group given by its full multiplication table.

    ``table[i][j]`` is the index of the product of elements ``i`` and ``j``;
    index 0 is always the identity.  Instances are immutable and validated on
    construction (closure, identity, Latin square, associativity, inverses).
    """

    order: int
    table: tuple[tuple[int, ...], ...]
    labels: tuple[str, ...]
    name: str

    def __post_init__(self) -> None:
        _check_group_axioms(self.order, self.table)
        if len(self.labels) != self.order:
            raise GroupError(
                f"expected {self.order} labels, got {len(self.labels)}"
            )

    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]

    def inverse(self, a: int) -> int:
        row = self.table[a]
        for b in range(self.order):
            if row[b] == 0:
                return b
        raise GroupError(f"element {a} has no inverse")  # unreachable once validated

    def elements(self) -> range:
        return range(self.order)

    def __repr__(self) -> str:
        return f"GroupTable({self.name}, order={self.order})"


@dataclass(frozen=True)
class MaximalCyclicFamily:
    """The maximal cyclic subgroups of a group, with their generator sets.

    ``subgroups[i]`` is the element set of the i-th maximal cyclic subgroup,
    ``generators[i]`` the elements generating exactly that subgroup, and
    ``sizes[i]`` its order.  Subgroups are sorted by (size desc, member list)
    so the family is deterministic for a given table.
    """

    group_order: int
    subgroups: tuple[frozenset[int], ...]
    generators: tuple[frozenset[int], ...]
    sizes: tuple[int, ...]

    @property
    def count(self) -> int:
        return len(self.subgroups)


def _check_group_axioms(n: int, table: tuple[tuple[int, ...], ...]) -> None:
    if n < 1:
        raise GroupError(f"group order must be positive, got {n}")
    if len(table) != n:
        raise GroupError(f"table has {len(table)} rows, expected {n}")
    for i, row in enumerate(table):
        if len(row) != n:
            raise GroupError(f"row {i} has {len(row)} entries, expected {n}")
        for j, v in enumerate(row):
            if not (0 <= v < n):
                raise GroupError(f"entry at row {i}, column {j} is {v}, outside [0, {n})")
    for j in range(n):
        if table[0][j] != j:
            raise GroupError(f"index 0 is not a left identity: table[0][{j}] = {table[0][j]}")
    for i in range(n):
        if table[i][0] != i:
            raise GroupError(f"index 0 is not a right identity: table[{i}][0] = {table[i][0]}")
    for i in range(n):
        seen = [False] * n
        for j in range(n):
            v = table[i][j]
            if seen[v]:
                raise GroupError(f"row {i} repeats value {v} (second hit at column {j})")
            seen[v] = True
    for j in range(n):
        seen = [False] * n
        for i in range(n):
            v = table[i][j]
            if seen[v]:
                raise GroupError(f"column {j} repeats value {v} (second hit at row {i})")
            seen[v] = True
    for i in range(n):
        for j in range(n):
            ij = table[i][j]
            row_j = table[j]
            row_i = table[i]
            for k in range(n):
                if table[ij][k] != row_i[row_j[k]]:
                    raise GroupError(
                        f"associativity fails at triple ({i}, {j}, {k}): "
                        f"({i}*{j})*{k} = {table[ij][k]} but {i}*({j}*{k}) = {row_i[row_j[k]]}"
                    )
    for i in range(n):
        if 0 not in table[i]:
            raise GroupError(f"element {i} has no inverse")


def make_cyclic(n: int) -> GroupTable:
    """The cyclic group of order ``n`` with addition mod n."""
    if n < 1:
        raise GroupError(f"cyclic group needs order >= 1, got {n}")
    table = tuple(tuple((i + j) % n for j in range(n)) for i in range(n))
    labels = tuple(str(i) for i in range(n))
    return GroupTable(n, table, labels, f"Z{n}")


def make_dihedral(n: int) -> GroupTable:
    """The dihedral group of order 2n (symmetries of the regular n-gon).

    Elements are ordered e, x, ..., x^(n-1), y, xy, ..., x^(n-1)y with
    x^n = y^2 = e and xy = yx^(-1).  ``n = 2`` is accepted as an alias for
    the Klein four-group Z2 x Z2.
    """
    if n < 2:
        raise GroupError(f"dihedral group needs n >= 2, got {n}")
    size = 2 * n

    def idx(rot: int, flip: int) -> int:
        return rot % n + (n if flip else 0)

    table = []
    for i in range(size):
        ri, fi = i % n, i >= n
        row = []
        for j in range(size):
            rj, fj = j % n, j >= n
            if not fi and not fj:
                row.append(idx(ri + rj, 0))
            elif not fi and fj:
                row.append(idx(ri + rj, 1))
            elif fi and not fj:
                row.append(idx(ri - rj, 1))
            else:
                row.append(idx(ri - rj, 0))
        table.append(tuple(row))
    labels = ["e"] + [f"x{i}" if i > 1 else "x" for i in range(1, n)]
    labels += ["y"] + [f"x{i}y" if i > 1 else "xy" for i in range(1, n)]
    return GroupTable(size, tuple(table), tuple(labels), f"D{size}")


_Q8_LABELS = ("1", "i", "-1", "-i", "j", "k", "-j", "-k")


def make_dicyclic(n: int) -> GroupTable:
    """The dicyclic group of order 4n.

    Elements are ordered e, a, ..., a^(2n-1), b, ab, ..., a^(2n-1)b with
    a^(2n) = e, b^2 = a^n and ab = ba^(-1).  For n = 2 this is the quaternion
    group and the labels use the usual 1, i, j, k names.
    """
    if n < 2:
        raise GroupError(f"dicyclic group needs n >= 2, got {n}")
    m = 2 * n
    size = 4 * n

    def idx(rot: int, flip: int) -> int:
        return rot % m + (m if flip else 0)

    table = []
    for i in range(size):
        ri, fi = i % m, i >= m
        row = []
        for j in range(size):
            rj, fj = j % m, j >= m
            if not fi and not fj:
                row.append(idx(ri + rj, 0))
            elif not fi and fj:
                row.append(idx(ri + rj, 1))
            elif fi and not fj:
                row.append(idx(ri - rj, 1))
            else:
                row.append(idx(ri - rj + n, 0))
        table.append(tuple(row))
    if n == 2:
        labels = _Q8_LABELS
    else:
        lab = ["e"] + [f"a{i}" if i > 1 else "a" for i in range(1, m)]
        lab += ["b"] + [f"a{i}b" if i > 1 else "ab" for i in range(1, m)]
        labels = tuple(lab)
    return GroupTable(size, tuple(table), tuple(labels), f"Q{size}")


def _perm_label(p: tuple[int, ...]) -> str:
    seen = [False] * len(p)
    parts = []
    for start in range(len(p)):
        if seen[start] or p[start] == start:
            seen[start] = True
            continue
        cyc = [start]
        seen[start] = True
        cur = p[start]
        while cur != start:
            cyc.append(cur)
            seen[cur] = True
            cur = p[cur]
        parts.append("(" + "".join(str(v) for v in cyc) + ")")
    return "".join(parts) if parts else "e"


def _perm_group(perms: list[tuple[int, ...]], name: str) -> GroupTable:
    index = {p: i for i, p in enumerate(perms)}
    size = len(perms)
    table = []
    for p in perms:
        row = []
        for q in perms:
            prod = tuple(p[q[k]] for k in range(len(p)))
            row.append(index[prod])
        table.append(tuple(row))
    labels = tuple(_perm_label(p) for p in perms)
    return GroupTable(size, tuple(table), labels, name)


def _perm_sign(p: tuple[int, ...]) -> int:
    sign = 1
    seen = [False] * len(p)
    for start in range(len(p)):
        if seen[start]:
            continue
        length = 0
        cur = start
        while not seen[cur]:
            seen[cur] = True
            cur = p[cur]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def make_symmetric(n: int) -> GroupTable:
    """The symmetric group on n points, elements in lexicographic order."""
    if not 1 <= n <= 5:
        raise GroupError(f"symmetric group supported for 1 <= n <= 5, got {n}")
    perms = sorted(itertools.permutations(range(n)))
    return _perm_group(perms, f"S{n}")


def make_alternating(n: int) -> GroupTable:
    """The alternating group on n points, even permutations in lex order."""
    if not 1 <= n <= 5:
        raise GroupError(f"alternating group supported for 1 <= n <= 5, got {n}")
    perms = sorted(p for p in itertools.permutations(range(n)) if _perm_sign(p) == 1)
    return _perm_group(perms, f"A{n}")


def direct_product(g: GroupTable, h: GroupTable) -> GroupTable:
    """Componentwise product; pair (a, b) gets index a * |h| + b."""
    size = g.order * h.order
    table = []
    for a1 in range(g.order):
        for b1 in range(h.order):
            row = []
            for a2 in range(g.order):
                ga = g.table[a1][a2]
                for b2 in range(h.order):
                    row.append(ga * h.order + h.table[b1][b2])
            table.append(tuple(row))
    labels = tuple(
        f"({g.labels[a]},{h.labels[b]})"
        for a in range(g.order)
        for b in range(h.order)
    )
    return GroupTable(size, tuple(table), labels, f"{g.name}x{h.name}")


def validate_table(
    raw, labels=None, name: str = "custom"
) -> GroupTable:
    """Build a :class:`GroupTable` from a raw square array.

    Relocates the identity to index 0 by relabeling when necessary.  Raises
    :class:`GroupError` naming the first offending entry for non-square input,
    out-of-range entries, missing identity, Latin-square violations and
    associativity violations.
    """
    rows = [list(r) for r in raw]
    n = len(rows)
    if n == 0:
        raise GroupError("empty table")
    for i, row in enumerate(rows):
        if len(row) != n:
            raise GroupError(f"table is not square: row {i} has {len(row)} entries, expected {n}")
        for j, v in enumerate(row):
            if not isinstance(v, int) or not (0 <= v < n):
                raise GroupError(f"entry at row {i}, column {j} is {v!r}, outside [0, {n})")
    identity = None
    for e in range(n):
        if all(rows[e][j] == j for j in range(n)) and all(rows[i][e] == i for i in range(n)):
            identity = e
            break
    if identity is None:
        raise GroupError("no two-sided identity element found")
    if labels is None:
        labels = [f"g{i}" for i in range(n)]
    else:
        labels = [str(s) for s in labels]
        if len(labels) != n:
            raise GroupError(f"expected {n} labels, got {len(labels)}")
    if identity != 0:
        old_order = [identity] + [x for x in range(n) if x != identity]
        perm = [0] * n
        for new, old in enumerate(old_order):
            perm[old] = new
        rows = [
            [perm[rows[old_i][old_j]] for old_j in old_order]
            for old_i in old_order
        ]
        labels = [labels[old] for old in old_order]
    return GroupTable(n, tuple(tuple(r) for r in rows), tuple(labels), name)


def element_order(g: GroupTable, x: int) -> int:
    """The least t >= 1 with x^t = identity."""
    if not 0 <= x < g.order:
        raise GroupError(f"element index {x} out of range for order {g.order}")
    t = 1
    y = x
    while y != 0:
        y = g.table[y][x]
        t += 1
    return t


def cyclic_subgroup(g: GroupTable, x: int) -> frozenset[int]:
    """The subgroup generated by a single element."""
    members = {0}
    y = x
    while y != 0:
        members.add(y)
        y = g.table[y][x]
    return frozenset(members)


@lru_cache(maxsize=512)
def maximal_cyclic_subgroups(g: GroupTable) -> MaximalCyclicFamily:
    """All cyclic subgroups not properly contained in another cyclic subgroup.

    Output is sorted by (size desc, sorted member list) for determinism.
    """
    generated = [cyclic_subgroup(g, x) for x in range(g.order)]
    distinct = set(generated)
    maximal = [s for s in distinct if not any(s < t for t in distinct)]
    maximal.sort(key=lambda s: (-len(s), sorted(s)))
    generators = [
        frozenset(x for x in range(g.order) if generated[x] == s) for s in maximal
    ]
    return MaximalCyclicFamily(
        group_order=g.order,
        subgroups=tuple(maximal),
        generators=tuple(generators),
        sizes=tuple(len(s) for s in maximal),
    )


def generator_set(g: GroupTable, family: MaximalCyclicFamily | None = None) -> frozenset[int]:
    """Elements generating some maximal cyclic subgroup."""
    if family is None:
        family = maximal_cyclic_subgroups(g)
    return frozenset().union(*family.generators)


def covering_union(g: GroupTable, x: int, family: MaximalCyclicFamily | None = None) -> frozenset[int]:
    """Union of all maximal cyclic subgroups containing ``x``."""
    if not 0 <= x < g.order:
        raise GroupError(f"element index {x} out of range for order {g.order}")
    if family is None:
        family = maximal_cyclic_subgroups(g)
    out: frozenset[int] = frozenset()
    for s in family.subgroups:
        if x in s:
            out = out | s
    return out


def _generating_sequence(g: GroupTable) -> list[int]:
    gens: list[int] = []
    closure = {0}
    for x in range(g.order):
        if x not in closure:
            gens.append(x)
            closure = _closure(g, gens)
            if len(closure) == g.order:
                break
    return gens


def _closure(g: GroupTable, gens: list[int]) -> set[int]:
    seen = {0}
    frontier = [0]
    while frontier:
        new = []
        for a in frontier:
            for s in gens:
                b = g.table[a][s]
                if b not in seen:
                    seen.add(b)
                    new.append(b)
        frontier = new
    return seen


def _extend_homomorphism(
    g: GroupTable,
    h: GroupTable,
    gens: list[int],
    images: list[int],
    require_full: bool = False,
) -> list[int | None] | None:
    """Propagate generator images through products; None on conflict.

    The result maps the subgroup generated by ``gens``; entries outside it
    stay None unless ``require_full`` rejects partial coverage.
    """
    phi: list[int | None] = [None] * g.order
    phi[0] = 0
    frontier = [0]
    while frontier:
        new = []
        for a in frontier:
            fa = phi[a]
            for s, t in zip(gens, images):
                b = g.table[a][s]
                c = h.table[fa][t]
                if phi[b] is None:
                    phi[b] = c
                    new.append(b)
                elif phi[b] != c:
                    return None
        frontier = new
    if require_full and any(v is None for v in phi):
        return None
    return phi


def are_isomorphic(g: GroupTable, h: GroupTable) -> bool:
    """Brute-force isomorphism test with order-profile pruning.

    Intended for the desk-scale catalog (order <= 64 or so).
    """
    if g.order != h.order:
        return False
    orders_g = [element_order(g, x) for x in range(g.order)]
    orders_h = [element_order(h, x) for x in range(h.order)]
    if sorted(orders_g) != sorted(orders_h):
        return False
    gens = _generating_sequence(g)
    candidates = [
        [y for y in range(h.order) if orders_h[y] == orders_g[s]] for s in gens
    ]

    def search(i: int, images: list[int]) -> bool:
        if i == len(gens):
            phi = _extend_homomorphism(g, h, gens, images, require_full=True)
            if phi is None or len(set(phi)) != g.order:
                return False
            return all(
                phi[g.table[a][b]] == h.table[phi[a]][phi[b]]
                for a in range(g.order)
                for b in range(g.order)
            )
        for y in candidates[i]:
            if _extend_homomorphism(g, h, gens[: i + 1], images + [y]) is None:
                continue
            if search(i + 1, images + [y]):
                return True
        return False

    return search(0, [])


CATALOG_MAX_ORDER = 32

_TABLE_RECIPES: tuple[tuple[str, ...], ...] = (
    ("Z1",), ("Z2",), ("Z3",), ("Z4",), ("Z2xZ2",), ("Z5",), ("Z6",), ("S3",),
    ("Z7",), ("Z8",), ("Z2xZ4",), ("Z2xZ2xZ2",), ("D8",), ("Q8",), ("Z9",),
    ("Z3xZ3",), ("Z10",), ("D10",), ("Z11",), ("Z12",), ("Z2xZ6",), ("A4",),
    ("D12",), ("Q12",), ("Z13",), ("Z14",), ("D14",), ("Z15",),
)


def group_from_name(name: str) -> GroupTable:
    """Build a group from a compact family name such as Z12, D8, Q12, S4, A4
    or a direct product like Z2xZ6 (also accepts Zn:12, D:8, Q:12 forms)."""
    text = name.strip()
    if ":" in text and "x" not in text:
        fam, _, arg = text.partition(":")
        fam = fam.strip()
        try:
            value = int(arg)
        except ValueError:
            raise GroupError(f"bad group selector {name!r}: parameter is not an integer")
        return _family(fam, value)
    parts = text.split("x")
    groups = [_compact_family(p) for p in parts]
    return reduce(direct_product, groups)


def _family(fam: str, value: int) -> GroupTable:
    key = fam.upper()
    if key in ("Z", "ZN"):
        return make_cyclic(value)
    if key == "D":
        if value % 2 != 0:
            raise GroupError(f"dihedral order must be even, got {value}")
        return make_dihedral(value // 2)
    if key == "Q":
        if value % 4 != 0:
            raise GroupError(f"dicyclic order must be divisible by 4, got {value}")
        return make_dicyclic(value // 4)
    if key == "S":
        return make_symmetric(value)
    if key == "A":
        return make_alternating(value)
    raise GroupError(f"unknown group family {fam!r}")


def _compact_family(token: str) -> GroupTable:
    t = token.strip()
    if not t or not t[0].isalpha():
        raise GroupError(f"bad group selector token {token!r}")
    fam = t[0]
    rest = t[1:].lstrip(":")
    try:
        value = int(rest)
    except ValueError:
        raise GroupError(f"bad group selector token {token!r}")
    return _family(fam, value)


def _invariant_factor_chains(lo: int, hi: int):
    """Yield divisor chains (d1 | d2 | ... | dk) with product in [lo, hi]."""

    def extend(chain: tuple[int, ...], product: int):
        if lo <= product <= hi:
            yield chain
        d = chain[-1]
        nxt = d
        while product * nxt <= hi:
            if nxt % d == 0:
                yield from extend(chain + (nxt,), product * nxt)
            nxt += 1

    for d1 in range(2, hi + 1):
        yield from extend((d1,), d1)


def _abelian_from_chain(chain: tuple[int, ...]) -> GroupTable:
    groups = [make_cyclic(d) for d in chain]
    return reduce(direct_product, groups)


@lru_cache(maxsize=None)
def catalog(max_order: int) -> tuple[GroupTable, ...]:
    """The group catalog up to ``max_order``.

    For ``max_order <= 15`` this is the complete list of the 28 pairwise
    non-isomorphic groups of order at most 15.  Orders 16..32 are covered by a
    curated, non-exhaustive extension (all abelian groups via invariant
    factors, dihedral, dicyclic and S4); reports must flag that range as
    non-exhaustive.
    """
    if max_order < 1:
        raise GroupError(f"catalog needs max_order >= 1, got {max_order}")
    if max_order > CATALOG_MAX_ORDER:
        raise GroupError(
            f"catalog capped at order {CATALOG_MAX_ORDER}, got {max_order}"
        )
    groups = [group_from_name(r[0]) for r in _TABLE_RECIPES]
    groups = [g for g in groups if g.order <= max_order]
    if max_order > 15:
        extension: list[GroupTable] = []
        for chain in _invariant_factor_chains(16, max_order):
            extension.append(_abelian_from_chain(chain))
        for size in range(16, max_order + 1, 2):
            extension.append(make_dihedral(size // 2))
        for size in range(16, max_order + 1, 4):
            extension.append(make_dicyclic(size // 4))
        if max_order >= 24:
            extension.append(make_symmetric(4))
        extension.sort(key=lambda g: (g.order, g.name))
        groups.extend(extension)
    return tuple(groups)


def is_cyclic(g: GroupTable) -> bool:
    return any(element_order(g, x) == g.order for x in range(g.order))


def format_cayley_table(g: GroupTable) -> str:
    """Serialize a group in the plain-text ingestion format."""
    lines = [str(g.order)]
    for row in g.table:
        lines.append(" ".join(str(v) for v in row))
    lines.append(" ".join(g.labels))
    return "\n".join(lines) + "\n"


def parse_cayley_table(text: str, name: str = "ingested") -> GroupTable:
    """Parse the plain-text Cayley table format.

    Layout: first line is n, then n lines of n whitespace-separated 0-based
    indices, optionally followed by a line of n labels.  Rejection messages
    cite the row/column of the first violation.
    """
    lines = [ln for ln in (s.strip() for s in text.splitlines()) if ln]
    if not lines:
        raise GroupError("empty input")
    try:
        n = int(lines[0])
    except ValueError:
        raise GroupError(f"first line must be the order, got {lines[0]!r}")
    if n < 1:
        raise GroupError(f"order must be positive, got {n}")
    if len(lines) < 1 + n:
        raise GroupError(f"expected {n} table rows, found {len(lines) - 1}")
    rows = []
    for i in range(n):
        parts = lines[1 + i].split()
        if len(parts) != n:
            raise GroupError(f"row {i} has {len(parts)} entries, expected {n}")
        row = []
        for j, p in enumerate(parts):
            try:
                row.append(int(p))
            except ValueError:
                raise GroupError(f"entry at row {i}, column {j} is {p!r}, not an integer")
        rows.append(row)
    labels = None
    if len(lines) > 1 + n:
        parts = lines[1 + n].split()
        if len(parts) != n:
            raise GroupError(f"label line has {len(parts)} entries, expected {n}")
        labels = parts
    return validate_table(rows, labels=labels, name=name)
