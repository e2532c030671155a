"""Finite solvable groups as multiplication tables.

Groups, subgroups and quotient maps are immutable values with structural
equality, and every enumeration returns a deterministic canonical order
(sorted element lists, least-coset labeling), so they can serve as dict
keys and as canonical representatives of pair classes downstream.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property, lru_cache

from .errors import NotAGroup, NotASubgroup, NotNormal, NotSolvable, ParseError

MAX_ORDER = 128


@dataclass(frozen=True)
class Group:
    table: tuple[tuple[int, ...], ...]
    name: str | None = field(default=None, compare=False)

    @property
    def order(self) -> int:
        return len(self.table)

    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]

    @cached_property
    def inverses(self) -> tuple[int, ...]:
        inv = [None] * self.order
        for a in range(self.order):
            for b in range(self.order):
                if self.table[a][b] == 0:
                    inv[a] = b
                    break
        return tuple(inv)

    def inv(self, a: int) -> int:
        return self.inverses[a]

    def conj(self, g: int, x: int) -> int:
        """g x g^{-1}."""
        return self.mul(self.mul(g, x), self.inv(g))

    def element_order(self, a: int) -> int:
        n, x = 1, a
        while x != 0:
            x = self.mul(x, a)
            n += 1
        return n

    @cached_property
    def conjugacy_classes(self) -> tuple[tuple[int, ...], ...]:
        seen = [False] * self.order
        classes = []
        for a in range(self.order):
            if seen[a]:
                continue
            orbit = sorted({self.conj(g, a) for g in range(self.order)})
            for x in orbit:
                seen[x] = True
            classes.append(tuple(orbit))
        return tuple(sorted(classes, key=lambda c: c[0]))

    @cached_property
    def class_of(self) -> tuple[int, ...]:
        idx = [0] * self.order
        for i, cls in enumerate(self.conjugacy_classes):
            for x in cls:
                idx[x] = i
        return tuple(idx)

    def is_abelian(self) -> bool:
        t = self.table
        return all(
            t[a][b] == t[b][a] for a in range(self.order) for b in range(a)
        )

    def __repr__(self):
        label = self.name or f"order-{self.order}"
        return f"Group({label})"


@dataclass(frozen=True)
class Subgroup:
    parent: Group
    elements: tuple[int, ...]

    @property
    def order(self) -> int:
        return len(self.elements)

    def __contains__(self, x: int) -> bool:
        return x in self.element_set

    @cached_property
    def element_set(self) -> frozenset:
        return frozenset(self.elements)

    def contains_subgroup(self, other: "Subgroup") -> bool:
        return other.element_set <= self.element_set

    def index_in(self, other: "Subgroup") -> int:
        return other.order // self.order

    @cached_property
    def as_group(self) -> "Group":
        """This subgroup as an abstract Group on its own element labels
        (position in the sorted element tuple)."""
        pos = {x: i for i, x in enumerate(self.elements)}
        table = tuple(
            tuple(pos[self.parent.mul(a, b)] for b in self.elements)
            for a in self.elements
        )
        return Group(table, name=None)

    def __repr__(self):
        return f"Subgroup{self.elements}"


@dataclass(frozen=True)
class QuotientMap:
    source: Group
    kernel: Subgroup
    quotient: Group
    projection: tuple[int, ...]

    def project(self, x: int) -> int:
        return self.projection[x]

    def project_subgroup(self, h: Subgroup) -> Subgroup:
        assert h.parent is self.source or h.parent == self.source
        return subgroup(self.quotient, {self.projection[x] for x in h.elements})

    def preimage(self, hbar: Subgroup) -> Subgroup:
        target = hbar.element_set
        return subgroup(
            self.source,
            [x for x in range(self.source.order) if self.projection[x] in target],
        )

    @cached_property
    def section(self) -> tuple[int, ...]:
        """Least preimage of each quotient element."""
        sec = [None] * self.quotient.order
        for x in range(self.source.order):
            q = self.projection[x]
            if sec[q] is None:
                sec[q] = x
        return tuple(sec)


# ---------------------------------------------------------------------------
# construction and validation


def _validate_table(table) -> None:
    n = len(table)
    for i, row in enumerate(table):
        if len(row) != n:
            raise ParseError(f"row {i} has length {len(row)}, expected {n}")
        for x in row:
            if not (0 <= x < n):
                raise ParseError(f"entry {x} out of range in row {i}")
    for i in range(n):
        if table[0][i] != i or table[i][0] != i:
            raise NotAGroup(f"index 0 is not a two-sided identity at {i}")
    for i in range(n):
        if sorted(table[i]) != list(range(n)) or sorted(
            table[j][i] for j in range(n)
        ) != list(range(n)):
            raise NotAGroup(f"row/column {i} is not a permutation")
    for a in range(n):
        for b in range(n):
            tab = table[a][b]
            for c in range(n):
                if table[tab][c] != table[a][table[b][c]]:
                    raise NotAGroup(f"associativity fails at triple {(a, b, c)}")
    for a in range(n):
        if all(table[a][b] != 0 for b in range(n)):
            raise NotAGroup(f"element {a} has no inverse")


def make_group(table, name: str | None = None, check: bool = True) -> Group:
    table = tuple(tuple(row) for row in table)
    if len(table) > MAX_ORDER:
        raise ParseError(f"group order {len(table)} exceeds cap {MAX_ORDER}")
    if check:
        _validate_table(table)
    g = Group(table, name=name)
    if check and not is_solvable(g):
        raise NotSolvable(f"group {name or len(table)} is not solvable")
    return g


def load_group(text: str) -> Group:
    lines = [ln.strip() for ln in text.strip().splitlines() if ln.strip()]
    if not lines:
        raise ParseError("empty group file")
    try:
        n = int(lines[0])
    except ValueError as exc:
        raise ParseError(f"bad order line: {lines[0]!r}") from exc
    if n <= 0:
        raise ParseError(f"non-positive order {n}")
    if len(lines) < n + 1:
        raise ParseError(f"expected {n} table rows, found {len(lines) - 1}")
    table = []
    for i in range(1, n + 1):
        try:
            row = tuple(int(tok) for tok in lines[i].split())
        except ValueError as exc:
            raise ParseError(f"bad token in row {i}") from exc
        table.append(row)
    name = None
    if len(lines) > n + 1:
        tail = lines[n + 1]
        if not tail.startswith("name "):
            raise ParseError(f"unexpected trailing line: {tail!r}")
        name = tail[5:].strip()
    return make_group(table, name=name)


def dump_group(g: Group) -> str:
    lines = [str(g.order)]
    lines += [" ".join(str(x) for x in row) for row in g.table]
    if g.name:
        lines.append(f"name {g.name}")
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# subgroup machinery


def subgroup(g: Group, elements, check: bool = False) -> Subgroup:
    elems = tuple(sorted(set(elements)))
    h = Subgroup(g, elems)
    if check:
        if 0 not in h.element_set:
            raise NotASubgroup("missing identity")
        for a in elems:
            if g.inv(a) not in h.element_set:
                raise NotASubgroup(f"not closed under inverse at {a}")
            for b in elems:
                if g.mul(a, b) not in h.element_set:
                    raise NotASubgroup(f"not closed at ({a},{b})")
    return h


def trivial_subgroup(g: Group) -> Subgroup:
    return subgroup(g, [0])


def full_subgroup(g: Group) -> Subgroup:
    return subgroup(g, range(g.order))


def closure(g: Group, gens) -> Subgroup:
    elems = {0}
    frontier = [0]
    gens = list(gens)
    while frontier:
        x = frontier.pop()
        for s in gens:
            for y in (g.mul(x, s), g.mul(s, x)):
                if y not in elems:
                    elems.add(y)
                    frontier.append(y)
    return subgroup(g, elems)


@lru_cache(maxsize=None)
def subgroups(g: Group) -> tuple[tuple[Subgroup, ...], ...]:
    """All subgroups, grouped into conjugacy classes.

    Classes are ordered by (order, representative element tuple); members
    within a class are sorted by element tuple.  The enumeration adds one
    generator at a time to known subgroups, which reaches every subgroup.
    """
    found = {trivial_subgroup(g).elements}
    frontier = [trivial_subgroup(g)]
    while frontier:
        h = frontier.pop()
        for x in range(1, g.order):
            if x in h.element_set:
                continue
            bigger = closure(g, list(h.elements) + [x])
            if bigger.elements not in found:
                found.add(bigger.elements)
                frontier.append(bigger)
    all_subs = {elems: Subgroup(g, elems) for elems in found}
    classes = []
    seen = set()
    for elems in sorted(found, key=lambda e: (len(e), e)):
        if elems in seen:
            continue
        orbit = {
            conjugate_subgroup(all_subs[elems], x).elements
            for x in range(g.order)
        }
        seen |= orbit
        classes.append(tuple(Subgroup(g, e) for e in sorted(orbit)))
    return tuple(classes)


def all_subgroups(g: Group) -> list[Subgroup]:
    return [h for cls in subgroups(g) for h in cls]


def subgroup_class_reps(g: Group) -> list[Subgroup]:
    return [cls[0] for cls in subgroups(g)]


def conjugate_subgroup(h: Subgroup, g_elt: int) -> Subgroup:
    g = h.parent
    return subgroup(g, [g.conj(g_elt, x) for x in h.elements])


def is_normal(g: Group, h: Subgroup) -> bool:
    return all(conjugate_subgroup(h, x) == h for x in range(g.order))


def normalizer(g: Group, h: Subgroup) -> Subgroup:
    return subgroup(
        g, [x for x in range(g.order) if conjugate_subgroup(h, x) == h]
    )


def centralizer(g: Group, h: Subgroup) -> Subgroup:
    return subgroup(
        g,
        [
            x
            for x in range(g.order)
            if all(g.mul(x, y) == g.mul(y, x) for y in h.elements)
        ],
    )


def center(g: Group) -> Subgroup:
    return centralizer(g, full_subgroup(g))


def intersection(h: Subgroup, k: Subgroup) -> Subgroup:
    return subgroup(h.parent, h.element_set & k.element_set)


def product_set(h: Subgroup, k: Subgroup) -> Subgroup:
    """The set HK as a Subgroup (caller guarantees it is one, e.g. one
    factor normalizes the other)."""
    g = h.parent
    return subgroup(g, {g.mul(a, b) for a in h.elements for b in k.elements})


def core(g: Group, h: Subgroup) -> Subgroup:
    elems = set(h.element_set)
    for x in range(g.order):
        elems &= conjugate_subgroup(h, x).element_set
        if len(elems) == 1:
            break
    return subgroup(g, elems)


def commutator_subgroup(h: Subgroup, k: Subgroup) -> Subgroup:
    g = h.parent
    comms = {
        g.mul(g.mul(a, b), g.mul(g.inv(a), g.inv(b)))
        for a in h.elements
        for b in k.elements
    }
    return closure(g, comms)


def derived_subgroup(g: Group) -> Subgroup:
    full = full_subgroup(g)
    return commutator_subgroup(full, full)


def derived_series(g: Group) -> list[Subgroup]:
    series = [full_subgroup(g)]
    while True:
        nxt = commutator_subgroup(series[-1], series[-1])
        if nxt == series[-1]:
            break
        series.append(nxt)
    return series


def is_solvable(g: Group) -> bool:
    return derived_series(g)[-1].order == 1


@lru_cache(maxsize=None)
def normal_subgroups(g: Group) -> tuple[Subgroup, ...]:
    return tuple(
        cls[0] for cls in subgroups(g) if len(cls) == 1 and is_normal(g, cls[0])
    )


def minimal_normal_subgroups(g: Group) -> list[Subgroup]:
    normals = [n for n in normal_subgroups(g) if n.order > 1]
    return [
        n
        for n in normals
        if not any(
            m.order > 1 and m.order < n.order and n.contains_subgroup(m)
            for m in normals
        )
    ]


def minimal_abelian_normal_subgroups(g: Group) -> list[Subgroup]:
    """Minimal among nontrivial abelian normal subgroups.

    For solvable groups the minimal normal subgroups are elementary
    abelian, so this coincides with minimal_normal_subgroups; kept
    explicit because the lambda recursion is specified that way.
    """
    return [n for n in minimal_normal_subgroups(g) if n.as_group.is_abelian()]


def maximal_subgroups(g: Group) -> list[Subgroup]:
    proper = [h for h in all_subgroups(g) if h.order < g.order]
    return [
        h
        for h in proper
        if not any(
            k.order > h.order and k.contains_subgroup(h) for k in proper
        )
    ]


def sylow_primes(n: int) -> list[tuple[int, int]]:
    out = []
    p = 2
    while p * p <= n:
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            out.append((p, e))
        p += 1
    if n > 1:
        out.append((n, 1))
    return out


def fitting_subgroup(g: Group) -> Subgroup:
    """Join of the p-cores O_p(G): the largest nilpotent normal subgroup."""
    result = trivial_subgroup(g)
    for p, _ in sylow_primes(g.order):
        p_core = trivial_subgroup(g)
        for n in normal_subgroups(g):
            if _is_p_power(n.order, p):
                p_core = product_set(p_core, n)
        result = product_set(result, p_core)
    return result


def _is_p_power(n: int, p: int) -> bool:
    while n % p == 0:
        n //= p
    return n == 1


def is_nilpotent(g: Group) -> bool:
    return fitting_subgroup(g).order == g.order


# ---------------------------------------------------------------------------
# quotients


@lru_cache(maxsize=None)
def quotient(g: Group, n: Subgroup) -> QuotientMap:
    if not is_normal(g, n):
        raise NotNormal(f"{n} is not normal in {g}")
    # cosets labeled by least element, sorted by that least element
    coset_of = [None] * g.order
    cosets = []
    for x in range(g.order):
        if coset_of[x] is None:
            members = sorted(g.mul(x, h) for h in n.elements)
            idx = len(cosets)
            cosets.append(members)
            for y in members:
                coset_of[y] = idx
    order = sorted(range(len(cosets)), key=lambda i: cosets[i][0])
    relabel = {old: new for new, old in enumerate(order)}
    projection = tuple(relabel[coset_of[x]] for x in range(g.order))
    reps = [cosets[old][0] for old in order]
    table = tuple(
        tuple(projection[g.mul(reps[a], reps[b])] for b in range(len(reps)))
        for a in range(len(reps))
    )
    qname = None
    if g.name:
        qname = f"{g.name}/{'.'.join(map(str, n.elements))}"
    q = Group(table, name=qname)
    return QuotientMap(source=g, kernel=n, quotient=q, projection=projection)
