"""The free ring on monomial pairs and its character-theoretic shadow.

An element of R+(N<=Omega) is an integer combination of conjugacy classes
[H, chi] of pairs (subgroup, 1-dimensional character) with H >= N.  The
map phi sends [H, chi] to the induced character Ind_H^Omega(chi); its
kernel is computed exactly by integer linear algebra.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from math import lcm

from . import intlin
from .characters import (
    Character,
    ClassFunction,
    character,
    characters_of,
    conjugate_character,
    decompose,
    induce,
    irreducible_characters,
    subgroup_classes,
    trivial_character,
    zero_class_function,
)
from .errors import CNotAbelianNormal, NoSolution
from .groups import (
    Group,
    QuotientMap,
    Subgroup,
    full_subgroup,
    intersection,
    is_normal,
    product_set,
    subgroup,
    subgroup_class_reps,
    trivial_subgroup,
)


# ---------------------------------------------------------------------------
# pair classes


@dataclass(frozen=True)
class PairClass:
    """Conjugacy class of (H, chi) under the ambient subgroup, stored by
    its canonical representative (minimal subgroup elements, then minimal
    character exponents, over all conjugates)."""

    ambient: Subgroup
    subgroup: Subgroup
    char: Character

    def sort_key(self):
        return (self.subgroup.order, self.subgroup.elements, self.char.exponents)

    def serialize(self) -> str:
        elems = " ".join(str(x) for x in self.subgroup.elements)
        exps = " ".join(str(e) for e in self.char.exponents)
        return f"[{elems} | {exps}]"

    def __repr__(self):
        return self.serialize()


@lru_cache(maxsize=None)
def pair_class(h: Subgroup, chi: Character, ambient: Subgroup | None = None) -> PairClass:
    if ambient is None:
        ambient = full_subgroup(h.parent)
    assert ambient.contains_subgroup(h)
    best = None
    for g in ambient.elements:
        cc = conjugate_character(chi, g)
        key = (cc.domain.elements, cc.exponents)
        if best is None or key < best[0]:
            best = (key, cc)
    return PairClass(ambient=ambient, subgroup=best[1].domain, char=best[1])


# ---------------------------------------------------------------------------
# R+ elements


@dataclass(frozen=True)
class RPlusElement:
    ambient: Subgroup
    # the normal subgroup N every H must contain; bookkeeping only, not
    # part of the mathematical identity of the element
    lower: Subgroup = field(compare=False)
    coefficients: tuple[tuple[PairClass, int], ...]  # sorted, nonzero

    def coefficient(self, cls: PairClass) -> int:
        for c, n in self.coefficients:
            if c == cls:
                return n
        return 0

    def is_zero(self) -> bool:
        return not self.coefficients

    def support(self) -> tuple[PairClass, ...]:
        return tuple(c for c, _ in self.coefficients)

    def __add__(self, other):
        assert self.ambient == other.ambient
        lower = (
            self.lower
            if other.lower.contains_subgroup(self.lower)
            else other.lower
        )
        items = list(self.coefficients) + list(other.coefficients)
        return rplus(self.ambient, lower, items)

    def __sub__(self, other):
        return self + (-1) * other

    def __neg__(self):
        return (-1) * self

    def __mul__(self, n: int):
        return rplus(
            self.ambient, self.lower, [(c, k * n) for c, k in self.coefficients]
        )

    __rmul__ = __mul__

    def serialize(self) -> str:
        group_name = self.ambient.parent.name or "G"
        lower = " ".join(str(x) for x in self.lower.elements)
        lines = [f"# group {group_name} ambient ({' '.join(str(x) for x in self.ambient.elements)}) N ({lower})"]
        for cls, n in self.coefficients:
            lines.append(f"{n} * {cls.serialize()}")
        return "\n".join(lines)

    def __repr__(self):
        if self.is_zero():
            return "0"
        return " + ".join(f"{n}*{c!r}" for c, n in self.coefficients)


def rplus(ambient: Subgroup, lower: Subgroup, items) -> RPlusElement:
    """Collect (PairClass, int) pairs into a normalized element."""
    acc: dict[PairClass, int] = {}
    for cls, n in items:
        acc[cls] = acc.get(cls, 0) + n
    coeffs = tuple(
        sorted(
            ((c, n) for c, n in acc.items() if n),
            key=lambda item: item[0].sort_key(),
        )
    )
    for cls, _ in coeffs:
        assert cls.subgroup.contains_subgroup(lower), "pair below lower bound"
    return RPlusElement(ambient=ambient, lower=lower, coefficients=coeffs)


def generator(
    h: Subgroup,
    chi: Character,
    ambient: Subgroup | None = None,
    lower: Subgroup | None = None,
) -> RPlusElement:
    if ambient is None:
        ambient = full_subgroup(h.parent)
    if lower is None:
        lower = trivial_subgroup(h.parent)
    return rplus(ambient, lower, [(pair_class(h, chi, ambient), 1)])


def zero_rplus(ambient: Subgroup, lower: Subgroup | None = None) -> RPlusElement:
    if lower is None:
        lower = trivial_subgroup(ambient.parent)
    return RPlusElement(ambient=ambient, lower=lower, coefficients=())


@lru_cache(maxsize=None)
def pair_classes(ambient: Subgroup, lower: Subgroup) -> tuple[PairClass, ...]:
    """All pair classes [H, chi] with lower <= H <= ambient, canonical order."""
    seen = {}
    for h in _subgroup_reps_within(ambient):
        if not h.contains_subgroup(lower):
            continue
        for chi in characters_of(h):
            cls = pair_class(h, chi, ambient)
            seen[cls.sort_key()] = cls
    return tuple(seen[k] for k in sorted(seen))


@lru_cache(maxsize=None)
def _subgroup_reps_within(ambient: Subgroup) -> tuple[Subgroup, ...]:
    parent = ambient.parent
    if ambient.order == parent.order:
        return tuple(subgroup_class_reps(parent))
    inner = ambient.as_group
    out = []
    for h in subgroup_class_reps(inner):
        out.append(subgroup(parent, [ambient.elements[x] for x in h.elements]))
    return tuple(out)


# ---------------------------------------------------------------------------
# the map phi


@lru_cache(maxsize=None)
def _phi_generator(cls: PairClass) -> ClassFunction:
    return induce(cls.char, cls.ambient)


def brauer_map(x: RPlusElement) -> ClassFunction:
    """phi(x) = sum of n * Ind_H^ambient(chi)."""
    total = zero_class_function(x.ambient)
    for cls, n in x.coefficients:
        total = total + n * _phi_generator(cls)
    return total


def inflate(f: ClassFunction, qm: QuotientMap) -> ClassFunction:
    """Pull a class function on the quotient back to the source group."""
    source = full_subgroup(qm.source)
    values = tuple(
        f.value_at(qm.project(cls[0])) for cls in subgroup_classes(source)
    )
    return ClassFunction(source, values)


# ---------------------------------------------------------------------------
# multiplication (double cosets)


def _double_cosets(ambient: Subgroup, h1: Subgroup, h2: Subgroup):
    parent = ambient.parent
    seen = set()
    reps = []
    for g in ambient.elements:
        if g in seen:
            continue
        coset = {
            parent.mul(parent.mul(a, g), b)
            for a in h1.elements
            for b in h2.elements
        }
        seen.update(coset)
        reps.append(min(coset))
    return reps


def multiply(x: RPlusElement, y: RPlusElement) -> RPlusElement:
    assert x.ambient == y.ambient
    parent = x.ambient.parent
    lower = intersection(x.lower, y.lower)
    items = []
    for c1, n1 in x.coefficients:
        for c2, n2 in y.coefficients:
            for g in _double_cosets(x.ambient, c1.subgroup, c2.subgroup):
                moved = conjugate_character(c1.char, parent.inv(g))
                meet = intersection(moved.domain, c2.subgroup)
                chi = moved.restrict(meet).mul(c2.char.restrict(meet))
                items.append((pair_class(meet, chi, x.ambient), n1 * n2))
    return rplus(x.ambient, lower, items)


def one_rplus(ambient: Subgroup) -> RPlusElement:
    return generator(ambient, trivial_character(ambient), ambient)


# ---------------------------------------------------------------------------
# induction and restriction of R+ elements


def induce_rplus(x: RPlusElement, target: Subgroup) -> RPlusElement:
    """Ind: R+(<=B) -> R+(<=T): reinterpret each class in the larger ambient."""
    assert target.contains_subgroup(x.ambient)
    items = [
        (pair_class(cls.subgroup, cls.char, target), n)
        for cls, n in x.coefficients
    ]
    return rplus(target, x.lower, items)


def restrict_rplus(x: RPlusElement, h: Subgroup) -> RPlusElement:
    """Mackey restriction: Res_H([H1,chi]) over double cosets H\\ambient/H1."""
    assert x.ambient.contains_subgroup(h)
    parent = x.ambient.parent
    items = []
    for cls, n in x.coefficients:
        for g in _double_cosets(x.ambient, h, cls.subgroup):
            moved = conjugate_character(cls.char, g)
            meet = intersection(h, moved.domain)
            items.append((pair_class(meet, moved.restrict(meet), h), n))
    return rplus(h, trivial_subgroup(parent), items)


# ---------------------------------------------------------------------------
# the projector


@dataclass(frozen=True)
class OrbitData:
    base: tuple[Subgroup, Character]
    c: Subgroup
    s: tuple[Character, ...]
    t: tuple[Character, ...]
    stabilizers: tuple[Subgroup, ...]  # aligned with t


def _require_abelian_normal(ambient: Subgroup, c: Subgroup) -> None:
    if not c.as_group.is_abelian():
        raise CNotAbelianNormal(f"{c} is not abelian")
    parent = ambient.parent
    for g in ambient.elements:
        if any(parent.conj(g, x) not in c.element_set for x in c.elements):
            raise CNotAbelianNormal(f"{c} is not normal in the ambient group")


def orbit_data(h: Subgroup, chi: Character, c: Subgroup) -> OrbitData:
    ambient = full_subgroup(h.parent)
    _require_abelian_normal(ambient, c)
    meet = intersection(h, c)
    target = chi.restrict(meet)
    s = tuple(
        mu for mu in characters_of(c) if mu.restrict(meet) == target
    )
    assert len(s) * meet.order == c.order, "wrong S(chi) count"
    s_set = set(s)
    reps, stabs = [], []
    seen = set()
    for mu in s:  # characters_of is sorted, so reps are minimal in orbit
        if mu in seen:
            continue
        orbit = {conjugate_character(mu, g) for g in h.elements}
        assert orbit <= s_set
        seen.update(orbit)
        reps.append(mu)
        stabs.append(
            subgroup(
                h.parent,
                [g for g in h.elements if conjugate_character(mu, g) == mu],
            )
        )
    return OrbitData(
        base=(h, chi), c=c, s=s, t=tuple(reps), stabilizers=tuple(stabs)
    )


def glued_character(
    h_part: Subgroup, chi: Character, c: Subgroup, mu: Character
) -> Character:
    """The character chi*mu on H'C with (chi*mu)(hc) = chi(h)mu(c).

    Well-definedness (checked) needs chi and mu to agree on H' and C's
    intersection and mu to be H'-stable.
    """
    parent = h_part.parent
    prod = product_set(h_part, c)
    cset = c.element_set
    values: dict[int, tuple[int, int, int]] = {}
    m1, m2 = chi.modulus, mu.modulus
    m = lcm(m1, m2)
    for a in h_part.elements:
        ka = chi.exponent_of(a) * (m // m1)
        for b in c.elements:
            x = parent.mul(a, b)
            k = (ka + mu.exponent_of(b) * (m // m2)) % m
            if x in values:
                assert values[x] == k, "glued character ill-defined"
            else:
                values[x] = k
    exps = tuple(values[x] for x in prod.elements)
    return character(prod, m, exps)


def projector_phi(x: RPlusElement, c: Subgroup) -> RPlusElement:
    """Phi_C: replace [H,chi] by the sum over T(chi) of [H_mu C, chi mu]."""
    _require_abelian_normal(x.ambient, c)
    items = []
    for cls, n in x.coefficients:
        h, chi = cls.subgroup, cls.char
        if h.contains_subgroup(c):
            items.append((cls, n))
            continue
        data = orbit_data(h, chi, c)
        for mu, h_mu in zip(data.t, data.stabilizers):
            glued = glued_character(h_mu, chi.restrict(h_mu), c, mu)
            items.append((pair_class(glued.domain, glued, x.ambient), n))
    lower = c if all(cls.subgroup.contains_subgroup(c) for cls, _ in items) else x.lower
    return rplus(x.ambient, lower, items)


# ---------------------------------------------------------------------------
# presentations and the kernel


def decompose_on(f: ClassFunction):
    """Irreducible coordinates of f over its own domain group.

    The domain may be a proper subgroup: its abstract copy has conjugacy
    classes in the same canonical order (the relabeling is monotone), so
    the values carry over positionally.
    """
    if f.domain.order == f.domain.parent.order:
        return decompose(f)
    inner = f.domain.as_group
    return decompose(ClassFunction(full_subgroup(inner), f.values))


@lru_cache(maxsize=None)
def _phi_matrix(ambient: Subgroup, lower: Subgroup):
    """Columns: pair classes; rows: irreducible coordinates of phi."""
    classes = pair_classes(ambient, lower)
    cols = []
    for cls in classes:
        coords = decompose_on(_phi_generator(cls))
        assert all(c.denominator == 1 for c in coords)
        cols.append([int(c) for c in coords])
    n_rows = len(cols[0]) if cols else 0
    matrix = [[cols[j][i] for j in range(len(cols))] for i in range(n_rows)]
    return classes, matrix


def presentation(rho: ClassFunction, n: Subgroup, variant: int = 0) -> RPlusElement:
    """Some x in R+(N<=H) with phi(x) = rho, over the ambient H = rho.domain.

    `variant` permutes the solver's column order (variant 1 reverses it),
    producing a possibly different but equally valid certificate.
    """
    g = rho.group
    if rho.domain.order == g.order and not is_normal(g, n):
        from .errors import NotNormal

        raise NotNormal(f"{n} is not normal")
    classes, matrix = _phi_matrix(rho.domain, n)
    order = list(range(len(classes)))
    if variant:
        order.reverse()
    cols = [[row[j] for j in order] for row in matrix]
    target = decompose_on(rho)
    if any(c.denominator != 1 for c in target):
        raise NoSolution("target is not a virtual character")
    sol = intlin.solve(cols, [int(c) for c in target])
    if sol is None:
        raise NoSolution("no integral presentation (precondition violated?)")
    items = [(classes[j], coeff) for j, coeff in zip(order, sol)]
    return rplus(rho.domain, n, items)


def dim0_presentation(rho: ClassFunction, n: Subgroup):
    """rho = sum n_i Ind(chi_i - 1_{H_i}) with all H_i >= N.

    Returns a list of (H_i, chi_i, n_i); variables are the paired columns
    phi([H,chi]) - phi([H,1]) over classes with nontrivial chi.
    """
    if rho.dimension() != 0:
        raise NoSolution("dimension is not zero")
    classes, matrix = _phi_matrix(rho.domain, n)
    nontrivial = [
        (j, cls) for j, cls in enumerate(classes) if not cls.char.is_trivial()
    ]
    index_of = {cls.sort_key(): j for j, cls in enumerate(classes)}
    paired = []
    for j, cls in nontrivial:
        triv = pair_class(cls.subgroup, trivial_character(cls.subgroup), rho.domain)
        paired.append((j, index_of[triv.sort_key()]))
    cols = [
        [matrix[i][j] - matrix[i][jt] for j, jt in paired]
        for i in range(len(matrix))
    ]
    target = decompose_on(rho)
    if any(c.denominator != 1 for c in target):
        raise NoSolution("target is not a virtual character")
    sol = intlin.solve(cols, [int(c) for c in target])
    if sol is None:
        raise NoSolution("no dimension-zero presentation")
    out = []
    for (j, _), coeff in zip(paired, sol):
        if coeff:
            cls = classes[j]
            out.append((cls.subgroup, cls.char, coeff))
    return out


def kernel_basis(g: Group, n: Subgroup) -> list[RPlusElement]:
    """A lattice basis of Ker(phi) inside R+(N<=Omega)."""
    full = full_subgroup(g)
    classes, matrix = _phi_matrix(full, n)
    basis = intlin.kernel_basis(matrix)
    return [rplus(full, n, list(zip(classes, vec))) for vec in basis]


def coordinates(x: RPlusElement, lower: Subgroup) -> list[int]:
    """Coordinates of x in the canonical pair-class basis of R+(N<=ambient)."""
    classes = pair_classes(x.ambient, lower)
    index = {cls.sort_key(): i for i, cls in enumerate(classes)}
    vec = [0] * len(classes)
    for cls, n in x.coefficients:
        vec[index[cls.sort_key()]] += n
    return vec
