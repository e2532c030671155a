"""One-dimensional characters, class functions, induction and restriction.

Characters are stored as exponent vectors: chi(x) = zeta_m^k with
m = exp(H/[H,H]) fixed per subgroup, which makes equality and canonical
ordering cheap.  Class functions carry exact cyclotomic values per
conjugacy class of their (sub)group.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd, lcm

from .cyclotomic import Cyclotomic
from .errors import NotASubgroup
from .groups import (
    Group,
    QuotientMap,
    Subgroup,
    all_subgroups,
    closure,
    derived_subgroup,
    full_subgroup,
    quotient,
    subgroup,
)


# ---------------------------------------------------------------------------
# abelian structure


@lru_cache(maxsize=None)
def abelian_basis(a: Group) -> tuple[tuple[int, int], ...]:
    """Independent generators (element, order) with A = prod <g_i> direct.

    The first generator has maximal order (= the exponent of A); each is
    the least element among those of maximal order in the remaining
    complement, so the decomposition is deterministic.
    """
    if a.order == 1:
        return ()
    best = min(
        range(a.order), key=lambda x: (-a.element_order(x), x)
    )
    d = a.element_order(best)
    cyc = closure(a, [best])
    if cyc.order == a.order:
        return ((best, d),)
    complement = None
    for h in all_subgroups(a):
        if h.order * d == a.order and len(h.element_set & cyc.element_set) == 1:
            complement = h
            break
    if complement is None:  # cannot happen: maximal-order cyclic splits off
        raise AssertionError("no complement for maximal cyclic factor")
    rest = abelian_basis(complement.as_group)
    return ((best, d),) + tuple(
        (complement.elements[g], o) for g, o in rest
    )


@lru_cache(maxsize=None)
def _abelian_coordinates(a: Group) -> dict[int, tuple[int, ...]]:
    """Coordinates of every element in the abelian_basis decomposition."""
    basis = abelian_basis(a)
    coords = {0: tuple(0 for _ in basis)}
    # iterate over the direct product of cyclic factors
    elements = [(0, tuple(0 for _ in basis))]
    for i, (gen, order) in enumerate(basis):
        new_elements = []
        for x, coord in elements:
            cur = x
            for e in range(order):
                c = list(coord)
                c[i] = e
                new_elements.append((cur, tuple(c)))
                cur = a.mul(cur, gen)
        elements = new_elements
    assert len(elements) == a.order
    coords = dict()
    for x, c in elements:
        assert x not in coords
        coords[x] = c
    return coords


# ---------------------------------------------------------------------------
# characters


@dataclass(frozen=True)
class Character:
    domain: Subgroup
    modulus: int
    exponents: tuple[int, ...]  # aligned with domain.elements

    def value(self, x: int) -> Cyclotomic:
        pos = self.domain.elements.index(x)
        return Cyclotomic.root_of_unity(self.modulus, self.exponents[pos])

    def exponent_of(self, x: int) -> int:
        return self.exponents[self.domain.elements.index(x)]

    def is_trivial(self) -> bool:
        return all(e == 0 for e in self.exponents)

    def order(self) -> int:
        g = self.modulus
        for e in self.exponents:
            g = gcd(g, e)
        return self.modulus // g if self.modulus else 1

    def mul(self, other: "Character") -> "Character":
        assert self.domain == other.domain
        m = lcm(self.modulus, other.modulus)
        exps = tuple(
            (a * (m // self.modulus) + b * (m // other.modulus)) % m
            for a, b in zip(self.exponents, other.exponents)
        )
        return character(self.domain, m, exps)

    def inverse(self) -> "Character":
        return character(
            self.domain,
            self.modulus,
            tuple((-e) % self.modulus for e in self.exponents),
        )

    def power(self, n: int) -> "Character":
        return character(
            self.domain,
            self.modulus,
            tuple((e * n) % self.modulus for e in self.exponents),
        )

    def restrict(self, k: Subgroup) -> "Character":
        if not self.domain.contains_subgroup(k):
            raise NotASubgroup(f"{k} not contained in {self.domain}")
        exps = tuple(self.exponent_of(x) for x in k.elements)
        return character(k, self.modulus, exps)

    def serialize(self) -> str:
        elems = " ".join(str(x) for x in self.domain.elements)
        exps = " ".join(str(e) for e in self.exponents)
        return f"({elems}) : ({exps}, {self.modulus})"

    def sort_key(self):
        return self.exponents

    def __repr__(self):
        return f"Char[{self.domain.elements}; {self.exponents} mod {self.modulus}]"


def canonical_modulus(h: Subgroup) -> int:
    """exp(H/[H,H])."""
    basis = abelian_basis(_abelianization(h).quotient)
    return basis[0][1] if basis else 1


@lru_cache(maxsize=None)
def _abelianization(h: Subgroup) -> QuotientMap:
    habs = h.as_group
    return quotient(habs, derived_subgroup(habs))


def character(h: Subgroup, modulus: int, exponents) -> Character:
    """Build a character with the canonical modulus exp(H/[H,H])."""
    exponents = tuple(exponents)
    m0 = canonical_modulus(h)
    canon = []
    for e in exponents:
        e %= modulus
        num = e * m0
        if num % modulus:
            raise ValueError(
                f"value order does not divide exp(H^ab)={m0} (e={e}, m={modulus})"
            )
        canon.append((num // modulus) % m0)
    return Character(domain=h, modulus=m0, exponents=tuple(canon))


def trivial_character(h: Subgroup) -> Character:
    return Character(h, canonical_modulus(h), tuple(0 for _ in h.elements))


@lru_cache(maxsize=None)
def characters_of(h: Subgroup) -> tuple[Character, ...]:
    """All 1-dimensional characters, sorted by exponent tuple."""
    qm = _abelianization(h)
    a = qm.quotient
    basis = abelian_basis(a)
    coords = _abelian_coordinates(a)
    m = basis[0][1] if basis else 1
    out = []

    def rec(i, chosen):
        if i == len(basis):
            exps = []
            for x in h.elements:
                pos = h.elements.index(x)
                image = qm.project(pos)
                c = coords[image]
                k = sum(
                    chosen[j] * e * (m // basis[j][1]) for j, e in enumerate(c)
                ) % m
                exps.append(k)
            out.append(Character(h, m, tuple(exps)))
            return
        for c in range(basis[i][1]):
            rec(i + 1, chosen + [c])

    rec(0, [])
    assert len(out) == a.order
    return tuple(sorted(out, key=lambda ch: ch.sort_key()))


def conjugate_character(chi: Character, g: int) -> Character:
    """Character on gHg^{-1} with value at x equal to chi(g^{-1} x g)."""
    parent = chi.domain.parent
    new_dom = subgroup(
        parent, [parent.conj(g, x) for x in chi.domain.elements]
    )
    ginv = parent.inv(g)
    exps = tuple(
        chi.exponent_of(parent.conj(ginv, x)) for x in new_dom.elements
    )
    return character(new_dom, chi.modulus, exps)


def extensions_of(eta: Character, h: Subgroup) -> list[Character]:
    """All characters of H restricting to eta on eta.domain <= H."""
    return [
        chi for chi in characters_of(h) if chi.restrict(eta.domain) == eta
    ]


def characters_trivial_on(b: Subgroup, k: Subgroup) -> list[Character]:
    """(B/K)^*: the characters of B that kill K."""
    return [
        chi
        for chi in characters_of(b)
        if all(chi.exponent_of(x) == 0 for x in k.elements)
    ]


# ---------------------------------------------------------------------------
# class functions


@lru_cache(maxsize=None)
def subgroup_classes(h: Subgroup) -> tuple[tuple[int, ...], ...]:
    """Conjugacy classes of H (as parent element indices)."""
    parent = h.parent
    seen = set()
    classes = []
    for x in h.elements:
        if x in seen:
            continue
        orbit = sorted({parent.conj(g, x) for g in h.elements})
        seen.update(orbit)
        classes.append(tuple(orbit))
    return tuple(sorted(classes, key=lambda c: c[0]))


@dataclass(frozen=True)
class ClassFunction:
    domain: Subgroup
    values: tuple[Cyclotomic, ...]  # aligned with subgroup_classes(domain)

    @property
    def group(self) -> Group:
        return self.domain.parent

    def value_at(self, x: int) -> Cyclotomic:
        for cls, v in zip(subgroup_classes(self.domain), self.values):
            if x in cls:
                return v
        raise KeyError(f"element {x} not in domain")

    def dimension(self) -> Fraction:
        return self.values[0].as_rational()

    def is_zero(self) -> bool:
        return all(v.is_zero() for v in self.values)

    def __add__(self, other):
        assert self.domain == other.domain
        return ClassFunction(
            self.domain,
            tuple(a + b for a, b in zip(self.values, other.values)),
        )

    def __sub__(self, other):
        assert self.domain == other.domain
        return ClassFunction(
            self.domain,
            tuple(a - b for a, b in zip(self.values, other.values)),
        )

    def __neg__(self):
        return ClassFunction(self.domain, tuple(-v for v in self.values))

    def __mul__(self, other):
        if isinstance(other, ClassFunction):
            assert self.domain == other.domain
            return ClassFunction(
                self.domain,
                tuple(a * b for a, b in zip(self.values, other.values)),
            )
        return ClassFunction(
            self.domain, tuple(v * other for v in self.values)
        )

    __rmul__ = __mul__

    def sort_key(self):
        return tuple(str((v.shrink().m, v.shrink().coeffs)) for v in self.values)

    def __repr__(self):
        return f"ClassFunction({self.values})"


def zero_class_function(domain: Subgroup) -> ClassFunction:
    return ClassFunction(
        domain, tuple(Cyclotomic.zero() for _ in subgroup_classes(domain))
    )


def character_class_function(chi: Character) -> ClassFunction:
    dom = chi.domain
    return ClassFunction(
        dom,
        tuple(
            chi.value(cls[0]) for cls in subgroup_classes(dom)
        ),
    )


def restrict_class_function(f: ClassFunction, k: Subgroup) -> ClassFunction:
    if not f.domain.contains_subgroup(k):
        raise NotASubgroup(f"{k} not contained in {f.domain}")
    return ClassFunction(
        k, tuple(f.value_at(cls[0]) for cls in subgroup_classes(k))
    )


def inner_product(a: ClassFunction, b: ClassFunction) -> Cyclotomic:
    assert a.domain == b.domain
    total = Cyclotomic.zero()
    for cls, va, vb in zip(subgroup_classes(a.domain), a.values, b.values):
        total = total + len(cls) * va * vb.conjugate()
    return total * Fraction(1, a.domain.order)


@lru_cache(maxsize=None)
def induce(chi: Character, target: Subgroup) -> ClassFunction:
    """Ind_H^T(chi) by the standard coset formula, exactly."""
    return induce_class_function(character_class_function(chi), target)


def induce_class_function(f: ClassFunction, target: Subgroup) -> ClassFunction:
    h = f.domain
    if not target.contains_subgroup(h):
        raise NotASubgroup(f"{h} not contained in {target}")
    parent = h.parent
    values = []
    hset = h.element_set
    for cls in subgroup_classes(target):
        g0 = cls[0]
        total = Cyclotomic.zero()
        for x in target.elements:
            y = parent.mul(parent.mul(parent.inv(x), g0), x)
            if y in hset:
                total = total + f.value_at(y)
        values.append(total * Fraction(1, h.order))
    return ClassFunction(target, tuple(values))


# ---------------------------------------------------------------------------
# irreducible characters


@lru_cache(maxsize=None)
def irreducible_characters(g: Group) -> tuple[ClassFunction, ...]:
    """All irreducible characters, obtained by decomposing inductions of
    1-dimensional characters of subgroups, largest subgroups first.

    At induction dimension d every unknown constituent has dimension
    exactly d (anything smaller is itself monomial of smaller induction
    dimension, hence already found), so each nonzero remainder is a
    single new irreducible.  This is complete for the catalog, whose
    groups are all M-groups.
    """
    from .groups import subgroup_class_reps

    full = full_subgroup(g)
    n_classes = len(subgroup_classes(full))
    irr: list[ClassFunction] = []
    reps = sorted(subgroup_class_reps(g), key=lambda h: -h.order)
    for h in reps:
        for chi in characters_of(h):
            if len(irr) == n_classes:
                break
            f = induce(chi, full)
            for known in irr:
                coeff = inner_product(f, known).as_rational()
                assert coeff.denominator == 1
                if coeff:
                    f = f - int(coeff) * known
            if not f.is_zero():
                norm = inner_product(f, f).as_rational()
                assert norm == 1, "remainder is not a single irreducible"
                irr.append(f)
    assert len(irr) == n_classes, "irreducible search incomplete"
    return tuple(sorted(irr, key=lambda f: (f.dimension(), f.sort_key())))


def decompose(f: ClassFunction) -> tuple[Fraction, ...]:
    """Coordinates of f in the irreducible basis of its full group."""
    g = f.group
    assert f.domain == full_subgroup(g)
    return tuple(
        inner_product(f, chi).as_rational() for chi in irreducible_characters(g)
    )
