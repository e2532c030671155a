"""Extending a pair function to all virtual characters.

A Delta-function assigns a value in an abelian group to every pair class
[H, chi] with H above a fixed normal subgroup N.  Three families of
product identities (mirroring the three relation families) are exactly
the obstruction: when they hold, the lambda recursion below produces a
well-defined multiplicative extension to arbitrary virtual characters,
certified on the kernel generators.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

from .brauer import (
    PairClass,
    RPlusElement,
    brauer_map,
    glued_character,
    kernel_basis,
    pair_class,
    pair_classes,
    presentation,
)
from .characters import (
    Character,
    ClassFunction,
    character,
    characters_of,
    characters_trivial_on,
    conjugate_character,
    irreducible_characters,
    subgroup_classes,
    trivial_character,
)
from .errors import ConditionsViolated, MissingValue
from .groups import (
    Group,
    Subgroup,
    all_subgroups,
    commutator_subgroup,
    conjugate_subgroup,
    full_subgroup,
    intersection,
    is_normal,
    product_set,
    quotient,
    subgroup,
    subgroup_class_reps,
    trivial_subgroup,
)
from .relations import (
    _is_prime,
    _is_normal_in,
    _orbit_reps_mod_h,
    _subgroups_of,
    basic_relations,
    heisenberg_configurations,
    type_iii_configurations,
)


# ---------------------------------------------------------------------------
# value groups


class ValueGroup:
    """Abstract multiplicative abelian group with exact equality."""

    def one(self):
        raise NotImplementedError

    def mul(self, a, b):
        raise NotImplementedError

    def inv(self, a):
        raise NotImplementedError

    def eq(self, a, b) -> bool:
        return a == b

    def pow(self, a, n: int):
        if n < 0:
            return self.pow(self.inv(a), -n)
        out = self.one()
        for _ in range(n):
            out = self.mul(out, a)
        return out

    def describe(self, a) -> str:
        return str(a)


class FreeAbelianGroup(ValueGroup):
    """Formal products of named symbols; elements are sorted tuples of
    (symbol, exponent) with nonzero exponents."""

    def one(self):
        return ()

    def symbol(self, name: str):
        return ((name, 1),)

    def mul(self, a, b):
        acc = dict(a)
        for sym, e in b:
            acc[sym] = acc.get(sym, 0) + e
        return tuple(sorted((s, e) for s, e in acc.items() if e))

    def inv(self, a):
        return tuple((s, -e) for s, e in a)

    def describe(self, a) -> str:
        if not a:
            return "1"
        return " * ".join(f"{s}^{e}" if e != 1 else s for s, e in a)


# ---------------------------------------------------------------------------
# Delta functions


@dataclass(frozen=True)
class DeltaFunction:
    ambient: Subgroup  # the full subgroup of the group
    lower: Subgroup
    group: ValueGroup = field(compare=False)
    values: dict = field(compare=False)  # PairClass -> value

    def value_of_class(self, cls: PairClass):
        if cls not in self.values:
            raise MissingValue(f"no value for {cls!r}")
        return self.values[cls]

    def value(self, h: Subgroup, chi: Character):
        return self.value_of_class(pair_class(h, chi, self.ambient))


def delta_function(
    g: Group, n: Subgroup, vgroup: ValueGroup, assignments
) -> DeltaFunction:
    """Build a DeltaFunction from {(H, chi) or PairClass: value}; trivial
    characters are forced to 1 (and checked if supplied)."""
    full = full_subgroup(g)
    values = {}
    for key, val in assignments.items():
        cls = key if isinstance(key, PairClass) else pair_class(*key, full)
        values[cls] = val
    for cls in pair_classes(full, n):
        if cls.char.is_trivial():
            if cls in values and not vgroup.eq(values[cls], vgroup.one()):
                raise ConditionsViolated(
                    "a trivial character must have value 1", witness=cls
                )
            values[cls] = vgroup.one()
    return DeltaFunction(ambient=full, lower=n, group=vgroup, values=values)


def constant_delta(g: Group, n: Subgroup, vgroup: ValueGroup) -> DeltaFunction:
    full = full_subgroup(g)
    return delta_function(
        g, n, vgroup, {cls: vgroup.one() for cls in pair_classes(full, n)}
    )


def generic_delta(g: Group, n: Subgroup) -> DeltaFunction:
    """Distinct free symbols on every nontrivial pair class: the generic
    (usually inextendible) test function."""
    vgroup = FreeAbelianGroup()
    full = full_subgroup(g)
    assignments = {}
    for i, cls in enumerate(pair_classes(full, n)):
        if not cls.char.is_trivial():
            assignments[cls] = vgroup.symbol(f"d{i}")
    return delta_function(g, n, vgroup, assignments)


# ---------------------------------------------------------------------------
# the three condition checks


def check_condition_I(g: Group, delta: DeltaFunction) -> list:
    """Delta(K,chi_K) * prod Delta(B,mu) = prod Delta(B,chi mu) over
    (B/K)^*, for every prime-index normal K >= N in every B."""
    vg = delta.group
    n = delta.lower
    violations = []
    for b in subgroup_class_reps(g):
        for k in _subgroups_of(g, b):
            index = b.order // k.order
            if not (
                k.order * index == b.order
                and _is_prime(index)
                and k.contains_subgroup(n)
                and _is_normal_in(b, k)
            ):
                continue
            rel_chars = characters_trivial_on(b, k)
            for chi in characters_of(b):
                lhs = delta.value(k, chi.restrict(k))
                rhs = vg.one()
                for mu in rel_chars:
                    lhs = vg.mul(lhs, delta.value(b, mu))
                    rhs = vg.mul(rhs, delta.value(b, chi.mul(mu)))
                if not vg.eq(lhs, rhs):
                    violations.append(
                        {
                            "condition": "I",
                            "B": b,
                            "K": k,
                            "chi": chi,
                            "lhs": vg.describe(lhs),
                            "rhs": vg.describe(rhs),
                        }
                    )
    return violations


def check_condition_II(g: Group, delta: DeltaFunction) -> list:
    """Delta(H, eta^H) * prod_{mu in (B/H)^*} Delta(B, mu) must not depend
    on the choice of (H, eta^H) within a Heisenberg configuration."""
    from .characters import extensions_of

    vg = delta.group
    n = delta.lower
    violations = []
    for b, z, ell, etas, mids in heisenberg_configurations(g, n):
        for eta in etas:
            seen = None
            seen_pair = None
            for h in mids:
                for ext in extensions_of(eta, h):
                    val = delta.value(h, ext)
                    for mu in characters_trivial_on(b, h):
                        val = vg.mul(val, delta.value(b, mu))
                    if seen is None:
                        seen, seen_pair = val, (h, ext)
                    elif not vg.eq(val, seen):
                        violations.append(
                            {
                                "condition": "II",
                                "B": b,
                                "Z": z,
                                "eta": eta,
                                "pair": (h, ext),
                                "other": seen_pair,
                                "lhs": vg.describe(val),
                                "rhs": vg.describe(seen),
                            }
                        )
    return violations


def check_condition_III(g: Group, delta: DeltaFunction) -> list:
    """Delta(H,chi_H) * prod_mu Delta(H_mu C, mu') = prod_mu
    Delta(H_mu C, chi mu') over H-orbit reps mu of (C/K)^*."""
    vg = delta.group
    n = delta.lower
    violations = []
    for b in subgroup_class_reps(g):
        for h, k, c in type_iii_configurations(b):
            if not k.contains_subgroup(n):
                continue
            for chi in characters_of(b):
                lhs = delta.value(h, chi.restrict(h))
                rhs = vg.one()
                for mu, h_mu in _orbit_reps_mod_h(h, c, k):
                    prod = product_set(h_mu, c)
                    mu_ext = glued_character(
                        h_mu, trivial_character(h_mu), c, mu
                    )
                    lhs = vg.mul(lhs, delta.value(prod, mu_ext))
                    rhs = vg.mul(
                        rhs, delta.value(prod, chi.restrict(prod).mul(mu_ext))
                    )
                if not vg.eq(lhs, rhs):
                    violations.append(
                        {
                            "condition": "III",
                            "B": b,
                            "H": h,
                            "C": c,
                            "chi": chi,
                            "lhs": vg.describe(lhs),
                            "rhs": vg.describe(rhs),
                        }
                    )
    return violations


def check_conditions(g: Group, delta: DeltaFunction) -> list:
    return (
        check_condition_I(g, delta)
        + check_condition_II(g, delta)
        + check_condition_III(g, delta)
    )


# ---------------------------------------------------------------------------
# the lambda recursion


class LambdaEngine:
    """Computes lambda_U^(ambient) relative to N by structural recursion:
    strip off a minimal (relatively) abelian normal layer above N until
    U contains it, shrinking the quotient at each step."""

    def __init__(self, delta: DeltaFunction, check_independence: bool = True):
        self.delta = delta
        self.check_independence = check_independence
        self._memo: dict = {}

    def value(self, u: Subgroup, n: Subgroup, ambient: Subgroup | None = None):
        if ambient is None:
            ambient = self.delta.ambient
        return self._value(u, n, ambient, "min", top=True)

    def _value(self, u, n, ambient, rep_choice, top=False):
        key = (u, n, ambient, rep_choice)
        if key in self._memo:
            return self._memo[key]
        assert ambient.contains_subgroup(u) and u.contains_subgroup(n)
        vg = self.delta.group
        if u.order == ambient.order:
            out = vg.one()
        else:
            layers = _minimal_abelian_layers(ambient, n)
            assert layers, "no abelian layer above N"
            out = self._step(u, n, ambient, rep_choice, layers[0])
            if self.check_independence and top and len(layers) > 1:
                for other in layers[1:]:
                    alt = self._step(u, n, ambient, rep_choice, other)
                    if not vg.eq(alt, out):
                        raise ConditionsViolated(
                            "lambda depends on the abelian layer choice",
                            witness=(u, n, other),
                        )
        self._memo[key] = out
        return out

    def _step(self, u, n, ambient, rep_choice, m):
        vg = self.delta.group
        if u.contains_subgroup(m):
            return self._value(u, m, ambient, rep_choice)
        meet = intersection(u, m)
        chars = characters_trivial_on(m, meet)
        reps = _orbit_reps(u, chars, rep_choice)
        out = vg.one()
        for mu, stab in reps:
            prod = product_set(stab, m)
            mu_ext = glued_character(stab, trivial_character(stab), m, mu)
            term = self.delta.value(prod, mu_ext)
            term = vg.mul(term, self._value(prod, m, ambient, rep_choice))
            out = vg.mul(out, term)
        return out

    def value_rel(self, u: Subgroup, h: Subgroup, n: Subgroup):
        """lambda_U^H derived from the top-level values:
        lambda_U^H = lambda_U^Omega * lambda_H^Omega^(-(H:U))."""
        vg = self.delta.group
        index = h.order // u.order
        return vg.mul(
            self.value(u, n), vg.pow(vg.inv(self.value(h, n)), index)
        )


def _orbit_reps(u: Subgroup, chars, rep_choice: str):
    char_set = set(chars)
    seen = set()
    out = []
    for mu in chars:
        if mu in seen:
            continue
        orbit = {conjugate_character(mu, x) for x in u.elements}
        assert orbit <= char_set
        seen.update(orbit)
        pick = (min if rep_choice == "min" else max)(
            orbit, key=lambda m: m.exponents
        )
        stab = subgroup(
            u.parent,
            [x for x in u.elements if conjugate_character(pick, x) == pick],
        )
        out.append((pick, stab))
    return out


@lru_cache(maxsize=None)
def _minimal_abelian_layers(ambient: Subgroup, n: Subgroup) -> tuple:
    """Normal subgroups M of the ambient with N < M, M/N abelian, minimal
    with these properties; canonical (order, elements) sorting."""
    candidates = []
    for m in _subgroups_of(ambient.parent, ambient):
        if (
            m.order > n.order
            and m.contains_subgroup(n)
            and _is_normal_in(ambient, m)
            and commutator_subgroup(m, m).element_set <= n.element_set
        ):
            candidates.append(m)
    minimal = [
        m
        for m in candidates
        if not any(
            m.contains_subgroup(other) and other != m for other in candidates
        )
    ]
    return tuple(sorted(minimal, key=lambda s: (s.order, s.elements)))


# ---------------------------------------------------------------------------
# tower and lambda-law verification


def verify_tower(delta: DeltaFunction, g: Group, n: Subgroup) -> list:
    """The tower identity on all chains N <= U' <= U <= A <= Omega, plus
    representative-choice independence, conjugation invariance, inflation
    consistency, and the abelian product formula."""
    engine = LambdaEngine(delta)
    vg = delta.group
    violations = []
    full = full_subgroup(g)
    subs = [s for s in all_subgroups(g) if s.contains_subgroup(n)]
    for a in subs:
        for u in subs:
            if not a.contains_subgroup(u):
                continue
            for uprime in subs:
                if not u.contains_subgroup(uprime):
                    continue
                lhs = engine._value(uprime, n, a, "min")
                step = engine._value(uprime, n, u, "min")
                top = engine._value(u, n, a, "min")
                rhs = vg.mul(step, vg.pow(top, u.order // uprime.order))
                if not vg.eq(lhs, rhs):
                    violations.append(
                        {"law": "tower", "chain": (uprime, u, a)}
                    )
    for u in subs:
        # representative-choice independence
        if not vg.eq(
            engine._value(u, n, full, "min"), engine._value(u, n, full, "max")
        ):
            violations.append({"law": "rep-independence", "U": u})
        # conjugation invariance
        for x in range(g.order):
            moved = conjugate_subgroup(u, x)
            if not vg.eq(engine.value(moved, n), engine.value(u, n)):
                violations.append({"law": "conjugation", "U": u, "g": x})
        # inflation: relative to any larger normal N' <= U the value agrees
        for nprime in subs:
            if (
                u.contains_subgroup(nprime)
                and nprime.contains_subgroup(n)
                and is_normal(g, nprime)
            ):
                if not vg.eq(engine.value(u, nprime), engine.value(u, n)):
                    violations.append(
                        {"law": "inflation", "U": u, "Nprime": nprime}
                    )
        # abelian product formula
        if is_normal(g, u) and _abelian_quotient(g, u):
            expected = vg.one()
            for chi in characters_trivial_on(full, u):
                expected = vg.mul(expected, delta.value(full, chi))
            if not vg.eq(engine.value(u, n), expected):
                violations.append({"law": "abelian-product", "U": u})
    return violations


def _abelian_quotient(g: Group, u: Subgroup) -> bool:
    return commutator_subgroup(
        full_subgroup(g), full_subgroup(g)
    ).element_set <= u.element_set


# ---------------------------------------------------------------------------
# the extension


@dataclass
class Extension:
    delta: DeltaFunction
    n: Subgroup
    engine: LambdaEngine
    variant: int = 0

    def evaluate(self, h: Subgroup, rho: ClassFunction):
        """F(H, rho) via a presentation rho = sum n_i Ind_{U_i}^H(chi_i):
        the product of (Delta(U_i,chi_i) * lambda_{U_i}^H)^{n_i}."""
        assert rho.domain == h
        vg = self.delta.group
        pres = presentation(rho, self.n, variant=self.variant)
        out = vg.one()
        for cls, k in pres.coefficients:
            u, chi = cls.subgroup, cls.char
            term = vg.mul(
                self.delta.value(u, chi), self.engine.value_rel(u, h, self.n)
            )
            out = vg.mul(out, vg.pow(term, k))
        return out

    def evaluate_element(self, x: RPlusElement):
        """The raw multiplicative evaluation of an R+ element at the top
        level (H = Omega)."""
        vg = self.delta.group
        out = vg.one()
        for cls, k in x.coefficients:
            term = vg.mul(
                self.delta.value(cls.subgroup, cls.char),
                self.engine.value(cls.subgroup, self.n),
            )
            out = vg.mul(out, vg.pow(term, k))
        return out


def extend(
    g: Group,
    n: Subgroup,
    delta: DeltaFunction,
    full_kernel: bool = False,
    variant: int = 0,
) -> Extension:
    """Check conditions I-III, then certify well-definedness on the kernel
    generators (or the whole kernel basis with full_kernel) and return
    the extension."""
    violations = check_conditions(g, delta)
    if violations:
        raise ConditionsViolated(
            f"{len(violations)} condition violation(s)", witness=violations[0]
        )
    engine = LambdaEngine(delta)
    ext = Extension(delta=delta, n=n, engine=engine, variant=variant)
    vg = delta.group
    if full_kernel:
        witnesses = [(None, x) for x in kernel_basis(g, n)]
    else:
        witnesses = [(r.kind, r.element) for r in basic_relations(g, n)]
    for kind, x in witnesses:
        assert brauer_map(x).is_zero()
        val = ext.evaluate_element(x)
        if not vg.eq(val, vg.one()):
            raise ConditionsViolated(
                "extension ill-defined on a kernel element"
                + (f" (type {kind})" if kind else ""),
                witness=x,
            )
    return ext


def irreducibles_mod_derived(h: Subgroup, n: Subgroup) -> list[ClassFunction]:
    """The irreducible characters of H/[N,N] as class functions on H."""
    inner = h.as_group
    pos = {x: i for i, x in enumerate(h.elements)}
    n_inner = subgroup(inner, [pos[x] for x in n.elements])
    dn = commutator_subgroup(n_inner, n_inner)
    qm = quotient(inner, dn)
    out = []
    for f in irreducible_characters(qm.quotient):
        values = tuple(
            f.value_at(qm.project(pos[cls[0]]))
            for cls in subgroup_classes(h)
        )
        out.append(ClassFunction(h, values))
    return out


def uniqueness_check(ext1: Extension, ext2: Extension) -> bool:
    """Agreement on every irreducible of H/[N,N] for every H >= N."""
    assert ext1.n == ext2.n
    g = ext1.delta.ambient.parent
    vg = ext1.delta.group
    for h in subgroup_class_reps(g):
        if not h.contains_subgroup(ext1.n):
            continue
        for rho in irreducibles_mod_derived(h, ext1.n):
            if not vg.eq(ext1.evaluate(h, rho), ext2.evaluate(h, rho)):
                return False
    return True
