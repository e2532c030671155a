"""Exact tame local constants: finite fields, Gauss sums, root numbers,
norm transport, the lifting identities, and Galois-group Delta models.

Everything is exact.  Small instances run on dense cyclotomic arithmetic;
the large-field identities use an integer coefficient-vector representation
modulo x^M - 1 whose zero test is rigorous (a nonzero algebraic integer has
a conjugate of absolute value >= 1, so checking every embedding numerically
below 1/2 with a guaranteed error bound decides exact vanishing).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd, lcm

from .cyclotomic import Cyclotomic, sqrt_prime
from .errors import (
    DegenerateCase,
    NotAbelianTameCase,
    NotTame,
    UnsupportedModel,
)


def _is_prime(m: int) -> bool:
    return m > 1 and all(m % d for d in range(2, int(m**0.5) + 1))


# ---------------------------------------------------------------------------
# finite fields
#
# Elements of F_{p^f} are encoded as integers: the polynomial
# sum c_i x^i (0 <= c_i < p) is the integer sum c_i p^i.  The modulus is
# the least (in this integer encoding) monic irreducible of degree f and
# the generator is the least element of full multiplicative order, so
# discrete logarithms are reproducible.


def _poly_mod_p(coeffs, p):
    return [c % p for c in coeffs]


def _poly_mul_p(a, b, p):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % p
    return out


def _poly_rem_p(a, m, p):
    a = list(a)
    inv_lead = pow(m[-1], -1, p)
    while len(a) >= len(m):
        if a[-1]:
            c = a[-1] * inv_lead % p
            shift = len(a) - len(m)
            for i, x in enumerate(m):
                a[shift + i] = (a[shift + i] - c * x) % p
        a.pop()
    return a


def _poly_gcd_p(a, b, p):
    a, b = [c % p for c in a], [c % p for c in b]
    while any(b):
        a, b = b, _poly_rem_p(a, b, p)
        while b and b[-1] == 0:
            b.pop()
    return a


def _is_irreducible(m, p):
    """Degree-f monic m is irreducible iff x^(p^f) = x mod m and
    gcd(x^(p^(f/l)) - x, m) is constant for every prime l | f."""
    f = len(m) - 1
    if f == 1:
        return True

    def xq_power(k):
        # x^(p^k) mod m by iterated Frobenius
        cur = [0, 1]
        for _ in range(k):
            cur = _poly_pow_mod(cur, p, m, p)
        return cur

    if _pad(xq_power(f), 2) != _pad([0, 1], 2):
        return False
    for ell in {d for d in range(2, f + 1) if f % d == 0 and _is_prime(d)}:
        g = _poly_gcd_p(_poly_sub(xq_power(f // ell), [0, 1], p), m, p)
        if len(_pad(g, 1)) > 1:
            return False
    return True


def _poly_sub(a, b, p):
    n = max(len(a), len(b))
    return [((a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0)) % p for i in range(n)]


def _pad(a, n):
    a = list(a)
    while len(a) < n:
        a.append(0)
    while len(a) > n and a[-1] == 0:
        a.pop()
    return a


def _poly_pow_mod(base, e, m, p):
    out = [1]
    b = _poly_rem_p(base, m, p)
    while e:
        if e & 1:
            out = _poly_rem_p(_poly_mul_p(out, b, p), m, p)
        b = _poly_rem_p(_poly_mul_p(b, b, p), m, p)
        e >>= 1
    return out


class FiniteField:
    """F_{p^f} with integer-encoded elements and full log/exp tables."""

    def __init__(self, p: int, f: int):
        assert _is_prime(p) and f >= 1
        self.p = p
        self.f = f
        self.q = p**f
        self.modulus = self._least_irreducible()
        self._build_tables()

    def _least_irreducible(self):
        p, f = self.p, self.f
        if f == 1:
            return (0, 1)
        for enc in range(p**f):
            coeffs = self._decode(enc) + [1]
            if _is_irreducible(coeffs, p):
                return tuple(coeffs)
        raise AssertionError("no irreducible polynomial found")

    def _decode(self, enc: int):
        p = self.p
        out = []
        for _ in range(self.f):
            out.append(enc % p)
            enc //= p
        return out

    def _encode(self, coeffs) -> int:
        enc = 0
        for c in reversed(_pad(list(coeffs), self.f)):
            enc = enc * self.p + (c % self.p)
        return enc

    def add(self, a: int, b: int) -> int:
        ca, cb = self._decode(a), self._decode(b)
        return self._encode([(x + y) % self.p for x, y in zip(ca, cb)])

    def neg(self, a: int) -> int:
        return self._encode([(-c) % self.p for c in self._decode(a)])

    def _raw_mul(self, a: int, b: int) -> int:
        prod = _poly_mul_p(self._decode(a), self._decode(b), self.p)
        return self._encode(_poly_rem_p(prod, list(self.modulus), self.p))

    def _build_tables(self):
        q = self.q
        factors = {d for d in range(2, q) if (q - 1) % d == 0 and _is_prime(d)}
        gen = None
        for cand in range(1, q):
            if all(
                self._pow_raw(cand, (q - 1) // ell) != 1 for ell in factors
            ):
                gen = cand
                break
        assert gen is not None or q == 2
        self.generator = gen if gen is not None else 1
        self.exp = [1]
        cur = 1
        for _ in range(q - 2):
            cur = self._raw_mul(cur, self.generator)
            self.exp.append(cur)
        self.log = {x: k for k, x in enumerate(self.exp)}
        assert len(self.log) == q - 1

    def _pow_raw(self, a: int, e: int) -> int:
        out = 1
        b = a
        while e:
            if e & 1:
                out = self._raw_mul(out, b)
            b = self._raw_mul(b, b)
            e >>= 1
        return out

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        return self.exp[(self.log[a] + self.log[b]) % (self.q - 1)]

    def inv(self, a: int) -> int:
        assert a != 0
        return self.exp[(-self.log[a]) % (self.q - 1)]

    def pow(self, a: int, e: int) -> int:
        if a == 0:
            assert e > 0
            return 0
        return self.exp[(self.log[a] * e) % (self.q - 1)]

    def trace(self, a: int) -> int:
        """Absolute trace to F_p, returned as an integer in [0, p)."""
        total = 0
        cur = a
        for _ in range(self.f):
            total = self.add(total, cur)
            cur = self.pow(cur, self.p) if cur else 0
        coeffs = self._decode(total)
        assert all(c == 0 for c in coeffs[1:])
        return coeffs[0]

    def embedding_root(self, big: "FiniteField") -> int:
        """The least root in `big` of this field's modulus (an explicit
        subfield embedding); requires f | big.f and equal p."""
        assert big.p == self.p and big.f % self.f == 0
        mod = list(self.modulus)
        for alpha in range(big.q):
            acc = 0
            for c in reversed(mod):
                acc = big.add(big.mul(acc, alpha), c % self.p)
            if acc == 0:
                return alpha
        raise AssertionError("no embedding root found")

    def embed(self, x: int, big: "FiniteField", root: int | None = None) -> int:
        if root is None:
            root = self.embedding_root(big)
        acc = 0
        for c in reversed(self._decode(x)):
            acc = big.add(big.mul(acc, root), c)
        return acc

    def __repr__(self):
        return f"F_{self.q}"


@lru_cache(maxsize=None)
def finite_field(p: int, f: int) -> FiniteField:
    return FiniteField(p, f)


# ---------------------------------------------------------------------------
# Gauss sums (dense cyclotomic form)


@lru_cache(maxsize=None)
def gauss_sum(p: int, f: int, j: int) -> Cyclotomic:
    """sum over x in F_q^* of chibar^{-1}(x) psibar(x), where chibar is
    the j-th power of the canonical character (generator to zeta_{q-1})
    and psibar(x) = zeta_p^{Tr(x)}."""
    ff = finite_field(p, f)
    q = ff.q
    total = Cyclotomic.zero()
    for k in range(q - 1):
        x = ff.exp[k]
        e = (-j * k) % (q - 1) if q > 2 else 0
        term = Cyclotomic.root_of_unity(q - 1, e) if q > 2 else Cyclotomic.from_rational(1)
        term = term * Cyclotomic.root_of_unity(p, ff.trace(x))
        total = total + term
    return total


# ---------------------------------------------------------------------------
# root values: exact c * p^(k/2)


@dataclass(frozen=True)
class RootValue:
    p: int
    c: Cyclotomic
    k: int  # the value is c * p^(k/2); normalized to k in {0, 1}

    def __eq__(self, other):
        if not isinstance(other, RootValue):
            return NotImplemented
        assert self.p == other.p
        if self.k == other.k:
            return self.c == other.c
        lo, hi = (self, other) if self.k < other.k else (other, self)
        return lo.c == hi.c * sqrt_prime(self.p)

    def __hash__(self):
        return hash((self.p, self.k))

    def __mul__(self, other):
        assert self.p == other.p
        return root_value(self.p, self.c * other.c, self.k + other.k)

    def inverse(self):
        return root_value(self.p, self.c.inverse(), -self.k)

    def __repr__(self):
        return f"RootValue({self.c.to_complex():.6g} * {self.p}^({self.k}/2))"


def root_value(p: int, c: Cyclotomic, k: int) -> RootValue:
    shift = (k - (k % 2)) // 2
    if shift:
        c = c * Fraction(p) ** shift
    return RootValue(p=p, c=c, k=k % 2)


def root_value_one(p: int) -> RootValue:
    return RootValue(p=p, c=Cyclotomic.from_rational(1), k=0)


class RootValueGroup:
    """ValueGroup over exact root values for a fixed prime p."""

    def __init__(self, p: int):
        self.p = p

    def one(self):
        return root_value_one(self.p)

    def mul(self, a, b):
        return a * b

    def inv(self, a):
        return a.inverse()

    def eq(self, a, b):
        return a == b

    def pow(self, a, n: int):
        out = self.one()
        step = a if n >= 0 else a.inverse()
        for _ in range(abs(n)):
            out = out * step
        return out

    def describe(self, a):
        return repr(a)


# ---------------------------------------------------------------------------
# tame fields and characters


@dataclass(frozen=True)
class TameField:
    """An extension E of the base local field F, described by its residue
    field data: e in {1, l} (unramified / totally tame), relative residue
    degree f, level of the transported additive character."""

    base: FiniteField
    e: int
    f: int
    lpsi_base: int = 0

    @property
    def p(self) -> int:
        return self.base.p

    @property
    def d(self) -> int:
        return self.e - 1  # tame differental exponent

    @property
    def lpsi(self) -> int:
        return self.e * self.lpsi_base - self.d

    @property
    def residue(self) -> FiniteField:
        return finite_field(self.base.p, self.base.f * self.f)

    @property
    def q(self) -> int:
        return self.residue.q

    def __repr__(self):
        return f"TameField(q={self.base.q}, e={self.e}, f={self.f})"


def tame_field(base: FiniteField, e: int, f: int, lpsi_base: int = 0) -> TameField:
    assert e == 1 or _is_prime(e)
    return TameField(base=base, e=e, f=f, lpsi_base=lpsi_base)


@dataclass(frozen=True)
class TameChar:
    """A tame character: residue part = j-th power of the canonical
    residue character, uniformizer value z = zeta_z_den^z_num."""

    field: TameField
    j: int
    z_num: int = 0
    z_den: int = 1

    @property
    def a(self) -> int:
        return 0 if self.j % (self.field.q - 1 or 1) == 0 else 1

    @property
    def z(self) -> Cyclotomic:
        return Cyclotomic.root_of_unity(self.z_den, self.z_num)

    def residue_value(self, x: int) -> Cyclotomic:
        """chibar at a nonzero residue element."""
        ff = self.field.residue
        if ff.q == 2:
            return Cyclotomic.from_rational(1)
        return Cyclotomic.root_of_unity(ff.q - 1, self.j * ff.log[x])

    def mul(self, other: "TameChar") -> "TameChar":
        assert self.field == other.field
        den = lcm(self.z_den, other.z_den)
        num = (
            self.z_num * (den // self.z_den)
            + other.z_num * (den // other.z_den)
        ) % den
        return tame_char(
            self.field, (self.j + other.j) % (self.field.q - 1 or 1), num, den
        )

    def inverse(self) -> "TameChar":
        return tame_char(
            self.field,
            (-self.j) % (self.field.q - 1 or 1),
            (-self.z_num) % self.z_den,
            self.z_den,
        )

    def order_of_residue_part(self) -> int:
        q1 = self.field.q - 1
        if q1 == 0:
            return 1
        return q1 // gcd(self.j, q1)


def tame_char(
    field: TameField, j: int, z_num: int = 0, z_den: int = 1, a: int | None = None
) -> TameChar:
    assert z_den >= 1
    z_num %= z_den
    if z_num == 0:
        z_num, z_den = 0, 1
    else:
        g = gcd(z_num, z_den)
        z_num, z_den = z_num // g, z_den // g
    chi = TameChar(field=field, j=j % (field.q - 1 or 1), z_num=z_num, z_den=z_den)
    if a is not None and a != chi.a:
        if a > 1:
            raise NotTame("conductor exponent above 1 is wild")
        raise NotTame(f"conductor {a} inconsistent with the residue part")
    return chi


def root_number(chi: TameChar) -> RootValue:
    """z^(a - lpsi) * q_E^(-a/2) * (Gauss sum if a = 1)."""
    field = chi.field
    a = chi.a
    z_pow = Cyclotomic.root_of_unity(
        chi.z_den, chi.z_num * (a - field.lpsi) % chi.z_den
    )
    if a == 0:
        return root_value(field.p, z_pow, 0)
    g = gauss_sum(field.p, field.residue.f, chi.j)
    if field.e > 1:
        # the additive character of a ramified E reduces to
        # psibar(e * x), so the Gauss sum picks up chibar(e)
        g = g * chi.residue_value(field.e % field.p)
    return root_value(field.p, z_pow * g, -field.residue.f)


def twist_exponent(chi: TameChar) -> int:
    return chi.a - chi.field.lpsi


def conductor_inductivity(e, f, d, a_k, dim, lpsi) -> dict:
    """Both sides of the induced-conductor identity, with the transported
    level lpsi_K = e*lpsi - d and a_F(Ind) = f*(d*dim + a_K)."""
    lpsi_k = e * lpsi - d
    lhs = f * (d * dim + a_k) - e * f * dim * lpsi
    rhs = f * (a_k - dim * lpsi_k)
    return {"lhs": lhs, "rhs": rhs, "equal": lhs == rhs}


def residue_minus_one_value(chi: TameChar) -> Cyclotomic:
    """chi(-1) (a unit evaluation, so only the residue part matters)."""
    ff = chi.field.residue
    if ff.p == 2:
        return Cyclotomic.from_rational(1)
    return Cyclotomic.root_of_unity(ff.q - 1, chi.j * (ff.q - 1) // 2)


# ---------------------------------------------------------------------------
# integer coefficient vectors modulo x^M - 1
#
# The large-field identities multiply Gauss sums whose dense cyclotomic
# form is too expensive.  CycVec keeps exact integer coordinates in
# Z[x]/(x^M - 1); the zero test in Z[zeta_M] is rigorous: a nonzero
# algebraic integer has a conjugate of absolute value >= 1, and the
# conjugates of v(zeta_M) are the FFT values at the primitive indices,
# so bounding all of them well below 1 (with a guaranteed numerical
# error margin) certifies exact vanishing.  Borderline magnitudes fall
# back to an exact integer remainder by the cyclotomic polynomial.

import numpy as _np

_COEFF_LIMIT = 2**52


@lru_cache(maxsize=None)
def _phi_int(M: int) -> tuple[int, ...]:
    from .cyclotomic import _cyclo_coeffs

    return tuple(int(c) for c in _cyclo_coeffs(M))


@lru_cache(maxsize=None)
def _primitive_indices(M: int) -> tuple[int, ...]:
    return tuple(t for t in range(M) if gcd(t, M) == 1)


class CycVec:
    """An exact element of Z[zeta_M] held as an integer vector mod x^M - 1."""

    __slots__ = ("M", "arr")

    def __init__(self, M: int, arr):
        self.M = M
        self.arr = _np.asarray(arr, dtype=_np.int64)
        assert self.arr.shape == (M,)

    @staticmethod
    def zero(M: int) -> "CycVec":
        return CycVec(M, _np.zeros(M, dtype=_np.int64))

    @staticmethod
    def from_pairs(M: int, pairs) -> "CycVec":
        arr = _np.zeros(M, dtype=_np.int64)
        for e, c in pairs:
            arr[e % M] += c
        return CycVec(M, arr)

    def __add__(self, other: "CycVec") -> "CycVec":
        assert self.M == other.M
        return CycVec(self.M, self.arr + other.arr)

    def __sub__(self, other: "CycVec") -> "CycVec":
        assert self.M == other.M
        return CycVec(self.M, self.arr - other.arr)

    def scale(self, c: int) -> "CycVec":
        out = self.arr * c
        assert abs(out).max(initial=0) < _COEFF_LIMIT
        return CycVec(self.M, out)

    def shift(self, e: int) -> "CycVec":
        """Multiplication by x^e."""
        return CycVec(self.M, _np.roll(self.arr, e % self.M))

    def __mul__(self, other: "CycVec") -> "CycVec":
        assert self.M == other.M
        a, b = self, other
        if _np.count_nonzero(a.arr) < _np.count_nonzero(b.arr):
            a, b = b, a
        out = _np.zeros(self.M, dtype=_np.int64)
        for e in _np.nonzero(b.arr)[0]:
            out += _np.roll(a.arr, int(e)) * int(b.arr[e])
        assert abs(out).max(initial=0) < _COEFF_LIMIT
        return CycVec(self.M, out)

    def is_zero(self) -> bool:
        total = int(_np.abs(self.arr).sum())
        if total == 0:
            return True
        fft_err = 1e-12 * total * (self.M.bit_length() + 4)
        if fft_err < 0.05:
            vals = _np.abs(_np.fft.fft(self.arr)[list(_primitive_indices(self.M))])
            top = float(vals.max())
            if top < 0.25:
                return True
            if top > 0.75:
                return False
        return self._exact_is_zero()

    def _exact_is_zero(self) -> bool:
        v = [int(c) for c in self.arr]
        phi = _phi_int(self.M)
        deg = len(phi) - 1
        for d in range(len(v) - 1, deg - 1, -1):
            c = v[d]
            if c:
                v[d] = 0
                for i in range(deg):
                    v[d - deg + i] -= c * phi[i]
        return all(x == 0 for x in v[:deg])

    def to_cyclotomic(self) -> Cyclotomic:
        return Cyclotomic(self.M, [int(c) for c in self.arr])


@lru_cache(maxsize=None)
def _sqrt_pairs(p: int) -> tuple[int, tuple[tuple[int, int], ...]]:
    """sqrt(p) as (modulus, [(exponent, coeff), ...]) with integer coeffs."""
    s = sqrt_prime(p)
    pairs = []
    for k, c in enumerate(s.coeffs):
        if c:
            assert c.denominator == 1
            pairs.append((k, int(c)))
    return s.m, tuple(pairs)


def _sqrt_vec(M: int, p: int) -> CycVec:
    sm, pairs = _sqrt_pairs(p)
    assert M % sm == 0
    scale = M // sm
    return CycVec.from_pairs(M, [(e * scale, c) for e, c in pairs])


@lru_cache(maxsize=None)
def _gauss_support(p: int, f: int, j: int) -> tuple[tuple[int, int], ...]:
    """Support of the Gauss sum as (unit exponent mod q-1, trace mod p)."""
    ff = finite_field(p, f)
    q = ff.q
    out = []
    for k in range(q - 1):
        u = (-j * k) % (q - 1) if q > 2 else 0
        out.append((u, ff.trace(ff.exp[k])))
    return tuple(out)


def _gauss_vec(M: int, ff: FiniteField, j: int) -> CycVec:
    unit_scale = M // (ff.q - 1) if ff.q > 2 else 0
    add_scale = M // ff.p
    pairs = [
        (u * unit_scale + t * add_scale, 1)
        for u, t in _gauss_support(ff.p, ff.f, j)
    ]
    return CycVec.from_pairs(M, pairs)


def _delta_vec(M: int, chi: TameChar) -> tuple[CycVec, int]:
    """The root number as (vector, k) with value vec * p^(k/2)."""
    field = chi.field
    a = chi.a
    assert M % chi.z_den == 0 and M % field.p == 0
    zexp = (chi.z_num * (M // chi.z_den) * (a - field.lpsi)) % M
    if a == 0:
        return CycVec.from_pairs(M, [(zexp, 1)]), 0
    ff = field.residue
    assert ff.q == 2 or M % (ff.q - 1) == 0
    if field.e > 1 and ff.q > 2:
        # chibar(e) twist from the ramified additive character
        zexp = (zexp + chi.j * ff.log[field.e % field.p] * (M // (ff.q - 1))) % M
    return _gauss_vec(M, ff, chi.j).shift(zexp), -ff.f


# ---------------------------------------------------------------------------
# norm transport and norm-trivial character groups


@lru_cache(maxsize=None)
def _embedding_data(small: FiniteField, big: FiniteField):
    root = small.embedding_root(big)
    back = {small.embed(x, big, root): x for x in range(small.q)}
    return root, back


def _minus_one_root(ff: FiniteField, j: int) -> tuple[int, int]:
    """chibar_j(-1) as a root-of-unity pair (num, den)."""
    if ff.p == 2:
        return 0, 1
    return (j * (ff.q - 1) // 2) % (ff.q - 1), ff.q - 1


def _root_pow(num: int, den: int, e: int) -> tuple[int, int]:
    return (num * e) % den, den


def _root_mul(a: tuple[int, int], b: tuple[int, int]) -> tuple[int, int]:
    den = lcm(a[1], b[1])
    return (a[0] * (den // a[1]) + b[0] * (den // b[1])) % den, den


def base_field_of(K: TameField) -> TameField:
    """The base local field as a trivial extension datum."""
    return tame_field(K.base, 1, 1, K.lpsi_base)


def norm_transport(K: TameField, chi: TameChar) -> TameChar:
    """chi o N for a base-field character chi: the character of K^* given
    by composing with the norm map of the degree-l tame extension."""
    assert chi.field == base_field_of(K), "chi must live on the base field"
    base = K.base
    q = base.q
    ell = K.e * K.f
    if ell == 1:
        return tame_char(K, chi.j, chi.z_num, chi.z_den)
    if K.e == 1:
        # unramified: residue norm x -> x^((q^l-1)/(q-1)), N(pi) = pi^l
        big = K.residue
        if q > 2:
            idx = (big.q - 1) // (q - 1)
            _, back = _embedding_data(base, big)
            m0 = base.log[back[big.exp[idx % (big.q - 1)]]]
            j_k = (chi.j * m0 * idx) % (big.q - 1)
        else:
            j_k = 0
        num, den = _root_pow(chi.z_num, chi.z_den, ell)
        return tame_char(K, j_k, num, den)
    if not _is_prime(ell):
        raise NotAbelianTameCase(f"ramified degree {ell} is not prime")
    if K.f == 1:
        # totally tame: residue norm x -> x^l, N(pi_K) = (-1)^(l-1) pi
        # (the Eisenstein convention x^l - pi)
        j_k = (ell * chi.j) % (q - 1) if q > 2 else 0
        sign = _root_pow(*_minus_one_root(base, chi.j), ell - 1)
        num, den = _root_mul((chi.z_num, chi.z_den), sign)
        return tame_char(K, j_k, num, den)
    raise NotAbelianTameCase("mixed ramified/inert extensions are unsupported")


def norm_characters(K: TameField) -> list[TameChar]:
    """S(K|F): the base-field characters trivial on norms from K, for the
    two abelian tame shapes (unramified; Kummer with l | q-1)."""
    base = K.base
    q = base.q
    ell = K.e * K.f
    f_datum = base_field_of(K)
    if ell == 1:
        return [tame_char(f_datum, 0)]
    if not _is_prime(ell):
        raise NotAbelianTameCase(f"degree {ell} is not prime")
    if K.e == 1:
        return [tame_char(f_datum, 0, t, ell) for t in range(ell)]
    if K.f == 1:
        if (q - 1) % ell:
            raise NotAbelianTameCase(
                f"l = {ell} does not divide q - 1 = {q - 1}: K|F is not Galois"
            )
        out = []
        for t in range(ell):
            j_t = t * (q - 1) // ell
            num, den = _root_pow(*_minus_one_root(base, j_t), ell - 1)
            out.append(tame_char(f_datum, j_t, num, den))
        return out
    raise NotAbelianTameCase("mixed ramified/inert extensions are unsupported")


# ---------------------------------------------------------------------------
# the degree-l lifting identity (abelian case)


def check_DH_I(K: TameField, chi: TameChar) -> bool:
    """Delta(K, chi o N) * prod_{mu in S(K|F)} Delta(F, mu)
       = prod_{mu in S(K|F)} Delta(F, chi mu), exactly."""
    base = K.base
    p = base.p
    chi_k = norm_transport(K, chi)
    s_chars = norm_characters(K)
    q_k = K.residue.q
    q = base.q
    M = lcm(
        p,
        max(q_k - 1, 1),
        max(q - 1, 1),
        K.e * K.f,
        chi.z_den,
        8 if p == 2 else 4 * p,
    )
    lhs, lhs_k = _delta_vec(M, chi_k)
    for mu in s_chars:
        v, k = _delta_vec(M, mu)
        lhs, lhs_k = lhs * v, lhs_k + k
    rhs, rhs_k = CycVec.from_pairs(M, [(0, 1)]), 0
    for mu in s_chars:
        v, k = _delta_vec(M, chi.mul(mu))
        rhs, rhs_k = rhs * v, rhs_k + k
    if (lhs_k - rhs_k) % 2:
        # equalize parity with an exact sqrt(p) factor
        if lhs_k < rhs_k:
            lhs, lhs_k = lhs * _sqrt_vec(M, p), lhs_k + 1
        else:
            rhs, rhs_k = rhs * _sqrt_vec(M, p), rhs_k + 1
    if lhs_k > rhs_k:
        lhs = lhs.scale(p ** ((lhs_k - rhs_k) // 2))
    elif rhs_k > lhs_k:
        rhs = rhs.scale(p ** ((rhs_k - lhs_k) // 2))
    return (lhs - rhs).is_zero()


def _dh1_sides_dense(K: TameField, chi: TameChar) -> tuple[RootValue, RootValue]:
    """Both sides on the dense cyclotomic path (small fields only); used
    to cross-check the vector fast path."""
    chi_k = norm_transport(K, chi)
    s_chars = norm_characters(K)
    lhs = root_number(chi_k)
    rhs = root_value_one(K.base.p)
    for mu in s_chars:
        lhs = lhs * root_number(mu)
        rhs = rhs * root_number(chi.mul(mu))
    return lhs, rhs


def dh1_sweep(
    p: int, f: int, ell: int, ramified: bool, lpsi: int = 0, cap: int = 4096
) -> dict:
    """check_DH_I over every tame character of the base field (all residue
    parts, uniformizer values sampled in {1, zeta})."""
    from .errors import TooLarge

    base = finite_field(p, f)
    q = base.q
    if ramified:
        if (q - 1) % ell:
            raise NotAbelianTameCase(f"l = {ell} does not divide q - 1")
        K = tame_field(base, ell, 1, lpsi)
    else:
        if q**ell > cap:
            raise TooLarge(f"residue field size {q**ell} exceeds cap {cap}")
        K = tame_field(base, 1, ell, lpsi)
    f_datum = base_field_of(K)
    z_samples = [(0, 1), (1, q - 1)] if q > 2 else [(0, 1), (1, 4)]
    cases = 0
    for j in range(max(q - 1, 1)):
        for z_num, z_den in z_samples:
            assert check_DH_I(K, tame_char(f_datum, j, z_num, z_den)), (
                f"DH_I failed at q={q}, l={ell}, ramified={ramified}, "
                f"j={j}, z=zeta_{z_den}^{z_num}"
            )
            cases += 1
    return {"q": q, "ell": ell, "ramified": ramified, "cases": cases, "ok": True}


# ---------------------------------------------------------------------------
# the non-Galois tame lifting identity


def check_DH_III_tame(p: int, f: int, ell: int, lpsi: int = 0, cap: int = 256) -> dict:
    """The ramified degree-l identity when l does not divide q - 1:
    with m = ord(q mod l), L the unramified degree-m extension and
    K = L(pi^(1/l)),

      Delta(E, chi o N_{E|F}) * prod_{[mu] != [1]} Delta(L, mu)
        = Delta(F, chi) * prod_{[mu]} Delta(L, (chi o N_{L|F}) mu)

    where mu runs over one representative per Frobenius orbit of the
    nontrivial elements of S(K|L) (the root numbers are checked to be
    orbit-independent)."""
    base = finite_field(p, f)
    q = base.q
    if not _is_prime(ell):
        raise NotAbelianTameCase(f"l = {ell} is not prime")
    if ell == p:
        raise NotTame(f"l = p = {p} is wildly ramified")
    if (q - 1) % ell == 0:
        raise DegenerateCase(
            f"l = {ell} divides q - 1 = {q - 1}; use the abelian identity"
        )
    m = 1
    while pow(q, m, ell) != 1:
        m += 1
    if q**m > cap:
        from .errors import TooLarge

        raise TooLarge(f"residue field size {q**m} exceeds cap {cap}")
    l_res = finite_field(p, f * m)
    f_datum = tame_field(base, 1, 1, lpsi)
    l_over_f = tame_field(base, 1, m, lpsi)  # L, unramified of degree m
    e_over_f = tame_field(base, ell, 1, lpsi)  # E = F(pi^(1/l)), not Galois
    l_datum = tame_field(l_res, 1, 1, l_over_f.lpsi)  # L as a base field
    k_over_l = tame_field(l_res, ell, 1, l_over_f.lpsi)  # K = L(pi^(1/l))

    s_chars = [mu for mu in norm_characters(k_over_l) if mu.j != 0]
    assert len(s_chars) == ell - 1
    # Frobenius orbits: j -> q*j on residue parts, z fixed
    by_j = {mu.j: mu for mu in s_chars}
    orbits = []
    seen = set()
    for mu in s_chars:
        if mu.j in seen:
            continue
        orbit = []
        j_cur = mu.j
        while j_cur not in seen:
            seen.add(j_cur)
            orbit.append(by_j[j_cur])
            j_cur = (q * j_cur) % (l_res.q - 1)
        assert len(orbit) == m, "Frobenius orbits must have length m"
        # orbit-independence of the root numbers
        first = root_number(orbit[0])
        assert all(root_number(nu) == first for nu in orbit[1:]), (
            "root number not constant on a Frobenius orbit"
        )
        orbits.append(min(orbit, key=lambda nu: nu.j))
    assert len(orbits) == (ell - 1) // m
    # inversion permutes the orbits (so for odd total degree a rep system
    # stable under mu -> mu^{-1} exists)
    orbit_js = {frozenset(_frob_orbit_js(mu.j, q, l_res.q - 1)) for mu in orbits}
    inv_js = {
        frozenset((-j) % (l_res.q - 1) for j in o) for o in orbit_js
    }
    assert orbit_js == inv_js

    z_samples = [(0, 1), (1, q - 1)] if q > 2 else [(0, 1), (1, 4)]
    cases = 0
    for j in range(max(q - 1, 1)):
        for z_num, z_den in z_samples:
            chi = tame_char(f_datum, j, z_num, z_den)
            chi_e = norm_transport(e_over_f, chi)
            chi_l_raw = norm_transport(l_over_f, chi)
            chi_l = tame_char(l_datum, chi_l_raw.j, chi_l_raw.z_num, chi_l_raw.z_den)
            lhs = root_number(chi_e)
            rhs = root_number(chi)
            for mu in orbits:
                lhs = lhs * root_number(mu)
                rhs = rhs * root_number(chi_l.mul(mu))
            assert lhs == rhs, (
                f"DH_III failed at q={q}, l={ell}, j={j}, z=zeta_{z_den}^{z_num}"
            )
            cases += 1
    return {"q": q, "ell": ell, "m": m, "cases": cases, "ok": True}


def _frob_orbit_js(j: int, q: int, mod: int) -> list[int]:
    out = [j]
    cur = (q * j) % mod
    while cur != j:
        out.append(cur)
        cur = (q * cur) % mod
    return out


# ---------------------------------------------------------------------------
# Gauss-sum sweeps (fast exact paths)


def gauss_modulus_check(p: int, f: int) -> bool:
    """|g(chibar)|^2 = q for every nontrivial chibar."""
    ff = finite_field(p, f)
    q = ff.q
    M = lcm(p, max(q - 1, 1))
    for j in range(1, q - 1):
        g = _gauss_vec(M, ff, j)
        gbar = CycVec(M, _np.concatenate(([g.arr[0]], g.arr[:0:-1])))
        diff = g * gbar - CycVec.from_pairs(M, [(0, q)])
        if not diff.is_zero():
            return False
    return True


def gauss_functional_check(p: int, f: int) -> bool:
    """g(chibar) g(chibar^{-1}) = chibar(-1) q for every nontrivial
    chibar (the Gauss-sum core of the functional equation)."""
    ff = finite_field(p, f)
    q = ff.q
    M = lcm(p, max(q - 1, 1))
    for j in range(1, q - 1):
        prod = _gauss_vec(M, ff, j) * _gauss_vec(M, ff, (-j) % (q - 1))
        num, den = _minus_one_root(ff, j)
        expected = CycVec.from_pairs(M, [((num * (M // den)) % M, q)])
        if not (prod - expected).is_zero():
            return False
    return True


def functional_equation(chi: TameChar) -> bool:
    """Delta(chi) Delta(chi^{-1}) = chi(-1) at the root-value level."""
    lhs = root_number(chi) * root_number(chi.inverse())
    rhs = root_value(chi.field.p, residue_minus_one_value(chi), 0)
    return lhs == rhs


# ---------------------------------------------------------------------------
# Galois-group Delta models
#
# For a tame Galois extension K|F the subgroup-character pairs of
# Gal(K|F) correspond to intermediate fields with a character of their
# unit-and-uniformizer group, and the root numbers of those characters
# give an exact RootValue-valued Delta function on the pair classes.
# Supported shapes: unramified cyclic; Kummer cyclic and bicyclic
# (l | q - 1); the Frobenius-group shape (l not dividing q - 1, with
# inertia of order l and unramified part of order m = ord(q mod l)).


def _char_root(chi, x: int) -> tuple[int, int]:
    """chi(x) as a root-of-unity pair."""
    return chi.exponent_of(x) % chi.modulus, chi.modulus


def _galois_pair_value(
    g, inertia_set, sigma: int, tau: int, base: FiniteField, lpsi: int, h, chi
) -> RootValue:
    """Root number of the character of the fixed field of H obtained
    from chi via the reciprocity conventions Art(units) = tau-part,
    Art(pi) = sigma-power times the (-1)^(l-1) unit correction."""
    e_total = len(inertia_set)
    f_total = g.order // e_total
    ih = [x for x in h.elements if x in inertia_set]
    e_ke = len(ih)
    f_ke = h.order // e_ke
    e_e = e_total // e_ke
    f_e = f_total // f_ke
    field_e = tame_field(base, e_e, f_e, lpsi)
    q_e = field_e.q

    def power(x, n):
        out = 0
        for _ in range(n % g.element_order(x)):
            out = g.mul(out, x)
        return out

    if e_ke == 1:
        # K|E unramified: the transported character is unramified with
        # z = chi(Frob), Frob the unique element of H over sigma^f_E
        target = g.inv(power(sigma, f_e))
        frobs = [x for x in h.elements if g.mul(x, target) in inertia_set]
        assert len(frobs) == 1
        num, den = _char_root(chi, frobs[0])
        return root_number(tame_char(field_e, 0, num, den))
    assert e_ke == e_total, "inertia meets H in a proper nontrivial part"
    ell = e_total
    # residue part from chi on inertia: chi(tau) = zeta_l^s
    num_t, den_t = _char_root(chi, tau)
    assert (num_t * ell) % den_t == 0, "chi is not order-l on inertia"
    s = num_t * ell // den_t
    j = s * (q_e - 1) // ell if q_e > 2 else 0
    t0 = ((q_e - 1) // 2) % 2 if (ell == 2 and q_e % 2) else 0
    art_pi = g.mul(power(sigma, f_e), power(tau, t0))
    num, den = _char_root(chi, art_pi)
    return root_number(tame_char(field_e, j, num, den))


def galois_delta(
    model: str, p: int = 2, f: int = 1, ell: int | None = None,
    degree: int | None = None, lpsi: int = 0,
):
    """An exact RootValue Delta function on the pair classes of the
    Galois group of a supported tame extension shape.  Models:
    "unramified" (cyclic of the given degree), "kummer" (ramified cyclic
    of prime degree ell | q-1), "bikummer" (unramified times ramified,
    (Z/ell)^2), "s3" (nonabelian: inertia of order ell with
    ell not dividing q-1)."""
    from .catalog import catalog_group
    from .extend import delta_function
    from .groups import (
        full_subgroup,
        make_group,
        normal_subgroups,
        trivial_subgroup,
    )
    from .brauer import pair_classes

    base = finite_field(p, f)
    q = base.q
    if model == "unramified":
        if degree is None or not 1 <= degree <= 16:
            raise UnsupportedModel("unramified model needs a degree in 1..16")
        g = catalog_group(f"C{degree}")
        inertia_set = frozenset({0})
        sigma, tau = (1 if degree > 1 else 0), 0
    elif model == "kummer":
        if ell is None or not _is_prime(ell) or (q - 1) % ell:
            raise UnsupportedModel("kummer model needs a prime ell | q - 1")
        g = catalog_group(f"C{ell}")
        inertia_set = frozenset(range(ell))
        sigma, tau = 0, 1
    elif model == "bikummer":
        if ell is None or not _is_prime(ell) or (q - 1) % ell:
            raise UnsupportedModel("bikummer model needs a prime ell | q - 1")
        # element a + ell*b is tau^a sigma^b
        table = [
            [
                ((a1 + a2) % ell) + ell * ((b1 + b2) % ell)
                for x2 in range(ell * ell)
                for a2, b2 in [(x2 % ell, x2 // ell)]
            ]
            for x1 in range(ell * ell)
            for a1, b1 in [(x1 % ell, x1 // ell)]
        ]
        g = make_group(table, name=f"C{ell}xC{ell}")
        inertia_set = frozenset(range(ell))
        sigma, tau = ell, 1
    elif model == "s3":
        if ell is None or not _is_prime(ell) or ell == p:
            raise UnsupportedModel("s3 model needs a prime ell, ell != p")
        if (q - 1) % ell == 0:
            raise UnsupportedModel(
                "ell divides q - 1: the extension is abelian (use kummer)"
            )
        m = 1
        while pow(q, m, ell) != 1:
            m += 1
        if m == 1:
            raise UnsupportedModel("degenerate: ell | q - 1")
        name = "S3" if (ell, m) == (3, 2) else f"F{ell}_{m}"
        try:
            g = catalog_group(name)
        except Exception as exc:
            raise UnsupportedModel(f"no catalog group for shape ({ell}, {m})") from exc
        inertia = next(
            h for h in normal_subgroups(g) if h.order == ell
        )
        inertia_set = inertia.element_set
        tau = min(x for x in inertia_set if x != 0)
        q_action = q % ell
        sigma = None
        for x in range(g.order):
            if x in inertia_set:
                continue
            if g.conj(x, tau) == _inertia_power(g, tau, q_action):
                cos_order = g.element_order(x)
                if cos_order % m == 0:
                    sigma = x
                    break
        assert sigma is not None, "no Frobenius lift with the q-power action"
    else:
        raise UnsupportedModel(f"unknown model {model!r}")

    full = full_subgroup(g)
    triv = trivial_subgroup(g)
    vgroup = RootValueGroup(p)
    assignments = {}
    for cls in pair_classes(full, triv):
        if cls.char.is_trivial():
            continue
        assignments[cls] = _galois_pair_value(
            g, inertia_set, sigma, tau, base, lpsi, cls.subgroup, cls.char
        )
    return delta_function(g, triv, vgroup, assignments)


def _inertia_power(g, tau: int, n: int) -> int:
    out = 0
    for _ in range(n):
        out = g.mul(out, tau)
    return out
