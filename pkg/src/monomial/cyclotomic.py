"""Exact arithmetic in cyclotomic fields Q(zeta_m).

An element is a rational polynomial in zeta_m reduced modulo the m-th
cyclotomic polynomial, so equality of reduced representations (after
embedding into a common Q(zeta_lcm)) is equality of complex numbers.
"""

from __future__ import annotations

import cmath
from fractions import Fraction
from functools import lru_cache
from math import gcd, lcm

from sympy import cyclotomic_poly, symbols

_x = symbols("x")


@lru_cache(maxsize=None)
def _cyclo_coeffs(m: int) -> tuple[Fraction, ...]:
    """Coefficients of the m-th cyclotomic polynomial, ascending degree."""
    poly = cyclotomic_poly(m, _x).as_poly(_x)
    return tuple(Fraction(int(c)) for c in reversed(poly.all_coeffs()))


def _poly_trim(coeffs: list[Fraction]) -> list[Fraction]:
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return coeffs


def _poly_rem(num: list[Fraction], den: tuple[Fraction, ...]) -> list[Fraction]:
    """Remainder of num modulo the monic polynomial den."""
    num = list(num)
    dd = len(den) - 1
    while len(num) > dd:
        lead = num[-1]
        if lead:
            shift = len(num) - 1 - dd
            for i, c in enumerate(den):
                num[shift + i] -= lead * c
        num.pop()
    return _poly_trim(num)


def _poly_mul(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    out[i + j] += x * y
    return out


def _poly_divmod(a: list[Fraction], b: list[Fraction]):
    """Quotient and remainder over Q[x]; b need not be monic."""
    a = list(a)
    q = [Fraction(0)] * max(0, len(a) - len(b) + 1)
    inv_lead = 1 / b[-1]
    while True:
        _poly_trim(a)
        if len(a) < len(b):
            break
        shift = len(a) - len(b)
        coef = a[-1] * inv_lead
        q[shift] = coef
        for i, c in enumerate(b):
            a[shift + i] -= coef * c
        a.pop()
    return _poly_trim(q), _poly_trim(a)


class Cyclotomic:
    """An exact element of Q(zeta_m)."""

    __slots__ = ("m", "coeffs")

    def __init__(self, m: int, coeffs):
        self.m = m
        reduced = _poly_rem(
            [Fraction(c) for c in coeffs], _cyclo_coeffs(m)
        )
        self.coeffs = tuple(reduced)

    # -- constructors ----------------------------------------------------

    @staticmethod
    def zero(m: int = 1) -> "Cyclotomic":
        return Cyclotomic(m, [])

    @staticmethod
    def from_rational(value, m: int = 1) -> "Cyclotomic":
        return Cyclotomic(m, [Fraction(value)])

    @staticmethod
    def root_of_unity(m: int, k: int = 1) -> "Cyclotomic":
        """zeta_m ** k."""
        k %= m
        return Cyclotomic(m, [Fraction(0)] * k + [Fraction(1)])

    # -- structure -------------------------------------------------------

    def promote(self, m_new: int) -> "Cyclotomic":
        """Embed into Q(zeta_m_new); m must divide m_new."""
        if m_new == self.m:
            return self
        if m_new % self.m:
            raise ValueError(f"cannot embed modulus {self.m} into {m_new}")
        scale = m_new // self.m
        out = [Fraction(0)] * m_new
        for k, c in enumerate(self.coeffs):
            if c:
                out[(k * scale) % m_new] += c
        return Cyclotomic(m_new, out)

    def _common(self, other: "Cyclotomic"):
        m = lcm(self.m, other.m)
        return self.promote(m), other.promote(m)

    # -- predicates ------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_one(self) -> bool:
        return self.coeffs == (Fraction(1),)

    def is_rational(self) -> bool:
        return len(self.coeffs) <= 1

    def as_rational(self) -> Fraction:
        if not self.coeffs:
            return Fraction(0)
        if len(self.coeffs) == 1:
            return self.coeffs[0]
        raise ValueError(f"not rational: {self!r}")

    # -- arithmetic ------------------------------------------------------

    def __add__(self, other):
        other = _coerce(other, self.m)
        a, b = self._common(other)
        n = max(len(a.coeffs), len(b.coeffs))
        pa = list(a.coeffs) + [Fraction(0)] * (n - len(a.coeffs))
        pb = list(b.coeffs) + [Fraction(0)] * (n - len(b.coeffs))
        return Cyclotomic(a.m, [x + y for x, y in zip(pa, pb)])

    __radd__ = __add__

    def __neg__(self):
        return Cyclotomic(self.m, [-c for c in self.coeffs])

    def __sub__(self, other):
        return self + (-_coerce(other, self.m))

    def __rsub__(self, other):
        return _coerce(other, self.m) - self

    def __mul__(self, other):
        other = _coerce(other, self.m)
        a, b = self._common(other)
        return Cyclotomic(a.m, _poly_mul(list(a.coeffs), list(b.coeffs)))

    __rmul__ = __mul__

    def inverse(self) -> "Cyclotomic":
        """Multiplicative inverse via the extended Euclidean algorithm
        against the (irreducible) cyclotomic polynomial."""
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero cyclotomic")
        phi = list(_cyclo_coeffs(self.m))
        # extended gcd of self.coeffs and phi over Q[x]
        r0, r1 = phi, list(self.coeffs)
        s0, s1 = [], [Fraction(1)]  # coefficients of self.coeffs
        while r1:
            q, r = _poly_divmod(r0, r1)
            qs1 = _poly_mul(q, s1)
            n = max(len(s0), len(qs1))
            s = _poly_trim(
                [
                    (s0[i] if i < len(s0) else Fraction(0))
                    - (qs1[i] if i < len(qs1) else Fraction(0))
                    for i in range(n)
                ]
            )
            r0, r1 = r1, r
            s0, s1 = s1, s
        # r0 = gcd (a nonzero constant since phi is irreducible)
        if len(r0) != 1:
            raise ArithmeticError("gcd with cyclotomic polynomial not constant")
        inv_gcd = 1 / r0[0]
        return Cyclotomic(self.m, [c * inv_gcd for c in s0])

    def __truediv__(self, other):
        other = _coerce(other, self.m)
        return self * other.inverse()

    def __rtruediv__(self, other):
        return _coerce(other, self.m) / self

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        result = Cyclotomic.from_rational(1, self.m)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def conjugate(self) -> "Cyclotomic":
        """Complex conjugation zeta -> zeta^{-1}."""
        out = [Fraction(0)] * self.m
        for k, c in enumerate(self.coeffs):
            if c:
                out[(-k) % self.m] += c
        return Cyclotomic(self.m, out)

    # -- comparison ------------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Cyclotomic.from_rational(other)
        if not isinstance(other, Cyclotomic):
            return NotImplemented
        a, b = self._common(other)
        return a.coeffs == b.coeffs

    def __hash__(self):
        # Hash embedding-invariantly: rationals hash as rationals, others
        # by the reduced tuple at their own modulus after shrinking.
        shrunk = self.shrink()
        if len(shrunk.coeffs) <= 1:
            return hash(shrunk.as_rational())
        return hash((shrunk.m, shrunk.coeffs))

    def shrink(self) -> "Cyclotomic":
        """Smallest modulus d | m (same squarefree trick not attempted:
        just try all divisors) that contains this element."""
        for d in sorted(_divisors(self.m)):
            if d == self.m:
                break
            # The element lies in Q(zeta_d) iff it is fixed by every Galois
            # automorphism that fixes Q(zeta_d) pointwise.
            if _fixed_by_subfield(self, d):
                return _project_to(self, d)
        return self

    # -- misc ------------------------------------------------------------

    def to_complex(self) -> complex:
        z = cmath.exp(2j * cmath.pi / self.m)
        return sum(float(c) * z**k for k, c in enumerate(self.coeffs)) + 0j

    def __repr__(self):
        if not self.coeffs:
            return "Cyc(0)"
        terms = []
        for k, c in enumerate(self.coeffs):
            if c:
                terms.append(f"{c}*z{self.m}^{k}" if k else f"{c}")
        return "Cyc(" + " + ".join(terms) + ")"


def _coerce(value, m: int) -> Cyclotomic:
    if isinstance(value, Cyclotomic):
        return value
    return Cyclotomic.from_rational(value, m)


@lru_cache(maxsize=None)
def _divisors(n: int) -> tuple[int, ...]:
    return tuple(d for d in range(1, n + 1) if n % d == 0)


def _galois_apply(x: Cyclotomic, t: int) -> Cyclotomic:
    """The automorphism zeta_m -> zeta_m^t (t coprime to m)."""
    out = [Fraction(0)] * x.m
    for k, c in enumerate(x.coeffs):
        if c:
            out[(k * t) % x.m] += c
    return Cyclotomic(x.m, out)


def _fixed_by_subfield(x: Cyclotomic, d: int) -> bool:
    m = x.m
    for t in range(1, m):
        if gcd(t, m) == 1 and t % d == 1 % d:
            if _galois_apply(x, t) != x:
                return False
    return True


def _project_to(x: Cyclotomic, d: int) -> Cyclotomic:
    """Rewrite x (known to lie in Q(zeta_d)) on the zeta_d power basis by
    solving a small rational linear system."""
    m = x.m
    scale = m // d
    # Basis of Q(zeta_d) inside Q(zeta_m): zeta_m^{scale*k}, k < deg(Phi_d).
    deg = len(_cyclo_coeffs(d)) - 1
    basis = [Cyclotomic.root_of_unity(m, scale * k) for k in range(deg)]
    # Solve sum a_k basis_k = x by Gaussian elimination over Q on the
    # coordinates of the zeta_m representation.
    width = len(_cyclo_coeffs(m)) - 1
    rows = []
    for k in range(width):
        rows.append(
            [b.coeffs[k] if k < len(b.coeffs) else Fraction(0) for b in basis]
            + [x.coeffs[k] if k < len(x.coeffs) else Fraction(0)]
        )
    sol = _solve_rational(rows, deg)
    if sol is None:
        raise ArithmeticError("projection failed; element not in subfield")
    return Cyclotomic(d, sol)


def _solve_rational(aug: list[list[Fraction]], nvars: int):
    rows = [list(r) for r in aug]
    piv_rows = []
    col = 0
    r = 0
    for col in range(nvars):
        piv = next((i for i in range(r, len(rows)) if rows[i][col]), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        lead = rows[r][col]
        rows[r] = [c / lead for c in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][col]:
                f = rows[i][col]
                rows[i] = [c - f * d for c, d in zip(rows[i], rows[r])]
        piv_rows.append((r, col))
        r += 1
    sol = [Fraction(0)] * nvars
    for rr, cc in piv_rows:
        sol[cc] = rows[rr][-1]
    # consistency
    for i in range(len(rows)):
        if all(rows[i][j] == 0 for j in range(nvars)) and rows[i][-1]:
            return None
    return sol


@lru_cache(maxsize=None)
def sqrt_prime(p: int) -> Cyclotomic:
    """Exact square root of a prime p as a cyclotomic number.

    Uses the classical evaluation of the quadratic Gauss sum:
    g = sum_x (x|p) zeta_p^x equals sqrt(p) for p = 1 (mod 4) and
    i*sqrt(p) for p = 3 (mod 4); sqrt(2) = zeta_8 + zeta_8^{-1}.
    """
    if p == 2:
        return Cyclotomic.root_of_unity(8, 1) + Cyclotomic.root_of_unity(8, 7)
    g = Cyclotomic.zero(p)
    for x in range(1, p):
        legendre = pow(x, (p - 1) // 2, p)
        sign = 1 if legendre == 1 else -1
        g = g + sign * Cyclotomic.root_of_unity(p, x)
    if p % 4 == 1:
        return g
    i_unit = Cyclotomic.root_of_unity(4, 1)
    return g.promote(lcm(p, 4)) / i_unit


def sqrt_prime_power(p: int, f: int) -> Cyclotomic:
    """Exact sqrt(p**f)."""
    whole = Cyclotomic.from_rational(p ** (f // 2))
    if f % 2:
        return whole * sqrt_prime(p)
    return whole
