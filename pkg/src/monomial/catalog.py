"""Built-in group catalog.

Names: C1..C16, S3, S4, A4, D4 (order 8), D6 (order 12), Q8,
Heisenberg27, and Frobenius groups F_l_m = C_l x| C_m for
(l, m) in {(3,2), (5,4), (7,3), (7,6), (13,3)}.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import permutations

from .errors import ParseError
from .groups import Group, make_group


def _cyclic_table(n):
    return [[(i + j) % n for j in range(n)] for i in range(n)]


def _dihedral_table(k):
    # element (r, s) -> index r + k*s ; (r1,s1)(r2,s2) = (r1 + (-1)^s1 r2, s1^s2)
    n = 2 * k

    def mul(i, j):
        r1, s1 = i % k, i // k
        r2, s2 = j % k, j // k
        r = (r1 + (r2 if s1 == 0 else -r2)) % k
        return r + k * (s1 ^ s2)

    return [[mul(i, j) for j in range(n)] for i in range(n)]


def _perm_group_table(perms):
    perms = sorted(perms)
    assert perms[0] == tuple(range(len(perms[0])))
    index = {p: i for i, p in enumerate(perms)}

    def compose(p, q):
        # (p*q)(x) = p(q(x))
        return tuple(p[q[x]] for x in range(len(p)))

    return [[index[compose(p, q)] for q in perms] for p in perms]


def _q8_table():
    # element i^a j^b -> index a + 4b; j i = i^-1 j and j^2 = i^2
    def mul(x, y):
        a, b = x % 4, x // 4
        c, d = y % 4, y // 4
        a2 = (a + (c if b == 0 else -c) + 2 * (b * d)) % 4
        return a2 + 4 * ((b + d) % 2)

    return [[mul(i, j) for j in range(8)] for i in range(8)]


def _heisenberg27_table():
    # upper unitriangular 3x3 over F_3: (a,b,c) -> a + 3b + 9c
    def mul(x, y):
        a, b, c = x % 3, (x // 3) % 3, x // 9
        d, e, f = y % 3, (y // 3) % 3, y // 9
        return (a + d) % 3 + 3 * ((b + e) % 3) + 9 * ((c + f + a * e) % 3)

    return [[mul(i, j) for j in range(27)] for i in range(27)]


def _frobenius_table(l, m):
    # C_l x| C_m with C_m acting by the least r of multiplicative order m
    r = next(
        x
        for x in range(2, l)
        if pow(x, m, l) == 1
        and all(pow(x, d, l) != 1 for d in range(1, m) if m % d == 0)
    )

    def mul(i, j):
        x1, y1 = i % l, i // l
        x2, y2 = j % l, j // l
        return (x1 + pow(r, y1, l) * x2) % l + l * ((y1 + y2) % m)

    return [[mul(i, j) for j in range(l * m)] for i in range(l * m)]


@lru_cache(maxsize=None)
def _build() -> dict[str, Group]:
    groups = {}
    for n in range(1, 17):
        groups[f"C{n}"] = make_group(_cyclic_table(n), name=f"C{n}")
    groups["S3"] = make_group(_dihedral_table(3), name="S3")
    groups["D4"] = make_group(_dihedral_table(4), name="D4")
    groups["D6"] = make_group(_dihedral_table(6), name="D6")
    groups["Q8"] = make_group(_q8_table(), name="Q8")
    groups["A4"] = make_group(
        _perm_group_table(
            [p for p in permutations(range(4)) if _sign(p) == 1]
        ),
        name="A4",
    )
    groups["S4"] = make_group(
        _perm_group_table(list(permutations(range(4)))), name="S4"
    )
    groups["Heisenberg27"] = make_group(_heisenberg27_table(), name="Heisenberg27")
    for l, m in ((3, 2), (5, 4), (7, 3), (7, 6), (13, 3)):
        name = f"F{l}_{m}"
        groups[name] = make_group(_frobenius_table(l, m), name=name)
    return groups


def _sign(p) -> int:
    s = 1
    for i in range(len(p)):
        for j in range(i + 1, len(p)):
            if p[i] > p[j]:
                s = -s
    return s


def catalog_names() -> list[str]:
    return list(_build().keys())


def catalog_group(name: str) -> Group:
    try:
        return _build()[name]
    except KeyError:
        raise ParseError(
            f"unknown catalog group {name!r}; available: {', '.join(catalog_names())}"
        ) from None
