"""Small finite groups given by multiplication tables.

Element 0 is always the identity.  The built-in catalog is fixed and ordered
by group order (ties broken by insertion order below), which makes every
search over it reproducible.
"""

from __future__ import annotations

import itertools
from functools import lru_cache
from typing import Callable, Hashable, Sequence

__all__ = [
    "FiniteGroup",
    "GroupFormatError",
    "builtin_catalog",
    "lookup",
    "load_group",
    "save_group",
    "prime_power_base",
]


class GroupFormatError(ValueError):
    pass


def prime_power_base(n: int) -> int | None:
    """Return p if n = p^k with k >= 1, else None."""
    if n < 2:
        return None
    p = next(q for q in range(2, n + 1) if n % q == 0)
    while n % p == 0:
        n //= p
    return p if n == 1 else None


class FiniteGroup:
    """A finite group as a validated multiplication table."""

    def __init__(self, table: Sequence[Sequence[int]], name: str = "", pgroup: int | None = None,
                 validate: bool = True):
        self.table = tuple(tuple(int(x) for x in row) for row in table)
        self.order = len(self.table)
        self.name = name
        if validate:
            self._validate()
        if pgroup is not None and prime_power_base(self.order) != pgroup:
            raise GroupFormatError(f"order {self.order} is not a power of {pgroup}")
        self.pgroup = pgroup if pgroup is not None else prime_power_base(self.order)
        self.inverse = tuple(row.index(0) for row in self.table)

    def _validate(self):
        n = self.order
        if n == 0:
            raise GroupFormatError("empty table")
        full = set(range(n))
        for a, row in enumerate(self.table):
            if len(row) != n:
                raise GroupFormatError(f"row {a} has {len(row)} entries, expected {n}")
            if set(row) != full:
                raise GroupFormatError(f"row {a} is not a permutation of 0..{n - 1} (not a Latin square)")
        for b in range(n):
            if {self.table[a][b] for a in range(n)} != full:
                raise GroupFormatError(f"column {b} is not a permutation of 0..{n - 1} (not a Latin square)")
        for a in range(n):
            if self.table[0][a] != a or self.table[a][0] != a:
                raise GroupFormatError("element 0 is not the identity")
        t = self.table
        for a in range(n):
            ta = t[a]
            for b in range(n):
                tab = t[ta[b]]
                tb = t[b]
                for c in range(n):
                    if tab[c] != ta[tb[c]]:
                        raise GroupFormatError(f"not associative at ({a}, {b}, {c})")

    def __repr__(self):
        return f"FiniteGroup({self.name or '?'}, order={self.order})"

    def __eq__(self, other):
        return isinstance(other, FiniteGroup) and self.table == other.table

    def __hash__(self):
        return hash(self.table)

    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]

    def inv(self, a: int) -> int:
        return self.inverse[a]

    def power(self, a: int, m: int) -> int:
        if m < 0:
            a, m = self.inverse[a], -m
        result, base = 0, a
        while m:
            if m & 1:
                result = self.table[result][base]
            base = self.table[base][base]
            m >>= 1
        return result

    def element_order(self, a: int) -> int:
        k, x = 1, a
        while x != 0:
            x = self.table[x][a]
            k += 1
        return k

    def is_abelian(self) -> bool:
        t = self.table
        return all(t[a][b] == t[b][a] for a in range(self.order) for b in range(a))

    def is_pgroup(self, p: int | None = None) -> bool:
        if self.pgroup is None:
            return False
        return p is None or self.pgroup == p

    def subgroup_generated(self, gens: Sequence[int]) -> list[int]:
        """Elements of <gens>, identity first, in breadth-first order."""
        seen = [0]
        known = {0}
        i = 0
        while i < len(seen):
            a = seen[i]
            for g in gens:
                b = self.table[a][g]
                if b not in known:
                    known.add(b)
                    seen.append(b)
            i += 1
        return seen


def _from_elements(elements: Sequence[Hashable], op: Callable, name: str) -> FiniteGroup:
    index = {x: i for i, x in enumerate(elements)}
    table = [[index[op(a, b)] for b in elements] for a in elements]
    return FiniteGroup(table, name=name)


def cyclic(n: int, name: str | None = None) -> FiniteGroup:
    return _from_elements(range(n), lambda a, b: (a + b) % n, name or f"Z/{n}")


def abelian(*ns: int, name: str | None = None) -> FiniteGroup:
    elements = list(itertools.product(*(range(n) for n in ns)))
    op = lambda a, b: tuple((x + y) % n for x, y, n in zip(a, b, ns))
    return _from_elements(elements, op, name or "x".join(f"Z/{n}" for n in ns))


def semidirect(m: int, n: int, r: int, name: str) -> FiniteGroup:
    """Z/m x| Z/n where the generator of Z/n acts on Z/m by multiplication by r."""
    if pow(r, n, m) != 1 % m:
        raise ValueError(f"{r}^{n} != 1 mod {m}")
    elements = [(a, b) for b in range(n) for a in range(m)]
    op = lambda x, y: ((x[0] + pow(r, x[1], m) * y[0]) % m, (x[1] + y[1]) % n)
    return _from_elements(elements, op, name)


def dihedral(n: int, name: str | None = None) -> FiniteGroup:
    return semidirect(n, 2, n - 1, name or f"D{n}")


def dicyclic(n: int, name: str) -> FiniteGroup:
    """<x, y | x^(2n), y^2 = x^n, y^-1 x y = x^-1>, order 4n."""
    m = 2 * n

    def op(p, q):
        (a, s), (b, t) = p, q
        if s == 0:
            return ((a + b) % m, t)
        if t == 0:
            return ((a - b) % m, 1)
        return ((a - b + n) % m, 0)

    elements = [(a, s) for s in (0, 1) for a in range(m)]
    return _from_elements(elements, op, name)


def permutation_group(gens: Sequence[tuple[int, ...]], name: str) -> FiniteGroup:
    ident = tuple(range(len(gens[0])))
    compose = lambda p, q: tuple(q[p[i]] for i in range(len(p)))  # p then q
    elements = [ident]
    known = {ident}
    i = 0
    while i < len(elements):
        for g in gens:
            h = compose(elements[i], g)
            if h not in known:
                known.add(h)
                elements.append(h)
        i += 1
    return _from_elements(elements, compose, name)


def direct_product(g: FiniteGroup, h: FiniteGroup, name: str) -> FiniteGroup:
    elements = [(a, b) for a in range(g.order) for b in range(h.order)]
    op = lambda x, y: (g.table[x[0]][y[0]], h.table[x[1]][y[1]])
    return _from_elements(elements, op, name)


def heisenberg(p: int, name: str | None = None) -> FiniteGroup:
    """Upper unitriangular 3x3 matrices over Z/p."""
    elements = list(itertools.product(range(p), repeat=3))
    op = lambda x, y: ((x[0] + y[0]) % p, (x[1] + y[1]) % p, (x[2] + y[2] + x[0] * y[1]) % p)
    return _from_elements(elements, op, name or f"Heis{p ** 3}")


@lru_cache(maxsize=None)
def _catalog() -> tuple[FiniteGroup, ...]:
    d4 = dihedral(4)
    q8 = dicyclic(2, "Q8")
    groups = [
        FiniteGroup([[0]], name="trivial"),
        cyclic(2),
        cyclic(3),
        cyclic(4),
        abelian(2, 2),
        cyclic(5),
        cyclic(6),
        permutation_group([(1, 0, 2), (1, 2, 0)], "S3"),
        cyclic(7),
        cyclic(8),
        abelian(2, 4),
        abelian(2, 2, 2, name="Z/2^3"),
        d4,
        q8,
        cyclic(9),
        abelian(3, 3),
        cyclic(10),
        dihedral(5),
        cyclic(12),
        abelian(2, 6),
        permutation_group([(1, 2, 0, 3), (1, 0, 3, 2)], "A4"),
        dihedral(6),
        dicyclic(3, "Dic3"),
        cyclic(16),
        abelian(4, 4),
        abelian(2, 8),
        abelian(2, 2, 4, name="Z/2^2xZ/4"),
        abelian(2, 2, 2, 2, name="Z/2^4"),
        dihedral(8),
        dicyclic(4, "Q16"),
        semidirect(8, 2, 3, "SD16"),
        semidirect(8, 2, 5, "M16"),
        semidirect(4, 4, 3, "Z/4:Z/4"),
        direct_product(cyclic(2), d4, "Z/2xD4"),
        direct_product(cyclic(2), q8, "Z/2xQ8"),
        cyclic(27),
        abelian(3, 9),
        abelian(3, 3, 3, name="Z/3^3"),
        heisenberg(3, "Heis27"),
        semidirect(9, 3, 4, "Z/9:Z/3"),
    ]
    return tuple(groups)


def builtin_catalog(max_order: int | None = None) -> list[FiniteGroup]:
    """The built-in groups in ascending order, optionally capped by order."""
    return [g for g in _catalog() if max_order is None or g.order <= max_order]


def _canonical_name(name: str) -> str:
    return name.replace("×", "x").replace(" ", "").lower()


def lookup(name: str) -> FiniteGroup:
    key = _canonical_name(name)
    for g in _catalog():
        if _canonical_name(g.name) == key:
            return g
    raise KeyError(f"no catalog group named {name!r}")


def save_group(g: FiniteGroup) -> str:
    lines = [f"order {g.order}"]
    lines += [" ".join(str(x) for x in row) for row in g.table]
    if g.name:
        lines.append(f"name {g.name}")
    if g.pgroup is not None:
        lines.append(f"pgroup {g.pgroup}")
    return "\n".join(lines) + "\n"


def load_group(text: str) -> FiniteGroup:
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise GroupFormatError("empty input")
    head = lines[0].split()
    if len(head) != 2 or head[0] != "order" or not head[1].isdigit():
        raise GroupFormatError(f"expected 'order N' on line 1, got {lines[0]!r}")
    n = int(head[1])
    if len(lines) < n + 1:
        raise GroupFormatError(f"expected {n} table rows, got {len(lines) - 1}")
    rows = []
    for i, ln in enumerate(lines[1:n + 1], start=2):
        try:
            row = [int(x) for x in ln.split()]
        except ValueError:
            raise GroupFormatError(f"line {i}: non-integer entry") from None
        if any(not 0 <= x < n for x in row):
            raise GroupFormatError(f"line {i}: entry out of range 0..{n - 1}")
        rows.append(row)
    name, pgroup = "", None
    for ln in lines[n + 1:]:
        key, _, value = ln.partition(" ")
        if key == "name":
            name = value.strip()
        elif key == "pgroup":
            try:
                pgroup = int(value)
            except ValueError:
                raise GroupFormatError(f"bad pgroup line {ln!r}") from None
        else:
            raise GroupFormatError(f"unexpected line {ln!r}")
    return FiniteGroup(rows, name=name, pgroup=pgroup)
