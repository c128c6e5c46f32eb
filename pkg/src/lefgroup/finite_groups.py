"""Finite groups as verified multiplication tables, and homomorphism counting.

Homomorphism counts into a battery of small groups separate all the
presentations handled at desk scale, without ever claiming isomorphism.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .presentations import Presentation
from .words import Word

DEFAULT_HOM_CAP = 1_000_000


class HomCountCapExceeded(RuntimeError):
    """Raised instead of silently truncating an oversized search space."""


@dataclass(frozen=True)
class FiniteGroupTable:
    name: str
    table: tuple[tuple[int, ...], ...]
    identity: int = 0
    _inverse: tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        n = len(self.table)
        if any(len(row) != n for row in self.table):
            raise ValueError("multiplication table must be square")
        e = self.identity
        for a in range(n):
            if self.table[e][a] != a or self.table[a][e] != a:
                raise ValueError(f"{self.name}: identity axiom fails at {a}")
        inverse = [-1] * n
        for a in range(n):
            for b in range(n):
                if self.table[a][b] == e and self.table[b][a] == e:
                    inverse[a] = b
                    break
            if inverse[a] < 0:
                raise ValueError(f"{self.name}: element {a} has no inverse")
        for a in range(n):
            for b in range(n):
                ab = self.table[a][b]
                for c in range(n):
                    if self.table[ab][c] != self.table[a][self.table[b][c]]:
                        raise ValueError(f"{self.name}: associativity fails at {(a, b, c)}")
        object.__setattr__(self, "_inverse", tuple(inverse))

    @property
    def order(self) -> int:
        return len(self.table)

    def multiply(self, a: int, b: int) -> int:
        return self.table[a][b]

    def inverse(self, a: int) -> int:
        return self._inverse[a]

    def power(self, a: int, k: int) -> int:
        if k < 0:
            a, k = self._inverse[a], -k
        out = self.identity
        while k:
            if k & 1:
                out = self.table[out][a]
            a = self.table[a][a]
            k >>= 1
        return out


def cyclic_group_table(n: int) -> FiniteGroupTable:
    table = tuple(tuple((i + j) % n for j in range(n)) for i in range(n))
    return FiniteGroupTable(f"Z{n}", table)


def symmetric_group_table(n: int) -> FiniteGroupTable:
    """S_n on the permutations of range(n) in lexicographic order."""
    perms = list(itertools.permutations(range(n)))
    index = {p: i for i, p in enumerate(perms)}
    # product = apply right permutation first, then the left one
    table = tuple(
        tuple(index[tuple(p[q[i]] for i in range(n))] for q in perms) for p in perms
    )
    return FiniteGroupTable(f"S{n}", table)


def dihedral_group_table(n: int) -> FiniteGroupTable:
    """Dihedral group of order 2n; element 2k is rotation k, 2k+1 a reflection."""
    def mul(a, b):
        ra, fa = divmod(a, 2)[0], a % 2
        rb, fb = divmod(b, 2)[0], b % 2
        if fa == 0:
            return 2 * ((ra + rb) % n) + fb
        return 2 * ((ra - rb) % n) + (1 - fb)

    size = 2 * n
    table = tuple(tuple(mul(a, b) for b in range(size)) for a in range(size))
    return FiniteGroupTable(f"D{n}", table)


def _relator_support(rels: list[Word]) -> list[set[int]]:
    return [set(g for g, _ in r) for r in rels]


def hom_count(p: Presentation, group: FiniteGroupTable,
              cap: int = DEFAULT_HOM_CAP) -> int:
    """Number of homomorphisms from the presented group into ``group``.

    Brute force over generator assignments; refuses outright when
    ``order ** rank`` exceeds ``cap``.  Generators that share no relator
    are counted independently, which does not change the result.
    """
    n = p.rank
    if group.order ** n > cap:
        raise HomCountCapExceeded(
            f"{group.order}^{n} assignments exceed the cap of {cap}"
        )
    if n == 0:
        return 1

    rels = [r for r in p.relators if not r.is_identity]
    support = _relator_support(rels)

    # connected components of generators linked through common relators
    parent = list(range(n + 1))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for s in support:
        s = sorted(s)
        for a, b in zip(s, s[1:]):
            parent[find(a)] = find(b)

    components: dict[int, list[int]] = {}
    for g in range(1, n + 1):
        components.setdefault(find(g), []).append(g)

    total = 1
    for gens in components.values():
        rel_here = [r for r, s in zip(rels, support) if s and s.issubset(set(gens))]
        total *= _count_component(gens, rel_here, group)
    return total


def _count_component(gens: list[int], rels: list[Word],
                     group: FiniteGroupTable) -> int:
    k = len(gens)
    if not rels:
        return group.order ** k
    pos = {g: i for i, g in enumerate(gens)}
    compiled = [[(pos[g], e) for g, e in r] for r in rels]
    # check each relator as soon as all its generators are assigned
    by_depth: list[list[list[tuple[int, int]]]] = [[] for _ in range(k)]
    for c in compiled:
        by_depth[max(i for i, _ in c)].append(c)

    table = group.table
    identity = group.identity
    power = group.power
    count = 0
    assignment = [0] * k

    def recurse(depth: int) -> None:
        nonlocal count
        if depth == k:
            count += 1
            return
        for val in range(group.order):
            assignment[depth] = val
            ok = True
            for rel in by_depth[depth]:
                acc = identity
                for i, e in rel:
                    acc = table[acc][power(assignment[i], e)]
                if acc != identity:
                    ok = False
                    break
            if ok:
                recurse(depth + 1)

    recurse(0)
    return count


def default_battery() -> list[FiniteGroupTable]:
    """S3, S4 and the cyclic groups Z2 through Z6."""
    return [symmetric_group_table(3), symmetric_group_table(4)] + [
        cyclic_group_table(n) for n in range(2, 7)
    ]
