"""Todd-Coxeter coset enumeration over the trivial subgroup.

HLT strategy: scan every relator at every live coset, defining new cosets
to fill gaps, then fill remaining table entries.  Coincidences are merged
through a union-find with a processing queue.  The scan order is fixed, so
results are deterministic.  If the table closes the group order is the
number of live cosets; if the coset limit is hit first the enumeration is
inconclusive (the group may still be finite or infinite).
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .presentations import Presentation
from .words import cyclic_reduce

DEFAULT_MAX_COSETS = 100_000


@dataclass(frozen=True)
class CosetEnumeration:
    order: int | None
    conclusive: bool
    cosets_defined: int

    def __str__(self) -> str:
        if self.conclusive:
            return f"order {self.order} ({self.cosets_defined} cosets defined)"
        return f"inconclusive after {self.cosets_defined} cosets"


class _Limit(Exception):
    pass


def _relator_columns(p: Presentation) -> list[list[int]]:
    cols = []
    for r in p.relators:
        r = cyclic_reduce(r)
        word = []
        for g, e in r:
            col = 2 * (g - 1) if e > 0 else 2 * (g - 1) + 1
            word.extend([col] * abs(e))
        if word:
            cols.append(word)
    return cols


def coset_enumerate(p: Presentation, max_cosets: int = DEFAULT_MAX_COSETS) -> CosetEnumeration:
    """Enumerate cosets of the trivial subgroup; order of the group if it closes."""
    if max_cosets < 1:
        raise ValueError("max_cosets must be >= 1")
    n = p.rank
    if n == 0:
        return CosetEnumeration(order=1, conclusive=True, cosets_defined=1)

    ncols = 2 * n
    relators = _relator_columns(p)
    table: list[list[int | None]] = [[None] * ncols]
    parent = [0]
    live = 1
    merged: deque[int] = deque()

    def rep(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def define(alpha: int, col: int) -> int:
        nonlocal live
        if live >= max_cosets:
            raise _Limit
        beta = len(table)
        table.append([None] * ncols)
        parent.append(beta)
        live += 1
        table[alpha][col] = beta
        table[beta][col ^ 1] = alpha
        return beta

    def merge(a: int, b: int) -> None:
        nonlocal live
        a, b = rep(a), rep(b)
        if a == b:
            return
        a, b = min(a, b), max(a, b)
        parent[b] = a
        live -= 1
        merged.append(b)

    def process_coincidences() -> None:
        while merged:
            gamma = merged.popleft()
            row = table[gamma]
            for col in range(ncols):
                delta = row[col]
                if delta is None:
                    continue
                row[col] = None
                if table[delta][col ^ 1] == gamma:
                    table[delta][col ^ 1] = None
                mu, nu = rep(gamma), rep(delta)
                if table[mu][col] is not None:
                    merge(nu, table[mu][col])
                elif table[nu][col ^ 1] is not None:
                    merge(mu, table[nu][col ^ 1])
                else:
                    table[mu][col] = nu
                    table[nu][col ^ 1] = mu

    def scan_and_fill(alpha: int, word: list[int]) -> None:
        # entries can point at merged-away cosets, so chase representatives
        f, i = alpha, 0
        b, j = alpha, len(word) - 1
        while True:
            while i <= j and table[f][word[i]] is not None:
                f = rep(table[f][word[i]])
                i += 1
            if i > j:
                if f != b:
                    merge(f, b)
                    process_coincidences()
                return
            while j >= i and table[b][word[j] ^ 1] is not None:
                b = rep(table[b][word[j] ^ 1])
                j -= 1
            if j < i:
                merge(f, b)
                process_coincidences()
                return
            if i == j:
                table[f][word[i]] = b
                table[b][word[i] ^ 1] = f
                return
            define(f, word[i])

    try:
        alpha = 0
        while alpha < len(table):
            if rep(alpha) != alpha:
                alpha += 1
                continue
            for word in relators:
                scan_and_fill(alpha, word)
                if rep(alpha) != alpha:
                    break
            if rep(alpha) == alpha:
                for col in range(ncols):
                    if table[alpha][col] is None:
                        define(alpha, col)
            alpha += 1
    except _Limit:
        return CosetEnumeration(order=None, conclusive=False, cosets_defined=len(table))

    return CosetEnumeration(order=live, conclusive=True, cosets_defined=len(table))
