"""Invariant vectors: the package's honest substitute for isomorphism tests.

A vector bundles the abelianization, homomorphism counts into a battery
of finite groups, and the coset-enumeration verdict.  Two presentations
with different vectors present non-isomorphic groups; equal vectors mean
"indistinguishable by this battery", never more.
"""

from __future__ import annotations

from dataclasses import dataclass

from .coset_enum import coset_enumerate
from .finite_groups import (
    FiniteGroupTable,
    HomCountCapExceeded,
    default_battery,
    hom_count,
)
from .presentations import AbelianInvariants, Presentation, abelianization

BATTERY_MAX_COSETS = 5_000


@dataclass(frozen=True)
class InvariantVector:
    abelian: AbelianInvariants
    hom_counts: tuple[tuple[str, int | None], ...]
    coset_order: int | None

    def to_dict(self) -> dict:
        return {
            "abelianization": {
                "free_rank": self.abelian.free_rank,
                "torsion": list(self.abelian.torsion),
            },
            "hom_counts": {
                name: ("skipped" if count is None else count)
                for name, count in self.hom_counts
            },
            "coset_order": "inconclusive" if self.coset_order is None else self.coset_order,
        }


def invariant_vector(p: Presentation,
                     battery: list[FiniteGroupTable] | None = None,
                     max_cosets: int = BATTERY_MAX_COSETS) -> InvariantVector:
    """Compute the vector; oversized hom counts are recorded as skipped."""
    if battery is None:
        battery = default_battery()
    counts = []
    for table in battery:
        try:
            counts.append((table.name, hom_count(p, table)))
        except HomCountCapExceeded:
            counts.append((table.name, None))
    enumeration = coset_enumerate(p, max_cosets=max_cosets)
    return InvariantVector(
        abelian=abelianization(p),
        hom_counts=tuple(counts),
        coset_order=enumeration.order if enumeration.conclusive else None,
    )


def parse_battery(text: str) -> list[FiniteGroupTable]:
    """CLI battery syntax: comma-separated tokens like ``s3``, ``z4``, or
    the range form ``z2..z6``."""
    from .finite_groups import cyclic_group_table, symmetric_group_table

    tables: list[FiniteGroupTable] = []
    for token in text.split(","):
        token = token.strip().lower()
        if not token:
            continue
        if ".." in token:
            start, _, end = token.partition("..")
            if not (start.startswith("z") and end.startswith("z")):
                raise ValueError(f"bad battery range {token!r}")
            for n in range(int(start[1:]), int(end[1:]) + 1):
                tables.append(cyclic_group_table(n))
        elif token.startswith("s"):
            tables.append(symmetric_group_table(int(token[1:])))
        elif token.startswith("z"):
            tables.append(cyclic_group_table(int(token[1:])))
        else:
            raise ValueError(f"bad battery token {token!r}")
    return tables
