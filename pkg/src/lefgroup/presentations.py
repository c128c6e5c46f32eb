"""Finitely presented groups: text grammar, Tietze moves, abelianization.

The text grammar is ``pres := "<" names "|" relators? ">"`` with
comma-separated generator names and relators written in the word grammar
of :mod:`lefgroup.words`.  The printer is an exact inverse of the parser.
A presentation with no generators prints as ``< | >``.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .snf import smith_normal_form
from .words import (
    Word,
    cyclic_normal_form,
    cyclic_reduce,
    format_word,
    is_valid_name,
    parse_word,
)

DEFAULT_BUDGET = 10_000


@dataclass(frozen=True)
class Presentation:
    generators: tuple[str, ...]
    relators: tuple[Word, ...]

    def __post_init__(self):
        names = self.generators
        if len(set(names)) != len(names):
            raise ValueError("duplicate generator names")
        for name in names:
            if not is_valid_name(name):
                raise ValueError(f"bad generator name {name!r}")
        rank = len(names)
        for r in self.relators:
            if r.max_index() > rank:
                raise ValueError(
                    f"relator {r!r} uses generator index {r.max_index()} "
                    f"but the presentation has rank {rank}"
                )

    @property
    def rank(self) -> int:
        return len(self.generators)

    def relator_texts(self) -> list[str]:
        return [format_word(r, self.generators) for r in self.relators]

    def word(self, text: str) -> Word:
        return parse_word(text, self.generators)


def presentation(gens: str | Sequence[str], *relator_texts: str) -> Presentation:
    """Convenience builder: ``presentation("x,y", "x^2", "x y x^-1 y^-1")``."""
    names = tuple(g.strip() for g in gens.split(",")) if isinstance(gens, str) else tuple(gens)
    names = tuple(n for n in names if n)
    rels = tuple(parse_word(t, names) for t in relator_texts)
    return Presentation(names, rels)


def parse_presentation(text: str) -> Presentation:
    stripped = text.strip()
    if not stripped.startswith("<"):
        raise ValueError(f"expected '<' at position {text.find(text.lstrip()[0]) if text.strip() else 0}")
    if not stripped.endswith(">"):
        raise ValueError(f"expected '>' at position {len(text) - 1}")
    body = stripped[1:-1]
    if "|" not in body:
        raise ValueError(f"expected '|' inside presentation at position {text.find(body) + len(body)}")
    names_part, _, rel_part = body.partition("|")
    names = tuple(n.strip() for n in names_part.split(",") if n.strip())
    for name in names:
        if not is_valid_name(name):
            raise ValueError(f"bad generator name {name!r} at position {text.find(name)}")
    rel_texts = [t.strip() for t in rel_part.split(",") if t.strip()]
    rels = tuple(parse_word(t, names) for t in rel_texts)
    return Presentation(names, rels)


def format_presentation(p: Presentation) -> str:
    names = ", ".join(p.generators)
    rels = ", ".join(p.relator_texts())
    if rels:
        return f"< {names} | {rels} >".replace("<  |", "< |")
    return f"< {names} | >".replace("<  |", "< |")


def same_presentation(p: Presentation, q: Presentation) -> bool:
    """Equality up to free/cyclic reduction, rotation and inversion of relators."""
    if p.generators != q.generators:
        return False
    left = Counter(cyclic_normal_form(r) for r in p.relators if not cyclic_reduce(r).is_identity)
    right = Counter(cyclic_normal_form(r) for r in q.relators if not cyclic_reduce(r).is_identity)
    return left == right


# ---------------------------------------------------------------------------
# abelianization


@dataclass(frozen=True)
class AbelianInvariants:
    """Free rank plus torsion coefficients, each dividing the next."""

    free_rank: int
    torsion: tuple[int, ...]

    def __post_init__(self):
        for a, b in zip(self.torsion, self.torsion[1:]):
            if b % a != 0:
                raise ValueError(f"torsion {self.torsion} violates divisibility")
        if any(t < 2 for t in self.torsion):
            raise ValueError("torsion coefficients must be >= 2")

    def __str__(self) -> str:
        parts = []
        if self.free_rank == 1:
            parts.append("Z")
        elif self.free_rank > 1:
            parts.append(f"Z^{self.free_rank}")
        parts.extend(f"Z_{t}" for t in self.torsion)
        return " + ".join(parts) if parts else "0"


def abelianization(p: Presentation) -> AbelianInvariants:
    """Invariant factors of the relator exponent matrix."""
    n = p.rank
    matrix = []
    for r in p.relators:
        row = [0] * n
        for g, e in r:
            row[g - 1] += e
        matrix.append(row)
    if not matrix:
        return AbelianInvariants(n, ())
    diag = smith_normal_form(matrix).diagonal
    nonzero = [d for d in diag if d != 0]
    return AbelianInvariants(n - len(nonzero), tuple(d for d in nonzero if d >= 2))


def generator_lower_bound(p: Presentation) -> int:
    """Minimal generator count of the abelianization, a lower bound for the group."""
    inv = abelianization(p)
    return inv.free_rank + len(inv.torsion)


# ---------------------------------------------------------------------------
# Tietze simplification


@dataclass
class TietzeResult:
    presentation: Presentation
    original_generators: tuple[str, ...]
    images: dict[str, Word] = field(default_factory=dict)
    passes: int = 0
    budget_exhausted: bool = False

    def image_of(self, w: Word) -> Word:
        """Push a word over the original generators into the simplified ones."""
        from .words import substitute

        table = {
            i + 1: self.images[name] for i, name in enumerate(self.original_generators)
        }
        return substitute(w, table)


def _normalize(rels: list[Word]) -> tuple[list[Word], bool]:
    changed = False
    out: list[Word] = []
    seen: set[tuple[int, ...]] = set()
    for r in rels:
        c = cyclic_reduce(r)
        if c != r:
            changed = True
        if c.is_identity:
            changed = True
            continue
        key = cyclic_normal_form(c)
        if key in seen:
            changed = True
            continue
        seen.add(key)
        out.append(c)
    return out, changed


def _find_pinned(rels: list[Word]) -> tuple[int, int] | None:
    """Best (relator index, generator) where the relator pins the generator.

    A relator pins a generator when that generator occurs in exactly one
    syllable, with exponent +-1; the relator then rewrites it as a word in
    the remaining generators.  Shorter relators are preferred, and on ties
    the highest-index generator is eliminated so that low-index generators
    survive.
    """
    best: tuple[int, int, int, int] | None = None  # (len, -gen, rel_idx, gen)
    for ri, r in enumerate(rels):
        counts: Counter[int] = Counter(g for g, _ in r)
        for g, e in r:
            if counts[g] == 1 and abs(e) == 1:
                key = (len(r), -g, ri, g)
                if best is None or key < best:
                    best = key
    if best is None:
        return None
    return best[2], best[3]


def _eliminate(gens: list[str], rels: list[Word], images: dict[str, Word],
               ri: int, gen: int) -> None:
    r = rels[ri]
    pos = next(i for i, (g, _) in enumerate(r.syllables) if g == gen)
    rotated = r.syllables[pos:] + r.syllables[:pos]
    exp = rotated[0][1]
    rest = Word(rotated[1:])
    replacement = ~rest if exp == 1 else rest

    def lower(w: Word) -> Word:
        return Word((g if g < gen else g - 1, e) for g, e in w)

    table = {
        h: Word.generator(h if h < gen else h - 1)
        for h in range(1, len(gens) + 1)
        if h != gen
    }
    table[gen] = lower(replacement)

    from .words import substitute

    del rels[ri]
    for i, w in enumerate(rels):
        rels[i] = substitute(w, table)
    for name in images:
        images[name] = substitute(images[name], table)
    gens.pop(gen - 1)


def _rewrite_pass(rels: list[Word]) -> bool:
    """Shorten one relator using a cyclic piece of another, if possible.

    Replacing more than half of a relator s inside a relator t multiplies t
    by a conjugate of a rotation of s, so the normal closure is unchanged
    while t gets strictly shorter.
    """
    order = sorted(range(len(rels)), key=lambda i: -len(rels[i]))
    for ti in order:
        t_letters = rels[ti].letters()
        if not t_letters:
            continue
        doubled = t_letters + t_letters
        for si, s in enumerate(rels):
            if si == ti or len(s) > len(rels[ti]) or s.is_identity:
                continue
            s_letters = s.letters()
            n = len(s_letters)
            variants = [s_letters, [-x for x in reversed(s_letters)]]
            for var in variants:
                var2 = var + var
                for rot in range(n):
                    rotation = var2[rot:rot + n]
                    for ulen in range(n, n // 2, -1):
                        piece = rotation[:ulen]
                        hit = _find_subsequence(doubled, piece, len(t_letters))
                        if hit is None:
                            continue
                        tail = rotation[ulen:]
                        rest = doubled[hit + ulen:hit + len(t_letters)]
                        new = Word.from_letters([-x for x in reversed(tail)] + rest)
                        new = cyclic_reduce(new)
                        if len(new) < len(rels[ti]):
                            rels[ti] = new
                            return True
    return False


def _find_subsequence(haystack: list[int], needle: list[int], starts: int) -> int | None:
    n = len(needle)
    for i in range(starts):
        if haystack[i:i + n] == needle:
            return i
    return None


def tietze_simplify(p: Presentation, budget: int = DEFAULT_BUDGET,
                    rewrite: bool = True) -> TietzeResult:
    """Simplify a presentation without changing the group it defines.

    Applies, until a fixed point or the pass budget runs out: removal of
    identity relators, removal of relators that duplicate another up to
    rotation or inversion, elimination of pinned generators, and (when
    ``rewrite`` is set) shortening of a relator by another one.
    """
    if budget < 1:
        raise ValueError("budget must be positive")
    gens = list(p.generators)
    rels = list(p.relators)
    images = {name: Word.generator(i + 1) for i, name in enumerate(p.generators)}

    passes = 0
    exhausted = False
    while True:
        if passes >= budget:
            exhausted = True
            break
        passes += 1
        rels, _ = _normalize(rels)
        found = _find_pinned(rels)
        if found is not None:
            _eliminate(gens, rels, images, *found)
            continue
        if rewrite and _rewrite_pass(rels):
            continue
        break

    rels, _ = _normalize(rels)
    simplified = Presentation(tuple(gens), tuple(rels))
    return TietzeResult(
        presentation=simplified,
        original_generators=p.generators,
        images=images,
        passes=passes,
        budget_exhausted=exhausted,
    )
