"""Curves on a surface realizing abstract relators.

Given a relator r = g_j(1)^m(1) ... g_j(s)^m(s) over n abstract
generators, the curve word is assembled syllable by syllable: |m(t)|
blocks of (filler * a_j(t)^sign m(t)), followed by a closing chain of
b-letters.  Filler loops live on the spare handles n+1 .. n+s-1 and die
in every quotient this package takes, so the assembled curve always maps
onto the plain a-letter image of the relator there.  The canonical curve
uses empty fillers; randomized fillers exist to exercise that
independence.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .words import Word, syllable_length


def a_image(r: Word) -> Word:
    """Replace each abstract generator g_j by the handle loop a_j."""
    return Word(r.syllables)


def closing_tail(r: Word) -> Word:
    """The b-chain appended after the syllable blocks of a relator curve.

    With j(1) and j(s) the first and last syllable indices: descending
    inverse chain b_j(s)^-1 ... b_j(1)^-1 when j(1) <= j(s); otherwise the
    ascending pair chain b_(t+1) b_t for t = j(s) .. j(1)-1.  Indices here
    are the abstract ones; :func:`lift_tail` moves them onto a surface.
    """
    if r.is_identity:
        raise ValueError("closing tail of the empty relator is undefined")
    first = r.syllables[0][0]
    last = r.syllables[-1][0]
    if first <= last:
        return Word((t, -1) for t in range(last, first - 1, -1))
    pairs: list[tuple[int, int]] = []
    for t in range(last, first):
        pairs.extend([(t + 1, 1), (t, 1)])
    return Word(pairs)


def lift_tail(r: Word, genus: int) -> Word:
    """closing_tail with abstract index t sent to the surface letter b_t."""
    return Word((genus + t, e) for t, e in closing_tail(r))


@dataclass(frozen=True)
class RelatorCurve:
    relator: Word
    rank: int
    genus: int
    fillers: tuple[Word, ...]
    word: Word

    @property
    def filler_mode_used(self) -> str:
        return "empty" if all(f.is_identity for f in self.fillers) else "custom"


def _filler_boundary(n: int, length: int, genus: int) -> Word:
    """Boundary of the spare-handle subsurface holding the filler loops:
    (a_(n+1) b_(n+1) a_(n+1)^-1) ... b_(n+length-1)^-1 ... b_(n+1)^-1."""
    w = Word()
    for t in range(n + 1, n + length):
        w = w * Word([(t, 1), (genus + t, 1), (t, -1)])
    for t in range(n + length - 1, n, -1):
        w = w * Word([(genus + t, -1)])
    return w


def _random_filler(rng: random.Random, units: list[Word]) -> Word:
    w = Word()
    for _ in range(rng.randint(0, 2)):
        w = w * rng.choice(units)
    return w


def relator_curve(r: Word, rank: int, genus: int,
                  fillers: str = "empty",
                  rng: random.Random | None = None) -> RelatorCurve:
    """Assemble the curve word for one relator on a genus-g surface.

    ``fillers`` is ``"empty"`` (canonical) or ``"random"``; random fillers
    draw short products from the spare-handle letters and the subsurface
    boundary word.  Requires genus >= rank + syllable_length(r) - 1 and a
    relator over the first ``rank`` generators only.
    """
    if r.is_identity:
        raise ValueError("cannot build a curve for the empty relator")
    if r.max_index() > rank:
        raise ValueError(
            f"relator touches generator {r.max_index()} beyond rank {rank}"
        )
    s = syllable_length(r)
    if genus < rank + s - 1:
        raise ValueError(
            f"genus {genus} too small: need at least {rank + s - 1} "
            f"for rank {rank} and syllable length {s}"
        )

    if fillers == "empty":
        chosen: list[Word] = [Word()] * len(r)
    elif fillers == "random":
        rng = rng or random.Random()
        units = []
        for t in range(rank + 1, rank + s):
            units.append(Word([(t, 1)]))
            units.append(Word([(t, -1)]))
            units.append(Word([(genus + t, 1)]))
            units.append(Word([(genus + t, -1)]))
        boundary = _filler_boundary(rank, s, genus)
        if not boundary.is_identity:
            units.append(boundary)
            units.append(~boundary)
        if not units:
            chosen = [Word()] * len(r)
        else:
            chosen = [_random_filler(rng, units) for _ in range(len(r))]
    else:
        raise ValueError(f"unknown filler mode {fillers!r}")

    pieces: list[Word] = []
    block = 0
    for j, m in r.syllables:
        sign = 1 if m > 0 else -1
        for _ in range(abs(m)):
            pieces.append(chosen[block])
            pieces.append(Word([(j, sign)]))
            block += 1
    word = Word()
    for piece in pieces:
        word = word * piece
    word = word * lift_tail(r, genus)
    return RelatorCurve(relator=r, rank=rank, genus=genus,
                        fillers=tuple(chosen), word=word)
