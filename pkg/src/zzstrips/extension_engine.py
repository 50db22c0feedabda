"""Linear extensions of a labeled poset and their descent/fixed statistics.

A linear extension is stored as a word of labels w_1 .. w_p. Position i
is a descent when w_i > w_{i+1}. A label is fixed when it is adjacent to
a descent, or when the largest position of a preceding larger label
beats the largest position of a label that is forced below it in the
poset (max over the empty forced set counting as 0).
"""

from __future__ import annotations

from dataclasses import dataclass

from .dib_poset import DibPoset, NaturalLabeling

Word = tuple[int, ...]


@dataclass(frozen=True)
class LinearExtensionRecord:
    word: Word
    descents: frozenset[int]
    fixed: frozenset[int]

    @property
    def des(self) -> int:
        return len(self.descents)

    @property
    def fix(self) -> int:
        return len(self.fixed)


def linear_extensions(poset: DibPoset, labeling: NaturalLabeling) -> list[Word]:
    """All extensions as label words, in lexicographic order.

    Backtracks over the currently-minimal elements, always trying the
    smallest available label first; the empty poset yields one empty
    word.
    """
    if labeling.poset is not poset and labeling.poset != poset:
        raise ValueError("labeling does not belong to this poset")
    p = poset.p
    succs: dict[int, list[int]] = {lbl: [] for lbl in range(1, p + 1)}
    pending = {lbl: 0 for lbl in range(1, p + 1)}
    for a, b in poset.covers:
        succs[labeling.label_of(a)].append(labeling.label_of(b))
        pending[labeling.label_of(b)] += 1

    words: list[Word] = []
    word: list[int] = []
    available = sorted(lbl for lbl in pending if pending[lbl] == 0)

    def extend() -> None:
        if len(word) == p:
            words.append(tuple(word))
            return
        for lbl in list(available):
            available.remove(lbl)
            word.append(lbl)
            released = []
            for nxt in succs[lbl]:
                pending[nxt] -= 1
                if pending[nxt] == 0:
                    released.append(nxt)
            for nxt in released:
                available.append(nxt)
            available.sort()
            extend()
            for nxt in released:
                available.remove(nxt)
            for nxt in succs[lbl]:
                pending[nxt] += 1
            word.pop()
            available.append(lbl)
            available.sort()

    extend()
    return words


def descent_stats(word: Word) -> tuple[frozenset[int], int]:
    """Descent positions (1-based) and their count."""
    descents = frozenset(
        i for i in range(1, len(word)) if word[i - 1] > word[i]
    )
    return descents, len(descents)


def _check_extension(word: Word, poset: DibPoset, labeling: NaturalLabeling) -> dict[int, int]:
    if sorted(word) != list(range(1, poset.p + 1)):
        raise ValueError(f"word {word} is not a permutation of 1..{poset.p}")
    position = {lbl: i for i, lbl in enumerate(word, start=1)}
    for a, b in poset.covers:
        if position[labeling.label_of(a)] > position[labeling.label_of(b)]:
            raise ValueError(f"word {word} violates {a} < {b}")
    return position


def fixed_labels(
    word: Word, poset: DibPoset, labeling: NaturalLabeling
) -> tuple[frozenset[int], int]:
    """Fixed labels of an extension word, and their count."""
    position = _check_extension(word, poset, labeling)
    descents, _ = descent_stats(word)
    fixed = set()
    for i, label in enumerate(word, start=1):
        if i - 1 in descents or i in descents:
            fixed.add(label)
            continue
        preceding_larger = [l for l in range(1, i) if word[l - 1] > label]
        if not preceding_larger:
            continue
        element = labeling.element_of(label)
        forced_below = [position[labeling.label_of(e)] for e in poset.below(element)]
        if max(preceding_larger) > max(forced_below, default=0):
            fixed.add(label)
    return frozenset(fixed), len(fixed)


def extension_records(
    poset: DibPoset, labeling: NaturalLabeling
) -> list[LinearExtensionRecord]:
    records = []
    for word in linear_extensions(poset, labeling):
        descents, _ = descent_stats(word)
        fixed, _ = fixed_labels(word, poset, labeling)
        records.append(LinearExtensionRecord(word, descents, fixed))
    return records
