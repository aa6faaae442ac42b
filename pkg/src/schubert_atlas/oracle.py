"""Independent brute-force checkers used as ground truth in tests, plus
desk-scale scanners for three reduced-word conjectures.

Everything here recomputes from raw definitions: lengths are inversion
counts of freshly multiplied matrices, cover membership is a literal
length-drop test, and reduced words are enumerated rather than reasoned
about.  Slow on purpose.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, FrozenSet, List, Optional, Set, Tuple

from .errors import NotSimplyLacedError
from .rootdata import CorootVec, RootDatum
from .schubert import SchubertInput, _canonical_sorted, _indecomposables
from .weyl import (
    DEFAULT_WORD_CAP,
    WeylElement,
    canonical_reduced_word,
    inversion_sequence,
    is_min_coset_rep,
    iter_reduced_words,
    multiply,
    reflection_element,
    rightmost_distance,
    support,
)

Word = Tuple[int, ...]


def _length_drop_pairs(
    datum: RootDatum, w: WeylElement
) -> Tuple[Tuple[CorootVec, WeylElement, int], ...]:
    """(eta, w*s_eta, length drop) for every inversion coroot of w."""
    cache = datum._cache.setdefault("length_drops", {})
    hit = cache.get(w.matrix)
    if hit is not None:
        return hit
    out = []
    for eta in inversion_sequence(datum, canonical_reduced_word(w)):
        refl = reflection_element(datum, eta)
        u = multiply(w, refl)
        out.append((eta, u, w.length - u.length))
    result = tuple(out)
    cache[w.matrix] = result
    return result


def cover_coroots_direct(inp: SchubertInput) -> FrozenSet[CorootVec]:
    """R+_{w,P} straight from the definition: eta counts iff the reflection
    drops the length by exactly one and lands back in W^P.  No
    indecomposability logic anywhere."""
    out = set()
    for eta, u, drop in _length_drop_pairs(inp.datum, inp.w):
        if drop == 1 and is_min_coset_rep(u, inp.parabolic):
            out.add(eta)
    return frozenset(out)


@dataclass(frozen=True)
class ConjectureFragment:
    """Per-element result of one conjecture scan.

    ``verified`` means every target was confirmed within the scanned words;
    a truncated scan with leftovers is inconclusive, never a counterexample.
    """

    word: Word
    verified: bool
    counterexamples: Tuple[object, ...]
    manual_review: Tuple[object, ...] = ()
    truncated: bool = False
    words_scanned: int = 0


@dataclass(frozen=True)
class ConjectureReport:
    """Aggregated scan over a group: counterexamples empty and truncated
    False means the conjecture holds on the scanned scope."""

    conjecture: int
    cartan_type: str
    length_cap: Optional[int]
    word_cap: int
    elements_scanned: int
    verified_count: int
    counterexamples: Tuple[object, ...]
    manual_review: Tuple[object, ...] = ()
    truncated: bool = False


def check_order_reversal(
    w: WeylElement, cap: int = DEFAULT_WORD_CAP
) -> ConjectureFragment:
    """Conjecture 1: every decomposable inversion coroot admits *some*
    decomposition whose summands appear in both orders across two reduced
    words (not necessarily every decomposition).  Simply-laced only."""
    datum = w.datum
    if not datum.simply_laced:
        raise NotSimplyLacedError("order-reversal scan needs a simply-laced type")
    canon = canonical_reduced_word(w)
    inv = inversion_sequence(datum, canon)
    elements = _canonical_sorted(datum, inv)
    members = set(elements)
    decompositions: Dict[CorootVec, List[Tuple[CorootVec, CorootVec]]] = {}
    for a in range(len(elements)):
        for b in range(a + 1, len(elements)):
            s = tuple(x + y for x, y in zip(elements[a], elements[b]))
            if s in members:
                decompositions.setdefault(s, []).append((elements[a], elements[b]))
    if not decompositions:
        return ConjectureFragment(word=canon, verified=True, counterexamples=())
    orders_seen: Dict[Tuple[CorootVec, CorootVec], Set[bool]] = {}
    unresolved = set(decompositions)
    scanned = 0
    truncated = False
    for word in iter_reduced_words(w):
        if scanned >= cap:
            truncated = True
            break
        scanned += 1
        seq = inversion_sequence(datum, word)
        pos = {c: i for i, c in enumerate(seq)}
        for eta in list(unresolved):
            for pair in decompositions[eta]:
                orders = orders_seen.setdefault(pair, set())
                orders.add(pos[pair[0]] < pos[pair[1]])
                if len(orders) == 2:
                    unresolved.discard(eta)
                    break
        if not unresolved:
            break
    return ConjectureFragment(
        word=canon,
        verified=not unresolved,
        counterexamples=tuple(sorted(unresolved)) if not truncated else (),
        truncated=truncated and bool(unresolved),
        words_scanned=scanned,
    )


def check_coxeter_deletion(
    w: WeylElement, cap: int = DEFAULT_WORD_CAP
) -> ConjectureFragment:
    """Conjecture 2: every reflection dropping the length by more than one is
    realized by deleting a letter that sits between equal neighbours in some
    reduced word.

    Elements with a target whose deletable letter never appears strictly
    inside any reduced word are recorded for manual review rather than as
    counterexamples.
    """
    datum = w.datum
    canon = canonical_reduced_word(w)
    targets = {eta for eta, _, drop in _length_drop_pairs(datum, w) if drop > 1}
    if not targets:
        return ConjectureFragment(word=canon, verified=True, counterexamples=())
    unresolved = set(targets)
    interior_seen = {eta: False for eta in targets}
    scanned = 0
    truncated = False
    for word in iter_reduced_words(w):
        if scanned >= cap:
            truncated = True
            break
        scanned += 1
        seq = inversion_sequence(datum, word)
        r = len(word)
        # the letter at 1-based position l realizes the coroot seq[r - l]
        for l in range(2, r):
            eta = seq[r - l]
            if eta in targets:
                interior_seen[eta] = True
                if word[l - 2] == word[l]:
                    unresolved.discard(eta)
        if not unresolved:
            break
    manual: Tuple[object, ...] = ()
    counter: Tuple[object, ...] = ()
    if unresolved and not truncated:
        manual = tuple(sorted(e for e in unresolved if not interior_seen[e]))
        counter = tuple(sorted(e for e in unresolved if interior_seen[e]))
    return ConjectureFragment(
        word=canon,
        verified=not unresolved,
        counterexamples=counter,
        manual_review=manual,
        truncated=truncated and bool(unresolved),
        words_scanned=scanned,
    )


def check_rightmost_indecomposable(
    w: WeylElement, cap: int = DEFAULT_WORD_CAP
) -> ConjectureFragment:
    """Conjecture 3: for every support letter k and *every* reduced word
    realizing the minimal rightmost distance, the suffix-transported coroot
    is indecomposable.  Simply-laced only."""
    datum = w.datum
    if not datum.simply_laced:
        raise NotSimplyLacedError("rightmost scan needs a simply-laced type")
    canon = canonical_reduced_word(w)
    if w.is_identity:
        return ConjectureFragment(word=canon, verified=True, counterexamples=())
    inv = inversion_sequence(datum, canon)
    indecomposable = set(_indecomposables(datum, inv))
    distances = {k: rightmost_distance(w, k)[0] for k in support(w)}
    counter: List[object] = []
    scanned = 0
    truncated = False
    for word in iter_reduced_words(w):
        if scanned >= cap:
            truncated = True
            break
        scanned += 1
        seq = inversion_sequence(datum, word)
        r = len(word)
        rightmost: Dict[int, int] = {}
        for pos in range(r - 1, -1, -1):
            if word[pos] not in rightmost:
                rightmost[word[pos]] = r - pos
        for k, d in distances.items():
            if rightmost.get(k) == d and seq[d - 1] not in indecomposable:
                counter.append((k, word, seq[d - 1]))
    return ConjectureFragment(
        word=canon,
        verified=not counter and not truncated,
        counterexamples=tuple(counter),
        truncated=truncated,
        words_scanned=scanned,
    )
