"""Weyl group elements and word combinatorics.

Elements are invertible integer matrices acting on the coroot lattice in the
simple-coroot basis; the matrix is the canonical equality/hash key.  Words
are applied left to right: ``element_from_word(d, (i1, ..., ir))`` acts as
``s_{i1} o ... o s_{ir}``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, FrozenSet, Iterator, List, Optional, Sequence, Tuple

from .errors import (
    DimensionMismatchError,
    IndexOutOfRangeError,
    NonReducedWordError,
    NotInSupportError,
)
from .exactlinalg import invert_unimodular
from .rootdata import CorootVec, RootDatum, require_positive_coroot

Word = Tuple[int, ...]
Matrix = Tuple[Tuple[int, ...], ...]

DEFAULT_WORD_CAP = 10**6


@dataclass(frozen=True)
class ParabolicSubset:
    """The subset I_P of simple indices generating the parabolic.

    The empty set encodes P = B; the full set encodes P = G (whose only
    minimal coset representative is the identity).
    """

    rank: int
    inside: FrozenSet[int]

    def __post_init__(self) -> None:
        bad = [j for j in self.inside if not 1 <= j <= self.rank]
        if bad:
            raise IndexOutOfRangeError(f"parabolic indices {bad} outside 1..{self.rank}")
        object.__setattr__(self, "inside", frozenset(self.inside))

    @property
    def complement(self) -> Tuple[int, ...]:
        """I^P, the simple indices outside the parabolic, ascending."""
        return tuple(j for j in range(1, self.rank + 1) if j not in self.inside)

    @property
    def inside_sorted(self) -> Tuple[int, ...]:
        return tuple(sorted(self.inside))


def parabolic(datum: RootDatum, indices: Sequence[int]) -> ParabolicSubset:
    return ParabolicSubset(rank=datum.rank, inside=frozenset(indices))


class WeylElement:
    """A Weyl group element with its action matrix and cached length."""

    __slots__ = ("datum", "matrix", "length")

    def __init__(self, datum: RootDatum, matrix: Matrix, length: int):
        self.datum = datum
        self.matrix = matrix
        self.length = length

    def __eq__(self, other: object) -> bool:
        return isinstance(other, WeylElement) and self.matrix == other.matrix

    def __hash__(self) -> int:
        return hash(self.matrix)

    def __repr__(self) -> str:
        word = " ".join(map(str, canonical_reduced_word(self)))
        return f"WeylElement({self.datum.cartan_type}, [{word}])"

    @property
    def is_identity(self) -> bool:
        return self.length == 0


def _identity_matrix(n: int) -> Matrix:
    return tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))


def identity_element(datum: RootDatum) -> WeylElement:
    return WeylElement(datum, _identity_matrix(datum.rank), 0)


def _vec_is_negative(v: Sequence[int]) -> bool:
    # valid for vectors that are +-(positive coroot): sign of first nonzero
    for x in v:
        if x:
            return x < 0
    return False


def _apply(matrix: Matrix, v: Sequence[int]) -> CorootVec:
    n = len(v)
    return tuple(sum(row[j] * v[j] for j in range(n) if v[j]) for row in matrix)


def _count_inversions(datum: RootDatum, matrix: Matrix) -> int:
    count = 0
    for c in datum.positive_coroots:
        if _vec_is_negative(_apply(matrix, c)):
            count += 1
    return count


def _mul_simple_right(datum: RootDatum, matrix: Matrix, i: int) -> Matrix:
    # matrix . S_i in O(n^2): new_row[b] = row[b] - C[b][i] * row[i]
    cartan = datum.cartan
    i0 = i - 1
    n = datum.rank
    return tuple(
        tuple(row[b] - cartan[b][i0] * row[i0] for b in range(n)) for row in matrix
    )


def _mul_simple_left(datum: RootDatum, matrix: Matrix, i: int) -> Matrix:
    # S_i . matrix: only row i changes
    cartan = datum.cartan
    i0 = i - 1
    n = datum.rank
    new_row = tuple(
        matrix[i0][b] - sum(cartan[a][i0] * matrix[a][b] for a in range(n))
        for b in range(n)
    )
    rows = list(matrix)
    rows[i0] = new_row
    return tuple(rows)


def _check_index(datum: RootDatum, i: int) -> None:
    if not 1 <= i <= datum.rank:
        raise IndexOutOfRangeError(f"simple index {i} outside 1..{datum.rank}")


def element_from_word(datum: RootDatum, word: Sequence[int]) -> WeylElement:
    """Product of simple reflections, applied left to right.

    The word need not be reduced; the cached length comes from inversion
    counting and may be smaller than ``len(word)``.
    """
    matrix = _identity_matrix(datum.rank)
    for i in word:
        _check_index(datum, i)
        matrix = _mul_simple_right(datum, matrix, i)
    return WeylElement(datum, matrix, _count_inversions(datum, matrix))


def act_on_coroot(w: WeylElement, c: Sequence[int]) -> CorootVec:
    if len(c) != w.datum.rank:
        raise DimensionMismatchError(
            f"coroot of length {len(c)} in rank {w.datum.rank}"
        )
    return _apply(w.matrix, c)


def multiply(a: WeylElement, b: WeylElement) -> WeylElement:
    n = a.datum.rank
    bm = b.matrix
    matrix = tuple(
        tuple(sum(row[k] * bm[k][j] for k in range(n)) for j in range(n))
        for row in a.matrix
    )
    return WeylElement(a.datum, matrix, _count_inversions(a.datum, matrix))


def inverse(w: WeylElement) -> WeylElement:
    return WeylElement(w.datum, invert_unimodular(w.matrix), w.length)


def image_of_simple_coroot(w: WeylElement, i: int) -> CorootVec:
    """w(alpha_i^vee), read off as column i of the matrix."""
    i0 = i - 1
    return tuple(row[i0] for row in w.matrix)


def has_right_descent(w: WeylElement, i: int) -> bool:
    return _vec_is_negative(image_of_simple_coroot(w, i))


def right_descents(w: WeylElement) -> Tuple[int, ...]:
    return tuple(i for i in range(1, w.datum.rank + 1) if has_right_descent(w, i))


def right_mul_simple(w: WeylElement, i: int) -> WeylElement:
    _check_index(w.datum, i)
    delta = -1 if has_right_descent(w, i) else 1
    matrix = _mul_simple_right(w.datum, w.matrix, i)
    return WeylElement(w.datum, matrix, w.length + delta)


def left_mul_simple(w: WeylElement, i: int) -> WeylElement:
    _check_index(w.datum, i)
    matrix = _mul_simple_left(w.datum, w.matrix, i)
    return WeylElement(w.datum, matrix, _count_inversions(w.datum, matrix))


def canonical_reduced_word(w: WeylElement) -> Word:
    """Deterministic reduced word: repeatedly peel the smallest left descent."""
    cache = w.datum._cache.setdefault("canonical_word", {})
    hit = cache.get(w.matrix)
    if hit is not None:
        return hit
    datum = w.datum
    n = datum.rank
    v = w.matrix
    v_inv = invert_unimodular(v)
    letters: List[int] = []
    for _ in range(w.length):
        for i in range(1, n + 1):
            if _vec_is_negative(tuple(row[i - 1] for row in v_inv)):
                break
        else:  # pragma: no cover - length bookkeeping guarantees a descent
            raise NonReducedWordError("length/descent mismatch")
        letters.append(i)
        v = _mul_simple_left(datum, v, i)
        v_inv = _mul_simple_right(datum, v_inv, i)
    word = tuple(letters)
    cache[w.matrix] = word
    return word


def support(w: WeylElement) -> FrozenSet[int]:
    """{i : s_i <= w}, the letters of any reduced word."""
    cache = w.datum._cache.setdefault("support", {})
    hit = cache.get(w.matrix)
    if hit is None:
        hit = frozenset(canonical_reduced_word(w))
        cache[w.matrix] = hit
    return hit


def is_min_coset_rep(w: WeylElement, p: ParabolicSubset) -> bool:
    return all(not has_right_descent(w, j) for j in p.inside)


def min_coset_rep(w: WeylElement, p: ParabolicSubset) -> WeylElement:
    """The unique u in W^P with u W_P = w W_P."""
    cur = w
    while True:
        j = next((j for j in p.inside_sorted if has_right_descent(cur, j)), None)
        if j is None:
            return cur
        cur = right_mul_simple(cur, j)


def coset_factorize(w: WeylElement, p: ParabolicSubset) -> Tuple[WeylElement, WeylElement]:
    """Split w = u * v with u in W^P, v in W_P, lengths additive."""
    u = min_coset_rep(w, p)
    v = multiply(inverse(u), w)
    return u, v


def inversion_sequence(datum: RootDatum, word: Sequence[int]) -> Tuple[CorootVec, ...]:
    """The inversion coroots of a reduced word, in reflection order.

    Entry k (1-based) is s_{i_r} ... s_{i_{r-k+2}} (alpha_{i_{r-k+1}}^vee).
    """
    word = tuple(word)
    el = element_from_word(datum, word)
    if el.length != len(word):
        raise NonReducedWordError(f"word {word} is not reduced")
    n = datum.rank
    out: List[CorootVec] = []
    suffix = _identity_matrix(n)
    for pos in range(len(word) - 1, -1, -1):
        i = word[pos]
        out.append(tuple(row[i - 1] for row in suffix))
        suffix = _mul_simple_right(datum, suffix, i)
    return tuple(out)


def inversion_coroots(w: WeylElement) -> FrozenSet[CorootVec]:
    """The inversion set of w as an unordered set, cached per datum."""
    cache = w.datum._cache.setdefault("inversion_set", {})
    hit = cache.get(w.matrix)
    if hit is None:
        hit = frozenset(inversion_sequence(w.datum, canonical_reduced_word(w)))
        cache[w.matrix] = hit
    return hit


def rightmost_distance(
    w: WeylElement, k: int, reverse_ties: bool = False
) -> Tuple[int, Word]:
    """Minimal distance of the rightmost occurrence of s_k from the end of a
    reduced word of w, together with a reduced word realizing it.

    The end position has distance 1.  Ties between descents are broken by
    the smallest index, or the largest when ``reverse_ties`` is set.
    """
    _check_index(w.datum, k)
    if k not in support(w):
        raise NotInSupportError(f"s_{k} is not below {w!r}")
    memo: Dict[Matrix, Tuple[int, Word]] = w.datum._cache.setdefault(
        ("rightmost", k, reverse_ties), {}
    )

    def rec(el: WeylElement) -> Tuple[int, Word]:
        hit = memo.get(el.matrix)
        if hit is not None:
            return hit
        if has_right_descent(el, k):
            res = (1, canonical_reduced_word(right_mul_simple(el, k)) + (k,))
        else:
            best: Optional[Tuple[int, Word]] = None
            for i in right_descents(el):
                shorter = right_mul_simple(el, i)
                if k not in support(shorter):
                    continue
                d_i, wit = rec(shorter)
                cand = (1 + d_i, wit + (i,))
                if best is None or cand[0] < best[0] or (
                    cand[0] == best[0] and reverse_ties
                ):
                    best = cand
            assert best is not None  # k in support guarantees a branch
            res = best
        memo[el.matrix] = res
        return res

    return rec(w)


def reflection_element(datum: RootDatum, c: Sequence[int]) -> WeylElement:
    """The reflection attached to a positive coroot (sends it to its negative)."""
    c = tuple(c)
    cache = datum._cache.setdefault("reflections", {})
    hit = cache.get(c)
    if hit is not None:
        return hit
    pair = require_positive_coroot(datum, c)
    cartan = datum.cartan
    n = datum.rank
    root = pair.root
    # <root, alpha_j^vee> for each j
    pairings = [sum(cartan[j][m] * root[m] for m in range(n)) for j in range(n)]
    cols = [
        tuple((1 if r == j else 0) - pairings[j] * c[r] for r in range(n))
        for j in range(n)
    ]
    matrix = tuple(tuple(cols[j][r] for j in range(n)) for r in range(n))
    el = WeylElement(datum, matrix, _count_inversions(datum, matrix))
    cache[c] = el
    return el


def enumerate_coset_reps(
    datum: RootDatum, p: ParabolicSubset, max_len: int
) -> Iterator[WeylElement]:
    """All w in W^P with l(w) <= max_len, each once, in length-then-canonical-
    word order.  BFS over W by right multiplication, filtered to minimal
    coset representatives."""
    level = {identity_element(datum)}
    length = 0
    while level and length <= max_len:
        reps = [w for w in level if is_min_coset_rep(w, p)]
        reps.sort(key=canonical_reduced_word)
        yield from reps
        nxt = set()
        for w in level:
            for i in range(1, datum.rank + 1):
                if not has_right_descent(w, i):
                    nxt.add(right_mul_simple(w, i))
        level = nxt
        length += 1


def longest_element(datum: RootDatum) -> WeylElement:
    w = identity_element(datum)
    while True:
        i = next(
            (i for i in range(1, datum.rank + 1) if not has_right_descent(w, i)),
            None,
        )
        if i is None:
            return w
        w = right_mul_simple(w, i)


def iter_reduced_words(w: WeylElement) -> Iterator[Word]:
    """All distinct reduced words of w, by right-descent recursion."""
    if w.length == 0:
        yield ()
        return
    for i in right_descents(w):
        for prefix in iter_reduced_words(right_mul_simple(w, i)):
            yield prefix + (i,)


@dataclass(frozen=True)
class ReducedWords:
    words: Tuple[Word, ...]
    truncated: bool


def all_reduced_words(w: WeylElement, cap: int = DEFAULT_WORD_CAP) -> ReducedWords:
    """Up to ``cap`` distinct reduced words plus an explicit truncation flag."""
    if cap <= 0:
        raise ValueError("cap must be positive")
    out: List[Word] = []
    truncated = False
    for word in iter_reduced_words(w):
        if len(out) == cap:
            truncated = True
            break
        out.append(word)
    return ReducedWords(words=tuple(out), truncated=truncated)


def bruhat_leq(u: WeylElement, w: WeylElement) -> bool:
    """Bruhat order via the standard right-descent recursion."""
    if u.length > w.length:
        return False
    if u.length == 0:
        return True
    if u.matrix == w.matrix:
        return True
    i = right_descents(w)[0]
    w_short = right_mul_simple(w, i)
    if has_right_descent(u, i):
        return bruhat_leq(right_mul_simple(u, i), w_short)
    return bruhat_leq(u, w_short)


def bruhat_covers(u: WeylElement, w: WeylElement) -> bool:
    """w covers u: u < w with length difference exactly one."""
    return u.length + 1 == w.length and bruhat_leq(u, w)


def parse_word(text: str) -> Word:
    """Words parse from whitespace- or comma-separated index lists."""
    pieces = text.replace(",", " ").split()
    return tuple(int(p) for p in pieces)
