"""Shared test utilities: independent oracles kept deliberately separate from
the library code paths they check."""

from __future__ import annotations

import itertools
from fractions import Fraction
from typing import Dict, Iterable, List, Sequence, Tuple

import schubert_atlas as sa
from schubert_atlas import weyl


def schubert_input(datum, inside, word):
    w = sa.element_from_word(datum, word)
    return sa.SchubertInput(
        datum=datum, parabolic=sa.parabolic(datum, inside), w=w
    )


def valid_parabolics(datum, w) -> Iterable[Tuple[int, ...]]:
    """Every I_P with w in W^P: subsets of the non-descent indices."""
    free = [j for j in range(1, datum.rank + 1) if not weyl.has_right_descent(w, j)]
    for r in range(len(free) + 1):
        yield from itertools.combinations(free, r)


# --- determinant / rank oracles ------------------------------------------


def cofactor_det(m) -> int:
    n = len(m)
    if n == 0:
        return 1
    if n == 1:
        return m[0][0]
    total = 0
    for j in range(n):
        if m[0][j] == 0:
            continue
        minor = [row[:j] + row[j + 1 :] for row in m[1:]]
        total += (-1) ** j * m[0][j] * cofactor_det(minor)
    return total


def fraction_rank(m) -> int:
    if not m or not m[0]:
        return 0
    a = [[Fraction(x) for x in row] for row in m]
    nr, nc = len(a), len(a[0])
    r = 0
    for c in range(nc):
        piv = next((i for i in range(r, nr) if a[i][c]), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        a[r] = [x / a[r][c] for x in a[r]]
        for i in range(nr):
            if i != r and a[i][c]:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        r += 1
    return r


# --- Poincare-polynomial row-count oracle ---------------------------------

_DEGREES = {
    "A": lambda n: list(range(2, n + 2)),
    "BC": lambda n: list(range(2, 2 * n + 1, 2)),
    "D": lambda n: list(range(2, 2 * n - 1, 2)) + [n],
    "E6": lambda n: [2, 5, 6, 8, 9, 12],
    "E7": lambda n: [2, 6, 8, 10, 12, 14, 18],
    "E8": lambda n: [2, 8, 12, 14, 18, 20, 24, 30],
    "F": lambda n: [2, 6, 8, 12],
    "G": lambda n: [2, 6],
}


def type_degrees(family: str, rank: int) -> List[int]:
    if family in ("B", "C"):
        return _DEGREES["BC"](rank)
    if family == "E":
        return _DEGREES[f"E{rank}"](rank)
    return _DEGREES[family](rank)


def _poly_mul(a: Sequence[int], b: Sequence[int]) -> List[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _poly_div_exact(num: Sequence[int], den: Sequence[int]) -> List[int]:
    num = list(num)
    q = [0] * (len(num) - len(den) + 1)
    for i in range(len(q)):
        c = num[i]
        q[i] = c
        if c:
            for j, y in enumerate(den):
                num[i + j] -= c * y
    assert all(x == 0 for x in num), "non-exact polynomial division"
    return q


def poincare_poly(degrees: Sequence[int]) -> List[int]:
    out = [1]
    for d in degrees:
        out = _poly_mul(out, [1] * d)
    return out


def _component_degrees(sub) -> List[int]:
    size = len(sub)
    if size == 1:
        return [2]
    adj = {
        i: [j for j in range(size) if j != i and sub[i][j] != 0] for i in range(size)
    }
    if any(sub[i][j] == -3 for i in range(size) for j in range(size) if i != j):
        return type_degrees("G", 2)
    asym = [
        (i, j)
        for i in range(size)
        for j in range(size)
        if i != j and sub[i][j] == -2
    ]
    if asym:
        i, j = asym[0]
        interior = len(adj[i]) >= 2 and len(adj[j]) >= 2
        if size == 4 and interior:
            return type_degrees("F", 4)
        return type_degrees("B", size)
    degrees3 = [i for i in range(size) if len(adj[i]) == 3]
    if not degrees3:
        return type_degrees("A", size)
    center = degrees3[0]
    branch_sizes = []
    for start in adj[center]:
        count = 1
        prev, cur = center, start
        while True:
            nxt = [x for x in adj[cur] if x != prev]
            if not nxt:
                break
            prev, cur = cur, nxt[0]
            count += 1
        branch_sizes.append(count)
    branch_sizes.sort()
    if branch_sizes[0] == 1 and branch_sizes[1] == 1:
        return type_degrees("D", size)
    return type_degrees("E", size)


def parabolic_subgroup_poly(datum, inside: Sequence[int]) -> List[int]:
    inside = sorted(set(inside))
    if not inside:
        return [1]
    remaining = set(inside)
    out = [1]
    while remaining:
        comp = [remaining.pop()]
        grew = True
        while grew:
            grew = False
            for i in list(remaining):
                if any(datum.cartan[i - 1][j - 1] != 0 for j in comp):
                    comp.append(i)
                    remaining.discard(i)
                    grew = True
        comp.sort()
        sub = [[datum.cartan[a - 1][b - 1] for b in comp] for a in comp]
        out = _poly_mul(out, poincare_poly(_component_degrees(sub)))
    return out


def coset_length_counts(datum, inside: Sequence[int]) -> List[int]:
    """Coefficients of W(q) / W_P(q): the number of w in W^P per length."""
    full = poincare_poly(
        type_degrees(datum.cartan_type.family, datum.cartan_type.rank)
    )
    return _poly_div_exact(full, parabolic_subgroup_poly(datum, inside))


# --- misc ------------------------------------------------------------------


def reorder_matrix(matrix, row_labels, col_labels, new_rows, new_cols):
    """Permute a labeled matrix into the given row/column label order."""
    ri = [list(row_labels).index(r) for r in new_rows]
    ci = [list(col_labels).index(c) for c in new_cols]
    return tuple(tuple(matrix[r][c] for c in ci) for r in ri)


def hat_n_map(report) -> Dict[int, Fraction]:
    return dict(zip(report.hat_n_keys, report.hat_n))


def cv(*coeffs) -> Tuple[int, ...]:
    return tuple(coeffs)
