import pytest

import schubert_atlas as sa
from schubert_atlas import oracle, weyl
from schubert_atlas.errors import NotSimplyLacedError

from helpers import schubert_input, valid_parabolics


def test_direct_cover_g2_grassmannian(datum):
    g2 = datum("G2")
    inp = schubert_input(g2, (2,), (2, 1, 2, 1))
    assert oracle.cover_coroots_direct(inp) == frozenset({(3, 2)})


def test_direct_cover_single_reflection(datum):
    a4 = datum("A4")
    inp = schubert_input(a4, (), (2,))
    assert oracle.cover_coroots_direct(inp) == frozenset({(0, 1, 0, 0)})


def test_direct_cover_a4_borel(datum):
    a4 = datum("A4")
    inp = schubert_input(a4, (), (3, 4, 1, 2, 3))
    assert oracle.cover_coroots_direct(inp) == frozenset(
        {
            (0, 0, 1, 0),
            (0, 1, 1, 0),
            (1, 1, 1, 0),
            (0, 0, 1, 1),
            (0, 1, 1, 1),
        }
    )


@pytest.mark.parametrize("type_str", ["A3", "B2", "G2"])
def test_direct_cover_matches_filter_everywhere(type_str, datum):
    d = datum(type_str)
    for w in sa.enumerate_coset_reps(d, sa.parabolic(d, []), 99):
        for inside in valid_parabolics(d, w):
            inp = sa.SchubertInput(
                datum=d, parabolic=sa.parabolic(d, inside), w=w
            )
            assert frozenset(sa.cover_coroots(inp).cover_P or ()) == (
                oracle.cover_coroots_direct(inp)
            )


def _one_line(w, rank):
    perm = list(range(1, rank + 2))
    for i in sa.canonical_reduced_word(w):
        perm[i - 1], perm[i] = perm[i], perm[i - 1]
    return tuple(perm)


def test_type_a_covers_match_permutation_model(datum):
    """Type A sanity from scratch: cover coroots are the transpositions
    (i, j) with w(i) > w(j) and no intermediate value, in one-line terms."""
    a4 = datum("A4")
    w = sa.element_from_word(a4, (2, 1, 3, 4, 3, 2, 1))
    assert _one_line(w, 4) == (5, 3, 1, 4, 2)
    for w in sa.enumerate_coset_reps(a4, sa.parabolic(a4, []), 99):
        p = _one_line(w, 4)
        assert sum(
            1
            for a in range(5)
            for b in range(a + 1, 5)
            if p[a] > p[b]
        ) == w.length
        model = set()
        for i in range(5):
            for j in range(i + 1, 5):
                if p[i] > p[j] and not any(
                    p[i] > p[k] > p[j] for k in range(i + 1, j)
                ):
                    model.add(tuple(1 if i <= m < j else 0 for m in range(4)))
        inp = sa.SchubertInput(datum=a4, parabolic=sa.parabolic(a4, []), w=w)
        assert frozenset(sa.cover_coroots(inp).cover_P) == model


# --- conjecture 1: order reversal ------------------------------------------


def test_order_reversal_a2_longest(datum):
    a2 = datum("A2")
    w0 = sa.element_from_word(a2, (1, 2, 1))
    frag = oracle.check_order_reversal(w0)
    assert frag.verified and not frag.truncated
    assert frag.words_scanned == 2


def test_order_reversal_vacuous_when_all_indecomposable(datum):
    a4 = datum("A4")
    w = sa.element_from_word(a4, (3, 4, 1, 2, 3))
    frag = oracle.check_order_reversal(w)
    assert frag.verified and frag.words_scanned == 0


def test_order_reversal_d5_example(datum):
    """The highest coroot of the 13-letter element reverses across the braid
    move s_3 s_5 s_3 -> s_5 s_3 s_5."""
    d5 = datum("D5")
    word_i = (2, 3, 4, 1, 2, 3, 5, 3, 4, 2, 3, 1, 2)
    word_j = (2, 3, 4, 1, 2, 5, 3, 5, 4, 2, 3, 1, 2)
    w = sa.element_from_word(d5, word_i)
    assert sa.element_from_word(d5, word_j) == w
    theta = d5.highest_coroot
    mu, mu2 = (1, 1, 1, 1, 0), (0, 1, 1, 0, 1)
    assert tuple(a + b for a, b in zip(mu, mu2)) == theta
    seq_i = sa.inversion_sequence(d5, word_i)
    seq_j = sa.inversion_sequence(d5, word_j)
    assert (seq_i.index(mu) < seq_i.index(mu2)) != (
        seq_j.index(mu) < seq_j.index(mu2)
    )
    frag = oracle.check_order_reversal(w)
    assert frag.verified and not frag.truncated


def test_order_reversal_requires_simply_laced(datum):
    with pytest.raises(NotSimplyLacedError):
        oracle.check_order_reversal(sa.element_from_word(datum("B2"), (1, 2)))


def test_order_reversal_truncation_flag(datum):
    d4 = datum("D4")
    w0 = weyl.longest_element(d4)
    frag = oracle.check_order_reversal(w0, cap=1)
    assert frag.truncated and not frag.verified
    assert frag.counterexamples == ()  # inconclusive, not refuted


# --- conjecture 2: deletion between equal neighbours -------------------------


def test_coxeter_deletion_vacuous(datum):
    a2 = datum("A2")
    frag = oracle.check_coxeter_deletion(sa.element_from_word(a2, (1, 2)))
    assert frag.verified and frag.words_scanned == 0


def test_coxeter_deletion_a2_longest(datum):
    a2 = datum("A2")
    frag = oracle.check_coxeter_deletion(sa.element_from_word(a2, (1, 2, 1)))
    assert frag.verified and not frag.counterexamples


def test_coxeter_deletion_d5_boxed_pattern(datum):
    """Deleting the middle letter of the boxed s_5 s_3 s_5 realizes the
    reflection of the highest coroot."""
    d5 = datum("D5")
    word_j = (2, 3, 4, 1, 2, 5, 3, 5, 4, 2, 3, 1, 2)
    w = sa.element_from_word(d5, word_j)
    theta = d5.highest_coroot
    seq_j = sa.inversion_sequence(d5, word_j)
    position = 7  # 1-based; neighbours are both s_5
    assert word_j[position - 2] == word_j[position] == 5
    assert seq_j[len(word_j) - position] == theta
    refl = sa.reflection_element(d5, theta)
    assert weyl.multiply(w, refl).length < w.length - 1
    frag = oracle.check_coxeter_deletion(w)
    assert frag.verified and not frag.truncated


def test_coxeter_deletion_exhaustive_a3(datum):
    a3 = datum("A3")
    for w in sa.enumerate_coset_reps(a3, sa.parabolic(a3, []), 99):
        frag = oracle.check_coxeter_deletion(w)
        assert frag.verified, sa.canonical_reduced_word(w)
        assert not frag.counterexamples and not frag.manual_review


# --- conjecture 3: rightmost indecomposability --------------------------------


def test_rightmost_indecomposable_53142(datum):
    a4 = datum("A4")
    w = sa.element_from_word(a4, (2, 1, 3, 4, 3, 2, 1))
    frag = oracle.check_rightmost_indecomposable(w)
    assert frag.verified and not frag.counterexamples


def test_rightmost_indecomposable_longest_element(datum):
    d4 = datum("D4")
    frag = oracle.check_rightmost_indecomposable(weyl.longest_element(d4))
    assert frag.verified


def test_rightmost_indecomposable_requires_simply_laced(datum):
    with pytest.raises(NotSimplyLacedError):
        oracle.check_rightmost_indecomposable(
            sa.element_from_word(datum("G2"), (1, 2))
        )


# --- determinism ----------------------------------------------------------------


def test_scans_are_deterministic(datum):
    a3 = datum("A3")
    w0 = weyl.longest_element(a3)
    assert oracle.check_order_reversal(w0) == oracle.check_order_reversal(w0)
    assert oracle.check_coxeter_deletion(w0) == oracle.check_coxeter_deletion(w0)
    assert oracle.check_rightmost_indecomposable(
        w0
    ) == oracle.check_rightmost_indecomposable(w0)
