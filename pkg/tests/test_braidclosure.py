import random

import pytest

from sequiv.braidclosure import (
    ArtinBraidWord,
    burau_alexander,
    closure_permutation,
    format_artin_word,
    is_knot_closure,
    knot_corpus,
    missing_generators,
    parse_artin_word,
    seifert_matrix,
    _burau_letter,
    _mat_mul,
)
from sequiv.laurent import LaurentPoly
from sequiv.seifert import alexander, knot_determinant, knot_signature, validate

TREFOIL_WORD = ArtinBraidWord(2, (1, 1, 1))
FIG8_WORD = ArtinBraidWord(3, (1, -2, 1, -2))


def test_closure_permutation_examples():
    assert closure_permutation(TREFOIL_WORD) == (2, 1)
    assert closure_permutation(ArtinBraidWord(3)) == (1, 2, 3)
    perm = closure_permutation(FIG8_WORD)
    s, steps = 1, 0
    while True:
        s = perm[s - 1]
        steps += 1
        if s == 1:
            break
    assert steps == 3  # a 3-cycle


def test_is_knot_closure_examples():
    assert is_knot_closure(TREFOIL_WORD)
    assert not is_knot_closure(ArtinBraidWord(2))
    assert is_knot_closure(FIG8_WORD)


def test_word_validation():
    with pytest.raises(ValueError):
        ArtinBraidWord(1)
    with pytest.raises(ValueError):
        ArtinBraidWord(2, (2,))
    with pytest.raises(ValueError):
        ArtinBraidWord(3, (0,))


def test_seifert_matrix_examples():
    sm = seifert_matrix(TREFOIL_WORD)
    assert sm.size == 2
    assert alexander(sm) == LaurentPoly.of(-1, (1, -1, 1))
    assert knot_signature(sm) == -2

    unknot = seifert_matrix(ArtinBraidWord(2, (1,)))
    assert unknot.size == 0
    assert alexander(unknot) == LaurentPoly.one

    f8 = seifert_matrix(FIG8_WORD)
    assert f8.size == 2
    assert alexander(f8) == LaurentPoly.of(-1, (-1, 3, -1))
    assert knot_determinant(f8) == 5
    assert knot_signature(f8) == 0


def test_seifert_matrix_preconditions():
    with pytest.raises(ValueError, match="components"):
        seifert_matrix(ArtinBraidWord(2, (1, 1)))
    with pytest.raises(ValueError, match="components"):
        seifert_matrix(ArtinBraidWord(3, (1, 1)))
    assert missing_generators(ArtinBraidWord(3, (1, 1))) == [2]


def test_burau_examples():
    assert burau_alexander(TREFOIL_WORD) == LaurentPoly.of(-1, (1, -1, 1))
    assert burau_alexander(ArtinBraidWord(2, (1,))) == LaurentPoly.one
    assert burau_alexander(FIG8_WORD) == LaurentPoly.of(-1, (-1, 3, -1))
    with pytest.raises(ValueError):
        burau_alexander(ArtinBraidWord(2))


def test_burau_braid_relation():
    for n in (3, 4):
        for i in range(1, n - 1):
            lhs = _mat_mul(
                _mat_mul(_burau_letter(n, i), _burau_letter(n, i + 1)), _burau_letter(n, i)
            )
            rhs = _mat_mul(
                _mat_mul(_burau_letter(n, i + 1), _burau_letter(n, i)), _burau_letter(n, i + 1)
            )
            assert lhs == rhs
        for i in range(1, n):
            prod = _mat_mul(_burau_letter(n, i), _burau_letter(n, -i))
            m = n - 1
            identity = [
                [LaurentPoly.one if a == b else LaurentPoly() for b in range(m)]
                for a in range(m)
            ]
            assert prod == identity


def test_matrix_size_and_validity():
    for w in knot_corpus(4, 12, seed=52, count=150):
        sm = seifert_matrix(w)
        assert sm.size == len(w.letters) - w.strands + 1
        validate(sm.matrix)  # no error


def test_oracle_agreement_sample():
    for w in knot_corpus(4, 12, seed=53, count=250):
        assert alexander(seifert_matrix(w)) == burau_alexander(w)


def test_markov_stabilization():
    count = 0
    for w in knot_corpus(3, 9, seed=55, count=60):
        stabilized = ArtinBraidWord(w.strands + 1, w.letters + (w.strands,))
        assert is_knot_closure(stabilized)
        assert alexander(seifert_matrix(stabilized)) == alexander(seifert_matrix(w))
        assert burau_alexander(stabilized) == burau_alexander(w)
        count += 1
    assert count == 60


def test_mirror_invariance():
    for w in knot_corpus(4, 10, seed=56, count=80):
        m = w.mirror()
        assert alexander(seifert_matrix(m)) == alexander(seifert_matrix(w))
        assert burau_alexander(m) == burau_alexander(w)


def test_conjugation_invariance():
    # conjugate words close to the same knot
    rng = random.Random(60)
    for w in knot_corpus(4, 10, seed=61, count=60):
        g = rng.choice((1, -1)) * rng.randint(1, w.strands - 1)
        conj = ArtinBraidWord(w.strands, (g,) + w.letters + (-g,))
        assert is_knot_closure(conj)
        assert alexander(seifert_matrix(conj)) == alexander(seifert_matrix(w))
        assert burau_alexander(conj) == burau_alexander(w)


def test_corpus_deterministic():
    a = knot_corpus(4, 12, seed=57, count=40)
    b = knot_corpus(4, 12, seed=57, count=40)
    assert a == b
    c = knot_corpus(4, 12, seed=58, count=40)
    assert a != c
    for w in a:
        assert is_knot_closure(w) and not missing_generators(w)


def test_format_parse_roundtrip():
    rng = random.Random(59)
    for _ in range(30):
        n = rng.randint(2, 5)
        letters = tuple(
            rng.choice((1, -1)) * rng.randint(1, n - 1) for _ in range(rng.randint(0, 10))
        )
        w = ArtinBraidWord(n, letters)
        assert parse_artin_word(format_artin_word(w)) == w
    assert parse_artin_word("n 2\n1 1 1\n") == TREFOIL_WORD
    with pytest.raises(ValueError):
        parse_artin_word("2\n1\n")
