import random

import pytest

from gens import random_scrambled_seifert, random_standardized, random_unimodular
from sequiv.intlin import IntMatrix, congruent
from sequiv.laurent import LaurentPoly
from sequiv.seifert import (
    SearchBudget,
    alexander,
    alexander_raw,
    apply_moves,
    arf,
    bounded_sequiv_search,
    column_enlarge,
    is_alexander_trivial,
    knot_determinant,
    knot_signature,
    row_enlarge,
    try_reduce,
    validate,
)

TREFOIL = validate(IntMatrix.from_rows([[-1, 1], [0, -1]]))
FIG8 = validate(IntMatrix.from_rows([[1, 1], [0, -1]]))
EMPTY = validate(IntMatrix())
MINIMAL = validate(IntMatrix.from_rows([[0, 1], [0, 0]]))


def test_validate_examples():
    assert TREFOIL.size == 2
    assert EMPTY.genus == 0
    with pytest.raises(ValueError):
        validate(IntMatrix.from_rows([[0, 2], [0, 0]]))  # det(M - M^T) = 4
    with pytest.raises(ValueError):
        validate(IntMatrix.from_rows([[1]]))  # odd size


def test_alexander_examples():
    assert alexander(EMPTY) == LaurentPoly.one
    assert alexander(TREFOIL) == LaurentPoly.of(-1, (1, -1, 1))
    assert alexander(MINIMAL) == LaurentPoly.one
    assert alexander(FIG8) == LaurentPoly.of(-1, (-1, 3, -1))


def test_alexander_trivial_examples():
    assert is_alexander_trivial(EMPTY)
    assert is_alexander_trivial(MINIMAL)
    assert not is_alexander_trivial(TREFOIL)


def test_signature_examples():
    assert knot_signature(TREFOIL) == -2
    assert knot_signature(FIG8) == 0
    assert knot_signature(EMPTY) == 0


def test_determinant_examples():
    assert knot_determinant(TREFOIL) == 3
    assert knot_determinant(FIG8) == 5
    assert knot_determinant(EMPTY) == 1


def test_arf_examples():
    assert arf(EMPTY) == 0
    assert arf(TREFOIL) == 1
    assert arf(FIG8) == 1


def test_column_enlarge_examples():
    assert column_enlarge(EMPTY, (), 0).matrix.rows == ((0, 1), (0, 0))
    bigger = column_enlarge(EMPTY, (), 3)
    assert bigger.matrix.rows == ((3, 1), (0, 0))
    assert alexander(bigger) == LaurentPoly.one
    enlarged = column_enlarge(TREFOIL, (1, 0), 2)
    assert enlarged.size == 4
    assert alexander(enlarged) == alexander(TREFOIL)
    assert alexander_raw(enlarged) == alexander_raw(TREFOIL).shift(1)


def test_row_enlarge_examples():
    assert row_enlarge(EMPTY, (), 0).matrix.rows == ((0, 0), (1, 0))
    assert row_enlarge(EMPTY, (), -1).matrix.rows == ((-1, 0), (1, 0))
    enlarged = row_enlarge(TREFOIL, (0, 1), 0)
    assert enlarged.size == 4
    assert alexander(enlarged) == alexander(TREFOIL)


def test_enlarge_length_mismatch():
    with pytest.raises(ValueError):
        column_enlarge(TREFOIL, (1,), 0)
    with pytest.raises(ValueError):
        row_enlarge(TREFOIL, (1, 0, 0), 0)


def test_try_reduce_examples():
    assert try_reduce(MINIMAL).matrix == IntMatrix()
    assert try_reduce(TREFOIL) is None
    assert try_reduce(column_enlarge(TREFOIL, (1, 0), 2)).matrix == TREFOIL.matrix


def test_invariance_under_congruence():
    rng = random.Random(11)
    for _ in range(120):
        sm, _, scrambled = random_scrambled_seifert(rng, rng.randint(0, 4))
        assert alexander(sm) == alexander(scrambled)
        assert knot_signature(sm) == knot_signature(scrambled)
        assert knot_determinant(sm) == knot_determinant(scrambled)
        assert arf(sm) == arf(scrambled)


def test_alexander_postconditions_random():
    rng = random.Random(12)
    for _ in range(100):
        sm = random_standardized(rng, rng.randint(0, 4))
        delta = alexander(sm)
        assert delta.evaluate(1) == 1
        assert delta.is_palindromic()


def test_enlargements_preserve_invariants():
    rng = random.Random(13)
    for _ in range(80):
        sm = random_standardized(rng, rng.randint(0, 3))
        xi = [rng.randint(-3, 3) for _ in range(sm.size)]
        x = rng.randint(-3, 3)
        if rng.random() < 0.5:
            enlarged = column_enlarge(sm, xi, x)
        else:
            enlarged = row_enlarge(sm, xi, x)
        assert enlarged.size == sm.size + 2
        assert alexander(enlarged) == alexander(sm)
        assert knot_signature(enlarged) == knot_signature(sm)
        assert knot_determinant(enlarged) == knot_determinant(sm)
        assert arf(enlarged) == arf(sm)
        assert alexander_raw(enlarged) == alexander_raw(sm).shift(1)
        reduced = try_reduce(enlarged)
        assert reduced is not None and reduced.matrix == sm.matrix


def test_validate_characterizes_domain():
    rng = random.Random(10)
    for _ in range(300):
        n = rng.choice((0, 2, 4))
        m = IntMatrix.from_rows(
            [[rng.randint(-2, 2) for _ in range(n)] for _ in range(n)]
        )
        from sequiv.intlin import det

        should_pass = det(m - m.transpose()) == 1
        try:
            validate(m)
            assert should_pass
        except ValueError:
            assert not should_pass


def test_search_distinct():
    result = bounded_sequiv_search(TREFOIL, FIG8)
    assert result.verdict == "distinct"
    assert "alexander" in result.reason
    across_sizes = bounded_sequiv_search(TREFOIL, EMPTY)
    assert across_sizes.verdict == "distinct"


def test_search_identity_and_reduction():
    same = bounded_sequiv_search(TREFOIL, TREFOIL)
    assert same.verdict == "equivalent" and same.witness == ()
    down = bounded_sequiv_search(MINIMAL, EMPTY)
    assert down.verdict == "equivalent" and len(down.witness) == 1
    up = bounded_sequiv_search(EMPTY, MINIMAL)
    assert up.verdict == "equivalent" and len(up.witness) == 1
    assert apply_moves(EMPTY, up.witness).matrix == MINIMAL.matrix


def test_search_congruent_witness():
    rng = random.Random(14)
    for _ in range(10):
        g = rng.randint(1, 2)
        sm = random_standardized(rng, g, bound=1)
        a = random_unimodular(rng, sm.size, ops=rng.randint(1, 2))
        target = validate(congruent(sm.matrix, a))
        result = bounded_sequiv_search(sm, target, SearchBudget(max_entry=12))
        assert result.verdict == "equivalent"
        assert apply_moves(sm, result.witness).matrix == target.matrix


def test_search_unknown_is_honest():
    rng = random.Random(15)
    sm = random_standardized(rng, 2, bound=1)
    a = random_unimodular(rng, sm.size, ops=6)
    target = validate(congruent(sm.matrix, a))
    if sm.matrix == target.matrix:
        return
    result = bounded_sequiv_search(sm, target, SearchBudget(max_nodes=3))
    assert result.verdict in ("equivalent", "unknown")
    if result.verdict == "unknown":
        assert result.witness is None


def test_search_deterministic():
    rng = random.Random(16)
    sm = random_standardized(rng, 1, bound=1)
    a = random_unimodular(rng, 2, ops=2)
    target = validate(congruent(sm.matrix, a))
    r1 = bounded_sequiv_search(sm, target)
    r2 = bounded_sequiv_search(sm, target)
    assert r1 == r2
