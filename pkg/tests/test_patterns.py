import random

import pytest
from hypothesis import given, strategies as st

from patterna import (
    CnfFormula,
    Condition,
    Literal,
    Pattern,
    classify,
    cooper_pattern,
    decide_exhibitable,
    double_positive,
    gen_divline,
    ip_pattern,
    is_k_bounded,
    ktp2_pattern,
    ktp_pattern,
    op_pattern,
    pattern_from_cnf,
    pmchar_pattern,
    sop_pattern,
    tp1_pattern,
    validate_pattern,
)
from patterna.errors import (
    DuplicateCondition,
    EmptyCondition,
    IndexOutOfRange,
    NotConsistencyPattern,
    UnsupportedParams,
)
from patterna.rand import random_consistency_pattern

from conftest import disjoint_conditions


def cond(pos, neg=()):
    return Condition(tuple(pos), tuple(neg))


class TestValidate:
    def test_minimal_pattern(self):
        p = validate_pattern({"n": 2, "consistency": [[[0], []]], "inconsistency": []})
        assert p == Pattern(2, (cond([0]),))

    def test_empty_condition_rejected(self):
        with pytest.raises(EmptyCondition):
            validate_pattern({"n": 1, "consistency": [[[], []]], "inconsistency": []})

    def test_index_out_of_range(self):
        with pytest.raises(IndexOutOfRange):
            validate_pattern({"n": 1, "consistency": [[[1], []]], "inconsistency": []})

    def test_strict_duplicate(self):
        raw = {"n": 2, "consistency": [[[0], []], [[0], []]], "inconsistency": []}
        with pytest.raises(DuplicateCondition):
            validate_pattern(raw)
        lenient = validate_pattern(raw, strict=False)
        assert lenient.consistency == (cond([0]),)

    def test_canonical_order_and_dedup(self):
        p = Pattern(3, (cond([2, 0]), cond([0, 2]), cond([1])))
        assert p.consistency == (cond([0, 2]), cond([1]))

    @given(st.integers(1, 5), st.data())
    def test_idempotent(self, n, data):
        conds = disjoint_conditions(n)
        picks = data.draw(st.lists(st.sampled_from(conds), max_size=6))
        p = Pattern(n, tuple(picks))
        assert validate_pattern(p) == p
        assert Pattern(p.n, p.consistency, p.inconsistency) == p


class TestClassify:
    def test_sop3_flags(self):
        p = Pattern(3, (cond([1], [0]), cond([2], [1])), (cond([0], [1]), cond([1], [2])))
        flags = classify(p)
        assert flags.reasonable and not flags.positive

    def test_subset_violation(self):
        p = Pattern(2, (cond([0, 1]),), (cond([0]),))
        assert not classify(p).reasonable

    def test_all_splits_consistent_is_fully_complete(self):
        p = Pattern(2, (cond([0], [1]), cond([1], [0]), cond([0, 1]), cond([], [0, 1])))
        flags = classify(p)
        assert flags.complete and flags.fully_complete

    def test_overlapping_parts_not_reasonable(self):
        assert not classify(Pattern(2, (cond([0], [0, 1]),))).reasonable

    def test_empty_pattern_flags(self):
        flags = classify(Pattern(4))
        assert flags.reasonable and flags.positive and not flags.complete

    def test_k_bounded(self):
        p = Pattern(4, (), (cond([0, 1]), cond([2, 3])))
        flags = classify(p)
        assert flags.k_bounded == 2 and flags.k_bounded_at_most == 2
        mixed = Pattern(4, (), (cond([0, 1]), cond([1, 2, 3])))
        assert classify(mixed).k_bounded is None
        assert classify(mixed).k_bounded_at_most == 3
        assert is_k_bounded(Pattern(3), 7)  # vacuous with no inconsistency side


class TestGenerators:
    def test_op_example(self):
        assert op_pattern(2) == Pattern(2, (cond([0, 1]), cond([1], [0])))

    def test_ip_has_all_splits(self):
        p = ip_pattern(2)
        assert len(p.consistency) == 4 and not p.inconsistency
        assert classify(p).complete

    def test_sop(self):
        p = sop_pattern(3)
        assert p.consistency == (cond([1], [0]), cond([2], [1]))
        assert p.inconsistency == (cond([0], [1]), cond([1], [2]))

    def test_ktp_example(self):
        p = ktp_pattern(2, 2, 2)
        assert p.n == 7
        assert set(p.consistency) == {cond([0, 1, 3]), cond([0, 1, 4]), cond([0, 2, 5]), cond([0, 2, 6])}
        assert set(p.inconsistency) == {cond([1, 2]), cond([3, 4]), cond([5, 6])}

    def test_ktp_k_above_branching_rejected(self):
        with pytest.raises(UnsupportedParams):
            ktp_pattern(2, 2, 3)
        with pytest.raises(UnsupportedParams):
            ktp_pattern(3, 1, 1)

    def test_tp1_inconsistency_is_incomparability(self):
        p = tp1_pattern(2, 2)
        # incomparable pairs in {ε,0,1,00,01,10,11}: everything off a chain
        assert cond([1, 2]) in p.inconsistency
        assert cond([3, 4]) in p.inconsistency
        assert cond([4, 5]) in p.inconsistency
        assert cond([0, 1]) not in p.inconsistency
        assert cond([1, 3]) not in p.inconsistency

    def test_ktp2_shape(self):
        p = ktp2_pattern(2, 2, 2)
        assert p.n == 4
        assert set(p.consistency) == {cond([0, 2]), cond([0, 3]), cond([1, 2]), cond([1, 3])}
        assert set(p.inconsistency) == {cond([0, 1]), cond([2, 3])}

    def test_cooper_n1(self):
        p = cooper_pattern(1)
        assert p.consistency == (cond([1], [0]),)
        assert set(p.inconsistency) == {cond([], [0, 1]), cond([0], [1]), cond([0, 1])}
        assert classify(p).fully_complete

    def test_cooper_rejects_zero(self):
        with pytest.raises(UnsupportedParams):
            cooper_pattern(0)

    def test_pmchar_n1(self):
        # families over P(1) = {∅, {0}}: {∅} empty meet, {{0}} nonempty,
        # {∅,{0}} empty meet
        p = pmchar_pattern(1)
        assert p.consistency == (cond([1]),)
        assert set(p.inconsistency) == {cond([0]), cond([0, 1])}

    def test_every_kind_reasonable(self):
        cases = [
            ("op", {"n": 3}), ("ip", {"n": 3}), ("sop", {"n": 4}), ("cm", {"n": 2}),
            ("ktp", {"b": 2, "d": 2, "k": 2}), ("ktp", {"b": 3, "d": 1, "k": 2}),
            ("tp1", {"b": 2, "d": 2}), ("ktp2", {"b": 3, "d": 2, "k": 2}),
            ("cooper", {"n": 1}), ("cooper", {"n": 2}), ("cooper", {"n": 3}),
            ("pmchar", {"n": 0}), ("pmchar", {"n": 2}), ("pmchar", {"n": 3}),
        ]
        for kind, params in cases:
            flags = classify(gen_divline(kind, **params))
            assert flags.reasonable, (kind, params)

    def test_positive_kinds(self):
        assert classify(gen_divline("ktp", b=2, d=2, k=2)).positive
        assert classify(gen_divline("tp1", b=2, d=1)).positive
        assert classify(gen_divline("ktp2", b=2, d=2, k=2)).positive
        assert classify(gen_divline("pmchar", n=2)).positive

    def test_no_inconsistency_kinds(self):
        for kind in ("ip", "cm", "op"):
            assert not gen_divline(kind, n=3).inconsistency

    def test_every_family_exhibitable(self):
        cases = [
            ("op", {"n": 5}), ("ip", {"n": 4}), ("sop", {"n": 5}), ("cm", {"n": 3}),
            ("ktp", {"b": 2, "d": 2, "k": 2}), ("ktp", {"b": 3, "d": 2, "k": 3}),
            ("tp1", {"b": 2, "d": 2}), ("ktp2", {"b": 3, "d": 2, "k": 2}),
            ("cooper", {"n": 2}), ("cooper", {"n": 3}), ("pmchar", {"n": 2}),
        ]
        for kind, params in cases:
            assert decide_exhibitable(gen_divline(kind, **params)).exhibitable, (kind, params)

    def test_unknown_kind(self):
        with pytest.raises(UnsupportedParams):
            gen_divline("nope", n=1)


class TestPatternFromCnf:
    def test_contradiction(self):
        f = CnfFormula(1, ((Literal(0),), (Literal(0, True),)))
        p = pattern_from_cnf(f)
        assert p == Pattern(2, (cond([1]),), (cond([], [0]), cond([0])))
        assert not decide_exhibitable(p).exhibitable

    def test_single_clause(self):
        f = CnfFormula(2, ((Literal(0), Literal(1)),))
        p = pattern_from_cnf(f)
        assert p == Pattern(3, (cond([2]),), (cond([], [0, 1]),))
        assert decide_exhibitable(p).exhibitable

    def test_empty_formula(self):
        p = pattern_from_cnf(CnfFormula(0, ()))
        assert p == Pattern(1, (cond([0]),))
        assert decide_exhibitable(p).exhibitable

    def test_empty_clause_flagged(self):
        f = CnfFormula(1, ((),))
        with pytest.warns(UserWarning):
            p = pattern_from_cnf(f)
        assert cond([1]) in p.inconsistency
        assert not decide_exhibitable(p).exhibitable

    def test_reasonable_without_empty_clauses(self):
        rng = random.Random(7)
        from patterna.rand import random_cnf

        for _ in range(60):
            f = random_cnf(rng, rng.randint(1, 5), rng.randint(0, 6))
            assert classify(pattern_from_cnf(f)).reasonable


class TestDoublePositive:
    def test_single_condition(self):
        p = Pattern(2, (cond([0], [1]),))
        assert double_positive(p) == Pattern(4, (cond([0, 3]),), (cond([0, 2]), cond([1, 3])))

    def test_no_negatives(self):
        p = Pattern(1, (cond([0]),))
        assert double_positive(p) == Pattern(2, (cond([0]),), (cond([0, 1]),))

    def test_two_conditions(self):
        p = Pattern(2, (cond([0], [1]), cond([1], [0])))
        d = double_positive(p)
        assert set(c.pos for c in d.consistency) == {(0, 3), (1, 2)}
        assert set(c.pos for c in d.inconsistency) == {(0, 2), (1, 3)}

    def test_rejects_inconsistency_side(self):
        with pytest.raises(NotConsistencyPattern):
            double_positive(Pattern(1, (), (cond([0]),)))

    def test_output_reasonable_positive(self):
        rng = random.Random(3)
        for _ in range(100):
            p = random_consistency_pattern(rng, rng.randint(0, 5), 5)
            flags = classify(double_positive(p))
            assert flags.reasonable and flags.positive
