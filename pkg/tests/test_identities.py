from fractions import Fraction as F

import pytest

from ruehrkit.exact_math import (
    InternalInconsistencyError,
    binomial,
    poly_add,
    poly_compose,
    poly_eval,
    poly_mul,
    poly_normalize,
    poly_shift,
    poly_sub,
)
from ruehrkit.identities import (
    SumFamily,
    compare_sides,
    comtet1_sides,
    comtet2_sides,
    comtet3_sides,
    corollary1_sides,
    corollary2_sides,
    family_polynomial,
    kimura_ruehr_moments,
    proof_helper,
    ruehr_chain,
    ruehr_polynomial_values,
    ruehr_sums_direct,
)
from ruehrkit.harness import FuzzSource, fuzz_rational

ONE_MINUS_X = [F(1), F(-1)]


def test_compare_sides_verdict():
    assert compare_sides(F(1, 2), F(2, 4)).equal
    assert not compare_sides(F(1), F(2)).equal
    assert compare_sides([F(1)], [F(1)]).equal


def test_family_polynomials_small():
    assert family_polynomial(SumFamily.A, 1) == [F(3), F(1)]
    assert family_polynomial(SumFamily.B, 1) == [F(4), F(1)]
    assert family_polynomial(SumFamily.C, 1) == [F(3), F(2), F(1)]
    assert family_polynomial(SumFamily.D, 1) == [F(6), F(4), F(1)]
    for fam in SumFamily:
        assert family_polynomial(fam, 0) == [F(1)]


def test_family_polynomials_against_direct_binomials():
    'each coefficient is a single binomial value, checked independently'
    for n in range(25):
        assert family_polynomial(SumFamily.A, n) == \
            [F(binomial(3 * n - j, 2 * n)) for j in range(n + 1)]
        assert family_polynomial(SumFamily.B, n) == \
            [F(binomial(3 * n + 1, n - j)) for j in range(n + 1)]
        assert family_polynomial(SumFamily.C, n) == \
            [F(binomial(3 * n - j, n)) for j in range(2 * n + 1)]
        assert family_polynomial(SumFamily.D, n) == \
            [F(binomial(3 * n + 1, n + 1 + j)) for j in range(2 * n + 1)]


def test_family_polynomial_degrees_and_monic():
    for n in range(41):
        for fam, deg in ((SumFamily.A, n), (SumFamily.B, n),
                         (SumFamily.C, 2 * n), (SumFamily.D, 2 * n)):
            p = family_polynomial(fam, n)
            assert len(p) - 1 == deg
            assert p[-1] == 1


def test_family_polynomial_rejects_negative():
    with pytest.raises(ValueError):
        family_polynomial(SumFamily.A, -1)


def test_ruehr_chain_pinned_values():
    assert ruehr_chain(0) == (1, 1, 1, 1)
    assert ruehr_chain(1) == (6, 6, 6, 6)
    assert ruehr_chain(2) == (39, 39, 39, 39)


def test_ruehr_chain_four_way_equality():
    for n in range(61):
        values = ruehr_chain(n)
        assert len(set(values)) == 1


def test_ruehr_paths_agree_componentwise():
    for n in range(41):
        assert ruehr_sums_direct(n) == ruehr_polynomial_values(n)


def test_ruehr_chain_flags_internal_path_mismatch(monkeypatch):
    import ruehrkit.identities as identities
    monkeypatch.setattr(identities, "ruehr_sums_direct", lambda n: (1, 2, 3, 4))
    with pytest.raises(InternalInconsistencyError):
        identities.ruehr_chain(1)


def test_comtet1_hand_cases():
    pair = comtet1_sides(2, 1, 2, 1)
    assert (pair.lhs, pair.rhs, pair.equal) == (8, 8, True)
    pair = comtet1_sides(2, 1, 1, 1)
    assert (pair.lhs, pair.rhs, pair.equal) == (3, 3, True)


def test_comtet1_single_term_case():
    'k = 0 collapses the sum to a^n'
    for n in range(1, 8):
        for a, b in ((F(2), F(1)), (F(1, 2), F(3)), (F(-3), F(5, 7))):
            pair = comtet1_sides(n, 0, a, b)
            assert pair.lhs == a ** n
            assert pair.equal


def test_comtet1_rejects_bad_k():
    with pytest.raises(ValueError):
        comtet1_sides(3, 3, 1, 1)
    with pytest.raises(ValueError):
        comtet1_sides(3, 5, 1, 1)
    with pytest.raises(ValueError):
        comtet1_sides(3, -1, 1, 1)


def test_comtet1_fuzzed_equality():
    src = FuzzSource(42)
    for n in range(1, 26):
        for k in range(n):
            for _ in range(2):
                a = fuzz_rational(src, 9, 9)
                b = fuzz_rational(src, 9, 9)
                assert comtet1_sides(n, k, a, b).equal


def test_comtet2_hand_cases():
    pair = comtet2_sides(1, 2)
    assert pair.lhs == [F(0), F(2), F(-1)]
    assert pair.rhs == [F(0), F(2), F(-1)]
    assert comtet2_sides(1, 1).lhs == [F(0), F(1)]
    for m in range(1, 6):
        pair = comtet2_sides(m, m)
        assert pair.lhs == poly_shift([F(1)], m)
        assert pair.equal


def test_comtet2_rejects_bad_range():
    with pytest.raises(ValueError):
        comtet2_sides(0, 3)
    with pytest.raises(ValueError):
        comtet2_sides(4, 3)


def test_comtet2_equality_sweep():
    for n in range(1, 16):
        for m in range(1, n + 1):
            assert comtet2_sides(m, n).equal


def test_comtet3_hand_cases():
    pair = comtet3_sides(1, 1)
    assert pair.lhs == [F(2), F(-1)]
    assert pair.equal
    for m in range(1, 6):
        assert comtet3_sides(m, 0).lhs == [F(1)]
    pair = comtet3_sides(2, 1)
    assert pair.equal
    assert poly_eval(pair.lhs, 1) == 1


def test_comtet3_equality_sweep():
    for m in range(1, 13):
        for big_n in range(13):
            assert comtet3_sides(m, big_n).equal


def test_proof_helper_base_cases():
    assert proof_helper("f", 1, 0) == [F(1)]
    assert proof_helper("f", 1, 1) == [F(2), F(-1)]
    for big_n in range(21):
        assert proof_helper("f", 1, big_n) == proof_helper("g", 1, big_n)


def test_proof_helper_validation():
    with pytest.raises(ValueError):
        proof_helper("h", 1, 1)
    with pytest.raises(ValueError):
        proof_helper("f", 0, 1)
    with pytest.raises(ValueError):
        proof_helper("f", 1, -1)


def test_fg_recurrences():
    'f(j+1,N) = (1-x) f(j+1,N-1) + f(j,N), and the mirrored rule for g'
    for j in range(1, 9):
        for big_n in range(1, 9):
            f_next = proof_helper("f", j + 1, big_n)
            assert f_next == poly_add(
                poly_mul(ONE_MINUS_X, proof_helper("f", j + 1, big_n - 1)),
                proof_helper("f", j, big_n))
            g_next = proof_helper("g", j + 1, big_n)
            assert g_next == poly_add(
                proof_helper("g", j, big_n),
                poly_mul(ONE_MINUS_X, proof_helper("g", j + 1, big_n - 1)))


def test_telescoping_identity():
    'summing the recurrences over j telescopes onto a (1-x)-scaled inner sum'
    for m in range(1, 11):
        for big_n in range(1, 11):
            lhs = []
            for j in range(1, m + 1):
                lhs = poly_add(lhs, poly_sub(proof_helper("f", j + 1, big_n),
                                             proof_helper("f", j, big_n)))
                lhs = poly_sub(lhs, poly_sub(proof_helper("g", j + 1, big_n),
                                             proof_helper("g", j, big_n)))
            inner = []
            for j in range(1, m + 1):
                inner = poly_add(inner, poly_sub(proof_helper("f", j + 1, big_n - 1),
                                                 proof_helper("g", j + 1, big_n - 1)))
            assert lhs == poly_mul(ONE_MINUS_X, inner)


def test_corollary1_hand_cases():
    for n, variant, expected in ((1, "pos", 6), (1, "neg", 6),
                                 (0, "pos", 1), (0, "neg", 1)):
        pair = corollary1_sides(n, variant)
        assert pair.lhs == expected
        assert pair.equal


def test_corollary1_equality_sweep():
    for n in range(31):
        assert corollary1_sides(n, "pos").equal
        assert corollary1_sides(n, "neg").equal


def test_corollary1_validation():
    with pytest.raises(ValueError):
        corollary1_sides(-1, "pos")
    with pytest.raises(ValueError):
        corollary1_sides(1, "sideways")


def test_corollary2_hand_cases():
    pair = corollary2_sides(1, "first")
    assert pair.lhs == [F(4), F(-3)]
    assert pair.rhs == [F(4), F(-3)]
    assert corollary2_sides(0, "first").lhs == [F(1)]
    pair = corollary2_sides(1, "second")
    assert pair.equal
    # x = 4/3 with the 9^n rescale recovers the chain value 6
    assert poly_eval(pair.lhs, F(4, 3)) * 9 == 6


def test_corollary2_equality_sweep():
    for n in range(16):
        assert corollary2_sides(n, "first").equal
        assert corollary2_sides(n, "second").equal


def test_corollary2_matches_comtet3_specialization():
    'first form is comtet3 at m = 2N+1 after reindexing, so cross-check it'
    for n in range(12):
        lhs_direct = []
        one_minus_pows = [poly_normalize([1])]
        for _ in range(n):
            one_minus_pows.append(poly_mul(one_minus_pows[-1], ONE_MINUS_X))
        for j in range(n + 1):
            term = [F(binomial(3 * n - j, 2 * n))]
            lhs_direct = poly_add(lhs_direct, poly_mul(term, one_minus_pows[n - j]))
        assert corollary2_sides(n, "first").lhs == lhs_direct


def test_specialization_recovers_chain_values():
    'lhs of the first polynomial form at x=2/3, times 3^n, equals A_n(3)'
    for n in range(61):
        poly = corollary2_sides(n, "first").lhs
        assert poly_eval(poly, F(2, 3)) * 3 ** n == ruehr_sums_direct(n)[0]


def test_specialization_second_form():
    for n in range(21):
        poly = corollary2_sides(n, "second").lhs
        assert poly_eval(poly, F(4, 3)) * 9 ** n == ruehr_sums_direct(n)[2]


def test_alzer_prodinger_shifts():
    'A_n(x+1) = B_n(x) and C_n(x+1) = D_n(x) as exact polynomial identities'
    shift = [F(1), F(1)]
    for n in range(21):
        assert poly_compose(family_polynomial(SumFamily.A, n), shift) == \
            family_polynomial(SumFamily.B, n)
        assert poly_compose(family_polynomial(SumFamily.C, n), shift) == \
            family_polynomial(SumFamily.D, n)


def test_moments_pinned_values():
    pair = kimura_ruehr_moments(0)
    assert (pair.lhs, pair.rhs) == (2, 2)
    assert kimura_ruehr_moments(1).lhs == 1
    assert kimura_ruehr_moments(2).lhs == F(26, 35)
    assert kimura_ruehr_moments(2).equal


def test_moments_equality_sweep():
    for n in range(41):
        assert kimura_ruehr_moments(n).equal
