from itertools import combinations_with_replacement, permutations, product

import pytest

from codespectra.bounds import sandwich_check
from codespectra.constructions import (
    ColumnMultiset,
    expand,
    general_fws,
    lee_mws,
    manhattan_mws,
)
from codespectra.errors import NotFWS, NotInitialSegment, SizeOverflow
from codespectra.field import GeneratorMatrix
from codespectra.search import canonical_columns
from codespectra.spectra import (
    WeightSpectrum,
    is_fws,
    is_mws,
    multiset_spectrum,
    spectrum,
    spectrum_is_fws,
    spectrum_is_mws,
    support_properties,
    verify_basis_bound,
)
from codespectra.weights import WeightFunction, builtin, constants
from oracles import brute_distribution, brute_rank


def _matrix_from_columns(q, cols):
    k = len(cols[0])
    rows = [[col[i] for col in cols] for i in range(k)]
    return GeneratorMatrix.from_rows(q, rows)


def _rank2_canonical_multisets(q, wf, n):
    cols = canonical_columns(2, q, wf)
    for combo in combinations_with_replacement(cols, n):
        rows = [[col[i] for col in combo] for i in range(2)]
        if brute_rank(rows, q) == 2:
            yield combo, rows


class TestSpectrumAgainstBruteForce:
    def test_all_rank2_column_pairs_q5_lee(self):
        q, wf = 5, builtin("lee", 5)
        nonzero = [c for c in product(range(q), repeat=2) if any(c)]
        checked = 0
        for cols in product(nonzero, repeat=2):
            rows = [[col[i] for col in cols] for i in range(2)]
            if brute_rank(rows, q) != 2:
                continue
            ws = spectrum(_matrix_from_columns(q, cols), wf)
            assert dict(ws.distribution) == brute_distribution(rows, q, wf.table)
            checked += 1
        assert checked == 480  # 24*24 ordered pairs minus 96 rank-deficient

    def test_canonical_triples_q5_all_weights(self):
        q = 5
        for name in ("hamming", "lee", "manhattan"):
            wf = builtin(name, q)
            m = constants(wf).m
            count = 0
            for combo, rows in _rank2_canonical_multisets(q, wf, 3):
                ws = spectrum(_matrix_from_columns(q, combo), wf)
                assert dict(ws.distribution) == brute_distribution(
                    rows, q, wf.table
                )
                assert sandwich_check(q**2, ws.max_count, m, ws.n, ws.size)
                count += 1
            assert count > 0

    def test_distribution_counts_sum_to_nonzero_codewords(self):
        G = GeneratorMatrix.from_rows(7, [[1, 0, 3], [0, 1, 5]])
        for name in ("hamming", "lee", "manhattan"):
            ws = spectrum(G, builtin(name, 7))
            assert sum(ws.distribution.values()) == 48


class TestInvarianceUnderEquivalence:
    def test_column_permutation_and_negation_n3(self):
        q, wf = 5, builtin("lee", 5)
        for combo, _rows in _rank2_canonical_multisets(q, wf, 3):
            base = spectrum(_matrix_from_columns(q, combo), wf)
            for perm in permutations(combo):
                ws = spectrum(_matrix_from_columns(q, perm), wf)
                assert ws.weights == base.weights
                assert dict(ws.distribution) == dict(base.distribution)
            for j in range(3):
                negged = list(combo)
                negged[j] = tuple((-x) % q for x in negged[j])
                ws = spectrum(_matrix_from_columns(q, negged), wf)
                assert ws.weights == base.weights
                assert dict(ws.distribution) == dict(base.distribution)

    def test_column_permutation_and_negation_n4(self):
        q, wf = 5, builtin("lee", 5)
        for combo, _rows in _rank2_canonical_multisets(q, wf, 4):
            base = spectrum(_matrix_from_columns(q, combo), wf)
            reversed_ws = spectrum(_matrix_from_columns(q, combo[::-1]), wf)
            assert reversed_ws.weights == base.weights
            assert dict(reversed_ws.distribution) == dict(base.distribution)
            for j in range(4):
                negged = list(combo)
                negged[j] = tuple((-x) % q for x in negged[j])
                ws = spectrum(_matrix_from_columns(q, negged), wf)
                assert ws.weights == base.weights
                assert dict(ws.distribution) == dict(base.distribution)


class TestMultisetSpectrum:
    def test_equals_expanded_spectrum(self):
        cases = [
            (lee_mws(2, 5), builtin("lee", 5)),
            (lee_mws(3, 3), builtin("lee", 3)),
            (manhattan_mws(2, 5), builtin("manhattan", 5)),
            (general_fws(3, 3, builtin("manhattan", 3), 9), builtin("manhattan", 3)),
            (general_fws(2, 7, builtin("lee", 7), 5), builtin("lee", 7)),
        ]
        for cm, wf in cases:
            via_blocks = multiset_spectrum(cm, wf)
            via_matrix = spectrum(expand(cm), wf)
            assert via_blocks.weights == via_matrix.weights
            assert dict(via_blocks.distribution) == dict(via_matrix.distribution)
            assert via_blocks.n == via_matrix.n == cm.n

    def test_budget_guard(self):
        cm = lee_mws(2, 5)
        with pytest.raises(SizeOverflow):
            multiset_spectrum(cm, builtin("lee", 5), max_codewords=10)

    def test_weight_alphabet_mismatch(self):
        with pytest.raises(ValueError):
            multiset_spectrum(lee_mws(2, 5), builtin("lee", 7))


class TestVerdicts:
    def test_identity_over_z3_is_fws_not_mws(self):
        G = GeneratorMatrix.from_rows(3, [[1, 0], [0, 1]])
        wf = builtin("lee", 3)
        ws = spectrum(G, wf)
        assert ws.weights == (1, 2)
        assert spectrum_is_fws(ws, wf)
        assert not spectrum_is_mws(ws, wf)
        assert is_fws(G, wf) and not is_mws(G, wf)

    def test_lee_mws_witness_is_mws_not_fws(self):
        wf = builtin("lee", 5)
        ws = multiset_spectrum(lee_mws(2, 5), wf)
        assert ws.size == 12
        assert spectrum_is_mws(ws, wf)
        assert not spectrum_is_fws(ws, wf)

    def test_manhattan_mws_is_both(self):
        wf = builtin("manhattan", 3)
        ws = multiset_spectrum(manhattan_mws(2, 3), wf)
        assert spectrum_is_mws(ws, wf) and spectrum_is_fws(ws, wf)

    def test_lee_never_both_at_odd_q(self):
        # Full and maximum spectra coexist only at q=2 for the Lee weight.
        for q, k in ((3, 2), (5, 2), (3, 3)):
            wf = builtin("lee", q)
            cols = canonical_columns(k, q, wf)
            for combo in combinations_with_replacement(cols, k + 1):
                rows = [[col[i] for col in combo] for i in range(k)]
                if brute_rank(rows, q) != k:
                    continue
                ws = spectrum(_matrix_from_columns(q, combo), wf)
                assert not (spectrum_is_fws(ws, wf) and spectrum_is_mws(ws, wf))

    def test_gap_table_fws_compares_against_achievable(self):
        # Weights {2} over Z_3: a single column reaches every achievable value.
        wf = WeightFunction(3, (0, 2, 2))
        G = GeneratorMatrix.from_rows(3, [[1]])
        ws = spectrum(G, wf)
        assert ws.weights == (2,)
        assert spectrum_is_fws(ws, wf)

    def test_lee_mws_distribution_counts_are_two(self):
        for k, q in ((2, 5), (2, 7), (3, 3)):
            wf = builtin("lee", q)
            ws = multiset_spectrum(lee_mws(k, q), wf)
            assert set(ws.distribution.values()) == {2}


class TestSpectrumValidation:
    def test_rejects_unsorted_weights(self):
        with pytest.raises(ValueError):
            WeightSpectrum((2, 1), {2: 4, 1: 4}, 2, 2, 3, "lee")

    def test_rejects_key_mismatch(self):
        with pytest.raises(ValueError):
            WeightSpectrum((1, 2), {1: 8}, 2, 2, 3, "lee")

    def test_rejects_wrong_total(self):
        with pytest.raises(ValueError):
            WeightSpectrum((1, 2), {1: 4, 2: 3}, 2, 2, 3, "lee")

    def test_budget_guard(self):
        G = GeneratorMatrix.from_rows(5, [[1, 0], [0, 1]])
        with pytest.raises(SizeOverflow):
            spectrum(G, builtin("lee", 5), max_codewords=10)

    def test_weight_alphabet_mismatch(self):
        G = GeneratorMatrix.from_rows(5, [[1, 0], [0, 1]])
        with pytest.raises(ValueError):
            spectrum(G, builtin("lee", 7))


class TestSupports:
    def test_identity_has_disjoint_supports(self):
        G = GeneratorMatrix.from_rows(5, [[1, 0], [0, 1]])
        summary = support_properties(G)
        assert summary.min_support == 1
        assert not summary.pairwise_intersecting

    def test_mws_witness_supports_intersect(self):
        G = expand(lee_mws(2, 5))
        summary = support_properties(G)
        assert summary.pairwise_intersecting
        assert summary.min_support >= 2

    def test_upper_triangular_counterexample(self):
        G = GeneratorMatrix.from_rows(5, [[1, 1], [0, 1]])
        summary = support_properties(G)
        assert summary.min_support == 1
        assert not summary.pairwise_intersecting


class TestBasisBound:
    def test_full_spectrum_constructions_pass(self):
        for q, k, name in ((5, 2, "lee"), (3, 3, "manhattan"), (7, 2, "hamming")):
            wf = builtin(name, q)
            m = constants(wf).m
            n_max = ((m + 1) ** k - 1) // m
            for n in range(k, n_max + 1):
                assert verify_basis_bound(expand(general_fws(k, q, wf, n)), wf)

    def test_rejects_non_fws_code(self):
        with pytest.raises(NotFWS):
            verify_basis_bound(expand(lee_mws(2, 5)), builtin("lee", 5))

    def test_rejects_gap_table(self):
        wf = WeightFunction(3, (0, 2, 2))
        G = GeneratorMatrix.from_rows(3, [[1, 0], [0, 1]])
        with pytest.raises(NotInitialSegment):
            verify_basis_bound(G, wf)
