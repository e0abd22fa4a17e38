from itertools import product

import pytest

from codespectra.errors import NotPrime, RankDeficient, SizeOverflow, ZeroColumn
from codespectra.field import (
    FieldVector,
    GeneratorMatrix,
    PrimeField,
    enumerate_codewords,
    iter_message_codewords,
    matrix_rank,
    validate_prime,
)
from oracles import brute_rank


class TestPrimeField:
    def test_accepts_primes(self):
        for q in (2, 3, 5, 7, 11, 13, 17, 19, 23):
            assert PrimeField(q).q == q
            assert validate_prime(q).q == q

    def test_rejects_non_primes(self):
        for q in (-7, 0, 1, 4, 6, 8, 9, 10, 12, 15, 21, 25):
            with pytest.raises(NotPrime):
                PrimeField(q)

    def test_element_ranges(self):
        f = PrimeField(5)
        assert list(f.elements()) == [0, 1, 2, 3, 4]
        assert list(f.nonzero()) == [1, 2, 3, 4]

    def test_inverse(self):
        for q in (2, 3, 5, 7, 11, 13):
            f = PrimeField(q)
            for x in range(1, q):
                assert (x * f.inverse(x)) % q == 1


class TestFieldVector:
    def test_valid_roundtrip(self):
        v = FieldVector(5, (0, 3, 4))
        assert len(v) == 3
        assert list(v) == [0, 3, 4]
        assert v[1] == 3

    def test_rejects_out_of_range_entries(self):
        with pytest.raises(ValueError):
            FieldVector(5, (0, 5))
        with pytest.raises(ValueError):
            FieldVector(5, (-1, 0))


class TestGeneratorMatrix:
    def test_identity_matrices(self):
        for q in (2, 3, 5):
            for k in (1, 2, 3):
                rows = [[1 if i == j else 0 for j in range(k)] for i in range(k)]
                G = GeneratorMatrix.from_rows(q, rows)
                assert G.k == k and G.n == k and G.q == q

    def test_zero_column_rejected(self):
        with pytest.raises(ZeroColumn):
            GeneratorMatrix.from_rows(5, [[1, 0, 0], [0, 1, 0]])

    def test_rank_deficient_rejected(self):
        with pytest.raises(RankDeficient):
            GeneratorMatrix.from_rows(5, [[1, 2], [2, 4]])

    def test_more_rows_than_columns_rejected(self):
        with pytest.raises(RankDeficient):
            GeneratorMatrix.from_rows(3, [[1], [1]])

    def test_inconsistent_row_lengths_rejected(self):
        with pytest.raises(ValueError):
            GeneratorMatrix.from_rows(3, [[1, 0], [0, 1, 1]])

    def test_mixed_alphabet_rows_rejected(self):
        rows = (FieldVector(3, (1, 0)), FieldVector(5, (0, 1)))
        with pytest.raises(ValueError):
            GeneratorMatrix(5, rows)

    def test_row_entries(self):
        G = GeneratorMatrix.from_rows(5, [[1, 0, 2], [0, 1, 3]])
        assert G.row_entries() == ((1, 0, 2), (0, 1, 3))


class TestMatrixRank:
    def test_matches_brute_force_all_2x2(self):
        for q in (2, 3):
            for entries in product(range(q), repeat=4):
                rows = [list(entries[:2]), list(entries[2:])]
                assert matrix_rank(rows, q) == brute_rank(rows, q)

    def test_matches_brute_force_all_2x3_over_z3(self):
        q = 3
        for entries in product(range(q), repeat=6):
            rows = [list(entries[:3]), list(entries[3:])]
            assert matrix_rank(rows, q) == brute_rank(rows, q)

    def test_invariant_under_row_swap_and_scaling(self):
        q = 5
        for entries in product(range(q), repeat=4):
            rows = [list(entries[:2]), list(entries[2:])]
            r = matrix_rank(rows, q)
            assert matrix_rank([rows[1], rows[0]], q) == r
            for c in range(1, q):
                scaled = [[(c * x) % q for x in rows[0]], rows[1]]
                assert matrix_rank(scaled, q) == r

    def test_tall_matrix(self):
        rows = [[1, 0], [0, 1], [1, 1]]
        assert matrix_rank(rows, 3) == 2


class TestEnumeration:
    def test_message_order_is_lexicographic_zero_first(self):
        rows = ((1, 0), (0, 1))
        words = list(iter_message_codewords(rows, 3))
        assert words == [
            (0, 0),
            (0, 1),
            (0, 2),
            (1, 0),
            (1, 1),
            (1, 2),
            (2, 0),
            (2, 1),
            (2, 2),
        ]

    def test_yields_all_distinct_codewords(self):
        G = GeneratorMatrix.from_rows(5, [[1, 0, 2], [0, 1, 3]])
        words = [tuple(v) for v in enumerate_codewords(G)]
        assert len(words) == 25
        assert len(set(words)) == 25
        assert words[0] == (0, 0, 0)
        for v in enumerate_codewords(G):
            assert isinstance(v, FieldVector)
            break

    def test_budget_guard(self):
        G = GeneratorMatrix.from_rows(5, [[1, 0], [0, 1]])
        with pytest.raises(SizeOverflow):
            list(enumerate_codewords(G, max_codewords=10))

    def _messages(self, q, k):
        return list(product(range(q), repeat=k))

    def test_linearity_all_pairs(self):
        cases = [
            (7, [[1, 0, 3], [0, 1, 5]]),
            (5, [[1, 0, 2, 3], [0, 1, 4, 1], [0, 0, 1, 2]]),
        ]
        for q, rows in cases:
            k = len(rows)
            words = list(iter_message_codewords([tuple(r) for r in rows], q))
            msgs = self._messages(q, k)
            index = {msg: i for i, msg in enumerate(msgs)}
            for a, ua in enumerate(msgs):
                for b, ub in enumerate(msgs):
                    usum = tuple((x + y) % q for x, y in zip(ua, ub))
                    expected = tuple(
                        (x + y) % q for x, y in zip(words[a], words[b])
                    )
                    assert words[index[usum]] == expected
