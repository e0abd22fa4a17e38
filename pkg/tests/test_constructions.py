import pytest

from codespectra.bounds import sandwich_check
from codespectra.constructions import (
    ColumnMultiset,
    expand,
    format_multiset_lines,
    general_fws,
    lee_mws,
    manhattan_fws,
    manhattan_mws,
    parse_multiset_lines,
)
from codespectra.errors import (
    NotInitialSegment,
    NotOdd,
    OutOfRange,
    ParseError,
    RankDeficient,
    ZeroColumn,
)
from codespectra.spectra import multiset_spectrum, spectrum_is_fws, spectrum_is_mws
from codespectra.weights import WeightFunction, builtin, constants

# (q, k) pairs with q**k small enough for exhaustive spectrum sweeps.
SWEEP_SHAPES = [
    (2, 1), (2, 2), (2, 3), (2, 4), (2, 5), (2, 6), (2, 7),
    (3, 1), (3, 2), (3, 3), (3, 4), (3, 5),
    (5, 1), (5, 2), (5, 3),
    (7, 1), (7, 2),
    (11, 1), (11, 2),
    (13, 1), (13, 2),
]


def _fws_range(wf, k):
    m = constants(wf).m
    return m, ((m + 1) ** k - 1) // m


class TestColumnMultiset:
    def test_expand_order_and_multiplicities(self):
        cm = ColumnMultiset(5, 2, (((1, 0), 2), ((1, 1), 1)))
        G = expand(cm)
        assert G.row_entries() == ((1, 1, 1), (0, 0, 1))
        assert cm.n == 3 == G.n

    def test_rejects_zero_column(self):
        with pytest.raises(ZeroColumn):
            ColumnMultiset(5, 2, (((0, 0), 1), ((1, 0), 1)))

    def test_rejects_rank_deficient_blocks(self):
        with pytest.raises(RankDeficient):
            ColumnMultiset(5, 2, (((1, 0), 1), ((2, 0), 3)))

    def test_rejects_bad_multiplicity(self):
        with pytest.raises(ValueError):
            ColumnMultiset(5, 2, (((1, 0), 0), ((0, 1), 1)))

    def test_rejects_out_of_range_entries(self):
        with pytest.raises(ValueError):
            ColumnMultiset(5, 2, (((1, 5), 1), ((0, 1), 1)))

    def test_rejects_wrong_column_length(self):
        with pytest.raises(ValueError):
            ColumnMultiset(5, 2, (((1, 0, 0), 1), ((0, 1), 1)))


class TestGeneralFws:
    def test_greedy_multiplicities_follow_complete_sequence_rule(self):
        for q, k in SWEEP_SHAPES:
            for name in ("hamming", "lee", "manhattan"):
                wf = builtin(name, q)
                m, n_max = _fws_range(wf, k)
                for n in range(k, n_max + 1):
                    cm = general_fws(k, q, wf, n)
                    mults = [mult for _, mult in cm.columns]
                    assert len(mults) == k
                    assert mults[0] == 1
                    prefix = 0
                    for a in mults:
                        assert a >= 1
                        if prefix:
                            assert a <= m * prefix + 1
                        prefix += a
                    assert prefix == n

    def test_unit_block_columns(self):
        cm = general_fws(3, 5, builtin("lee", 5), 7)
        cols = [col for col, _ in cm.columns]
        assert cols == [(1, 0, 0), (0, 1, 0), (0, 0, 1)]

    def test_full_weight_spectrum_across_admissible_lengths(self):
        for q, k in SWEEP_SHAPES:
            for name in ("hamming", "lee", "manhattan"):
                wf = builtin(name, q)
                m, n_max = _fws_range(wf, k)
                for n in range(k, n_max + 1):
                    ws = multiset_spectrum(general_fws(k, q, wf, n), wf)
                    assert spectrum_is_fws(ws, wf), (name, q, k, n)
                    assert sandwich_check(q**k, ws.max_count, m, n, ws.size)

    def test_out_of_range_rejected_on_both_sides(self):
        for q, k in ((3, 2), (5, 2), (5, 3), (7, 2)):
            for name in ("hamming", "lee", "manhattan"):
                wf = builtin(name, q)
                _, n_max = _fws_range(wf, k)
                with pytest.raises(OutOfRange):
                    general_fws(k, q, wf, n_max + 1)
                with pytest.raises(OutOfRange):
                    general_fws(k, q, wf, k - 1)

    def test_out_of_range_message_names_bounds(self):
        with pytest.raises(OutOfRange, match="4"):
            general_fws(2, 5, builtin("lee", 5), 9)

    def test_gap_table_rejected(self):
        wf = WeightFunction(3, (0, 2, 2))
        with pytest.raises(NotInitialSegment):
            general_fws(2, 3, wf, 3)

    def test_weight_alphabet_mismatch(self):
        with pytest.raises(ValueError):
            general_fws(2, 5, builtin("lee", 7), 3)

    def test_manhattan_fws_delegates(self):
        for n in range(2, 7):
            direct = manhattan_fws(2, 5, n)
            general = general_fws(2, 5, builtin("manhattan", 5), n)
            assert direct.columns == general.columns


class TestLeeMws:
    def test_block_structure(self):
        cm = lee_mws(2, 5)
        assert [col for col, _ in cm.columns] == [(1, 0), (0, 1), (1, 1)]
        assert [mult for _, mult in cm.columns] == [1, 3, 9]
        assert cm.n == 13

    def test_pair_sum_blocks_at_k3(self):
        cm = lee_mws(3, 3)
        assert [col for col, _ in cm.columns] == [
            (1, 0, 0),
            (0, 1, 0),
            (0, 0, 1),
            (1, 1, 0),
            (1, 0, 1),
            (0, 1, 1),
        ]
        assert [mult for _, mult in cm.columns] == [1, 2, 4, 8, 16, 32]
        assert cm.n == 63

    def test_maximum_spectrum_over_odd_primes(self):
        shapes = [
            (3, k) for k in range(1, 8)
        ] + [(5, k) for k in range(1, 5)] + [(7, k) for k in range(1, 5)] + [
            (11, k) for k in range(1, 4)
        ] + [(13, k) for k in range(1, 4)]
        for q, k in shapes:
            wf = builtin("lee", q)
            cm = lee_mws(k, q)
            alpha = (q + 1) // 2
            assert cm.n == sum(alpha**i for i in range(k * (k + 1) // 2))
            ws = multiset_spectrum(cm, wf)
            assert ws.size == (q**k - 1) // 2
            assert spectrum_is_mws(ws, wf), (q, k)
            assert sandwich_check(q**k, ws.max_count, (q - 1) // 2, cm.n, ws.size)
            if k >= 2:
                assert not spectrum_is_fws(ws, wf)

    def test_codeword_weights_collide_only_on_negation(self):
        for k, q in ((1, 11), (2, 5), (2, 7), (2, 13), (3, 3), (3, 5)):
            ws = multiset_spectrum(lee_mws(k, q), builtin("lee", q))
            assert set(ws.distribution.values()) == {2}

    def test_prefix_sums_alone_would_not_separate_sign_classes(self):
        # Replacing the pair-sum blocks with chained prefix sums looks like a
        # shorter variant but is wrong: once u_1 + u_2 = 0 the prefix digit
        # |u_1 + u_2 + u_3| = |u_3| carries no sign information, so messages
        # (1,2,1) and (1,2,2) over Z_3 collide despite not being negatives.
        q, wf = 3, builtin("lee", 3)
        cols = [(1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, 0), (1, 1, 1)]
        cm = ColumnMultiset(q, 3, tuple(
            (col, 2**i) for i, col in enumerate(cols)
        ))
        ws = multiset_spectrum(cm, wf)
        assert ws.size == 12 < (q**3 - 1) // 2
        assert not spectrum_is_mws(ws, wf)
        weigh = lambda u: sum(
            wf.table[sum(u[t] * col[t] for t in range(3)) % q] * mult
            for col, mult in cm.columns
        )
        assert weigh((1, 2, 1)) == weigh((1, 2, 2)) == 23

    def test_even_alphabet_rejected(self):
        with pytest.raises(NotOdd):
            lee_mws(2, 2)

    def test_bad_dimension_rejected(self):
        with pytest.raises(OutOfRange):
            lee_mws(0, 5)


class TestManhattanMws:
    def test_maximum_and_full_spectrum(self):
        for q in (2, 3, 5, 7):
            for k in (1, 2, 3):
                wf = builtin("manhattan", q)
                cm = manhattan_mws(k, q)
                assert cm.n == (q**k - 1) // (q - 1)
                assert [mult for _, mult in cm.columns] == [
                    q**i for i in range(k)
                ]
                ws = multiset_spectrum(cm, wf)
                assert ws.weights == tuple(range(1, q**k))
                assert spectrum_is_mws(ws, wf) and spectrum_is_fws(ws, wf)
                assert sandwich_check(q**k, ws.max_count, q - 1, cm.n, ws.size)

    def test_binary_case_is_hamming(self):
        cm = manhattan_mws(3, 2)
        assert cm.n == 7
        ws = multiset_spectrum(cm, builtin("manhattan", 2))
        assert ws.weights == tuple(range(1, 8))

    def test_bad_dimension_rejected(self):
        with pytest.raises(OutOfRange):
            manhattan_mws(0, 3)


class TestMultisetText:
    def test_roundtrip(self):
        for cm in (lee_mws(2, 5), manhattan_mws(3, 3), general_fws(2, 7, builtin("lee", 7), 5)):
            lines = format_multiset_lines(cm)
            parsed = parse_multiset_lines(lines, cm.q)
            assert parsed.columns == cm.columns

    def test_format_shape(self):
        lines = format_multiset_lines(lee_mws(2, 5))
        assert lines == ["1 0 ^ 1", "0 1 ^ 3", "1 1 ^ 9"]

    def test_parse_errors_name_lines(self):
        with pytest.raises(ParseError, match="line 2"):
            parse_multiset_lines(["1 0 ^ 1", "0 x ^ 2"], 5)
        with pytest.raises(ParseError):
            parse_multiset_lines(["1 0 1"], 5)
        with pytest.raises(ParseError):
            parse_multiset_lines([], 5)
