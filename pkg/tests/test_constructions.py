from __future__ import annotations

import pytest

from symbool.boolfn import TruthTable, moebius, ones_mask, support_weights
from symbool.constructions import (
    gap_annihilator,
    max_ai_necessary_condition,
    necessary_condition_annihilator,
    refute_max_ai,
    sigma_factorize,
    solve_gap_system,
)
from symbool.symfn import (
    SanfVector,
    SymValueVector,
    expand,
    majority_family,
    sanf_to_value,
    sigma,
    value_to_sanf,
)

# published solutions of the gap system, as lam(0..i) bit masks
KNOWN_SOLUTIONS = {
    1: 0b10,  # lam(1)
    2: 0b110,  # lam(1), lam(2)
    3: 0b1000,  # lam(3)
    4: 0b11110,  # lam(1..4)
    5: 0b101000,  # lam(3), lam(5)
}


def test_gap_system_validation():
    with pytest.raises(ValueError):
        solve_gap_system(0)


def test_gap_system_shape():
    gs = solve_gap_system(3)
    assert (gs.matrix.rows, gs.matrix.cols) == (4, 4)
    assert len(gs.solutions) >= 1


def test_known_solutions_are_members():
    for i, bits in KNOWN_SOLUTIONS.items():
        gs = solve_gap_system(i)
        assert gs.matrix.mul_vec(bits) == 0


def test_canonical_is_deterministic_and_solves():
    for i in range(1, 9):
        gs = solve_gap_system(i)
        c = gs.canonical()
        assert c == solve_gap_system(i).canonical()
        assert c != 0
        assert gs.matrix.mul_vec(c) == 0


def test_nontrivial_kernel_through_i_10():
    for i in range(1, 11):
        assert len(solve_gap_system(i).solutions) >= 1


def test_all_solutions_have_gap_support():
    # every nonzero combination expands to degree <= i with support
    # weights inside {1..i, 2i+1}
    for i in range(1, 7):
        gs = solve_gap_system(i)
        n = 2 * i + 1
        for pick in range(1, 1 << len(gs.solutions)):
            vec = 0
            p = pick
            while p:
                low = p & -p
                vec ^= gs.solutions[low.bit_length() - 1]
                p ^= low
            lam = SanfVector(n, vec)
            t = expand(sanf_to_value(lam))
            assert moebius(t).degree() <= i
            assert set(support_weights(t)) <= set(range(1, i + 1)) | {n}


def test_gap_annihilator_validation():
    with pytest.raises(ValueError):
        gap_annihilator(6, 1)
    with pytest.raises(ValueError):
        gap_annihilator(7, 0)
    with pytest.raises(ValueError):
        gap_annihilator(7, 4)


def test_gap_annihilator_5_1():
    ga = gap_annihilator(5, 1)
    assert ga.product.bits != 0
    assert set(support_weights(ga.product)) <= {2, 4}
    assert moebius(ga.product).degree() <= 2


def test_gap_annihilator_7_2():
    ga = gap_annihilator(7, 2)
    assert set(support_weights(ga.product)) <= {2, 3, 6}
    assert moebius(ga.product).degree() <= 3


def test_gap_annihilator_support_window():
    for n in (5, 7, 9, 11):
        for i in range(1, n // 2 + 1):
            ga = gap_annihilator(n, i)
            m = n // 2
            window = set(range(m - i + 1, m + 1)) | {m + i + 1}
            assert set(support_weights(ga.product)) <= window
            assert moebius(ga.product).degree() <= m


def test_gap_annihilator_full_width_is_bare_solution():
    # i = n//2 leaves no variables for the pair product
    n, i = 7, 3
    ga = gap_annihilator(n, i)
    assert ga.product == expand(ga.g_part)


def test_refute_majority_is_none():
    for n in (3, 5, 7, 9):
        for a in (0, 1):
            assert refute_max_ai(majority_family(n, a)) is None


def test_refute_alternating_vector():
    vec = SymValueVector.from_bits_str("010101")
    table, side = refute_max_ai(vec)
    target = expand(vec).bits ^ (ones_mask(5) if side else 0)
    assert table.bits != 0
    assert target & table.bits == 0
    assert moebius(table).degree() <= 2


def test_refute_small_case():
    table, _side = refute_max_ai(SymValueVector.from_bits_str("0101"))
    assert moebius(table).degree() <= 1


def test_refute_validation():
    with pytest.raises(ValueError):
        refute_max_ai(SymValueVector.from_bits_str("010"))  # even n
    with pytest.raises(ValueError):
        refute_max_ai(SymValueVector.from_bits_str("0001"))  # not trivial balanced


def test_sigma_factorize_parts():
    assert sigma_factorize(5, 3) == [1, 2]
    assert sigma_factorize(8, 8) == [8]
    assert sigma_factorize(12, 11) == [1, 2, 8]
    with pytest.raises(ValueError):
        sigma_factorize(5, 0)
    with pytest.raises(ValueError):
        sigma_factorize(5, 6)


def test_sigma_factorize_product_identity():
    for n in range(1, 10):
        for a in range(1, n + 1):
            prod = ones_mask(n)
            for p in sigma_factorize(n, a):
                prod &= expand(sanf_to_value(sigma(n, p))).bits
            assert prod == expand(sanf_to_value(sigma(n, a))).bits


def test_condition_examples():
    lam = value_to_sanf(majority_family(5, 0))
    assert lam.bits_str() == "000110"  # coefficient at 4 present
    assert max_ai_necessary_condition(lam) is True
    assert max_ai_necessary_condition(sigma(5, 1)) is False
    assert max_ai_necessary_condition(sigma(6, 6)) is True  # 2^t + 2^(t-1) = 6
    with pytest.raises(ValueError):
        max_ai_necessary_condition(SanfVector(1, 0b10))


def test_condition_annihilator_small():
    g = necessary_condition_annihilator(5)
    assert g.bits == expand(sanf_to_value(sigma(5, 1))).bits ^ ones_mask(5)
    assert moebius(g).degree() == 1
    assert g.bits & expand(sanf_to_value(sigma(5, 1))).bits == 0


def test_condition_annihilator_degrees():
    assert necessary_condition_annihilator(3).bits == ones_mask(3)  # empty product
    assert moebius(necessary_condition_annihilator(9)).degree() == 3
    assert moebius(necessary_condition_annihilator(11)).degree() == 3
    with pytest.raises(ValueError):
        necessary_condition_annihilator(1)


def test_condition_failures_are_annihilated():
    # every symmetric function failing the condition is killed, on the
    # side of its constant term, by the product annihilator
    for n in range(2, 10):
        g = necessary_condition_annihilator(n).bits
        ones = ones_mask(n)
        for bits in range(1 << (n + 1)):
            lam = SanfVector(n, bits)
            if max_ai_necessary_condition(lam):
                continue
            side = bits & 1
            target = expand(sanf_to_value(lam)).bits ^ (ones if side else 0)
            assert target & g == 0, (n, bits)
