"""Frames, classes, and character restrictions on PSL(2,q)."""

from __future__ import annotations

import itertools

import pytest

from helpzc.cyclotomic import CycSum, euler_phi
from helpzc.psl2 import (
    CharRestriction,
    brauer_irreducibles,
    char_value,
    decompose_chi,
    make_context,
    make_frame,
    v_pair_count,
    v_set_count,
)


def frame_for(q, m):
    return make_frame(make_context(q), m)


def test_make_context_examples():
    assert (make_context(19).p, make_context(19).f) == (19, 1)
    assert (make_context(27).p, make_context(27).f) == (3, 3)
    with pytest.raises(ValueError, match="odd prime power"):
        make_context(15)
    with pytest.raises(ValueError, match="odd prime power"):
        make_context(16)


def test_group_order():
    assert make_context(11).order == 660
    assert make_context(19).order == 3420


def test_make_frame_examples():
    assert frame_for(19, 10).epsilon == -1
    assert frame_for(41, 10).epsilon == 1
    with pytest.raises(ValueError, match="no p-regular element of order 7"):
        frame_for(19, 7)
    with pytest.raises(ValueError, match="no p-regular element"):
        frame_for(19, 19)


def test_frame_small_orders():
    assert frame_for(19, 1).epsilon == 1
    assert frame_for(13, 2).epsilon == 1   # 13 = 1 mod 4
    assert frame_for(19, 2).epsilon == -1  # 19 = -1 mod 4


def test_class_canonicalization():
    fr = frame_for(19, 10)
    assert fr.class_of(0).exp == 0 and fr.class_of(0).order == 1
    assert fr.class_of(7).exp == 3 and fr.class_of(7).order == 10
    assert fr.class_of(-3).exp == 3
    assert fr.class_of(12).exp == 2 and fr.class_of(12).order == 5
    assert fr.class_of(5).order == 2


def test_classes_of_order_dividing_counts():
    fr = frame_for(19, 10)
    all_classes = fr.classes_of_order_dividing(10)
    assert len(all_classes) == 6
    assert sorted(c.order for c in all_classes) == [1, 2, 5, 5, 10, 10]
    assert sorted(c.exp for c in all_classes if c.order == 5) == [2, 4]
    assert sorted(c.exp for c in all_classes if c.order == 10) == [1, 3]
    assert len(fr.classes_of_order_dividing(5)) == 3
    assert fr.classes_of_order_dividing(1) == (fr.identity,)
    with pytest.raises(ValueError, match="does not divide"):
        fr.classes_of_order_dividing(4)


def test_class_count_formula():
    for q, m in [(19, 10), (29, 14), (13, 6), (43, 22), (11, 5)]:
        fr = frame_for(q, m)
        assert len(fr.classes()) == m // 2 + 1
        expected = 1 + (1 if m % 2 == 0 else 0) + sum(
            euler_phi(e) // 2 for e in range(3, m + 1) if m % e == 0
        )
        assert len(fr.classes()) == expected


def test_char_value_paper_instances():
    fr = frame_for(19, 10)
    chi2 = CharRestriction.brauer((2,))
    chi4 = CharRestriction.brauer((4,))
    assert char_value(fr, chi2, fr.identity) == 3
    assert char_value(fr, chi2, fr.class_of(5)) == -1
    assert char_value(fr, chi4, fr.identity) == 5
    assert char_value(fr, chi4, fr.class_of(5)) == 1


def test_phi_at_the_involution():
    # phi_h(g0^t) = 2 * eps * (-1)^h on a frame of even order 2t
    for q in (19, 41):
        fr = frame_for(q, 10)
        for h in range(1, 5):
            val = char_value(fr, CharRestriction.phi(h), fr.class_of(5))
            assert val == 2 * fr.epsilon * (-1) ** h


def test_degrees_match_identity_values():
    fr = frame_for(19, 10)
    chars = [
        CharRestriction.trivial(),
        CharRestriction.phi(2),
        CharRestriction.psi(1),
        CharRestriction.brauer((2,)),
        CharRestriction.brauer((4,)),
    ]
    for chi in chars:
        assert char_value(fr, chi, fr.identity) == chi.degree(fr)
    assert CharRestriction.phi(1).degree(fr) == 18
    assert CharRestriction.psi(1).degree(fr) == 20


def test_phi_psi_index_symmetry():
    fr = frame_for(19, 10)
    for h, h2 in [(1, 9), (2, 12), (3, 7), (4, 14)]:
        for cls in fr.classes():
            assert char_value(fr, CharRestriction.phi(h), cls) == char_value(
                fr, CharRestriction.phi(h2), cls
            )
            assert char_value(fr, CharRestriction.psi(h), cls) == char_value(
                fr, CharRestriction.psi(h2), cls
            )


def test_char_values_are_real():
    fr = frame_for(29, 14)
    chars = [CharRestriction.phi(3), CharRestriction.brauer((4,)), CharRestriction.psi(2)]
    for chi in chars:
        for cls in fr.classes():
            v = char_value(fr, chi, cls)
            assert v.conjugate() == v


def test_phi_requires_h_off_the_frame_order():
    fr = frame_for(19, 10)
    with pytest.raises(ValueError):
        char_value(fr, CharRestriction.phi(10), fr.class_of(1))
    with pytest.raises(ValueError):
        char_value(fr, CharRestriction.psi(20), fr.class_of(1))


def test_brauer_validation():
    with pytest.raises(ValueError, match="even"):
        CharRestriction.brauer((3,))
    with pytest.raises(ValueError):
        CharRestriction.brauer(())
    assert CharRestriction.brauer((2, 0)).label == "chi_2,0"


def test_brauer_irreducibles_counts():
    ctx19 = make_context(19)
    assert len(brauer_irreducibles(ctx19, make_frame(ctx19, 10))) == 10
    ctx9 = make_context(9)
    assert len(brauer_irreducibles(ctx9, make_frame(ctx9, 5))) == 5
    ctx3 = make_context(3)
    assert len(brauer_irreducibles(ctx3, make_frame(ctx3, 2))) == 2
    ctx29 = make_context(29)
    assert len(brauer_irreducibles(ctx29, make_frame(ctx29, 14))) == 15
    ctx41 = make_context(41)
    assert len(brauer_irreducibles(ctx41, make_frame(ctx41, 10))) == 21


def test_v_set_count_examples():
    fr = frame_for(19, 10)
    assert v_set_count(fr, (4,), 1) == 2
    assert v_pair_count(fr, (4,), 1) == 1
    assert v_pair_count(fr, (4,), 2) == 1
    assert v_pair_count(fr, (4,), 5) == 0


def test_decompose_chi_examples():
    fr = frame_for(19, 10)
    k0, n = decompose_chi(fr, (4,))
    assert k0 == 1 and n[1] == 1 and n[2] == 1 and all(n[h] == 0 for h in (3, 4, 5))
    k0, n = decompose_chi(fr, (2,))
    assert k0 == 1 and n[1] == 1 and all(n[h] == 0 for h in (2, 3, 4, 5))
    k0, n = decompose_chi(fr, (0,))
    assert k0 == 1 and all(v == 0 for v in n.values())


def check_decomposition_identity(fr, weights):
    """chi_R = k0 * 1 + eps * sum_h n_h (phi_h - psi_h), as exact values."""
    k0, n = decompose_chi(fr, weights)
    chi = CharRestriction.brauer(weights)
    for cls in fr.classes():
        lhs = char_value(fr, chi, cls)
        rhs = CycSum.integer(fr.m, k0)
        for h, nh in n.items():
            if nh:
                diff = char_value(fr, CharRestriction.phi(h), cls) - char_value(
                    fr, CharRestriction.psi(h), cls
                )
                rhs = rhs + fr.epsilon * nh * diff
        assert lhs == rhs, (weights, cls)
    # degree bookkeeping: |X_R| = k0 + 2 * sum_h n_h
    assert chi.degree(fr) == k0 + 2 * sum(n.values())


def test_decomposition_identity_small():
    fr = frame_for(19, 10)
    for weights in [(2,), (4,), (6,), (2, 2), (1, 1), (3, 1)]:
        check_decomposition_identity(fr, weights)


def test_decomposition_identity_mixed_frames():
    for q, m in [(13, 6), (11, 6), (29, 14)]:
        fr = frame_for(q, m)
        for weights in itertools.product(range(5), repeat=2):
            if sum(weights) % 2 == 0:
                check_decomposition_identity(fr, weights)
