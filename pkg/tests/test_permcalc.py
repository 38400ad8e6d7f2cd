import random
from itertools import permutations as iter_perms

import pytest

from bowcalc.exactalg import MultiPoly
from bowcalc.permcalc import (
    Composition,
    Permutation,
    ReducedWord,
    beta_poly,
    beta_sequence,
    bruhat_leq,
    coset_length,
    coset_matrix_Z,
    enumerate_coset,
    is_fully_separated,
    matching_F,
    matching_G,
    matrix_inversions,
    min_rep_double,
    min_rep_left,
    min_rep_right,
    reduced_word,
    subword_sum,
    tilde_w,
    tilde_y,
    w_distinguished,
    young_elements,
    young_longest,
)

W = Permutation.parse


def random_perm(rng, n):
    ol = list(range(1, n + 1))
    rng.shuffle(ol)
    return Permutation(ol)


def test_length_and_inversions():
    assert W("35412").length() == 7
    assert Permutation.identity(4).length() == 0
    rng = random.Random(0)
    for _ in range(30):
        w = random_perm(rng, 6)
        assert w.length() == w.inverse().length()


def test_compose_inverse():
    u, v = W("231"), W("312")
    assert (u * v).is_identity()
    assert u.inverse() == v


def test_reduced_word_roundtrip():
    w = W("35412")
    word = reduced_word(w)
    assert len(word) == 7
    assert Permutation.from_word(5, word) == w
    # a second strategy gives a second word for the same element
    word2 = reduced_word(w, rightmost=True)
    assert Permutation.from_word(5, word2) == w
    assert reduced_word(Permutation.identity(4)) == []


def test_beta_table_golden():
    # the table for the word s4 s2 s1 s3 s2 s4 s3
    word = [4, 2, 1, 3, 2, 4, 3]
    assert Permutation.from_word(5, word) == W("35412")
    assert beta_sequence(5, word) == [
        (4, 5), (2, 3), (1, 3), (2, 5), (1, 5), (2, 4), (1, 4),
    ]


def test_beta_single_letter_and_multiset_independence():
    assert beta_sequence(4, [2]) == [(2, 3)]
    rng = random.Random(4)
    for _ in range(20):
        w = random_perm(rng, 5)
        b1 = sorted(beta_sequence(5, reduced_word(w)))
        b2 = sorted(beta_sequence(5, reduced_word(w, rightmost=True)))
        assert b1 == b2
        # betas are exactly the positive roots sent negative by w^-1
        winv = w.inverse()
        expect = sorted(
            (a, b)
            for a in range(1, 6)
            for b in range(a + 1, 6)
            if winv(a) > winv(b)
        )
        assert b1 == expect


def test_beta_rejects_nonreduced():
    with pytest.raises(ValueError):
        beta_sequence(3, [1, 1])


def test_beta_concatenation_consistency():
    word = [4, 2, 1, 3, 2, 4, 3]
    betas = beta_sequence(5, word)
    prefix = Permutation.identity(5)
    for a, (x, y) in zip(word, betas):
        alpha = MultiPoly.linear(5, {a: 1, a + 1: -1})
        assert alpha.act_perm(prefix) == MultiPoly.linear(5, {x: 1, y: -1})
        prefix = prefix * Permutation.simple(5, a)


def test_subword_sum_golden():
    word = [4, 2, 1, 3, 2, 4, 3]
    betas = beta_sequence(5, word)
    h = MultiPoly.h(5)
    bp = lambda k: beta_poly(5, betas[k - 1])
    val = subword_sum(word, 5, W("23415"))
    assert val == h ** 2 * (bp(1) * bp(6) + h ** 2) * bp(3) * bp(5) * bp(7)
    # the full subword is unique
    assert subword_sum(word, 5, W("35412")) == bp(1) * bp(2) * bp(3) * bp(4) * bp(5) * bp(6) * bp(7)
    # no subword at all
    assert subword_sum([1], 3, W("321")).is_zero()


def test_bruhat_order():
    assert bruhat_leq(W("23415"), W("35412"))
    assert bruhat_leq(W("35412"), W("35412"))
    assert not bruhat_leq(W("35412"), W("23415"))
    rng = random.Random(11)
    for _ in range(25):
        u, w = random_perm(rng, 5), random_perm(rng, 5)
        le, ge = bruhat_leq(u, w), bruhat_leq(w, u)
        if le and ge:
            assert u == w


def test_min_reps():
    r = Composition((2, 2, 1))
    w = W("25143")
    assert min_rep_left(w, r) == W("25143")
    assert min_rep_left(W("52143"), r) == W("25143")
    # shortest in every coset, exhaustively on small cosets
    for base in iter_perms(range(1, 5)):
        wb = Permutation(base)
        rep = min_rep_left(wb, Composition((2, 2)))
        assert all(rep.length() <= (wb * v).length() for v in young_elements(Composition((2, 2))))
        rep_r = min_rep_right(wb, Composition((2, 2)))
        assert all(rep_r.length() <= (v * wb).length() for v in young_elements(Composition((2, 2))))


def test_coset_matrix_and_full_separation():
    r, c = Composition((2, 2, 1)), Composition((1, 2, 2))
    Z1 = coset_matrix_Z(W("14253"), r, c)
    Z2 = coset_matrix_Z(W("14235"), r, c)
    assert Z1 == ((1, 0, 1), (0, 1, 1), (0, 1, 0))
    assert Z2 == ((1, 0, 1), (0, 2, 0), (0, 0, 1))
    assert is_fully_separated(W("14253"), r, c)
    assert not is_fully_separated(W("14235"), r, c)
    # identity gives blockwise overlap counts
    Zid = coset_matrix_Z(Permutation.identity(5), r, c)
    assert Zid == ((1, 1, 0), (0, 1, 1), (0, 0, 1))
    # Z is constant on double cosets
    rng = random.Random(21)
    for _ in range(20):
        w = random_perm(rng, 5)
        u = rng.choice(list(young_elements(c)))
        v = rng.choice(list(young_elements(r)))
        assert coset_matrix_Z(u * w * v, r, c) == coset_matrix_Z(w, r, c)


def test_tilde_w_golden():
    r, c = Composition((3, 2, 2, 3)), Composition((2, 3, 2, 1, 2))
    A = ((1, 1, 0, 0, 1), (0, 0, 1, 0, 1), (1, 1, 0, 0, 0), (0, 1, 1, 1, 0))
    wA = tilde_w(A, r, c)
    assert wA.one_line == (1, 3, 9, 6, 10, 2, 4, 5, 7, 8)
    assert coset_matrix_Z(wA, r, c) == A
    assert wA.length() == matrix_inversions(A) == 15
    # 3x3 goldens
    r2, c2 = Composition((2, 2, 1)), Composition((1, 2, 2))
    assert tilde_w(((1, 0, 1), (0, 1, 1), (0, 1, 0)), r2, c2) == W("14253")
    assert tilde_w(((1, 0, 1), (0, 2, 0), (0, 0, 1)), r2, c2) == W("14235")


def test_min_rep_double():
    r, c = Composition((2, 2, 1)), Composition((1, 2, 2))
    w = W("14253")
    for u in young_elements(c):
        for v in young_elements(r):
            assert min_rep_double(u * w * v, c, r) == w


def test_matching_functions():
    r, c = Composition((3, 2, 2, 3)), Composition((2, 3, 2, 1, 2))
    A = ((1, 1, 0, 0, 1), (0, 0, 1, 0, 1), (1, 1, 0, 0, 0), (0, 1, 1, 1, 0))
    wA = tilde_w(A, r, c)
    assert matching_F(wA, c) == (1, 2, 5, 3, 5, 1, 2, 2, 3, 4)
    rng = random.Random(31)
    for _ in range(10):
        u = rng.choice(list(young_elements(c)))
        v = rng.choice(list(young_elements(r)))
        assert matching_F(u * wA, c) == matching_F(wA, c)
        assert matching_G(wA * v, r) == matching_G(wA, r)


def test_uniqueness_of_decomposition():
    # fully separated permutations admit a unique (u, w, v) factorization
    rng = random.Random(42)
    r, c = Composition((2, 2, 1)), Composition((1, 2, 2))
    w = W("14253")
    us = list(young_elements(c))
    vs = list(young_elements(r))
    for _ in range(100):
        u, up = rng.choice(us), rng.choice(us)
        v, vp = rng.choice(vs), rng.choice(vs)
        if u * w * v == up * w * vp:
            assert u == up and v == vp


def test_w_distinguished():
    r, c = Composition((2, 2, 1)), Composition((2, 1, 2))
    A = ((1, 0, 1), (1, 0, 1), (0, 1, 0))
    assert tilde_w(A, r, c) == W("14253")
    assert w_distinguished(A, r, c) == W("25143")
    # all-ones column margins leave the representative unchanged
    ones = Composition((1, 1, 1, 1, 1))
    A5 = coset_matrix_Z(W("25143"), r, ones)
    assert w_distinguished(A5, r, ones) == tilde_w(A5, r, ones)
    # shortest left coset representative property
    wd = w_distinguished(A, r, c)
    assert min_rep_left(wd, r) == wd


def test_young_longest():
    c = Composition((2, 1, 2))
    assert young_longest(c).one_line == (2, 1, 3, 5, 4)


def test_tilde_y_golden():
    r, c = Composition((3, 2, 2, 3)), Composition((2, 3, 2, 1, 2))
    A_moved = ((1, 1, 0, 0, 1), (0, 0, 1, 0, 1), (1, 1, 0, 0, 0), (0, 1, 1, 1, 0))
    ty = tilde_y(A_moved, r, c, (2, 3, 1, 5))
    assert ty.one_line == (1, 3, 9, 6, 2, 10, 4, 5, 7, 8)
    # resolving the crossing drops the length by one
    assert ty.length() == tilde_w(A_moved, r, c).length() - 1


def test_enumerate_coset():
    w = W("25143")
    ones = Composition((1, 1, 1, 1, 1))
    assert list(enumerate_coset(w, ones)) == [w]
    delta = Composition((2, 2, 1))
    coset = list(enumerate_coset(w, delta))
    assert len(coset) == len(set(coset)) == 4
    # exactly one coset element dominates 52314
    wp = W("52314")
    dominating = [z for z in coset if bruhat_leq(wp, z)]
    assert dominating == [W("52413")]


def test_coset_length():
    assert coset_length(W("52314"), Composition((2, 2, 1))) == 4


def test_positive_root_partition():
    # roots missing from the beta multiset complement the inversions
    rng = random.Random(8)
    for _ in range(15):
        w = random_perm(rng, 6)
        betas = set(beta_sequence(6, reduced_word(w)))
        n_pos = 15
        assert len(betas) + (n_pos - len(betas)) == n_pos
        assert len(betas) == w.length()


def test_reduced_word_class():
    rw = ReducedWord.of(W("35412"))
    assert len(rw) == 7
    assert rw.permutation() == W("35412")
    assert len(rw.betas) == 7
