import random

import pytest

from braidrep.matrices import RingMatrix
from braidrep.reps import (GenRep, make_burau, make_one_dim, make_tym,
                           make_wtym, tensor_one_dim)
from braidrep.ring import RingContext
from braidrep.words import BraidWord, commutator

from test_words import random_word

T = RingContext(("t",))


def test_burau_generator_block():
    bur = make_burau(2, T.var("t"))
    t = T.var("t")
    expect = RingMatrix.from_rows(T, [[T.zero(), t], [T.one(), T.one() - t]])
    assert bur.sigma_images[1] == expect
    assert bur.sigma_images[1] * bur.sigma_inv_images[1] == RingMatrix.identity(T, 2)


def test_tym_generator_block():
    tym = make_tym(2)
    ring = tym.ring
    t = ring.var("t")
    expect = RingMatrix.from_rows(ring, [[ring.zero(), ring.one()], [t, ring.zero()]])
    assert tym.sigma_images[1] == expect


def test_tym_sigma_squared():
    tym = make_tym(2)
    w = BraidWord(2, [("s", 1, 1), ("s", 1, 1)])
    t = tym.ring.var("t")
    assert tym.evaluate(w) == RingMatrix.identity(tym.ring, 2).scale(t)


def test_wtym_generators():
    wt = make_wtym(2)
    u, v, al = (wt.ring.var(x) for x in ("u", "v", "al"))
    s = wt.sigma_images[1]
    assert s[0, 1] == u and s[1, 0] == v and s[0, 0].is_zero()
    tau = wt.tau_images[1]
    assert tau[0, 1] == al.inverse() and tau[1, 0] == al
    assert wt.evaluate(BraidWord(2, [("t", 1), ("t", 1)])).is_identity()


def test_braid_relation_burau():
    bur = make_burau(3, T.var("t"))
    w1 = BraidWord(3, [("s", 1, 1), ("s", 2, 1), ("s", 1, 1)])
    w2 = BraidWord(3, [("s", 2, 1), ("s", 1, 1), ("s", 2, 1)])
    assert bur.evaluate(w1) == bur.evaluate(w2)


def test_check_relations_pass():
    for n in range(2, 8):
        assert make_tym(n).check_relations() == []
    for n in range(2, 6):
        assert make_wtym(n).check_relations() == []
        assert make_burau(n, T.var("t")).check_relations() == []


def test_check_relations_negative_control():
    tym = make_tym(3)
    broken = dict(tym.sigma_images)
    ring = tym.ring
    bad = RingMatrix.from_entries_dict(
        ring, 3, {(0, 1): ring.one(), (1, 0): ring.one(), (2, 2): ring.one()})
    broken[1] = bad
    rep = GenRep(3, 3, ring, broken, tym.sigma_inv_images, name="broken")
    assert rep.check_relations() != []


def test_one_dim_and_tensor():
    ctx = RingContext(("t", "q"))
    q = ctx.var("q")
    one_dim = make_one_dim(4, q)
    w = BraidWord(4, [("s", 1, 1), ("s", 3, 1), ("s", 2, -1)])
    assert one_dim.evaluate(w)[0, 0] == q
    tym = make_tym(4, ctx)
    tw = tensor_one_dim(tym, q)
    assert tw.sigma_images[1] == tym.sigma_images[1].scale(q)
    undone = tensor_one_dim(tw, q.inverse())
    assert undone.sigma_images[2] == tym.sigma_images[2]


def test_tensor_context_mismatch():
    with pytest.raises(ValueError):
        tensor_one_dim(make_tym(3), RingContext(("q",)).var("q"))


def test_evaluate_strand_mismatch():
    tym = make_tym(3)
    with pytest.raises(ValueError):
        tym.evaluate(BraidWord(4, [("s", 1, 1)]))


def test_evaluate_tau_on_classical_rep():
    tym = make_tym(3)
    with pytest.raises(ValueError):
        tym.evaluate(BraidWord(3, [("t", 1)]))


def test_evaluate_empty_word():
    assert make_tym(3).evaluate(BraidWord.identity(3)).is_identity()


def test_homomorphism_property():
    rng = random.Random(5)
    wt = make_wtym(4)
    for _ in range(15):
        w1 = random_word(rng, 4, rng.randrange(0, 10), virtual=True)
        w2 = random_word(rng, 4, rng.randrange(0, 10), virtual=True)
        assert wt.evaluate(w1 * w2) == wt.evaluate(w1) * wt.evaluate(w2)
        assert (wt.evaluate(w1) * wt.evaluate(w1.inverse())).is_identity()


def test_tym_images_are_monomial():
    rng = random.Random(9)
    tym = make_tym(5)
    for _ in range(10):
        w = random_word(rng, 5, 12)
        assert tym.evaluate(w).is_monomial()


def test_burau_determinant():
    rng = random.Random(13)
    bur = make_burau(4, T.var("t"))
    t = T.var("t")
    for _ in range(8):
        w = random_word(rng, 4, 8)
        det = bur.evaluate(w).determinant()
        assert det == (-t) ** w.exponent_sum()


def random_pure_word(rng, n, length):
    while True:
        w = random_word(rng, n, length)
        if w.is_pure():
            return w


def test_pure_commutators_in_tym_kernel():
    # commutators of pure braids have zero linking numbers, so they land
    # in the kernel of the Tong-Yang-Ma representation
    rng = random.Random(17)
    tym = make_tym(3)
    for _ in range(10):
        a = random_pure_word(rng, 3, 6)
        b = random_pure_word(rng, 3, 6)
        assert tym.evaluate(commutator(a, b)).is_identity()
