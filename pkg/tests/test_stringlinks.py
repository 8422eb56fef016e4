import random

import pytest

from braidrep.matrices import RingMatrix
from braidrep.reps import make_tym
from braidrep.ring import RingContext, specialize
from braidrep.stringlinks import (Classical, Diagram, DiagramError,
                                  LambdaRelation, NormalForm, add_kink,
                                  compose, ctx_for_mode, diagram_from_word,
                                  eliminate, kernel_predicate,
                                  linking_profile_diagram, relations_of,
                                  self_writhe_correct, tym_matrix)
from braidrep.words import BraidWord, commutator, linking_profile_word

from test_words import random_word


def word(n, *ks):
    letters = []
    for k in ks:
        if isinstance(k, str):
            letters.append(("t", int(k[1:])))
        else:
            letters.append(("s", abs(k), 1 if k > 0 else -1))
    return BraidWord(n, letters)


def multi_ctx(n):
    return ctx_for_mode("multi", n)


def test_diagram_from_word_structure():
    d = diagram_from_word(word(2, 1))
    assert len(d.crossings) == 1
    assert d.permutation().img == (1, 0)
    d2 = diagram_from_word(word(2, "v1"))
    assert d2.has_virtual()


def test_diagram_validation():
    with pytest.raises(DiagramError):
        Diagram(2, [Classical(1, "a", "b", "a", "c")], ["a", "x"], ["b", "c"])
    with pytest.raises(DiagramError):
        Diagram(2, [], ["a"], ["a", "b"])


def test_relations_sigma1_multi():
    d = diagram_from_word(word(2, 1))
    ctx = multi_ctx(2)
    rels = relations_of(d, "multi", ctx)
    weights = {(r.src, r.dst): r.weight for r in rels}
    # x_2 = a_1^{u_2} and x_1 = a_2^{v_1}
    assert set(weights.values()) == {ctx.var("u2"), ctx.var("v1")}


def test_virtual_relations_tau1():
    d = diagram_from_word(word(2, "v1"))
    m = tym_matrix(d, "w3")
    ctx = m.ring
    al = ctx.var("al")
    assert m[0, 1] == al.inverse()
    assert m[1, 0] == al
    tym3 = tym_matrix(diagram_from_word(word(2, "v1")), "wmulti")
    c = tym3.ring
    assert tym3[0, 1] == c.var("al2").inverse()
    assert tym3[1, 0] == c.var("al1")


def test_eliminate_example_six_relations():
    ctx = ctx_for_mode("2var", 2)
    u, v = ctx.var("u"), ctx.var("v")
    rels = [
        LambdaRelation("m1", "m3", u),
        LambdaRelation("a1", "m2", v),
        LambdaRelation("m4", "a2", u),
        LambdaRelation("x2", "m3", v),
        LambdaRelation("m2", "x1", u),
        LambdaRelation("m4", "m1", v),
    ]
    nf = eliminate(rels, ["a1", "a2"], ["x1", "x2"])
    assert nf == NormalForm(2, [1, 2], [u * v, ctx.one()])


def test_eliminate_trivial():
    d = Diagram.trivial(3)
    m = tym_matrix(d, "2var")
    assert m.is_identity()


def test_eliminate_broken_chain():
    ctx = ctx_for_mode("2var", 1)
    with pytest.raises(DiagramError):
        eliminate([LambdaRelation("a1", "m1", ctx.var("u"))], ["a1"], ["x1"])


def test_ex311_figure_link():
    m = tym_matrix(diagram_from_word(word(2, 1, 1)), "multi")
    ctx = m.ring
    assert m[0, 0] == ctx.var("u2") * ctx.var("v2")
    assert m[1, 1] == ctx.var("u1") * ctx.var("v1")
    assert m[0, 1].is_zero() and m[1, 0].is_zero()


def test_ex312_matrices():
    ctx = multi_ctx(3)
    m1 = tym_matrix(diagram_from_word(word(3, 1)), "multi")
    assert m1[1, 0] == ctx.var("v1") and m1[0, 1] == ctx.var("u2")
    m2 = tym_matrix(diagram_from_word(word(3, -2)), "multi")
    assert m2[2, 1] == ctx.var("u2").inverse()
    assert m2[1, 2] == ctx.var("v3").inverse()
    prod = tym_matrix(diagram_from_word(word(3, 1, -2)), "multi")
    assert prod[0, 2] == ctx.var("u2") * ctx.var("v3").inverse()
    assert prod[1, 0] == ctx.var("v1")
    assert prod[2, 1] == ctx.var("u1").inverse()


def test_twisted_product_rule():
    # the invariant of a stacked diagram is the first factor times the
    # permutation twisted second factor
    rng = random.Random(23)
    for _ in range(12):
        w1 = random_word(rng, 3, 5)
        w2 = random_word(rng, 3, 5)
        m1 = tym_matrix(diagram_from_word(w1), "multi")
        m2 = tym_matrix(diagram_from_word(w2), "multi")
        both = tym_matrix(diagram_from_word(w1 * w2), "multi")
        assert both == m1 * m2.variable_twist(w1.permutation())


def test_pure_product_is_plain_product():
    rng = random.Random(29)
    count = 0
    while count < 6:
        w1 = random_word(rng, 3, 6)
        w2 = random_word(rng, 3, 6)
        if not (w1.is_pure() and w2.is_pure()):
            continue
        count += 1
        m1 = tym_matrix(diagram_from_word(w1), "multi")
        m2 = tym_matrix(diagram_from_word(w2), "multi")
        assert tym_matrix(diagram_from_word(w1 * w2), "multi") == m1 * m2


def test_compose_diagrams():
    d1 = diagram_from_word(word(3, 1))
    d2 = diagram_from_word(word(3, -2))
    d = compose(d1, d2)
    assert tym_matrix(d, "multi") == tym_matrix(diagram_from_word(word(3, 1, -2)), "multi")
    assert tym_matrix(compose(d1, Diagram.trivial(3)), "multi") == tym_matrix(d1, "multi")


def test_two_var_is_collapse_of_multi():
    rng = random.Random(31)
    ctx2 = ctx_for_mode("2var", 3)
    for _ in range(10):
        w = random_word(rng, 3, 8)
        d = diagram_from_word(w)
        multi = tym_matrix(d, "multi")
        images = {}
        for v in multi.ring.variables:
            images[v] = ctx2.var("u") if v.startswith("u") else ctx2.var("v")
        collapsed = multi.map_entries(
            lambda p: specialize(p, images, ctx2), ring=ctx2)
        assert collapsed == tym_matrix(d, "2var")


def test_specialization_bridge_to_one_variable():
    # multi variable matrix at u_i -> t_i, v_i -> 1 on sigma_i gives the
    # one variable generator block with t_{i+1}
    n = 3
    ctx = multi_ctx(n)
    target = RingContext(("t1", "t2", "t3"))
    for i in (1, 2):
        m = tym_matrix(diagram_from_word(word(n, i)), "multi")
        images = {}
        for v in ctx.variables:
            if v.startswith("u"):
                images[v] = target.var("t" + v[1:])
            else:
                images[v] = target.one()
        got = m.map_entries(lambda p: specialize(p, images, target), ring=target)
        assert got[i - 1, i] == target.var("t%d" % (i + 1))
        assert got[i, i - 1] == target.one()
        for k in range(n):
            if k not in (i - 1, i):
                assert got[k, k] == target.one()


def test_kink_gadget_needs_correction():
    d = Diagram.trivial(1)
    kinked = add_kink(d, 1, sign=1)
    ctx = ctx_for_mode("2var", 1)
    uv = ctx.var("u") * ctx.var("v")
    uncorrected = tym_matrix(kinked, "2var", self_writhe_correction=False)
    assert uncorrected[0, 0] == uv
    corrected = tym_matrix(kinked, "2var")
    assert corrected.is_identity()
    neg = add_kink(d, 1, sign=-1)
    assert tym_matrix(neg, "2var").is_identity()
    assert tym_matrix(neg, "2var", self_writhe_correction=False)[0, 0] == uv.inverse()


def test_braid_words_have_no_self_crossings():
    rng = random.Random(37)
    for _ in range(15):
        w = random_word(rng, 4, 10, virtual=True)
        d = diagram_from_word(w)
        for s in range(1, 5):
            assert d.self_writhe(s) == 0


def test_monomiality_and_purity():
    rng = random.Random(41)
    for _ in range(15):
        w = random_word(rng, 3, 8, virtual=True)
        d = diagram_from_word(w)
        m = tym_matrix(d, "wmulti")
        assert m.is_monomial()
        diagonal = all(m[i, j].is_zero() for i in range(3) for j in range(3) if i != j)
        assert diagonal == d.is_pure()


def test_linking_profile_matches_word_version():
    rng = random.Random(43)
    for _ in range(20):
        w = random_word(rng, 4, 10, virtual=True)
        assert linking_profile_diagram(diagram_from_word(w)) == linking_profile_word(w)


def test_kernel_predicate_examples():
    sq = diagram_from_word(word(2, 1, 1))
    assert not kernel_predicate(sq, "318")
    assert not tym_matrix(sq, "2var").is_identity()
    undo = diagram_from_word(word(2, 1, 1, -1, -1))
    assert kernel_predicate(undo, "318")
    assert kernel_predicate(undo, "319")
    assert tym_matrix(undo, "2var").is_identity()


def test_kernel_predicate_purity_requirement():
    d = diagram_from_word(word(2, 1))
    with pytest.raises(DiagramError):
        kernel_predicate(d, "319")
    with pytest.raises(DiagramError):
        kernel_predicate(d, "49")
    v = diagram_from_word(word(2, "v1"))
    with pytest.raises(DiagramError):
        kernel_predicate(v, "318")


def test_diagram_file_round_trip():
    d = diagram_from_word(word(3, 1, "v2", -1))
    again = Diagram.parse(d.render())
    assert again.top == d.top and again.bottom == d.bottom
    assert again.crossings == d.crossings
    assert tym_matrix(again, "wmulti") == tym_matrix(d, "wmulti")


def test_diagram_parse_errors():
    with pytest.raises(DiagramError):
        Diagram.parse("top 1 a\nbottom 1 a\n")
    with pytest.raises(DiagramError):
        Diagram.parse("strands 1\ntop 1 a\nbottom 1 b\nx ? a b c d\n")


def test_welded_specialization_recovers_wtym():
    # wmulti collapsed to u, v, al agrees with the w3 pipeline
    rng = random.Random(47)
    ctx3 = ctx_for_mode("w3", 3)
    for _ in range(10):
        w = random_word(rng, 3, 8, virtual=True)
        d = diagram_from_word(w)
        m = tym_matrix(d, "wmulti")
        images = {}
        for v in m.ring.variables:
            images[v] = ctx3.var(v.rstrip("123"))
        collapsed = m.map_entries(lambda p: specialize(p, images, ctx3), ring=ctx3)
        assert collapsed == tym_matrix(d, "w3")
