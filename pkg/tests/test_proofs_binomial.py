from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from incidence_proofs import fixtures as F
from incidence_proofs.bracket_core import Configuration, HomCoords
from incidence_proofs.certify import run_recipe
from incidence_proofs.proofs_binomial import (
    CONCL, HYP, BinomialEquation, BinomialProof, ChainBroken, LabelCollision, NotAFinalPolynomial,
    ZeroBracket, cancellation_report, chain_collapse, collinearity_equation, coplanarity_equation,
    multiply_equations, same_equation, sound_on, verify_cancellation, verify_numeric,
)

from oracles import leibniz_det, multiset_residue

ints = st.integers(-40, 40)
vec3 = st.tuples(ints, ints, ints).filter(any)


def eq(text, name="e", role=HYP):
    """'[A B D][A C E] = [A B E][A C D]' with single-character labels allowed."""
    from incidence_proofs.fixtures import _brackets
    lhs, rhs = text.split("=")
    return BinomialEquation(name, _brackets(lhs), _brackets(rhs), role)


def test_collinearity_equation_shape():
    e = collinearity_equation("A", "B", "C", "D", "E")
    assert e.lhs == (("A", "B", "D"), ("A", "C", "E"))
    assert e.rhs == (("A", "B", "E"), ("A", "C", "D"))
    assert e.side_conditions == (("A", "D", "E"),)


def test_collinearity_equation_pappus_first():
    e = collinearity_equation("A", "B", "C", "D", "I")
    ref = F.load("pappus").forms["binomial"].equations[0]
    assert e.lhs == ref.lhs and e.rhs == ref.rhs


def test_collinearity_equation_collision():
    with pytest.raises(LabelCollision):
        collinearity_equation("A", "B", "C", "A", "E")


def test_coplanarity_equation_sixteen_first_line():
    e = coplanarity_equation("1", "5", "2", "6", "3", "4")
    assert e.lhs == (tuple("1253"), tuple("1264"))
    assert e.rhs == (tuple("1254"), tuple("1263"))


def test_coplanarity_equation_toblerone_7812():
    e = coplanarity_equation("7", "8", "1", "2", "3", "4")
    assert same_equation(e, eq("[1237][1248] = [1247][1238]"))


def test_coplanarity_equation_collision():
    with pytest.raises(LabelCollision):
        coplanarity_equation("1", "2", "3", "4", "4", "5")


def test_zero_bracket_rejected():
    with pytest.raises(ZeroBracket):
        BinomialEquation("bad", (("A", "A", "D"), ("A", "B", "C")), (("A", "B", "D"), ("A", "C", "D")))


@given(st.lists(vec3, min_size=5, max_size=5))
def test_collinearity_binomial_difference_is_abc_times_ade(vs):
    # [ABD][ACE] - [ABE][ACD] = [ABC][ADE]
    cfg = Configuration(2, dict(zip("ABCDE", vs)))
    e = collinearity_equation(*"ABCDE")
    A, B, C, D, E = vs
    expected = leibniz_det([A, B, C]) * leibniz_det([A, D, E])
    assert e.left.evaluate(cfg) - e.right.evaluate(cfg) == expected


# -- cancellation -----------------------------------------------------------------

@pytest.mark.parametrize("fid,form,n,pairs", [
    ("desargues", "binomial", 10, 20),
    ("pappus", "binomial", 9, 18),
    ("sixteen_point_v1", "binomial", 8, 16),
    ("toblerone", "blocks", 9, 18),
    ("toblerone", "binomial", 3, 6),
])
def test_transcribed_proofs_cancel(fid, form, n, pairs):
    proof = F.load(fid).forms[form]
    assert len(proof.equations) == n
    rep = verify_cancellation(proof)
    assert rep.residue == [] and rep.sign_ok
    assert len(rep.matched) == pairs


def _all_sides(proof):
    left = [b for e in proof.equations for b in e.lhs]
    right = [b for e in proof.equations for b in e.rhs]
    return left, right


@pytest.mark.parametrize("i", range(9))
def test_pappus_drop_one_leaves_four(i):
    proof = F.load("pappus").forms["binomial"]
    name = proof.equations[i].name
    if proof.equations[i].role == CONCL:
        return
    short = proof.without(name)
    rep = cancellation_report(short)
    oracle = multiset_residue(*_all_sides(short))
    assert len(rep.residue) == sum(oracle.values()) == 4
    with pytest.raises(NotAFinalPolynomial):
        verify_cancellation(short)


def test_cancellation_sign_mismatch():
    p = F.load("pappus").forms["binomial"]
    e0 = p.equations[0]
    flipped = BinomialEquation(e0.name, e0.lhs, e0.rhs, e0.role, e0.incidence, 1, -1)
    bad = BinomialProof((flipped,) + p.equations[1:])
    rep = cancellation_report(bad)
    assert rep.residue == [] and not rep.sign_ok and not rep.ok


def test_conclusion_required():
    p = F.load("pappus").forms["binomial"]
    hyps = BinomialProof(tuple(e.with_role(HYP) for e in p.equations))
    with pytest.raises(ValueError):
        cancellation_report(hyps)


# -- numeric --------------------------------------------------------------------------

def test_desargues_numeric_on_certified_instance():
    fx = F.load("desargues")
    cfg = run_recipe(fx.theorem, 0)
    rep = verify_numeric(fx.forms["binomial"], cfg)
    assert all(v.holds for v in rep.equations) and len(rep.equations) == 10
    assert rep.nondegenerate


def test_random_points_fail_hypotheses():
    import random
    rng = random.Random(3)
    pts = {x: tuple(rng.randint(-99, 99) for _ in range(2)) + (1,) for x in "ABCDUVWXYZ"}
    rep = verify_numeric(F.load("desargues").forms["binomial"], Configuration(2, pts))
    assert len(rep.failing_hypotheses()) == 9


def test_nondegeneracy_violation_reported():
    proof = BinomialProof((collinearity_equation(*"ABCDE", role=CONCL),))
    cfg = Configuration(2, {"A": (0, 0, 1), "B": (1, 5, 1), "C": (3, 2, 1), "D": (1, 1, 1), "E": (2, 2, 1)})
    rep = verify_numeric(proof, cfg)
    assert ("A", "D", "E") in rep.vanishing
    assert not rep.nondegenerate


@pytest.mark.parametrize("seed", range(5))
def test_soundness_on_pappus(seed):
    fx = F.load("pappus")
    assert sound_on(fx.forms["binomial"], run_recipe(fx.theorem, seed))


# -- chains ----------------------------------------------------------------------------

def test_chain_collapse_toblerone_blocks():
    blocks = F.load("toblerone").forms["blocks"].equations
    targets = F.load("toblerone").forms["binomial"].equations
    for k in range(3):
        got = chain_collapse(blocks[3 * k: 3 * k + 3])
        assert same_equation(got, targets[k]), str(got)


def test_chain_collapse_block_one_exact():
    blocks = F.load("toblerone").forms["blocks"].equations
    got = chain_collapse(blocks[:3])
    assert same_equation(got, eq("[1237][4568] = [1238][4567]"))
    assert got.left.overall_sign * got.right.overall_sign == 1


def test_chain_collapse_single():
    e = collinearity_equation(*"ABCDE")
    assert same_equation(chain_collapse([e]), e)


def test_chain_collapse_broken():
    b = list(F.load("toblerone").forms["blocks"].equations[:3])
    mid = b[1]
    b[1] = BinomialEquation(mid.name, ((mid.lhs[0][1], mid.lhs[0][2], mid.lhs[0][3], "9"), mid.lhs[1]), mid.rhs)
    with pytest.raises(ChainBroken) as ei:
        chain_collapse(b)
    assert ei.value.index in (0, 1, 2)


def test_multiply_is_product_of_sides():
    a = collinearity_equation(*"ABCDE")
    b = collinearity_equation(*"ADEBC")
    m = multiply_equations([a, b])
    import random
    rng = random.Random(0)
    cfg = Configuration(2, {x: (rng.randint(-9, 9), rng.randint(-9, 9), 1) for x in "ABCDE"})
    lhs = a.left.evaluate(cfg) * b.left.evaluate(cfg)
    rhs = a.right.evaluate(cfg) * b.right.evaluate(cfg)
    # the cancelled factors are nonzero here, so the quotient equation has the same ratio
    if m.right.evaluate(cfg) != 0 and rhs != 0:
        assert m.left.evaluate(cfg) / m.right.evaluate(cfg) == lhs / rhs
