from dataclasses import replace

import pytest
from hypothesis import given, settings, strategies as st

from incidence_proofs import fixtures as F
from incidence_proofs.bracket_core import HomCoords, UnknownLabel, bracket_value
from incidence_proofs.proofs_binomial import BinomialProof, collinearity_equation
from incidence_proofs.certify import (
    FreePoint, Meet2, PointOnLine, RecipeError, Statement, TheoremSpec, TrialReport, certify,
    certify_proof_forms, check_hypotheses, run_recipe, trial_seed, vanishing_nondegeneracy,
)

from oracles import leibniz_det

THEOREMS = ["desargues", "pappus", "sixteen_point_v1", "sixteen_point_v2", "toblerone", "menelaus3d", "ceva3d"]


@pytest.mark.parametrize("fid", THEOREMS)
def test_recipe_satisfies_hypotheses(fid):
    spec = F.load(fid).theorem
    for seed in range(3):
        cfg = run_recipe(spec, seed)
        assert check_hypotheses(spec, cfg) == []
        assert spec.conclusion.evaluate(cfg)[0]


def test_desargues_hypotheses_exactly_zero_by_oracle():
    spec = F.load("desargues").theorem
    cfg = run_recipe(spec, 0)
    for h in spec.hypotheses:
        rows = [cfg[x].coords for x in h.labels]
        assert leibniz_det(rows) == 0
    # conclusion too, and the generic brackets do not vanish
    assert leibniz_det([cfg[x].coords for x in "BDV"]) == 0
    assert all(leibniz_det([cfg[x].coords for x in b]) != 0 for b in spec.nondegeneracy)


def test_recipe_is_deterministic():
    spec = F.load("pappus").theorem
    a, b = run_recipe(spec, 11), run_recipe(spec, 11)
    assert {k: a[k].coords for k in "ABCDEFGHI"} == {k: b[k].coords for k in "ABCDEFGHI"}
    c = run_recipe(spec, 12)
    assert a["A"].coords != c["A"].coords


def test_recipe_respects_range():
    spec = F.load("desargues").theorem
    cfg = run_recipe(spec, 5, R=3)
    # free points are drawn from [-3, 3] before reduction to primitive form
    assert all(abs(x) <= 3 for x in cfg["A"].coords)


def test_undefined_label_is_static_error():
    with pytest.raises(RecipeError, match="undefined"):
        TheoremSpec("bad", 2, (FreePoint("A"), PointOnLine("C", "A", "B")))


def test_statement_with_unknown_label():
    with pytest.raises(RecipeError):
        TheoremSpec("bad", 2, (FreePoint("A"), FreePoint("B")), (Statement("collinear", ("A", "B", "Z")),))


def test_duplicate_label():
    with pytest.raises(RecipeError, match="twice"):
        TheoremSpec("bad", 2, (FreePoint("A"), FreePoint("A")))


def test_statement_arity():
    with pytest.raises(RecipeError, match="arity"):
        TheoremSpec("bad", 2, (FreePoint("A"), FreePoint("B")), (Statement("collinear", ("A", "B")),))


def test_planar_recipe_rejects_space_steps():
    spec = F.load("sixteen_point_v1").theorem
    with pytest.raises(RecipeError):
        TheoremSpec("bad", 2, spec.recipe)


def test_perturbation_names_broken_hypotheses():
    spec = F.load("desargues").theorem
    cfg = run_recipe(spec, 0)
    a = cfg["A"].coords
    bad = cfg.with_points({"A": HomCoords((a[0] + 1,) + a[1:])})
    failing = {str(h) for h, _ in check_hypotheses(spec, bad)}
    # oracle: exactly the hypotheses mentioning A stop vanishing
    expect = {str(h) for h in spec.hypotheses
              if leibniz_det([bad[x].coords for x in h.labels]) != 0}
    assert failing == expect
    assert failing == {"collinear A C Y", "collinear A B Z", "collinear A D U"}


def test_nondegeneracy_detection():
    spec = F.load("desargues").theorem
    cfg = run_recipe(spec, 0)
    assert vanishing_nondegeneracy(spec, cfg) == []
    flat = cfg.with_points({"D": cfg["C"]})
    assert ("A", "C", "D") in vanishing_nondegeneracy(spec, flat)


def test_trial_seeds():
    assert trial_seed(7, 0) == 7
    assert trial_seed(7, 3) == 4
    assert trial_seed(7, 3, 2) == 4 + 2 * 2 ** 64
    assert len({trial_seed(0, i, a) for i in range(50) for a in range(16)}) == 800


@pytest.mark.parametrize("fid", ["desargues", "pappus", "sixteen_point_v1"])
def test_certify_hundred(fid):
    r = certify(F.load(fid).theorem, 100, seed=0)
    assert (r.passed, r.requested, r.failed) == (100, 100, 0)
    assert r.ok
    assert "100/100" in r.summary()


@pytest.mark.parametrize("fid", ["desargues", "pappus", "sixteen_point_v1", "sixteen_point_v2", "toblerone"])
def test_certify_all_forms(fid):
    fx = F.load(fid)
    r = certify_proof_forms(fx.theorem, fx.forms, 20, seed=1)
    assert r.ok, r.summary()
    assert r.forms == {k: 20 for k in fx.forms}


def test_certify_list_of_proofs_uses_kind_names():
    fx = F.load("desargues")
    r = certify_proof_forms(fx.theorem, [fx.forms["binomial"], fx.forms["quad"]], 5)
    assert r.forms == {"binomial": 5, "quad": 5}


def test_resample_rate_is_small():
    r = certify(F.load("pappus").theorem, 300, seed=2)
    assert r.ok
    assert r.resampled / r.requested < 0.01


def test_false_conclusion_is_reported():
    spec = F.load("pappus").theorem
    wrong = replace(spec, conclusion=Statement("collinear", ("G", "H", "A")))
    r = certify(wrong, 10)
    assert not r.ok and r.failed == 1
    assert "ConclusionFailed" in r.failure
    assert r.witness is not None
    assert bracket_value(r.witness, "G", "H", "A") != 0


def test_wrong_proof_form_is_reported():
    fx = F.load("desargues")
    # an extra hypothesis claiming A B C collinear is false on every generic draw
    bogus = collinearity_equation(*"ABCDX", name="bogus")
    proof = BinomialProof(fx.forms["binomial"].equations + (bogus,))
    r = certify_proof_forms(fx.theorem, {"bogus": proof}, 5)
    assert not r.ok and r.failed == 1
    assert r.failure.startswith("trial 0: ProofFormDisagreement")
    assert "bogus" in r.failure


def test_proof_over_foreign_labels_raises():
    fx = F.load("desargues")
    with pytest.raises(UnknownLabel):
        certify_proof_forms(fx.theorem, {"stranger": F.load("pappus").forms["binomial"]}, 1)


def test_merge_adds_counts():
    spec = F.load("desargues").theorem
    a, b = certify(spec, 5, seed=0), certify(spec, 7, seed=100)
    m = a.merge(b)
    assert (m.requested, m.passed, m.failed) == (12, 12, 0)


counts = st.builds(TrialReport, st.just("x"), st.integers(0, 50), st.integers(0, 50), st.integers(0, 5),
                   st.integers(0, 5), st.integers(0, 9),
                   forms=st.dictionaries(st.sampled_from(["quad", "cm", "binomial"]), st.integers(0, 9)))


def _key(r):
    return (r.requested, r.succeeded, r.resampled, r.failed, r.redraws, r.forms)


@settings(max_examples=40)
@given(counts, counts, counts)
def test_merge_is_associative(a, b, c):
    assert _key(a.merge(b).merge(c)) == _key(a.merge(b.merge(c)))


def test_small_custom_theorem():
    # F is cut from AB, so C F A are collinear by construction
    spec = TheoremSpec("tiny", 2, (FreePoint("A"), FreePoint("B"), PointOnLine("C", "A", "B"),
                                   FreePoint("D"), FreePoint("E"), Meet2("F", ("A", "B"), ("D", "E"))),
                       (Statement("collinear", ("A", "B", "C")),), Statement("collinear", ("C", "F", "A")))
    assert certify(spec, 30).ok
