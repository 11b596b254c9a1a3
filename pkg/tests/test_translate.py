import pytest

from incidence_proofs import fixtures as F
from incidence_proofs.bracket_core import Configuration
from incidence_proofs.certify import run_recipe
from incidence_proofs.proofs_binomial import (
    CONCL, BinomialEquation, LabelCollision, ZeroBracket, multiply_equations, same_equation,
    verify_cancellation,
)
from incidence_proofs.tilings import (
    CEVA, MENELAUS, CMFace, CMTriangulation, Face, QuadTiling, cm_parity_check, orient_faces,
    validate_surface, verify_cm_proof, verify_quad_proof,
)
from incidence_proofs.translate import (
    AUTO, FULL, SHORTCUT, CancellationFails, DegreeTooLow, MalformedTiling, NotPureMenelaus,
    SpanningChoice, cm_to_binomial, greedy_ceva_pairs, isomorphic, menelaus_to_quad,
    normalize_degree3, quad_to_binomial, quad_to_menelaus, split_adjacent_cevas, split_all_cevas,
    split_line_vertex,
)


def matching(got, want):
    """Bijection between two equation lists under same_equation."""
    left = list(want)
    for e in got:
        hit = next((i for i, w in enumerate(left) if same_equation(e, w)), None)
        if hit is None:
            return False
        left.pop(hit)
    return not left


def fan(n):
    """Planar sphere: line l through p0..p{n-1}, lines m_i = p_i p_{i+1} Q."""
    faces = []
    for i in range(n):
        j = (i + 1) % n
        faces.append(Face(f"a{i}", (f"p{i}", "l", f"p{j}", f"m{i}")))
        faces.append(Face(f"b{i}", (f"p{j}", f"m{i}", "Q", f"m{j}")))
    lines = {"l": tuple(f"p{i}" for i in range(n))}
    lines.update({f"m{i}": (f"p{i}", f"p{(i + 1) % n}", "Q") for i in range(n)})
    pts = tuple(f"p{i}" for i in range(n)) + ("Q",)
    return QuadTiling(2, pts, lines, tuple(orient_faces(faces)))


# -- quad -> binomial ----------------------------------------------------------------

def test_cube_auto_reproduces_transcribed_equations():
    fx = F.load("desargues")
    got = quad_to_binomial(fx.forms["quad"], mode=AUTO)
    assert len(got.equations) == 10
    assert matching(got.equations, fx.forms["binomial"].equations)
    assert verify_cancellation(got).ok


def test_cube_auto_conclusion_is_face_v():
    got = quad_to_binomial(F.load("desargues").forms["quad"], mode=AUTO)
    concl = [e for e in got.equations if e.role == CONCL]
    assert [e.name for e in concl] == ["V"]


def test_cube_shortcut_has_one_equation_per_face():
    got = quad_to_binomial(F.load("desargues").forms["quad"], mode=SHORTCUT)
    assert [e.name for e in got.equations] == ["Y", "X", "V", "U", "Z", "W"]


def test_full_trio_multiplies_to_shortcut():
    t = F.load("desargues").forms["quad"]
    short = {e.name: e for e in quad_to_binomial(t, mode=SHORTCUT).equations}
    auto = quad_to_binomial(t, mode=AUTO).equations
    for fid in ("Z", "W"):
        trio = [e for e in auto if e.name.startswith(fid + ".")]
        assert len(trio) == 3
        assert same_equation(multiply_equations(trio), short[fid])


def test_full_mode_collides_when_meet_spans_a_line():
    # on face Y the meet of l1 and l2 is Y itself, which also spans both lines
    with pytest.raises(LabelCollision):
        quad_to_binomial(F.load("desargues").forms["quad"], mode=FULL)


def test_spanner_equal_to_face_point_is_zero_bracket():
    t = F.load("desargues").forms["quad"]
    s = SpanningChoice.from_tiling(t)
    s.lines["l1"] = ("Z", "A")   # A sits on face Z next to l1: [A Z A] vanishes
    with pytest.raises(ZeroBracket):
        quad_to_binomial(t, s)


def test_open_tiling_does_not_cancel():
    t = QuadTiling(2, ("P", "Q"), {"l": ("L1", "L2", "P"), "m": ("M1", "M2", "Q")},
                   (Face("f", ("P", "m", "Q", "l")),), "f", {"l": ("L1", "L2"), "m": ("M1", "M2")})
    with pytest.raises(CancellationFails):
        quad_to_binomial(t)


def test_sixteen_point_translation_matches():
    fx = F.load("sixteen_point_v1")
    got = quad_to_binomial(fx.forms["quad"])
    assert matching(got.equations, fx.forms["binomial"].equations)


def test_pappus_translation_matches():
    fx = F.load("pappus")
    got = quad_to_binomial(fx.forms["quad"])
    assert matching(got.equations, fx.forms["binomial"].equations)


def test_toblerone_translation_matches_collapsed_chain():
    fx = F.load("toblerone")
    got = quad_to_binomial(fx.forms["quad"])
    assert matching(got.equations, fx.forms["binomial"].equations)


# -- splitting -----------------------------------------------------------------------

def test_split_degree_four_line():
    t = fan(4)
    before = validate_surface(t)
    s = split_line_vertex(t, "l")
    after = validate_surface(s)
    assert after.F == before.F + 1
    assert (after.V, after.E) == (before.V + 1, before.E + 2)
    assert after.chi == before.chi
    new = [l for l in s.lines if l not in t.lines]
    assert len(new) == 1
    assert s.line_degree("l") == 3 and s.line_degree(new[0]) == 3


def test_split_degree_three_refused():
    with pytest.raises(DegreeTooLow):
        split_line_vertex(F.load("desargues").forms["quad"], "l1")


def test_split_point_refused():
    with pytest.raises(ValueError):
        split_line_vertex(F.load("desargues").forms["quad"], "A")


def test_split_keeps_proof_valid():
    t = fan(4)
    s = split_line_vertex(t, "l")
    assert formal_ok(s)


def formal_ok(t):
    from incidence_proofs.tilings import formal_exponents
    return not any(formal_exponents(t).values())


def test_normalize_cube_is_identity():
    t = F.load("desargues").forms["quad"]
    assert normalize_degree3(t) is t


def test_normalize_degree_five_takes_two_splits():
    t = fan(5)
    n = normalize_degree3(t)
    assert len(n.faces) == len(t.faces) + 2
    assert all(n.line_degree(l) == 3 for l in n.lines)
    assert validate_surface(n).chi == 2


def test_normalize_rejects_degree_two():
    faces = orient_faces([Face("f", ("A", "l", "B", "m")), Face("g", ("B", "l", "A", "m"))])
    t = QuadTiling(2, ("A", "B"), {"l": ("A", "B"), "m": ("A", "B")}, tuple(faces))
    with pytest.raises(MalformedTiling):
        normalize_degree3(t)


# -- quad <-> Menelaus ----------------------------------------------------------------

def test_cube_to_four_triangles():
    c = quad_to_menelaus(F.load("desargues").forms["quad"])
    assert c.counts() == {MENELAUS: 4}
    assert all(f.arity == 3 for f in c.faces)
    r = validate_surface(c)
    assert (r.V, r.E, r.F) == (4, 6, 4)


def test_sixteen_point_to_four_cells():
    c = quad_to_menelaus(F.load("sixteen_point_v1").forms["quad"])
    assert c.counts() == {MENELAUS: 4}
    assert all(f.arity == 4 for f in c.faces)
    assert validate_surface(c).chi == 0


def test_planar_degree_four_needs_normalizing():
    with pytest.raises(DegreeTooLow):
        quad_to_menelaus(fan(4))
    c = quad_to_menelaus(normalize_degree3(fan(4)))
    assert all(f.arity == 3 for f in c.faces)


@pytest.mark.parametrize("fid", ["desargues", "sixteen_point_v1", "sixteen_point_v2", "toblerone"])
def test_menelaus_round_trip_is_isomorphic(fid):
    t = F.load(fid).forms["quad"]
    if t.dim == 2:
        t = normalize_degree3(t)
    back = menelaus_to_quad(quad_to_menelaus(t))
    assert isomorphic(t, back)
    assert back.conclusion == t.conclusion


def test_round_trip_numerically_valid():
    fx = F.load("desargues")
    cfg = run_recipe(fx.theorem, 4)
    back = menelaus_to_quad(quad_to_menelaus(fx.forms["quad"]))
    assert verify_quad_proof(back, cfg).ok
    assert verify_cm_proof(quad_to_menelaus(fx.forms["quad"]), cfg).ok


def test_isomorphic_detects_relabel():
    t = F.load("desargues").forms["quad"]
    swapped = QuadTiling(t.dim, t.points, t.lines,
                         tuple(Face(f.id, tuple({"A": "B", "B": "A"}.get(x, x) for x in f.cycle)) for f in t.faces),
                         t.conclusion, t.spans)
    assert not isomorphic(t, swapped)
    assert isomorphic(t, swapped, match_labels=False)


def test_ceva_torus_is_not_pure_menelaus():
    with pytest.raises(NotPureMenelaus):
        menelaus_to_quad(F.load("pappus").forms["cm_ceva"])


# -- Ceva pair splitting ------------------------------------------------------------

def test_pappus_torus_splits_to_twelve_menelaus():
    tor = F.load("pappus").forms["cm_ceva"]
    assert len(greedy_ceva_pairs(tor)) == 3
    s = split_all_cevas(tor)
    assert s.counts() == {MENELAUS: 12}
    r = validate_surface(s)
    assert r.chi == 0 and r.F == 12
    assert s.conclusion == ("edge", "GHI")
    assert len(s.derived) == 3


@pytest.mark.parametrize("seed", range(3))
def test_split_torus_verifies_numerically(seed):
    fx = F.load("pappus")
    cfg = run_recipe(fx.theorem, seed)
    assert verify_cm_proof(split_all_cevas(fx.forms["cm_ceva"]), cfg).ok


def test_split_refuses_menelaus_faces():
    c = F.load("desargues").forms["cm"]
    a, b = c.faces[0].id, c.faces[1].id
    with pytest.raises(ValueError):
        split_adjacent_cevas(c, a, b)


def two_ceva_sphere():
    faces = [CMFace("u", ("A", "B", "C"), kind=CEVA, center="O"),
             CMFace("v", ("A", "C", "B"), kind=CEVA, center="P")]
    return CMTriangulation(2, ("A", "B", "C"), tuple(faces))


def test_pair_sharing_all_vertices_refused():
    # both opposite corners are C, so the four halves would meet along E-C four times
    with pytest.raises(ValueError, match="share all vertices"):
        split_adjacent_cevas(two_ceva_sphere(), "u", "v")


def ceva_tetrahedron():
    cyc = {"a": "ABC", "b": "ADB", "c": "ACD", "d": "BDC"}
    faces = [CMFace(k, tuple(v), kind=CEVA, center="O" + k) for k, v in cyc.items()]
    return CMTriangulation(2, tuple("ABCD"), tuple(faces))


def test_ceva_tetrahedron_splits_to_octahedron():
    t = ceva_tetrahedron()
    assert greedy_ceva_pairs(t) == [("a", "b"), ("c", "d")]
    one = split_adjacent_cevas(t, "a", "b")
    assert one.counts() == {CEVA: 2, MENELAUS: 4}
    s = split_all_cevas(t)
    r = validate_surface(s)
    assert s.counts() == {MENELAUS: 8}
    assert (r.V, r.E, r.F, r.chi) == (6, 12, 8, 2)
    assert cm_parity_check(s).menelaus == 8


# -- CM -> binomial -----------------------------------------------------------------

def test_desargues_tetrahedron_binomial():
    b = cm_to_binomial(F.load("desargues").forms["cm"])
    names = [e.name for e in b.equations]
    assert sum(n.startswith("face.") for n in names) == 4
    assert sum(n.startswith("edge.") for n in names) == 6
    assert verify_cancellation(b).ok


def test_ceva_torus_binomial_matches_transcription():
    fx = F.load("pappus")
    b = cm_to_binomial(fx.forms["cm_ceva"])
    assert len(b.equations) == 15
    edges = [e for e in b.equations if e.name.startswith("edge.")]
    assert len(edges) == 9
    assert matching(edges, fx.forms["binomial"].equations)
    assert [e.name for e in b.equations if e.role == CONCL] == ["edge.GHI"]


def test_cm_binomial_without_identities_still_matches_for_ceva():
    # Ceva face identities are trivially 1 = 1, so dropping them keeps cancellation
    fx = F.load("pappus")
    b = cm_to_binomial(fx.forms["cm_ceva"], include_identities=False)
    assert len(b.equations) == 9


def test_cm_binomial_face_conclusion_rejected():
    c = F.load("desargues").forms["cm"]
    c2 = CMTriangulation(c.dim, c.points, c.faces, ("face", c.faces[0].id), name=c.name)
    with pytest.raises(ValueError):
        cm_to_binomial(c2)


@pytest.mark.parametrize("fid,form", [("desargues", "cm"), ("pappus", "cm_ceva"), ("pappus", "cm_menelaus"),
                                      ("sixteen_point_v1", "cm"), ("toblerone", "cm")])
def test_cm_binomial_is_sound(fid, form):
    from incidence_proofs.proofs_binomial import sound_on
    fx = F.load(fid)
    c = fx.forms[form]
    b = cm_to_binomial(c)
    assert sound_on(b, c.extend(run_recipe(fx.theorem, 1)))
