"""Shipped theorems with their proof forms.

Each fixture pairs a construction recipe with every proof form we carry for
it.  Hand-entered data (binomial equations, face lists) lives in this file;
the forms obtained by translation are rebuilt here too, so the golden
``.proof`` files under ``fixtures/`` are an export of what this module
computes (see scripts/export_fixtures.py).
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from functools import lru_cache
from pathlib import Path

from .certify import (
    FreePoint, Meet2, Meet3Planes, MeetPlaneLine, PointOnLine, PointOnPlane, PointOnPlanes,
    Statement, TheoremSpec, TransversalThroughPoint,
)
from .proof_io import ProofDocument, document_for, serialize
from .proofs_binomial import CONCL, HYP, BinomialEquation, BinomialProof, Incidence
from .tilings import CEVA, CMFace, CMTriangulation, Face, QuadTiling, orient_faces
from .translate import normalize_degree3, quad_to_binomial, quad_to_menelaus

FIXTURE_DIR = Path(__file__).parent / "fixtures"
FIXTURE_IDS = ("desargues", "pappus", "sixteen_point_v1", "sixteen_point_v2", "toblerone",
               "menelaus3d", "ceva3d")


@dataclass
class Fixture:
    id: str
    theorem: TheoremSpec
    forms: dict = field(default_factory=dict)     # form name -> proof object
    sources: dict = field(default_factory=dict)   # form name -> provenance note

    def document(self, form: str) -> ProofDocument:
        if form == "theorem":
            return ProofDocument(self.id, "theorem", self.theorem.dim, None, self.theorem)
        doc = document_for(self.forms[form], f"{self.id}.{form}", self.theorem, self.sources.get(form, ""))
        return doc

    def form_names(self) -> list[str]:
        return list(self.forms) or ["theorem"]

    def documents(self) -> dict[str, ProofDocument]:
        return {f: self.document(f) for f in self.form_names()}


def golden_path(fid: str, form: str) -> Path:
    return FIXTURE_DIR / f"{fid}.{form}.proof"


# -- small helpers ------------------------------------------------------------------

def _brackets(side: str):
    out = []
    for body in re.findall(r"\[([^\]]*)\]", side):
        body = body.strip()
        out.append(tuple(body.split(",")) if "," in body else tuple(body.replace(" ", "")))
    return tuple(out)


def _equations(rows, conclusion: int) -> BinomialProof:
    """rows: (equation text, incidence kind, incidence labels); conclusion is 1-based."""
    eqs = []
    for i, (text, kind, labs) in enumerate(rows, 1):
        lhs, rhs = text.split("=")
        eqs.append(BinomialEquation(f"e{i}", _brackets(lhs), _brackets(rhs), CONCL if i == conclusion else HYP,
                                    Incidence(kind, tuple(labs.split()))))
    return BinomialProof(tuple(eqs))


def _face_from_equation(fid: str, eq: BinomialEquation, spans: dict) -> Face:
    """Quad face (P, m, Q, l) whose shortcut equation has lhs [P l..][Q m..]."""
    found = []
    for b in eq.lhs:
        hits = [l for l, sp in spans.items() if set(sp) < set(b)]
        if len(hits) != 1:
            raise ValueError(f"{fid}: bracket {b} does not pick out one line")
        (pt,) = set(b) - set(spans[hits[0]])
        found.append((pt, hits[0]))
    (p, l), (q, m) = found
    return Face(fid, (p, m, q, l))


def _steps(text: str):
    """Compact recipe notation, one step per line: `Z meet2 A B | X Y`."""
    out = []
    for line in text.strip().splitlines():
        lab, op, *rest = line.split(None, 2)
        args = rest[0] if rest else ""
        groups = [tuple(g.split()) for g in args.split("|")] if args else []
        if op == "free":
            out.append(FreePoint(lab))
        elif op == "on_line":
            out.append(PointOnLine(lab, *groups[0]))
        elif op == "on_plane":
            out.append(PointOnPlane(lab, *groups[0]))
        elif op == "meet2":
            out.append(Meet2(lab, *groups))
        elif op == "meet_plane_line":
            out.append(MeetPlaneLine(lab, *groups))
        elif op == "meet3":
            out.append(Meet3Planes(lab, *groups))
        elif op == "on_planes":
            out.append(PointOnPlanes(lab, *groups))
        elif op == "transversal":
            p, l1, l2 = groups
            out.append(TransversalThroughPoint(lab, p[0], l1, l2))
        else:
            raise ValueError(op)
    return tuple(out)


def _st(kind, labels: str) -> Statement:
    return Statement(kind, tuple(labels.split()))


# -- Desargues ----------------------------------------------------------------------

DESARGUES_EQUATIONS = (
    ("[A,Y,X][C,Y,U]=[A,Y,U][C,Y,X]", "collinear", "A C Y"),
    ("[C,X,Y][B,X,V]=[C,X,V][B,X,Y]", "collinear", "B C X"),
    ("[B,V,U][D,V,X]=[B,V,X][D,V,U]", "collinear", "B D V"),
    ("[D,U,V][A,U,Y]=[D,U,Y][A,U,V]", "collinear", "A D U"),
    ("[U,V,A][U,Z,B]=[U,V,B][U,Z,A]", "collinear", "U V Z"),
    ("[X,Y,B][X,Z,A]=[X,Y,A][X,Z,B]", "collinear", "X Y Z"),
    ("[Z,A,U][Z,B,X]=[Z,A,X][Z,B,U]", "collinear", "A B Z"),
    ("[X,V,C][X,W,D]=[X,V,D][X,W,C]", "collinear", "V W X"),
    ("[U,Y,D][U,W,C]=[U,Y,C][U,W,D]", "collinear", "U W Y"),
    ("[W,C,X][W,D,U]=[W,C,U][W,D,X]", "collinear", "C D W"),
)


def desargues_theorem() -> TheoremSpec:
    recipe = _steps("""
        A free
        B free
        C free
        D free
        Y on_line A C
        X on_line B C
        W on_line C D
        Z meet2 A B | X Y
        U meet2 A D | Y W
        V meet2 Z U | X W
    """)
    hyps = [_st("collinear", s) for s in
            ("A C Y", "B C X", "C D W", "A B Z", "X Y Z", "A D U", "U W Y", "U V Z", "V W X")]
    return TheoremSpec("desargues", 2, recipe, tuple(hyps), _st("collinear", "B D V"),
                       (("A", "B", "C"), ("A", "B", "D"), ("A", "C", "D"), ("B", "C", "D")))


def desargues_cube() -> QuadTiling:
    lines = {"l1": ("X", "Y", "Z"), "l2": ("U", "W", "Y"), "l3": ("V", "W", "X"), "l4": ("U", "V", "Z")}
    spans = {"l1": ("X", "Y"), "l2": ("U", "Y"), "l3": ("X", "V"), "l4": ("U", "V")}
    proof = _equations(DESARGUES_EQUATIONS, 3)
    eqs = {e.name: e for e in proof.equations}
    faces = [_face_from_equation(fid, eqs[en], spans) for fid, en in (("Y", "e1"), ("X", "e2"), ("V", "e3"), ("U", "e4"))]
    # Z and W come from three-equation chains; their orientation follows from the rest
    faces += [Face("Z", ("A", "l1", "B", "l4")), Face("W", ("C", "l2", "D", "l3"))]
    faces = orient_faces(faces)
    return QuadTiling(2, ("A", "B", "C", "D"), lines, tuple(faces), "V", spans, name="desargues")


# -- Pappus -------------------------------------------------------------------------

PAPPUS_EQUATIONS = (
    ("[A,B,D][A,C,I]=[A,B,I][A,C,D]", "collinear", "A B C"),
    ("[A,H,D][A,F,I]=[A,H,I][A,F,D]", "collinear", "A F H"),
    ("[A,E,D][A,G,I]=[A,E,I][A,G,D]", "collinear", "A E G"),
    ("[D,C,A][D,H,I]=[D,C,I][D,H,A]", "collinear", "C D H"),
    ("[D,F,A][D,E,I]=[D,F,I][D,E,A]", "collinear", "D E F"),
    ("[D,G,A][D,B,I]=[D,G,I][D,B,A]", "collinear", "B D G"),
    ("[I,G,D][I,H,A]=[I,G,A][I,H,D]", "collinear", "G H I"),
    ("[I,B,A][I,F,D]=[I,B,D][I,F,A]", "collinear", "B F I"),
    ("[I,C,D][I,E,A]=[I,C,A][I,E,D]", "collinear", "C E I"),
)


def pappus_theorem() -> TheoremSpec:
    recipe = _steps("""
        A free
        B free
        C on_line A B
        D free
        E free
        F on_line D E
        G meet2 A E | B D
        H meet2 A F | C D
        I meet2 B F | C E
    """)
    hyps = [_st("collinear", s) for s in
            ("A B C", "D E F", "A E G", "B D G", "A F H", "C D H", "B F I", "C E I")]
    return TheoremSpec("pappus", 2, recipe, tuple(hyps), _st("collinear", "G H I"),
                       (("A", "B", "D"), ("A", "D", "I"), ("D", "E", "A")))


def pappus_quad() -> QuadTiling:
    spans = {"AD": ("A", "D"), "AI": ("A", "I"), "DI": ("D", "I")}
    proof = _equations(PAPPUS_EQUATIONS, 7)
    faces = [_face_from_equation("".join(e.incidence.labels), e, spans) for e in proof.equations]
    pts = sorted({x for f in faces for x in f.cycle if x not in spans})
    return QuadTiling(2, tuple(pts), spans, tuple(orient_faces(faces)), "GHI", name="pappus")


def pappus_ceva_torus() -> CMTriangulation:
    # each face is triangle A, I, D with the named center; edges are keyed by the
    # collinear triple that makes the two cevians through them agree
    rows = {
        "B": ("BDG", "ABC", "BFI"), "C": ("CDH", "ABC", "CEI"), "F": ("DEF", "AFH", "BFI"),
        "H": ("CDH", "AFH", "GHI"), "G": ("BDG", "AEG", "GHI"), "E": ("DEF", "AEG", "CEI"),
    }
    faces = []
    for c, (ai, id_, da) in rows.items():
        # cycle A -> I -> D: sides AI, ID, DA
        faces.append(CMFace(c, ("A", "I", "D"), (ai, id_, da), kind=CEVA, center=c))
    faces = orient_faces(faces)
    faces = [CMFace(f.id, f.cycle, f.edges, kind=CEVA, center=f.id) for f in faces]
    return CMTriangulation(2, ("A", "D", "I"), tuple(faces), ("edge", "GHI"), name="pappus")


# -- 16 point theorem ---------------------------------------------------------------

SIXTEEN_V1_EQUATIONS = (
    ("[1253][1264]=[1254][1263]", "coplanar", "1 2 5 6"),
    ("[2361][2374]=[2364][2371]", "coplanar", "2 3 6 7"),
    ("[3451][3462]=[3452][3461]", "coplanar", "3 4 5 6"),
    ("[1463][1472]=[1462][1473]", "coplanar", "1 4 6 7"),
    ("[3471][3482]=[3472][3481]", "coplanar", "3 4 7 8"),
    ("[1452][1483]=[1453][1482]", "coplanar", "1 4 5 8"),
    ("[1273][1284]=[1274][1283]", "coplanar", "1 2 7 8"),
    ("[2354][2381]=[2351][2384]", "coplanar", "2 3 5 8"),
)


def sixteen_v1_theorem() -> TheoremSpec:
    recipe = _steps("""
        1 free
        2 free
        3 free
        4 free
        6 free
        T1 transversal 6 | 1 4 | 2 3
        7 on_line 6 T1
        T2 transversal 6 | 1 2 | 3 4
        5 on_line 6 T2
        T3 transversal 7 | 1 2 | 3 4
        8 meet_plane_line 5 1 4 | 7 T3
    """)
    hyps = [_st("coplanar", s) for s in
            ("1 2 5 6", "2 3 6 7", "3 4 5 6", "1 4 6 7", "3 4 7 8", "1 4 5 8", "1 2 7 8")]
    return TheoremSpec("sixteen_point_v1", 3, recipe, tuple(hyps), _st("coplanar", "2 3 5 8"),
                       (("1", "2", "3", "4"),))


def sixteen_v1_quad() -> QuadTiling:
    spans = {"134": ("1", "3", "4"), "124": ("1", "2", "4"), "342": ("3", "4", "2"), "123": ("1", "2", "3")}
    proof = _equations(SIXTEEN_V1_EQUATIONS, 8)
    faces = [_face_from_equation("h" + "".join(e.incidence.labels), e, spans) for e in proof.equations]
    return QuadTiling(3, ("5", "6", "7", "8"), spans, tuple(orient_faces(faces)), "h2358",
                      name="sixteen_point_v1")


def sixteen_v2_theorem() -> TheoremSpec:
    recipe = _steps("""
        1 free
        4 free
        7 free
        2 free
        5 on_plane 1 4 2
        8 on_plane 4 7 5
        3 on_planes 7 2 8 | 8 1 4
        6 meet3 2 5 3 | 5 8 1 | 3 4 7
    """)
    hyps = [_st("coplanar", s) for s in
            ("1 2 4 5", "4 5 7 8", "2 3 7 8", "1 3 4 8", "2 3 5 6", "1 5 6 8", "3 4 6 7")]
    return TheoremSpec("sixteen_point_v2", 3, recipe, tuple(hyps), _st("coplanar", "1 2 6 7"),
                       (("1", "2", "4", "7"),))


def sixteen_v2_quad() -> QuadTiling:
    planes = {"248": ("2", "4", "8"), "246": ("2", "4", "6"), "468": ("4", "6", "8"), "268": ("2", "6", "8")}
    # (two planes, two points): the points are coplanar with the planes' common line
    rows = [
        ("246", "248", "1", "5"), ("248", "468", "5", "7"), ("248", "468", "1", "3"),
        ("248", "268", "3", "7"), ("246", "268", "3", "5"), ("246", "268", "1", "7"),
        ("268", "468", "1", "5"), ("246", "468", "3", "7"),
    ]
    faces = []
    for l, m, p, q in rows:
        common = sorted(set(planes[l]) & set(planes[m]))
        fid = "h" + "".join(sorted(common + [p, q]))
        faces.append(Face(fid, (p, l, q, m)))
    return QuadTiling(3, ("1", "3", "5", "7"), planes, tuple(orient_faces(faces)), "h1267",
                      name="sixteen_point_v2")


# -- Toblerone ----------------------------------------------------------------------

TOBLERONE_BLOCKS = (
    ("[1273][1284]=[1274][1283]", "coplanar", "1 2 7 8"),
    ("[1458][1427]=[1428][1457]", "coplanar", "1 2 4 5"),
    ("[4571][4586]=[4576][4581]", "coplanar", "4 5 7 8"),
    ("[2381][2395]=[2385][2391]", "coplanar", "2 3 8 9"),
    ("[2569][2538]=[2539][2568]", "coplanar", "2 3 5 6"),
    ("[5682][5694]=[5684][5692]", "coplanar", "5 6 8 9"),
    ("[3192][3176]=[3196][3172]", "coplanar", "1 3 7 9"),
    ("[3647][3619]=[3617][3649]", "coplanar", "1 3 4 6"),
    ("[6493][6475]=[6495][6473]", "coplanar", "4 6 7 9"),
)

TOBLERONE_COLLAPSED = (
    ("[1237][4568]=[1238][4567]", "coherent", "7 8"),
    ("[1238][4569]=[1239][4568]", "coherent", "8 9"),
    ("[1239][4567]=[1237][4569]", "coherent", "9 7"),
)


def toblerone_theorem() -> TheoremSpec:
    recipe = _steps("""
        1 free
        2 free
        3 free
        4 free
        7 free
        5 on_plane 1 2 4
        6 on_planes 2 3 5 | 1 3 4
        8 on_planes 4 5 7 | 1 2 7
        9 meet3 5 6 8 | 6 4 7 | 2 3 8
    """)
    hyps = [_st("coplanar", s) for s in
            ("1 2 5 4", "2 3 6 5", "3 1 4 6", "4 5 8 7", "5 6 9 8", "6 4 7 9", "7 8 2 1", "8 9 3 2")]
    return TheoremSpec("toblerone", 3, recipe, tuple(hyps), _st("coplanar", "9 7 1 3"),
                       (("1", "2", "3", "4"), ("4", "5", "6", "7")))


def toblerone_quad() -> QuadTiling:
    spans = {"123": ("1", "2", "3"), "456": ("4", "5", "6")}
    proof = _equations(TOBLERONE_COLLAPSED, 3)
    faces = [_face_from_equation("q" + "".join(e.incidence.labels), e, spans) for e in proof.equations]
    return QuadTiling(3, ("7", "8", "9"), spans, tuple(orient_faces(faces)), "q97", name="toblerone")


# -- single-cell 3D theorems ------------------------------------------------------

def menelaus3d_theorem() -> TheoremSpec:
    recipe = _steps("\n".join(f"{x} free" for x in ("1", "2", "3", "4", "a", "b", "c")))
    return TheoremSpec("menelaus3d", 3, recipe, (), _st("menelaus3d", "1 2 3 4 a b c"),
                       (("1", "2", "3", "4"), ("a", "b", "c", "1")))


def ceva3d_theorem() -> TheoremSpec:
    recipe = _steps("\n".join(f"{x} free" for x in ("1", "2", "3", "4", "a")))
    return TheoremSpec("ceva3d", 3, recipe, (), _st("ceva3d", "1 2 3 4 a"), (("1", "2", "3", "4"),))


# -- assembly -----------------------------------------------------------------------

@lru_cache(maxsize=None)
def load(fid: str) -> Fixture:
    if fid == "desargues":
        cube = desargues_cube()
        return Fixture(fid, desargues_theorem(),
                       {"binomial": _equations(DESARGUES_EQUATIONS, 3), "quad": cube, "cm": quad_to_menelaus(cube)},
                       {"cm": "quad_to_menelaus of the cube"})
    if fid == "pappus":
        quad = pappus_quad()
        return Fixture(fid, pappus_theorem(),
                       {"binomial": _equations(PAPPUS_EQUATIONS, 7), "quad": quad,
                        "cm_ceva": pappus_ceva_torus(), "cm_menelaus": quad_to_menelaus(normalize_degree3(quad))},
                       {"cm_menelaus": "quad_to_menelaus after normalize_degree3 of the quad torus"})
    if fid == "sixteen_point_v1":
        quad = sixteen_v1_quad()
        return Fixture(fid, sixteen_v1_theorem(),
                       {"binomial": _equations(SIXTEEN_V1_EQUATIONS, 8), "quad": quad, "cm": quad_to_menelaus(quad)},
                       {"cm": "quad_to_menelaus of the quad torus"})
    if fid == "sixteen_point_v2":
        quad = sixteen_v2_quad()
        return Fixture(fid, sixteen_v2_theorem(),
                       {"binomial": quad_to_binomial(quad), "quad": quad, "cm": quad_to_menelaus(quad)},
                       {"binomial": "quad_to_binomial of the quad torus", "cm": "quad_to_menelaus of the quad torus"})
    if fid == "toblerone":
        quad = toblerone_quad()
        return Fixture(fid, toblerone_theorem(),
                       {"binomial": _equations(TOBLERONE_COLLAPSED, 3), "blocks": _equations(TOBLERONE_BLOCKS, 9),
                        "quad": quad, "cm": quad_to_menelaus(quad)},
                       {"cm": "quad_to_menelaus of the quad sphere"})
    if fid == "menelaus3d":
        return Fixture(fid, menelaus3d_theorem())
    if fid == "ceva3d":
        return Fixture(fid, ceva3d_theorem())
    raise KeyError(f"unknown fixture {fid!r}; known: {', '.join(FIXTURE_IDS)}")


def export_all(directory: Path = FIXTURE_DIR) -> list[Path]:
    directory.mkdir(parents=True, exist_ok=True)
    written = []
    for fid in FIXTURE_IDS:
        fx = load(fid)
        for form, doc in fx.documents().items():
            path = directory / f"{fid}.{form}.proof"
            path.write_text(serialize(doc))
            written.append(path)
    return written
