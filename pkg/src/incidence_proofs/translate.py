"""Translations between quad tilings, CM complexes and binomial proofs."""
from __future__ import annotations

from dataclasses import dataclass, field, replace
from typing import Mapping

import networkx as nx

from .bracket_core import label_key, sort_labels
from .proofs_binomial import (
    CONCL, HYP, BinomialEquation, BinomialProof, Incidence, NotAFinalPolynomial,
    collinearity_equation, multiply_equations, same_equation, verify_cancellation,
)
from .tilings import (
    CEVA, MENELAUS, CMFace, CMTriangulation, Face, MalformedFace, QuadTiling,
    cm_parity_check, edge_occurrences, validate_surface,
)


class CancellationFails(NotAFinalPolynomial):
    pass


class DegreeTooLow(ValueError):
    pass


class MalformedTiling(ValueError):
    pass


class NotPureMenelaus(ValueError):
    pass


class MissingSpanningData(ValueError):
    pass


SHORTCUT, FULL, AUTO = "shortcut", "full", "auto"


@dataclass
class SpanningChoice:
    lines: dict = field(default_factory=dict)   # line id -> spanning points
    meets: dict = field(default_factory=dict)   # face id -> incidence point l∧m

    @classmethod
    def from_tiling(cls, t: QuadTiling) -> "SpanningChoice":
        lines = {}
        for l in t.lines:
            try:
                lines[l] = t.spanning(l)
            except Exception:
                pass
        return cls(lines, dict(t.meets))


def _default_meet(t: QuadTiling, l: str, m: str):
    common = sort_labels(set(t.lines[l]) & set(t.lines[m]))
    return common[0] if common else None


def quad_to_binomial(t: QuadTiling, s: SpanningChoice | None = None, mode: str = SHORTCUT) -> BinomialProof:
    s = s or SpanningChoice.from_tiling(t)
    eqs = []
    for f in t.faces:
        p, m, q, l = t.pml(f)
        try:
            L, M = tuple(s.lines[l]), tuple(s.lines[m])
        except KeyError as e:
            raise MissingSpanningData(f"no spanning points for line {e.args[0]}") from None
        if len(L) != t.dim or len(M) != t.dim:
            raise MissingSpanningData(f"face {f.id}: need {t.dim} spanning points per line")
        role = CONCL if f.id == t.conclusion else HYP
        # the collinearity trio only exists in the plane; in space auto means shortcut
        use_full = mode == FULL or (mode == AUTO and t.dim == 2 and not set(L) & set(M))
        if not use_full:
            eqs.append(BinomialEquation(f.id, ((p,) + L, (q,) + M), ((p,) + M, (q,) + L), role,
                                        Incidence("coherent", (p, m, q, l))))
            continue
        if t.dim != 2:
            raise ValueError("full mode needs a planar tiling")
        i = s.meets.get(f.id) or _default_meet(t, l, m)
        if i is None:
            raise MissingSpanningData(f"face {f.id}: no incidence point for {l}∧{m}")
        (l1, l2), (m1, m2) = L, M
        trio = [
            collinearity_equation(l1, l2, i, p, q, f"{f.id}.1"),
            collinearity_equation(m1, m2, i, q, p, f"{f.id}.2"),
            collinearity_equation(i, p, q, l1, m1, f"{f.id}.3", role=role),
        ]
        short = BinomialEquation("s", ((p,) + L, (q,) + M), ((p,) + M, (q,) + L))
        if not same_equation(multiply_equations(trio), short):
            raise AssertionError(f"face {f.id}: full equations do not multiply to the face equation")
        eqs += trio
    proof = BinomialProof(tuple(eqs))
    rep = verify_cancellation(proof, strict=False)
    if not rep.ok:
        raise CancellationFails(rep)
    return proof


# -- line vertex splitting -------------------------------------------------------

def _fresh(base: str, used) -> str:
    n = 1
    while f"{base}.{n}" in used:
        n += 1
    return f"{base}.{n}"


def split_line_vertex(t: QuadTiling, v: str) -> QuadTiling:
    if not t.is_line(v):
        raise ValueError(f"{v} is not a line vertex")
    rot = t.rotation(v)
    k = len(rot)
    if k < 4:
        raise DegreeTooLow(f"line {v} has degree {k}")
    j = k // 2
    a0, aj = rot[0][1], rot[j][1]
    used = set(t.points) | set(t.lines) | {f.id for f in t.faces}
    v2 = _fresh(v, used)
    moved = {f.id for f, _, _ in rot[j:]}
    faces = []
    for f in t.faces:
        if f.id in moved:
            f = Face(f.id, tuple(v2 if x == v else x for x in f.cycle), f.edges)
        faces.append(f)
    faces.append(Face(_fresh(f"split_{v}", used), (aj, v, a0, v2)))
    lines = dict(t.lines)
    lines[v2] = t.lines[v]
    spans = dict(t.spans)
    if v in spans:
        spans[v2] = spans[v]
    return replace(t, lines=lines, faces=tuple(faces), spans=spans)


def normalize_degree3(t: QuadTiling) -> QuadTiling:
    while True:
        degs = {l: t.line_degree(l) for l in t.lines}
        low = sorted((l for l, d in degs.items() if d < 3), key=label_key)
        if low:
            raise MalformedTiling(f"line {low[0]} has degree {degs[low[0]]}")
        high = sorted((l for l, d in degs.items() if d > 3), key=label_key)
        if not high:
            return t
        t = split_line_vertex(t, high[0])


# -- quad <-> Menelaus -------------------------------------------------------------

def quad_to_menelaus(t: QuadTiling, allow_polygons: bool | None = None) -> CMTriangulation:
    """Halve every quad along its point diagonal; glue halves around each line.

    In space a line vertex of degree k becomes a Menelaus k-gon, so the
    degree-3 precondition is only enforced for planar tilings by default.
    """
    if allow_polygons is None:
        allow_polygons = t.dim == 3
    validate_surface(t)
    faces = []
    for l in sort_labels(t.lines):
        rot = t.rotation(l)
        if len(rot) != 3 and not allow_polygons:
            raise DegreeTooLow(f"line {l} has degree {len(rot)}; call normalize_degree3 first")
        if len(rot) < 3:
            raise MalformedTiling(f"line {l} has degree {len(rot)}")
        cyc = tuple(a for _, a, _ in rot)
        edges = tuple(f.id for f, _, _ in rot)
        faces.append(CMFace(l, cyc, edges, kind=MENELAUS, cutter=t.spanning(l)))
    concl = ("edge", t.conclusion) if t.conclusion else None
    used = sort_labels({x for f in faces for x in f.cycle})
    return CMTriangulation(t.dim, tuple(used), tuple(faces), concl, name=t.name)


def menelaus_to_quad(c: CMTriangulation) -> QuadTiling:
    if any(f.kind != MENELAUS for f in c.faces):
        raise NotPureMenelaus("complex contains Ceva faces")
    if c.derived:
        raise NotPureMenelaus("derived points cannot become quad vertices")
    occ = edge_occurrences(c.faces)
    faces = []
    for key in sorted(occ, key=label_key):
        (f, _, x, y), (g, _, _, _) = occ[key]
        faces.append(Face(key, (x, f, y, g)))
    lines = {f.id: f.cutter for f in c.faces}
    concl = None
    if c.conclusion is not None:
        kind, ref = c.conclusion
        if kind != "edge":
            raise ValueError("only an edge conclusion maps to a quad face")
        concl = ref
    return QuadTiling(c.dim, c.points, lines, tuple(faces), concl, name=c.name)


# -- Ceva pair split ---------------------------------------------------------------

def _rotate_to(f: Face, u: str, v: str) -> int:
    for i, a, b in f.sides():
        if (a, b) == (u, v):
            return i
    raise MalformedFace(f"face {f.id} has no side {u}->{v}")


def _rot(f: CMFace, i: int) -> CMFace:
    cyc = f.cycle[i:] + f.cycle[:i]
    edges = None if f.edges is None else f.edges[i:] + f.edges[:i]
    return replace(f, cycle=cyc, edges=edges)


def split_adjacent_cevas(t: CMTriangulation, f1: str, f2: str, new_label: str | None = None) -> CMTriangulation:
    a, b = t.face(f1), t.face(f2)
    if a.kind != CEVA or b.kind != CEVA:
        raise ValueError("both faces must be Ceva faces")
    if t.dim != 2 or a.arity != 3 or b.arity != 3:
        raise ValueError("pair splitting is defined for planar triangles")
    keys_a = {a.edge_key(i): i for i in range(3)}
    shared = [b.edge_key(i) for i in range(3) if b.edge_key(i) in keys_a]
    if not shared:
        raise ValueError(f"faces {f1} and {f2} are not adjacent")
    key = sorted(shared, key=label_key)[0]
    a = _rot(a, keys_a[key])
    x, y, z1 = a.cycle
    b = _rot(b, _rotate_to(b, y, x))
    z2 = b.cycle[2]
    c1, c2 = a.center, b.center
    taken = set(t.points) | set(t.derived)
    e = new_label or f"E{key}".replace("~", "")
    while e in taken:
        e += "'"
    labeled = a.edges is not None
    if z1 == z2 and not labeled:
        # without edge labels the four halves would meet along e-z four times
        raise ValueError(f"faces {f1} and {f2} share all vertices; label the edges to split them")
    k_xe, k_ey, k_ez1, k_ez2 = (f"{key}.{s}" for s in ("xe", "ey", "ez1", "ez2"))
    lab = lambda *ks: tuple(ks) if labeled else None
    ka = a.edges if labeled else (None, None, None)
    kb = b.edges if labeled else (None, None, None)
    new = [
        CMFace(f"{a.id}a", (x, e, z1), lab(k_xe, k_ez1, ka[2]), kind=MENELAUS, cutter=(y, c1)),
        CMFace(f"{a.id}b", (e, y, z1), lab(k_ey, ka[1], k_ez1), kind=MENELAUS, cutter=(x, c1)),
        CMFace(f"{b.id}a", (y, e, z2), lab(k_ey, k_ez2, kb[2]), kind=MENELAUS, cutter=(x, c2)),
        CMFace(f"{b.id}b", (e, x, z2), lab(k_xe, kb[1], k_ez2), kind=MENELAUS, cutter=(y, c2)),
    ]
    faces = [f for f in t.faces if f.id not in (a.id, b.id)] + new
    concl = t.conclusion
    if concl is not None:
        if concl[0] == "face" and concl[1] in (a.id, b.id):
            raise ValueError("cannot split the conclusion face")
        if concl == ("edge", key):
            # glue of the old edge now lives on E-Z2, since E was built from c1 Z1
            concl = ("edge", k_ez2 if labeled else f"{sort_labels([e, z2])[0]}~{sort_labels([e, z2])[1]}")
    derived = dict(t.derived)
    derived[e] = (x, y, c1, z1)
    out = CMTriangulation(t.dim, t.points + (e,), tuple(faces), concl, derived, t.name)
    validate_surface(out)
    cm_parity_check(out)
    return out


def greedy_ceva_pairs(t: CMTriangulation) -> list[tuple[str, str]]:
    occ = edge_occurrences(t.faces)
    kinds = {f.id: f.kind for f in t.faces}
    used, pairs = set(), []
    for key in sorted(occ, key=label_key):
        (f, *_), (g, *_) = occ[key]
        if f != g and kinds[f] == kinds[g] == CEVA and f not in used and g not in used:
            pairs.append((f, g))
            used |= {f, g}
    return pairs


def split_all_cevas(t: CMTriangulation) -> CMTriangulation:
    for f, g in greedy_ceva_pairs(t):
        t = split_adjacent_cevas(t, f, g)
    return t


# -- CM -> binomial ----------------------------------------------------------------

def cm_to_binomial(t: CMTriangulation, include_identities: bool = True) -> BinomialProof:
    if t.conclusion is not None and t.conclusion[0] != "edge":
        raise ValueError("binomial extraction needs an edge conclusion")
    spans = {}
    eqs = []
    for f in t.faces:
        for i, u, v in f.sides():
            sp = f.side_spanners(i)
            if len(sp) != t.dim or any(x is None for x in sp):
                raise MissingSpanningData(f"face {f.id} side {i} has no spanning data")
            spans[(f.id, i)] = tuple(sp)
        if include_identities:
            heads = tuple(spans[(f.id, i)] + (v,) for i, u, v in f.sides())
            tails = tuple(spans[(f.id, i)] + (u,) for i, u, v in f.sides())
            coeff = f.required * (-1) ** f.arity
            eqs.append(BinomialEquation(f"face.{f.id}", heads, tails, HYP,
                                        Incidence(f.kind, f.cycle), 1, coeff))
    occ = edge_occurrences(t.faces)
    concl = t.conclusion[1] if t.conclusion else None
    for key in sorted(occ, key=label_key):
        (f, i, x, y), (g, j, _, _) = occ[key]
        sf, sg = spans[(f, i)], spans[(g, j)]
        eqs.append(BinomialEquation(f"edge.{key}", (sf + (x,), sg + (y,)), (sf + (y,), sg + (x,)),
                                    CONCL if key == concl else HYP, Incidence("glue", (x, y))))
    proof = BinomialProof(tuple(eqs))
    rep = verify_cancellation(proof, strict=False)
    if not rep.ok:
        raise CancellationFails(rep)
    return proof


# -- isomorphism -----------------------------------------------------------------

def _incidence_graph(c, match_labels: bool):
    g = nx.DiGraph()
    kind = {}
    if isinstance(c, QuadTiling):
        kind = {v: ("line" if c.is_line(v) else "point") for v in c.complex().vertices}
    for v in c.complex().vertices:
        g.add_node(("v", v), tag=(kind.get(v, "point"), v if match_labels and kind.get(v) != "line" else None))
    for f in c.complex().faces:
        ftag = ("face", getattr(f, "kind", "quad"))
        g.add_node(("f", f.id), tag=ftag)
        k = f.arity
        for i, x in enumerate(f.cycle):
            g.add_node(("c", f.id, i), tag=("corner",))
            g.add_edge(("f", f.id), ("c", f.id, i), tag="has")
            g.add_edge(("c", f.id, i), ("v", x), tag="at")
            g.add_edge(("c", f.id, i), ("c", f.id, (i + 1) % k), tag="next")
    return g


def isomorphic(a, b, match_labels: bool = True) -> bool:
    """Orientation-preserving isomorphism of vertex-face incidence structures.

    With match_labels, point labels must correspond identically; line
    vertices and faces may be renamed.
    """
    ga, gb = _incidence_graph(a, match_labels), _incidence_graph(b, match_labels)
    return nx.is_isomorphic(ga, gb, node_match=lambda x, y: x["tag"] == y["tag"],
                            edge_match=lambda x, y: x["tag"] == y["tag"])
