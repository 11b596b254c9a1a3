"""Closed oriented surfaces carrying quad or Ceva/Menelaus face conditions."""
from __future__ import annotations

from collections import Counter, defaultdict, deque
from dataclasses import dataclass, field, replace
from fractions import Fraction
from typing import Mapping, Sequence

from .bracket_core import (
    Configuration, HomCoords, HyperplaneCoords, DegenerateInput, RatioUndefined,
    AffineNormalizationError, bracket_value, det, join2, join3, label_key, meet2, meet3,
    oriented_ratio, pairing, primitive, proportional, sort_labels, span,
)


class TopologyError(ValueError):
    pass


class BoundaryEdge(TopologyError):
    pass


class NonManifoldEdge(TopologyError):
    pass


class NonOrientable(TopologyError):
    def __init__(self, msg, witness=()):
        self.witness = tuple(witness)
        super().__init__(msg)


class Disconnected(TopologyError):
    pass


class MalformedFace(TopologyError):
    pass


class IncidentPair(ValueError):
    pass


class FormalResidue(ValueError):
    def __init__(self, pairs):
        self.pairs = pairs
        super().__init__("formal residue on " + ", ".join(f"{p}-{l}:{e:+d}" for (p, l), e in pairs))


class HypothesisFaceIncoherent(ValueError):
    def __init__(self, face):
        self.face = face
        super().__init__(f"hypothesis face {face} is not coherent")


class ConclusionFailed(AssertionError):
    pass


class EdgeGlueMismatch(ValueError):
    def __init__(self, edge):
        self.edge = edge
        super().__init__(f"edge points disagree on edge {edge}")


class HypothesisTriangleFails(ValueError):
    def __init__(self, face, value):
        self.face, self.value = face, value
        super().__init__(f"face {face} has product {value}")


class ParityViolation(ValueError):
    pass


class Degenerate(ValueError):
    """A nondegeneracy precondition failed on the given configuration."""


# -- generic complex ---------------------------------------------------------

@dataclass(frozen=True)
class Face:
    id: str
    cycle: tuple[str, ...]
    edges: tuple[str, ...] | None = None  # label of side i: cycle[i] -> cycle[i+1]

    def __post_init__(self):
        object.__setattr__(self, "cycle", tuple(self.cycle))
        if self.edges is not None:
            object.__setattr__(self, "edges", tuple(self.edges))
            if len(self.edges) != len(self.cycle):
                raise MalformedFace(f"face {self.id}: {len(self.edges)} edge labels for {len(self.cycle)} sides")
        if len(self.cycle) < 3:
            raise MalformedFace(f"face {self.id} has fewer than 3 vertices")

    @property
    def arity(self) -> int:
        return len(self.cycle)

    def sides(self):
        k = len(self.cycle)
        for i in range(k):
            yield i, self.cycle[i], self.cycle[(i + 1) % k]

    def edge_key(self, i: int) -> str:
        if self.edges is not None:
            return self.edges[i]
        u, v = self.cycle[i], self.cycle[(i + 1) % len(self.cycle)]
        a, b = sort_labels([u, v])
        return f"{a}~{b}"

    def reversed(self) -> "Face":
        c = self.cycle
        cyc = (c[0],) + tuple(reversed(c[1:]))
        edges = None if self.edges is None else tuple(reversed(self.edges))
        return Face(self.id, cyc, edges)

    def min_vertex(self):
        return min((label_key(v) for v in self.cycle))


@dataclass(frozen=True)
class SurfaceComplex:
    vertices: tuple[str, ...]
    faces: tuple[Face, ...]

    def complex(self) -> "SurfaceComplex":
        return self


@dataclass
class TopologyReport:
    V: int
    E: int
    F: int
    chi: int
    genus: Fraction
    oriented: bool
    orientable: bool
    connected: bool

    def as_dict(self):
        g = self.genus
        return dict(V=self.V, E=self.E, F=self.F, chi=self.chi,
                    genus=int(g) if g.denominator == 1 else str(g),
                    oriented=self.oriented, connected=self.connected)


def edge_occurrences(faces: Sequence[Face]):
    occ = defaultdict(list)
    for f in faces:
        for i, u, v in f.sides():
            if u == v:
                raise MalformedFace(f"face {f.id} has a loop at {u}")
            occ[f.edge_key(i)].append((f.id, i, u, v))
    return occ


def _orientation_solve(faces: Sequence[Face], occ):
    """2-colour faces by relative orientation; returns flips or None."""
    adj = defaultdict(list)
    for key, os_ in occ.items():
        if len(os_) != 2:
            continue
        (f, _, u, v), (g, _, x, y) = os_
        same_dir = (u, v) == (x, y)
        adj[f].append((g, same_dir))
        adj[g].append((f, same_dir))
    flip = {}
    for f0 in faces:
        if f0.id in flip:
            continue
        flip[f0.id] = False
        dq = deque([f0.id])
        while dq:
            f = dq.popleft()
            for g, same in adj[f]:
                want = flip[f] ^ same
                if g not in flip:
                    flip[g] = want
                    dq.append(g)
                elif flip[g] != want:
                    return None
    return flip


def validate_surface(c, require_oriented: bool = True) -> TopologyReport:
    c = c.complex()
    faces = list(c.faces)
    ids = [f.id for f in faces]
    if len(set(ids)) != len(ids):
        raise MalformedFace("duplicate face ids")
    verts = set(c.vertices)
    for f in faces:
        for v in f.cycle:
            if v not in verts:
                raise MalformedFace(f"face {f.id} uses undeclared vertex {v}")
    occ = edge_occurrences(faces)
    witness = None
    for key in sorted(occ):
        os_ = occ[key]
        if len(os_) == 1:
            raise BoundaryEdge(f"edge {key} lies in only one face ({os_[0][0]})")
        if len(os_) > 2:
            raise NonManifoldEdge(f"edge {key} lies in {len(os_)} faces")
        (f, _, u, v), (g, _, x, y) = os_
        if {u, v} != {x, y}:
            raise MalformedFace(f"edge {key} joins {u},{v} in {f} but {x},{y} in {g}")
        if (u, v) == (x, y) and witness is None:
            witness = (key, f, g)
    # connectivity through vertices
    parent = {v: v for v in verts}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x
    for f in faces:
        for _, u, v in f.sides():
            parent[find(u)] = find(v)
    connected = len({find(v) for v in verts}) <= 1
    if not connected:
        raise Disconnected(f"{len({find(v) for v in verts})} components")
    flips = _orientation_solve(faces, occ)
    orientable = flips is not None
    if require_oriented and witness is not None:
        key, f, g = witness
        hint = "stored orientation is inconsistent" if orientable else "surface is not orientable"
        raise NonOrientable(f"faces {f} and {g} traverse edge {key} in the same direction ({hint})",
                            witness)
    V, E, F = len(verts), len(occ), len(faces)
    chi = V - E + F
    return TopologyReport(V, E, F, chi, Fraction(2 - chi, 2), witness is None, orientable, connected)


def orient_faces(faces: Sequence[Face]) -> list[Face]:
    """Flip faces so the orientation is globally consistent (first face fixed)."""
    faces = list(faces)
    occ = edge_occurrences(faces)
    flips = _orientation_solve(faces, occ)
    if flips is None:
        raise NonOrientable("surface is not orientable")
    return [f.reversed() if flips[f.id] else f for f in faces]


# -- quad tilings ------------------------------------------------------------

@dataclass(frozen=True)
class QuadTiling:
    dim: int
    points: tuple[str, ...]
    lines: Mapping[str, tuple[str, ...]]  # line id -> points declared incident
    faces: tuple[Face, ...]
    conclusion: str | None = None
    spans: Mapping[str, tuple[str, ...]] = field(default_factory=dict)
    meets: Mapping[str, str] = field(default_factory=dict)
    name: str = ""

    def __post_init__(self):
        object.__setattr__(self, "points", tuple(self.points))
        object.__setattr__(self, "faces", tuple(self.faces))
        object.__setattr__(self, "lines", {k: tuple(v) for k, v in self.lines.items()})
        object.__setattr__(self, "spans", {k: tuple(v) for k, v in self.spans.items()})
        object.__setattr__(self, "meets", dict(self.meets))
        clash = set(self.points) & set(self.lines)
        if clash:
            raise MalformedFace(f"ids used both as point and line: {sorted(clash)}")
        for f in self.faces:
            if f.arity != 4:
                raise MalformedFace(f"quad face {f.id} has {f.arity} vertices")
            kinds = [self.is_line(v) for v in f.cycle]
            if kinds not in ([False, True, False, True], [True, False, True, False]):
                raise MalformedFace(f"face {f.id} does not alternate points and lines")
        if self.conclusion is not None and self.conclusion not in {f.id for f in self.faces}:
            raise MalformedFace(f"conclusion face {self.conclusion} is not a face")

    def is_line(self, v: str) -> bool:
        return v in self.lines

    def complex(self) -> SurfaceComplex:
        return SurfaceComplex(tuple(self.points) + tuple(self.lines), self.faces)

    def face(self, fid: str) -> Face:
        for f in self.faces:
            if f.id == fid:
                return f
        raise KeyError(fid)

    def pml(self, f: Face) -> tuple[str, str, str, str]:
        """Face as (P, m, Q, l), rotated to start at a point."""
        c = f.cycle
        return c if not self.is_line(c[0]) else c[1:] + c[:1]

    def spanning(self, line: str) -> tuple[str, ...]:
        if line in self.spans:
            return self.spans[line]
        inc = sort_labels(self.lines[line])
        if len(inc) < self.dim:
            raise Degenerate(f"line {line} has no spanning data")
        return tuple(inc[: self.dim])

    def line_degree(self, line: str) -> int:
        return sum(f.cycle.count(line) for f in self.faces)

    def rotation(self, v: str) -> list[tuple[Face, str, str]]:
        """Faces around v in rotation order, each with (in-neighbour, out-neighbour)."""
        around = []
        for f in self.faces:
            k = f.arity
            for i, x in enumerate(f.cycle):
                if x == v:
                    around.append((f, f.cycle[i - 1], f.cycle[(i + 1) % k]))
        if not around:
            return []
        start = min(range(len(around)), key=lambda i: label_key(around[i][0].id))
        order = [around.pop(start)]
        while around:
            nxt = [i for i, (f, a, b) in enumerate(around) if a == order[-1][2]]
            if not nxt:
                raise NonOrientable(f"rotation around {v} is not a single cycle")
            order.append(around.pop(nxt[0]))
        if order[0][1] != order[-1][2]:
            raise NonOrientable(f"rotation around {v} does not close")
        return order


def resolve_line_coords(t: QuadTiling, config: Configuration, overrides=None) -> dict:
    out = {}
    for l in t.lines:
        if overrides and l in overrides:
            h = overrides[l]
            out[l] = h if isinstance(h, HyperplaneCoords) else HyperplaneCoords(tuple(h))
        else:
            try:
                out[l] = span(config, t.spanning(l))
            except DegenerateInput as e:
                raise Degenerate(f"spanning points of {l} are dependent") from e
    return out


@dataclass
class Coherency:
    fraction: Fraction
    coherent: bool
    cross_check: Fraction | None  # [P, Q, l∧m]; None when l and m coincide


def _line_points(l: HyperplaneCoords, m: HyperplaneCoords):
    """Two homogeneous points spanning the line l∧m in 3-space."""
    pts = []
    for k in range(4):
        e = [0, 0, 0, 0]
        e[k] = 1
        try:
            x = meet3(l, m, HyperplaneCoords(tuple(e)))
        except DegenerateInput:
            continue
        if not any(proportional(x.coords, y.coords) for y in pts):
            pts.append(x)
        if len(pts) == 2:
            return pts
    raise DegenerateInput("planes do not meet in a line")


def face_coherency(config: Configuration, face: Sequence[str], line_coords: Mapping) -> Coherency:
    c = tuple(face)
    if c[0] in line_coords:
        c = c[1:] + c[:1]
    p, m, q, l = c
    P, Q = config[p], config[q]
    L, M = line_coords[l], line_coords[m]
    pl, qm, pm, ql = pairing(L, P), pairing(M, Q), pairing(M, P), pairing(L, Q)
    for val, a, b in ((pl, p, l), (qm, q, m), (pm, p, m), (ql, q, l)):
        if val == 0:
            raise IncidentPair(f"point {a} lies on {b}")
    frac = pl * qm / (pm * ql)
    if proportional(L.coeffs, M.coeffs):
        cross = None
        coherent = True
    elif config.dim == 2:
        cross = det([P.coords, Q.coords, meet2(L, M).coords])
        coherent = cross == 0
    else:
        x1, x2 = _line_points(L, M)
        cross = det([P.coords, Q.coords, x1.coords, x2.coords])
        coherent = cross == 0
    if coherent != (frac == 1):
        raise AssertionError(f"coherency cross-check disagrees on face {face}")
    return Coherency(frac, coherent, cross)


def formal_exponents(t: QuadTiling) -> Counter:
    exps = Counter()
    for f in t.faces:
        for _, u, v in f.sides():
            if t.is_line(u):
                exps[(v, u)] += 1   # line -> point: numerator
            else:
                exps[(u, v)] -= 1
    return exps


@dataclass
class QuadVerdict:
    topology: TopologyReport
    faces: dict = field(default_factory=dict)
    conclusion_coherent: bool | None = None

    @property
    def ok(self) -> bool:
        return self.conclusion_coherent is not False


def verify_quad_proof(t: QuadTiling, config: Configuration | None = None, line_coords=None) -> QuadVerdict:
    topo = validate_surface(t, require_oriented=False)
    res = sorted(((k, e) for k, e in formal_exponents(t).items() if e),
                 key=lambda ke: (label_key(ke[0][0]), label_key(ke[0][1])))
    if res:
        raise FormalResidue(res)
    verdict = QuadVerdict(topo)
    if config is None:
        return verdict
    if t.conclusion is None:
        raise ValueError("no conclusion face designated")
    lc = resolve_line_coords(t, config, line_coords)
    for f in t.faces:
        try:
            verdict.faces[f.id] = face_coherency(config, t.pml(f), lc)
        except IncidentPair as e:
            raise Degenerate(f"face {f.id}: {e}") from e
    for f in t.faces:
        if f.id != t.conclusion and not verdict.faces[f.id].coherent:
            raise HypothesisFaceIncoherent(f.id)
    verdict.conclusion_coherent = verdict.faces[t.conclusion].coherent
    if not verdict.conclusion_coherent:
        raise ConclusionFailed(f"conclusion face {t.conclusion} is not coherent")
    return verdict


# -- single-cell checks --------------------------------------------------------

def _product(vals) -> Fraction:
    out = Fraction(1)
    for v in vals:
        out *= v
    return out


def menelaus_check(config: Configuration, polygon: Sequence[str], cutter: HyperplaneCoords) -> Fraction:
    k = len(polygon)
    return _product(oriented_ratio(cutter, polygon[i], polygon[(i + 1) % k], config) for i in range(k))


def _require_off_sides(config, tri, center):
    a, b, c = tri
    for x, y in ((a, b), (b, c), (c, a)):
        if bracket_value(config, x, y, center) == 0:
            raise Degenerate(f"center {center} lies on side line {x}{y}")


def ceva_check(config: Configuration, tri: Sequence[str], center: str) -> Fraction:
    _require_off_sides(config, tri, center)
    a, b, c = tri
    d = config[center]
    prod = Fraction(1)
    for x, y, z in ((a, b, c), (b, c, a), (c, a, b)):
        prod *= oriented_ratio(join2(config[z], d), x, y, config)
    return prod


def _require_tetrahedron(config, cycle):
    v = bracket_value(config, *cycle)
    if v == 0:
        raise Degenerate(f"points {' '.join(cycle)} are coplanar: [{' '.join(cycle)}] = 0")


def menelaus3d_check(config: Configuration, cycle: Sequence[str], plane: HyperplaneCoords) -> Fraction:
    _require_tetrahedron(config, cycle)
    for p in cycle:
        if pairing(plane, config[p]) == 0:
            raise Degenerate(f"plane passes through {p}")
    return menelaus_check(config, cycle, plane)


def ceva3d_planes(config: Configuration, cycle: Sequence[str], a: str):
    p = list(cycle)
    out = []
    for i in range(4):
        try:
            out.append(join3(config[a], config[p[(i + 2) % 4]], config[p[(i + 3) % 4]]))
        except DegenerateInput as e:
            raise Degenerate(f"{a} is collinear with {p[(i + 2) % 4]},{p[(i + 3) % 4]}") from e
    return out


def ceva3d_check(config: Configuration, cycle: Sequence[str], a: str) -> Fraction:
    _require_tetrahedron(config, cycle)
    p = list(cycle)
    for i in range(4):
        tri = [p[j] for j in range(4) if j != i]
        if bracket_value(config, a, *tri) == 0:
            raise Degenerate(f"{a} is coplanar with {' '.join(tri)}")
    hs = ceva3d_planes(config, p, a)
    return _product(oriented_ratio(hs[i], p[i], p[(i + 1) % 4], config) for i in range(4))


# -- CM complexes --------------------------------------------------------------

MENELAUS, CEVA = "menelaus", "ceva"


@dataclass(frozen=True)
class CMFace(Face):
    kind: str = MENELAUS
    cutter: tuple[str, ...] = ()   # Menelaus: points spanning the line/plane
    center: str | None = None      # Ceva

    def __post_init__(self):
        super().__post_init__()
        object.__setattr__(self, "cutter", tuple(self.cutter))
        if self.kind == MENELAUS and not self.cutter:
            raise MalformedFace(f"Menelaus face {self.id} needs a cutter")
        if self.kind == CEVA and self.center is None:
            raise MalformedFace(f"Ceva face {self.id} needs a center")
        if self.kind not in (MENELAUS, CEVA):
            raise MalformedFace(f"unknown face type {self.kind}")

    @property
    def required(self) -> int:
        return (-1) ** self.arity if self.kind == MENELAUS else 1

    def reversed(self) -> "CMFace":
        f = Face.reversed(self)
        return replace(self, cycle=f.cycle, edges=f.edges)

    def side_spanners(self, i: int) -> tuple[str, ...]:
        """Points spanning the hyperplane that cuts side i."""
        if self.kind == MENELAUS:
            return self.cutter
        k = self.arity
        if k == 3:
            return (self.cycle[(i + 2) % 3], self.center)
        if k == 4:
            return (self.center, self.cycle[(i + 2) % 4], self.cycle[(i + 3) % 4])
        raise MalformedFace(f"Ceva face {self.id} must have 3 or 4 vertices")

    def retyped(self, kind: str, cutter=(), center=None) -> "CMFace":
        return replace(self, kind=kind, cutter=tuple(cutter), center=center)


@dataclass(frozen=True)
class CMTriangulation:
    dim: int
    points: tuple[str, ...]
    faces: tuple[CMFace, ...]
    conclusion: tuple[str, str] | None = None   # ("edge", key) or ("face", id)
    derived: Mapping[str, tuple[str, str, str, str]] = field(default_factory=dict)
    name: str = ""

    def __post_init__(self):
        object.__setattr__(self, "points", tuple(self.points))
        object.__setattr__(self, "faces", tuple(self.faces))
        object.__setattr__(self, "derived", {k: tuple(v) for k, v in self.derived.items()})
        if self.conclusion is not None:
            kind, ref = self.conclusion
            if kind == "face" and ref not in {f.id for f in self.faces}:
                raise MalformedFace(f"conclusion face {ref} is not a face")
            if kind == "edge" and ref not in edge_occurrences(self.faces):
                raise MalformedFace(f"conclusion edge {ref} is not an edge")
            if kind not in ("edge", "face"):
                raise MalformedFace(f"bad conclusion kind {kind}")
        for f in self.faces:
            if f.kind == CEVA and f.arity != self.dim + 1:
                raise MalformedFace(f"Ceva face {f.id} needs {self.dim + 1} vertices in dimension {self.dim}")
            if f.kind == MENELAUS and len(f.cutter) != self.dim:
                raise MalformedFace(f"cutter of {f.id} needs {self.dim} points")

    def complex(self) -> SurfaceComplex:
        return SurfaceComplex(self.points, self.faces)

    def face(self, fid: str) -> CMFace:
        for f in self.faces:
            if f.id == fid:
                return f
        raise KeyError(fid)

    def counts(self) -> Counter:
        return Counter(f.kind for f in self.faces)

    def extend(self, config: Configuration) -> Configuration:
        """Add derived points (meets of two joins) to a planar configuration."""
        if not self.derived:
            return config
        extra = {}
        cfg = config
        for lab, (a, b, c, d) in self.derived.items():
            try:
                x = meet2(join2(cfg[a], cfg[b]), join2(cfg[c], cfg[d]))
            except DegenerateInput as e:
                raise Degenerate(f"derived point {lab} is undefined") from e
            extra[lab] = HomCoords(primitive(x.coords))
            cfg = config.with_points(extra)
        return cfg


def side_hyperplane(f: CMFace, i: int, config: Configuration) -> HyperplaneCoords:
    try:
        return span(config, f.side_spanners(i))
    except DegenerateInput as e:
        raise Degenerate(f"cutter of face {f.id} side {i} is undefined") from e


def side_ratio(f: CMFace, i: int, config: Configuration) -> Fraction:
    h = side_hyperplane(f, i, config)
    u, v = f.cycle[i], f.cycle[(i + 1) % f.arity]
    try:
        return oriented_ratio(h, u, v, config)
    except (RatioUndefined, AffineNormalizationError) as e:
        raise Degenerate(f"face {f.id}: {e}") from e


@dataclass
class CMVerdict:
    topology: TopologyReport
    face_products: dict = field(default_factory=dict)
    glue: dict = field(default_factory=dict)
    conclusion_holds: bool | None = None

    @property
    def ok(self) -> bool:
        return self.conclusion_holds is not False


def formal_sign(t: CMTriangulation) -> int:
    s = 1
    for f in t.faces:
        s *= f.required
    return s


def verify_cm_proof(t: CMTriangulation, config: Configuration | None = None) -> CMVerdict:
    topo = validate_surface(t)
    if formal_sign(t) != 1:
        raise ParityViolation("product of the required face constants is -1")
    verdict = CMVerdict(topo)
    if config is None:
        return verdict
    if t.conclusion is None:
        raise ValueError("no conclusion designated")
    cfg = t.extend(config)
    ratios = {}
    for f in t.faces:
        rs = [side_ratio(f, i, cfg) for i in range(f.arity)]
        for i, r in enumerate(rs):
            ratios[(f.id, i)] = r
        verdict.face_products[f.id] = _product(rs)
        if verdict.face_products[f.id] != f.required:
            raise HypothesisTriangleFails(f.id, verdict.face_products[f.id])
    occ = edge_occurrences(t.faces)
    kind, ref = t.conclusion
    concl_edges = {ref} if kind == "edge" else {t.face(ref).edge_key(i) for i in range(t.face(ref).arity)}
    for key in sorted(occ):
        (f, i, _, _), (g, j, _, _) = occ[key]
        verdict.glue[key] = ratios[(f, i)] * ratios[(g, j)] == 1
        if key not in concl_edges and not verdict.glue[key]:
            raise EdgeGlueMismatch(key)
    if kind == "edge":
        verdict.conclusion_holds = verdict.glue[ref]
    else:
        cf = t.face(ref)
        prod = Fraction(1)
        for i in range(cf.arity):
            (a, ia, _, _), (b, ib, _, _) = occ[cf.edge_key(i)]
            other = (b, ib) if a == cf.id else (a, ia)
            prod /= ratios[other]      # ratio transferred from the neighbour
        verdict.conclusion_holds = prod == cf.required
    if not verdict.conclusion_holds:
        raise ConclusionFailed(f"conclusion {kind} {ref} does not hold")
    return verdict


@dataclass
class ParityReport:
    F: int
    E: int
    menelaus: int
    ceva: int
    arity_sum: int


def cm_parity_check(t: CMTriangulation) -> ParityReport:
    occ = edge_occurrences(t.faces)
    cnt = t.counts()
    rep = ParityReport(len(t.faces), len(occ), cnt[MENELAUS], cnt[CEVA], sum(f.arity for f in t.faces))
    msgs = []
    if rep.arity_sum != 2 * rep.E:
        msgs.append(f"sum of face sizes {rep.arity_sum} != 2E = {2 * rep.E}")
    if formal_sign(t) != 1:
        msgs.append("odd number of sign flips from Menelaus faces")
    if all(f.arity == 3 for f in t.faces):
        if rep.F % 2:
            msgs.append(f"F = {rep.F} is odd")
        if rep.menelaus % 2:
            msgs.append(f"Menelaus count {rep.menelaus} is odd")
        if rep.ceva % 2:
            msgs.append(f"Ceva count {rep.ceva} is odd")
    if msgs:
        raise ParityViolation("; ".join(msgs) + f" (F={rep.F}, E={rep.E}, M={rep.menelaus}, C={rep.ceva})")
    return rep
