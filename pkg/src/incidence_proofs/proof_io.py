"""Proof document format: parsing, canonical serialization and DOT export.

A document is a sequence of line statements. `#` starts a comment.

    proof <name>
    kind binomial|quad|cm
    dim 2|3
    source "<free text>"
    points A B C ...             vertices of a complex, or every label of a binomial proof
    aux X Y ...                  labels a complex mentions without using them as vertices

    line l1 = X Y Z              quad: line vertex and the points on it
    span l2 = U Y                quad: spanning points used for brackets
    meet q5 = Z                  quad: point l∧m for full extraction
    face q1 = A l1 B l2          quad: oriented 4-cycle
    conclusion q1

    derive E = A B C D           cm: E = AB ∧ CD
    tri t1 menelaus cutter X Y on A B C [edges a b c]
    cell c1 ceva center E on 1 2 3 4 [edges ...]
    conclusion edge a | conclusion face t1

    eq e1: [A B D][A C E] = [A B E][A C D] [by collinear A B C]
    nondeg [A D E]
    conclusion e1

    theorem <name>               optional construction recipe
    step meet2 Z (A B) (X Y)
    hyp collinear A C Y
    concl collinear B D V
    require [A B C]
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Sequence

from .bracket_core import label_key, sort_labels
from .certify import (
    FreePoint, Meet2, Meet3Planes, MeetPlaneLine, PointOnLine, PointOnPlane, PointOnPlanes,
    RecipeError, Statement, TheoremSpec, TransversalThroughPoint, ARITY,
)
from .proofs_binomial import (
    CONCL, HYP, BinomialEquation, BinomialProof, Incidence, ZeroBracket, bracket_sort_key,
    cancellation_report,
)
from .tilings import CEVA, MENELAUS, CMFace, CMTriangulation, Face, MalformedFace, QuadTiling

KINDS = ("binomial", "quad", "cm", "theorem")


class ParseError(ValueError):
    def __init__(self, msg: str, line: int = 0, col: int = 0, code: str = "syntax"):
        self.msg, self.line, self.col, self.code = msg, line, col, code
        super().__init__(f"line {line}, col {col}: {msg}")


@dataclass
class ProofDocument:
    name: str
    kind: str
    dim: int
    proof: object
    theorem: TheoremSpec | None = None
    source: str = ""

    @property
    def points(self) -> tuple[str, ...]:
        return tuple(sort_labels(_proof_points(self)))


def _proof_points(doc) -> set:
    """Every point label the proof mentions, vertices or not."""
    p = doc.proof
    if p is None:
        return set()
    if isinstance(p, (QuadTiling, CMTriangulation)):
        return (set(p.points) | _aux_labels(p)) - set(getattr(p, "derived", {}))
    labs = set()
    for e in p.equations:
        for b in e.lhs + e.rhs:
            labs.update(b)
    for b in p.nondegeneracy:
        labs.update(b)
    return labs


def _aux_labels(p) -> set:
    """Labels referenced by a complex that are not among its vertices."""
    refs = set()
    if isinstance(p, QuadTiling):
        for v in p.lines.values():
            refs.update(v)
        for v in p.spans.values():
            refs.update(v)
        refs.update(p.meets.values())
    else:
        for f in p.faces:
            refs.update(f.cutter)
            if f.center is not None:
                refs.add(f.center)
        for v in p.derived.values():
            refs.update(v)
    return refs - set(p.points)


# -- tokenizer -------------------------------------------------------------------

_TOKEN = re.compile(r'"[^"]*"|[\[\]()=:]|-(?=\[)|[^\s\[\]()=:"]+')
_LABEL = re.compile(r"^[A-Za-z0-9_.'~*+]+$")


@dataclass
class Tok:
    text: str
    col: int


def _tokens(line: str) -> list[Tok]:
    code = line.split("#", 1)[0]
    return [Tok(m.group(0), m.start() + 1) for m in _TOKEN.finditer(code)]


class _Cursor:
    def __init__(self, toks: list[Tok], lineno: int):
        self.toks, self.i, self.lineno = toks, 0, lineno

    def err(self, msg, code="syntax", tok=None):
        tok = tok or (self.toks[self.i] if self.i < len(self.toks) else None)
        col = tok.col if tok else (self.toks[-1].col + len(self.toks[-1].text) if self.toks else 1)
        return ParseError(msg, self.lineno, col, code)

    def peek(self):
        return self.toks[self.i].text if self.i < len(self.toks) else None

    def next(self, what="token"):
        if self.i >= len(self.toks):
            raise self.err(f"expected {what}")
        t = self.toks[self.i]
        self.i += 1
        return t

    def expect(self, text):
        t = self.next(repr(text))
        if t.text != text:
            raise ParseError(f"expected {text!r}, got {t.text!r}", self.lineno, t.col)
        return t

    def label(self, what="label"):
        t = self.next(what)
        if not _LABEL.match(t.text):
            raise ParseError(f"bad {what} {t.text!r}", self.lineno, t.col)
        return t.text

    def labels_until(self, stops=()):
        out = []
        while self.peek() is not None and self.peek() not in stops and _LABEL.match(self.peek()):
            out.append(self.label())
        return out

    def done(self):
        if self.i < len(self.toks):
            raise self.err(f"unexpected {self.toks[self.i].text!r}")

    def group(self):
        self.expect("(")
        labs = self.labels_until((")",))
        self.expect(")")
        return tuple(labs)


def _bracket(cur: _Cursor, dim: int) -> tuple[str, ...]:
    open_tok = cur.expect("[")
    labs = cur.labels_until(("]",))
    cur.expect("]")
    if len(labs) == 1 and len(labs[0]) == dim + 1:
        labs = list(labs[0])            # compact form [1253]
    if len(labs) != dim + 1:
        raise ParseError(f"bracket needs {dim + 1} labels, got {len(labs)}", cur.lineno, open_tok.col, "arity")
    if len(set(labs)) != len(labs):
        raise ParseError(f"bracket [{' '.join(labs)}] has a repeated label and is identically zero",
                         cur.lineno, open_tok.col, "zero-bracket")
    return tuple(labs)


def _monomial(cur: _Cursor, dim: int):
    coeff = 1
    if cur.peek() == "-":
        cur.next()
        coeff = -1
    out = []
    while cur.peek() == "[":
        out.append(_bracket(cur, dim))
    if not out:
        raise cur.err("expected a bracket")
    return tuple(out), coeff


_STEP_SHAPES = {
    "free": (FreePoint, ""),
    "on_line": (PointOnLine, "ll"),
    "on_plane": (PointOnPlane, "lll"),
    "meet2": (Meet2, "gg"),
    "meet_plane_line": (MeetPlaneLine, "gg"),
    "meet3": (Meet3Planes, "ggg"),
    "on_planes": (PointOnPlanes, "gg"),
    "transversal": (TransversalThroughPoint, "lgg"),
}
_STEP_NAMES = {cls: name for name, (cls, _) in _STEP_SHAPES.items()}
_GROUP_SIZES = {Meet2: (2, 2), MeetPlaneLine: (3, 2), Meet3Planes: (3, 3, 3), PointOnPlanes: (3, 3),
                TransversalThroughPoint: (2, 2)}


def _step(cur: _Cursor):
    op_tok = cur.next("step kind")
    if op_tok.text not in _STEP_SHAPES:
        raise ParseError(f"unknown step {op_tok.text!r}", cur.lineno, op_tok.col)
    cls, shape = _STEP_SHAPES[op_tok.text]
    args = [cur.label("point label")]
    groups = []
    for s in shape:
        if s == "l":
            args.append(cur.label())
        else:
            g_tok = cur.toks[cur.i] if cur.i < len(cur.toks) else None
            g = cur.group()
            groups.append((g, g_tok))
            args.append(g)
    sizes = _GROUP_SIZES.get(cls, ())
    for (g, tok), n in zip(groups, sizes):
        if len(g) != n:
            raise ParseError(f"group needs {n} labels", cur.lineno, tok.col if tok else 0, "arity")
    cur.done()
    return cls(*args)


def _serialize_step(st) -> str:
    name = _STEP_NAMES[type(st)]
    parts = [name, st.label]
    if isinstance(st, PointOnLine):
        parts += [st.a, st.b]
    elif isinstance(st, PointOnPlane):
        parts += [st.a, st.b, st.c]
    elif isinstance(st, Meet2):
        parts += [_g(st.l), _g(st.m)]
    elif isinstance(st, MeetPlaneLine):
        parts += [_g(st.plane), _g(st.line)]
    elif isinstance(st, Meet3Planes):
        parts += [_g(st.h1), _g(st.h2), _g(st.h3)]
    elif isinstance(st, PointOnPlanes):
        parts += [_g(st.h1), _g(st.h2)]
    elif isinstance(st, TransversalThroughPoint):
        parts += [st.p, _g(st.line1), _g(st.line2)]
    return "step " + " ".join(parts)


def _g(labels) -> str:
    return "(" + " ".join(labels) + ")"


def _b(labels) -> str:
    return "[" + " ".join(labels) + "]"


# -- parser ------------------------------------------------------------------------

def parse(text: str) -> ProofDocument:
    hdr = {"name": None, "kind": None, "dim": None, "source": "", "points": None, "aux": []}
    quad = {"lines": {}, "spans": {}, "meets": {}, "faces": []}
    cm = {"derived": {}, "faces": []}
    bino = {"eqs": [], "nondeg": []}
    concl = None
    thm = {"name": None, "steps": [], "hyps": [], "concl": None, "require": []}
    where = {}

    def need_header(cur, tok):
        for k in ("kind", "dim"):
            if hdr[k] is None:
                raise ParseError(f"'{tok.text}' before '{k}' declaration", cur.lineno, tok.col)

    for lineno, raw in enumerate(text.splitlines(), 1):
        toks = _tokens(raw)
        if not toks:
            continue
        cur = _Cursor(toks, lineno)
        kw = cur.next()
        k = kw.text
        if k == "proof":
            hdr["name"] = cur.label("name")
            cur.done()
        elif k == "kind":
            t = cur.next("kind")
            if t.text not in KINDS:
                raise ParseError(f"unknown kind {t.text!r}", lineno, t.col)
            hdr["kind"] = t.text
            cur.done()
        elif k == "dim":
            t = cur.next("dimension")
            if t.text not in ("2", "3"):
                raise ParseError("dimension must be 2 or 3", lineno, t.col)
            hdr["dim"] = int(t.text)
            cur.done()
        elif k == "source":
            t = cur.next("quoted text")
            if not t.text.startswith('"'):
                raise ParseError("source needs a quoted string", lineno, t.col)
            hdr["source"] = t.text[1:-1]
            cur.done()
        elif k == "points":
            hdr["points"] = cur.labels_until()
            where["points"] = lineno
            cur.done()
        elif k == "aux":
            hdr["aux"] = cur.labels_until()
            cur.done()
        elif k in ("line", "span"):
            need_header(cur, kw)
            lid = cur.label("line id")
            cur.expect("=")
            labs = cur.labels_until()
            cur.done()
            target = quad["lines"] if k == "line" else quad["spans"]
            if lid in target:
                raise ParseError(f"duplicate {k} {lid}", lineno, kw.col)
            target[lid] = (tuple(labs), lineno, kw.col)
        elif k == "meet":
            fid = cur.label("face id")
            cur.expect("=")
            quad["meets"][fid] = cur.label()
            cur.done()
        elif k == "face":
            need_header(cur, kw)
            fid = cur.label("face id")
            cur.expect("=")
            cyc = cur.labels_until()
            cur.done()
            if len(cyc) != 4:
                raise ParseError(f"quad face needs 4 vertices, got {len(cyc)}", lineno, kw.col, "arity")
            quad["faces"].append((fid, tuple(cyc), lineno, kw.col))
        elif k == "derive":
            lab = cur.label()
            cur.expect("=")
            labs = cur.labels_until()
            cur.done()
            if len(labs) != 4:
                raise ParseError("derive needs four labels (two joins)", lineno, kw.col, "arity")
            cm["derived"][lab] = tuple(labs)
        elif k in ("tri", "cell"):
            need_header(cur, kw)
            fid = cur.label("face id")
            ftype = cur.next("face type")
            if ftype.text not in (MENELAUS, CEVA):
                raise ParseError(f"unknown face type {ftype.text!r}", lineno, ftype.col)
            cutter, center = (), None
            if ftype.text == MENELAUS:
                cur.expect("cutter")
                cutter = tuple(cur.labels_until(("on",)))
            else:
                cur.expect("center")
                center = cur.label()
            cur.expect("on")
            cyc = tuple(cur.labels_until(("edges",)))
            edges = None
            if cur.peek() == "edges":
                cur.next()
                edges = tuple(cur.labels_until())
                if len(edges) != len(cyc):
                    raise ParseError("one edge label per side", lineno, kw.col, "arity")
            cur.done()
            if k == "tri" and len(cyc) != 3:
                raise ParseError("tri needs 3 vertices", lineno, kw.col, "arity")
            cm["faces"].append((fid, ftype.text, cutter, center, cyc, edges, lineno, kw.col))
        elif k == "eq":
            need_header(cur, kw)
            name = cur.label("equation name")
            cur.expect(":")
            lhs, lc = _monomial(cur, hdr["dim"])
            cur.expect("=")
            rhs, rc = _monomial(cur, hdr["dim"])
            inc = None
            if cur.peek() == "by":
                cur.next()
                ik = cur.label("incidence kind")
                inc = Incidence(ik, tuple(cur.labels_until()))
            cur.done()
            if len(lhs) != len(rhs):
                raise ParseError("both sides need the same number of brackets", lineno, kw.col, "arity")
            bino["eqs"].append((name, lhs, rhs, lc, rc, inc, lineno, kw.col))
        elif k == "nondeg":
            need_header(cur, kw)
            while cur.peek() == "[":
                bino["nondeg"].append(_bracket(cur, hdr["dim"]))
            cur.done()
        elif k == "conclusion":
            a = cur.label()
            b = cur.label() if cur.peek() is not None else None
            cur.done()
            concl = (a, b, lineno, kw.col)
        elif k == "theorem":
            thm["name"] = cur.label("theorem name")
            cur.done()
        elif k == "step":
            thm["steps"].append((_step(cur), lineno, kw.col))
        elif k in ("hyp", "concl"):
            sk = cur.label("statement kind")
            labs = tuple(cur.labels_until())
            cur.done()
            if sk not in ARITY:
                raise ParseError(f"unknown statement kind {sk!r}", lineno, kw.col)
            if ARITY[sk] != len(labs):
                raise ParseError(f"{sk} needs {ARITY[sk]} labels", lineno, kw.col, "arity")
            if k == "hyp":
                thm["hyps"].append(Statement(sk, labs))
            else:
                thm["concl"] = Statement(sk, labs)
        elif k == "require":
            need_header(cur, kw)
            while cur.peek() == "[":
                thm["require"].append(_bracket(cur, hdr["dim"]))
            cur.done()
        else:
            raise ParseError(f"unknown statement {k!r}", lineno, kw.col)

    for key in ("name", "kind", "dim"):
        if hdr[key] is None:
            raise ParseError(f"missing '{'proof' if key == 'name' else key}' declaration", 1, 1)
    if hdr["points"] is None:
        raise ParseError("missing 'points' declaration", 1, 1)
    dim, kind = hdr["dim"], hdr["kind"]
    points = set(hdr["points"])
    known = points | set(hdr["aux"])

    def unresolved(label, line, col, what="label"):
        return ParseError(f"unresolved {what} {label!r}", line, col, "unresolved")

    if kind == "theorem":
        proof = None
        if bino["eqs"] or quad["faces"] or cm["faces"] or concl:
            raise ParseError("a theorem document carries no proof declarations", 1, 1)
    elif kind == "quad":
        lines = {}
        for lid, (labs, ln, col) in quad["lines"].items():
            for x in labs:
                if x not in known:
                    raise unresolved(x, ln, col)
            lines[lid] = labs
        for lid, (labs, ln, col) in quad["spans"].items():
            if lid not in lines:
                raise unresolved(lid, ln, col, "line")
            if len(labs) != dim:
                raise ParseError(f"span needs {dim} points", ln, col, "arity")
            for x in labs:
                if x not in known:
                    raise unresolved(x, ln, col)
        faces = []
        for fid, cyc, ln, col in quad["faces"]:
            for x in cyc:
                if x not in points and x not in lines:
                    raise unresolved(x, ln, col, "face vertex")
            faces.append(Face(fid, cyc))
        fids = {f.id for f in faces}
        for fid, x in quad["meets"].items():
            if fid not in fids:
                raise unresolved(fid, 0, 0, "face")
            if x not in known:
                raise unresolved(x, 0, 0)
        cf = None
        if concl:
            cf = concl[0]
            if cf not in fids or concl[1] is not None:
                raise unresolved(cf, concl[2], concl[3], "conclusion face")
        try:
            proof = QuadTiling(dim, tuple(sort_labels(points)), lines, _sort_faces(faces), cf,
                               {k: v[0] for k, v in quad["spans"].items()}, quad["meets"], hdr["name"])
        except MalformedFace as e:
            raise ParseError(str(e), 0, 0, "structure") from None
    elif kind == "cm":
        allp = points | set(cm["derived"])
        for lab, labs in cm["derived"].items():
            for x in labs:
                if x not in known:
                    raise unresolved(x, 0, 0)
        faces = []
        for fid, ftype, cutter, center, cyc, edges, ln, col in cm["faces"]:
            for x in cyc:
                if x not in allp:
                    raise unresolved(x, ln, col, "face vertex")
            for x in cutter + ((center,) if center else ()):
                if x not in allp | known:
                    raise unresolved(x, ln, col)
            try:
                faces.append(CMFace(fid, cyc, edges, kind=ftype, cutter=cutter, center=center))
            except MalformedFace as e:
                raise ParseError(str(e), ln, col, "structure") from None
        c = None
        if concl:
            if concl[0] not in ("edge", "face") or concl[1] is None:
                raise ParseError("cm conclusion is 'edge <key>' or 'face <id>'", concl[2], concl[3])
            c = (concl[0], concl[1])
        try:
            proof = CMTriangulation(dim, tuple(sort_labels(allp)), _sort_faces(faces), c,
                                    cm["derived"], hdr["name"])
        except MalformedFace as e:
            raise ParseError(str(e), concl[2] if concl else 0, concl[3] if concl else 0, "unresolved") from None
    else:
        eqs = []
        cname = concl[0] if concl else None
        if concl and concl[1] is not None:
            raise ParseError("binomial conclusion names one equation", concl[2], concl[3])
        for name, lhs, rhs, lc, rc, inc, ln, col in bino["eqs"]:
            for b in lhs + rhs:
                for x in b:
                    if x not in points:
                        raise unresolved(x, ln, col)
            eqs.append(BinomialEquation(name, lhs, rhs, CONCL if name == cname else HYP, inc, lc, rc))
        if cname is not None and cname not in {e.name for e in eqs}:
            raise unresolved(cname, concl[2], concl[3], "conclusion equation")
        try:
            proof = BinomialProof(tuple(eqs), frozenset(bino["nondeg"]))
        except (ValueError, ZeroBracket) as e:
            raise ParseError(str(e), 0, 0, "structure") from None

    theorem = None
    if thm["name"] is not None or thm["steps"]:
        try:
            theorem = TheoremSpec(thm["name"] or hdr["name"], dim, tuple(s for s, _, _ in thm["steps"]),
                                  tuple(thm["hyps"]), thm["concl"], tuple(thm["require"]))
        except RecipeError as e:
            ln = thm["steps"][0][1] if thm["steps"] else 0
            raise ParseError(str(e), ln, 1, "unresolved") from None
        defined = set(theorem.labels)
        doc = ProofDocument(hdr["name"], kind, dim, proof)
        missing = sort_labels(_proof_points(doc) - defined)
        if missing:
            raise ParseError(f"proof label {missing[0]!r} is not constructed by the theorem recipe",
                             where.get("points", 0), 1, "unresolved")
    if kind == "theorem" and theorem is None:
        raise ParseError("a theorem document needs a theorem block", 1, 1)
    return ProofDocument(hdr["name"], kind, dim, proof, theorem, hdr["source"])


def _face_order(f):
    pts = [v for v in f.cycle]
    return (min(label_key(v) for v in pts), label_key(f.id))


def _sort_faces(faces):
    return tuple(sorted(faces, key=_face_order))


def _quad_face_order(t: QuadTiling):
    def key(f):
        pts = [v for v in f.cycle if not t.is_line(v)]
        return (min(label_key(v) for v in pts), label_key(f.id))
    return sorted(t.faces, key=key)


# -- serializer ----------------------------------------------------------------------

def serialize(doc: ProofDocument) -> str:
    out = [f"proof {doc.name}", f"kind {doc.kind}", f"dim {doc.dim}"]
    if doc.source:
        out.append(f'source "{doc.source}"')
    p = doc.proof
    if p is None:
        out.append("points " + " ".join(sort_labels(doc.theorem.labels if doc.theorem else ())))
    elif isinstance(p, QuadTiling):
        out.append("points " + " ".join(sort_labels(p.points)))
        if _aux_labels(p):
            out.append("aux " + " ".join(sort_labels(_aux_labels(p))))
        for l in sort_labels(p.lines):
            out.append(f"line {l} = " + " ".join(sort_labels(p.lines[l])) if p.lines[l] else f"line {l} =")
        for l in sort_labels(p.spans):
            out.append(f"span {l} = " + " ".join(p.spans[l]))
        for fid in sort_labels(p.meets):
            out.append(f"meet {fid} = {p.meets[fid]}")
        for f in _quad_face_order(p):
            out.append(f"face {f.id} = " + " ".join(f.cycle))
        if p.conclusion:
            out.append(f"conclusion {p.conclusion}")
    elif isinstance(p, CMTriangulation):
        base = [x for x in p.points if x not in p.derived]
        out.append("points " + " ".join(sort_labels(base)))
        if _aux_labels(p):
            out.append("aux " + " ".join(sort_labels(_aux_labels(p))))
        for lab in sort_labels(p.derived):
            out.append(f"derive {lab} = " + " ".join(p.derived[lab]))
        for f in _sort_faces(p.faces):
            kw = "tri" if f.arity == 3 else "cell"
            typ = f"menelaus cutter {' '.join(f.cutter)}" if f.kind == MENELAUS else f"ceva center {f.center}"
            line = f"{kw} {f.id} {typ} on {' '.join(f.cycle)}"
            if f.edges is not None:
                line += " edges " + " ".join(f.edges)
            out.append(line)
        if p.conclusion:
            out.append(f"conclusion {p.conclusion[0]} {p.conclusion[1]}")
    else:
        out.append("points " + " ".join(sort_labels(_proof_points(doc))))
        for e in p.equations:
            line = f"eq {e.name}: {_side(e.lhs, e.lhs_coeff)} = {_side(e.rhs, e.rhs_coeff)}"
            if e.incidence is not None:
                line += f" by {e.incidence}"
            out.append(line)
        if p.nondegeneracy:
            out.append("nondeg " + " ".join(_b(b) for b in sorted(p.nondegeneracy, key=bracket_sort_key)))
        c = [e for e in p.equations if e.role == CONCL]
        if c:
            out.append(f"conclusion {c[0].name}")
    if doc.theorem is not None:
        t = doc.theorem
        out.append("")
        out.append(f"theorem {t.name}")
        out += [_serialize_step(s) for s in t.recipe]
        out += [f"hyp {h}" for h in t.hypotheses]
        if t.conclusion:
            out.append(f"concl {t.conclusion}")
        if t.nondegeneracy:
            out.append("require " + " ".join(_b(b) for b in t.nondegeneracy))
    return "\n".join(out) + "\n"


def _side(brs, coeff) -> str:
    return ("-" if coeff < 0 else "") + "".join(_b(b) for b in brs)


def document_for(proof, name: str, theorem: TheoremSpec | None = None, source: str = "") -> ProofDocument:
    if isinstance(proof, QuadTiling):
        kind, dim = "quad", proof.dim
    elif isinstance(proof, CMTriangulation):
        kind, dim = "cm", proof.dim
    else:
        kind = "binomial"
        b = proof.equations[0].lhs[0]
        dim = len(b) - 1
    return ProofDocument(name, kind, dim, proof, theorem, source)


# -- DOT -------------------------------------------------------------------------

def _q(s: str) -> str:
    return '"' + s.replace('"', '\\"') + '"'


def render_dot(obj, name: str | None = None) -> str:
    if isinstance(obj, ProofDocument):
        name = name or obj.name
        obj = obj.proof
    name = name or getattr(obj, "name", "") or "G"
    out = [f"graph {_q(name)} {{"]
    if isinstance(obj, QuadTiling):
        for v in sort_labels(obj.points):
            out.append(f"  {_q(v)} [shape=circle];")
        for l in sort_labels(obj.lines):
            out.append(f"  {_q(l)} [shape=box];")
        edges = set()
        for f in obj.faces:
            for _, u, v in f.sides():
                p, l = (v, u) if obj.is_line(u) else (u, v)
                edges.add((p, l))
        for p, l in sorted(edges, key=lambda e: (label_key(e[0]), label_key(e[1]))):
            out.append(f"  {_q(p)} -- {_q(l)};")
    elif isinstance(obj, CMTriangulation):
        for v in sort_labels(obj.points):
            shape = "doublecircle" if v in obj.derived else "circle"
            out.append(f"  {_q(v)} [shape={shape}];")
        seen = {}
        for f in obj.faces:
            for i, u, v in f.sides():
                seen.setdefault(f.edge_key(i), tuple(sort_labels([u, v])))
        for key in sort_labels(seen):
            u, v = seen[key]
            out.append(f"  {_q(u)} -- {_q(v)} [label={_q(key)}];")
        for f in _sort_faces(obj.faces):
            color = "palegreen" if f.kind == MENELAUS else "orange"
            tag = "M " + " ".join(f.cutter) if f.kind == MENELAUS else "C " + f.center
            node = _q("face:" + f.id)
            out.append(f"  {node} [shape=plaintext, style=filled, fillcolor={color}, label={_q(f.id + ' ' + tag)}];")
            for v in f.cycle:
                out.append(f"  {node} -- {_q(v)} [style=dotted];")
    elif isinstance(obj, BinomialProof):
        try:
            matched = cancellation_report(obj).matched
        except ValueError:
            matched = []   # no single conclusion: draw the equations only
        for e in obj.equations:
            out.append(f"  subgraph {_q('cluster_' + e.name)} {{")
            out.append(f"    label={_q(e.name + (' (conclusion)' if e.role == CONCL else ''))};")
            for side, brs in (("lhs", e.lhs), ("rhs", e.rhs)):
                fill = "black" if side == "lhs" else "white"
                font = "white" if side == "lhs" else "black"
                for i, b in enumerate(brs):
                    nid = _q(f"{e.name}.{side}.{i}")
                    out.append(f"    {nid} [label={_q(_b(b))}, style=filled, fillcolor={fill}, fontcolor={font}];")
            out.append("  }")
        for _, (lo, li), (ro, ri) in matched:
            out.append(f"  {_q(f'{lo}.{li}')} -- {_q(f'{ro}.{ri}')} [color=red, class=match];")
    out.append("}")
    return "\n".join(out) + "\n"
