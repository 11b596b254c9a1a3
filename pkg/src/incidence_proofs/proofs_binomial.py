"""Bi-quadratic equations between bracket monomials and their cancellation check."""
from __future__ import annotations

from collections import Counter, defaultdict
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

from .bracket_core import (
    Bracket, Configuration, Zero, eval_bracket, label_key, normalize_bracket,
)

HYP = "hypothesis"
CONCL = "conclusion"


class ZeroBracket(ValueError):
    pass


class LabelCollision(ValueError):
    pass


class NotAFinalPolynomial(ValueError):
    def __init__(self, report: "CancellationReport"):
        self.report = report
        super().__init__(report.summary())


class ChainBroken(ValueError):
    def __init__(self, index: int, msg: str = ""):
        self.index = index
        super().__init__(f"chain broken at equation {index}{': ' + msg if msg else ''}")


def _canon(raw: Sequence[str]) -> Bracket:
    b = normalize_bracket(raw)
    if b is Zero:
        raise ZeroBracket(f"bracket [{' '.join(raw)}] has a repeated label")
    return b


def bracket_sort_key(labels: Sequence[str]):
    return tuple(label_key(x) for x in labels)


@dataclass(frozen=True)
class BracketMonomial:
    factors: tuple[tuple[str, ...], ...]
    overall_sign: int = 1

    @classmethod
    def from_raw(cls, raws: Iterable[Sequence[str]], coeff: int = 1) -> "BracketMonomial":
        sign = coeff
        facs = []
        for r in raws:
            b = _canon(r)
            sign *= b.sign
            facs.append(b.labels)
        return cls(tuple(sorted(facs, key=bracket_sort_key)), sign)

    @property
    def degree(self) -> int:
        return len(self.factors)

    def evaluate(self, config: Configuration) -> Fraction:
        v = Fraction(self.overall_sign)
        for f in self.factors:
            v *= eval_bracket(config, Bracket(f))
        return v


@dataclass(frozen=True)
class Incidence:
    kind: str  # collinear | coplanar | coherent | menelaus | ceva | glue
    labels: tuple[str, ...] = ()

    def __str__(self):
        return f"{self.kind} {' '.join(self.labels)}".strip()


@dataclass(frozen=True)
class BinomialEquation:
    """lhs_coeff * prod(lhs) = rhs_coeff * prod(rhs); brackets kept as written."""
    name: str
    lhs: tuple[tuple[str, ...], ...]
    rhs: tuple[tuple[str, ...], ...]
    role: str = HYP
    incidence: Incidence | None = None
    lhs_coeff: int = 1
    rhs_coeff: int = 1
    side_conditions: tuple[tuple[str, ...], ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "lhs", tuple(tuple(b) for b in self.lhs))
        object.__setattr__(self, "rhs", tuple(tuple(b) for b in self.rhs))
        if len(self.lhs) != len(self.rhs):
            raise ValueError(f"equation {self.name}: sides have different degrees")
        if self.role not in (HYP, CONCL):
            raise ValueError(f"bad role {self.role}")
        for b in self.lhs + self.rhs:
            _canon(b)

    @property
    def left(self) -> BracketMonomial:
        return BracketMonomial.from_raw(self.lhs, self.lhs_coeff)

    @property
    def right(self) -> BracketMonomial:
        return BracketMonomial.from_raw(self.rhs, self.rhs_coeff)

    @property
    def degree(self) -> int:
        return len(self.lhs)

    def canonical(self):
        """Side-order-insensitive normal form: (sorted monomial pair, relative sign)."""
        l, r = self.left, self.right
        pair = tuple(sorted([l.factors, r.factors]))
        return pair, l.overall_sign * r.overall_sign

    def swapped(self) -> "BinomialEquation":
        return BinomialEquation(self.name, self.rhs, self.lhs, self.role, self.incidence,
                                self.rhs_coeff, self.lhs_coeff, self.side_conditions)

    def with_role(self, role: str) -> "BinomialEquation":
        return BinomialEquation(self.name, self.lhs, self.rhs, role, self.incidence,
                                self.lhs_coeff, self.rhs_coeff, self.side_conditions)

    def __str__(self):
        def side(brs, c):
            s = "".join("[" + " ".join(b) + "]" for b in brs)
            return ("-" if c < 0 else "") + s
        return f"{side(self.lhs, self.lhs_coeff)} = {side(self.rhs, self.rhs_coeff)}"


@dataclass(frozen=True)
class BinomialProof:
    equations: tuple[BinomialEquation, ...]
    nondegeneracy: frozenset = frozenset()

    def __post_init__(self):
        object.__setattr__(self, "equations", tuple(self.equations))
        nd = set(self.nondegeneracy)
        for e in self.equations:
            nd.update(tuple(_canon(s).labels) for s in e.side_conditions)
        object.__setattr__(self, "nondegeneracy", frozenset(tuple(_canon(b).labels) for b in nd))
        names = [e.name for e in self.equations]
        if len(set(names)) != len(names):
            raise ValueError("duplicate equation names")

    @property
    def conclusion(self) -> BinomialEquation:
        cs = [e for e in self.equations if e.role == CONCL]
        if len(cs) != 1:
            raise ValueError(f"a proof needs exactly one conclusion, found {len(cs)}")
        return cs[0]

    @property
    def hypotheses(self) -> list[BinomialEquation]:
        return [e for e in self.equations if e.role == HYP]

    def required_nonzero(self) -> list[tuple[str, ...]]:
        """Side conditions plus every bracket of every hypothesis."""
        req = set(self.nondegeneracy)
        for e in self.hypotheses:
            req.update(e.left.factors)
            req.update(e.right.factors)
        return sorted(req, key=bracket_sort_key)

    def without(self, name: str) -> "BinomialProof":
        return BinomialProof(tuple(e for e in self.equations if e.name != name), self.nondegeneracy)


# -- constructors ------------------------------------------------------------

def collinearity_equation(a, b, c, d, e, name="e", role=HYP) -> BinomialEquation:
    """[ABD][ACE] = [ABE][ACD], equivalent to A,B,C collinear when [ADE] != 0."""
    labels = (a, b, c, d, e)
    if len(set(labels)) != 5:
        raise LabelCollision(f"labels must be distinct: {labels}")
    return BinomialEquation(name, ((a, b, d), (a, c, e)), ((a, b, e), (a, c, d)), role,
                            Incidence("collinear", (a, b, c)), side_conditions=((a, d, e),))


def coplanarity_equation(a, b, c, d, e, f, name="e", role=HYP, pivot=None) -> BinomialEquation:
    """Binomial for h(ABCD) using auxiliary points E, F.

    Pivot P,Q defaults to the two least labels of ABCD, R,S are the other two
    in order of appearance: [PQRE][PQSF] = [PQRF][PQSE].
    """
    quad = (a, b, c, d)
    if len(set(quad + (e, f))) != 6:
        raise LabelCollision(f"labels must be distinct: {quad + (e, f)}")
    if pivot is None:
        pivot = tuple(sorted(quad, key=label_key)[:2])
    p, q = pivot
    r, s = [x for x in quad if x not in pivot]
    return BinomialEquation(name, ((p, q, r, e), (p, q, s, f)), ((p, q, r, f), (p, q, s, e)), role,
                            Incidence("coplanar", quad), side_conditions=((p, q, e, f),))


# -- cancellation ------------------------------------------------------------

@dataclass
class CancellationReport:
    matched: list = field(default_factory=list)   # (bracket, left occurrence, right occurrence)
    residue_left: list = field(default_factory=list)
    residue_right: list = field(default_factory=list)
    sign_left: int = 1
    sign_right: int = 1

    @property
    def residue(self) -> list:
        return self.residue_left + self.residue_right

    @property
    def sign_ok(self) -> bool:
        return self.sign_left == self.sign_right

    @property
    def ok(self) -> bool:
        return not self.residue and self.sign_ok

    def summary(self) -> str:
        if self.ok:
            return f"cancellation ok: {len(self.matched)} matched pairs"
        parts = []
        if self.residue:
            fmt = lambda occ: "[" + " ".join(occ[0]) + f"]@{occ[1]}"
            parts.append("residue left: " + ", ".join(fmt(o) for o in self.residue_left))
            parts.append("residue right: " + ", ".join(fmt(o) for o in self.residue_right))
        if not self.sign_ok:
            parts.append("aggregate sign mismatch")
        return "; ".join(parts)


def _occurrences(proof: BinomialProof):
    # every equation, conclusion included, contributes its lhs to the left
    left, right = [], []
    sl = sr = 1
    for e in proof.equations:
        sl *= e.left.overall_sign
        sr *= e.right.overall_sign
        for i, raw in enumerate(e.lhs):
            left.append((_canon(raw).labels, f"{e.name}.lhs", i))
        for i, raw in enumerate(e.rhs):
            right.append((_canon(raw).labels, f"{e.name}.rhs", i))
    return left, right, sl, sr


def cancellation_report(proof: BinomialProof) -> CancellationReport:
    proof.conclusion  # exactly one conclusion
    left, right, sl, sr = _occurrences(proof)
    pool = defaultdict(list)
    for occ in right:
        pool[occ[0]].append(occ)
    rep = CancellationReport(sign_left=sl, sign_right=sr)
    for occ in left:
        bucket = pool.get(occ[0])
        if bucket:
            rep.matched.append((occ[0], occ[1:], bucket.pop(0)[1:]))
        else:
            rep.residue_left.append((occ[0],) + occ[1:])
    for k in sorted(pool, key=bracket_sort_key):
        for occ in pool[k]:
            rep.residue_right.append((occ[0],) + occ[1:])
    return rep


def verify_cancellation(proof: BinomialProof, strict: bool = True) -> CancellationReport:
    rep = cancellation_report(proof)
    if strict and not rep.ok:
        raise NotAFinalPolynomial(rep)
    return rep


# -- numeric evaluation ------------------------------------------------------

@dataclass
class EquationValue:
    name: str
    role: str
    lhs: Fraction
    rhs: Fraction

    @property
    def holds(self) -> bool:
        return self.lhs == self.rhs


@dataclass
class NumericReport:
    equations: list[EquationValue]
    vanishing: list[tuple[str, ...]]

    @property
    def hypotheses_hold(self) -> bool:
        return all(v.holds for v in self.equations if v.role == HYP)

    @property
    def conclusion_holds(self) -> bool:
        return all(v.holds for v in self.equations if v.role == CONCL)

    @property
    def nondegenerate(self) -> bool:
        return not self.vanishing

    def failing_hypotheses(self) -> list[str]:
        return [v.name for v in self.equations if v.role == HYP and not v.holds]


def verify_numeric(proof: BinomialProof, config: Configuration) -> NumericReport:
    vals = [EquationValue(e.name, e.role, e.left.evaluate(config), e.right.evaluate(config))
            for e in proof.equations]
    vanishing = [b for b in proof.required_nonzero() if eval_bracket(config, Bracket(b)) == 0]
    return NumericReport(vals, vanishing)


def sound_on(proof: BinomialProof, config: Configuration) -> bool:
    """Cancellation + true hypotheses + nondegeneracy must force the conclusion."""
    rep = verify_numeric(proof, config)
    if not (rep.hypotheses_hold and rep.nondegenerate):
        return True
    return rep.conclusion_holds


# -- chains ------------------------------------------------------------------

def _multiply(eqs: Sequence[BinomialEquation]):
    left, right = [], []
    sign = 1
    for i, e in enumerate(eqs):
        l, r = e.left, e.right
        sign *= l.overall_sign * r.overall_sign
        left += [(f, i) for f in l.factors]
        right += [(f, i) for f in r.factors]
    # cancel greedily, preferring partners from neighbouring equations
    surv_l = []
    avail = list(right)
    for f, i in left:
        cands = [k for k, (g, _) in enumerate(avail) if g == f]
        if cands:
            k = min(cands, key=lambda k: (abs(avail[k][1] - i) != 1, abs(avail[k][1] - i), k))
            avail.pop(k)
        else:
            surv_l.append((f, i))
    return surv_l, avail, sign


def _assemble(name, surv_l, surv_r, sign, role=HYP) -> BinomialEquation:
    lhs = tuple(sorted((f for f, _ in surv_l), key=bracket_sort_key))
    rhs = tuple(sorted((f for f, _ in surv_r), key=bracket_sort_key))
    return BinomialEquation(name, lhs, rhs, role, None, 1, sign)


def multiply_equations(eqs: Sequence[BinomialEquation], name: str = "product") -> BinomialEquation:
    """Product of all equations with every common bracket cancelled."""
    return _assemble(name, *_multiply(eqs))


def chain_collapse(equations: Sequence[BinomialEquation], name: str | None = None) -> BinomialEquation:
    """Multiply a cancellation chain and keep only its outer brackets."""
    eqs = list(equations)
    if not eqs:
        raise ValueError("empty chain")
    if len(eqs) == 1:
        return eqs[0]
    deg = eqs[0].degree
    surv_l, surv_r, sign = _multiply(eqs)
    interior = [i for _, i in surv_l + surv_r if 0 < i < len(eqs) - 1]
    if interior:
        raise ChainBroken(min(interior), "interior bracket does not cancel")
    if len(surv_l) != deg or len(surv_r) != deg:
        bad = sorted({i for _, i in surv_l + surv_r})
        raise ChainBroken(bad[-1] if bad else len(eqs) - 1,
                          f"expected {deg} outer brackets per side, got {len(surv_l)}/{len(surv_r)}")
    return _assemble(name or eqs[0].name, surv_l, surv_r, sign, eqs[-1].role)


def same_equation(a: BinomialEquation, b: BinomialEquation) -> bool:
    return a.canonical() == b.canonical()
