"""Randomized exact certification on rational configurations built by recipes."""
from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping, Sequence, Union

from .bracket_core import (
    Configuration, DegenerateInput, HomCoords, HyperplaneCoords, bracket_value, det,
    join2, join3, meet2, meet3, meet_plane_line, primitive, proportional,
)
from .proofs_binomial import BinomialProof, verify_numeric
from .tilings import (
    CMTriangulation, ConclusionFailed, Degenerate, QuadTiling, ceva3d_check, ceva_check,
    menelaus3d_check, menelaus_check, verify_cm_proof, verify_quad_proof,
)

DEFAULT_RANGE = 1000
MAX_RETRIES = 16


class Resample(Exception):
    """A draw was degenerate; the caller should try again with fresh randomness."""


class RecipeError(ValueError):
    pass


class HypothesisViolation(AssertionError):
    pass


class ProofFormDisagreement(AssertionError):
    def __init__(self, form, msg, witness=None):
        self.form, self.witness = form, witness
        super().__init__(f"{form}: {msg}")


# -- steps ---------------------------------------------------------------------

@dataclass(frozen=True)
class FreePoint:
    label: str

    def refs(self):
        return ()


@dataclass(frozen=True)
class PointOnLine:
    label: str
    a: str
    b: str

    def refs(self):
        return (self.a, self.b)


@dataclass(frozen=True)
class PointOnPlane:
    label: str
    a: str
    b: str
    c: str

    def refs(self):
        return (self.a, self.b, self.c)


@dataclass(frozen=True)
class Meet2:
    label: str
    l: tuple[str, str]
    m: tuple[str, str]

    def refs(self):
        return self.l + self.m


@dataclass(frozen=True)
class MeetPlaneLine:
    label: str
    plane: tuple[str, str, str]
    line: tuple[str, str]

    def refs(self):
        return self.plane + self.line


@dataclass(frozen=True)
class Meet3Planes:
    label: str
    h1: tuple[str, str, str]
    h2: tuple[str, str, str]
    h3: tuple[str, str, str]

    def refs(self):
        return self.h1 + self.h2 + self.h3


@dataclass(frozen=True)
class PointOnPlanes:
    """Random point on the line where two planes meet."""
    label: str
    h1: tuple[str, str, str]
    h2: tuple[str, str, str]

    def refs(self):
        return self.h1 + self.h2


@dataclass(frozen=True)
class TransversalThroughPoint:
    """Point of line1 hit by the line through p that also meets line2."""
    label: str
    p: str
    line1: tuple[str, str]
    line2: tuple[str, str]

    def refs(self):
        return (self.p,) + self.line1 + self.line2


Step = Union[FreePoint, PointOnLine, PointOnPlane, Meet2, MeetPlaneLine, Meet3Planes,
             PointOnPlanes, TransversalThroughPoint]
RANDOM_STEPS = (FreePoint, PointOnLine, PointOnPlane, PointOnPlanes)


# -- statements ------------------------------------------------------------------

@dataclass(frozen=True)
class Statement:
    kind: str                  # collinear coplanar concurrent menelaus ceva menelaus3d ceva3d
    labels: tuple[str, ...]

    def __str__(self):
        return f"{self.kind} {' '.join(self.labels)}"

    def evaluate(self, config: Configuration) -> tuple[bool, Fraction]:
        k, x = self.kind, self.labels
        if k in ("collinear", "coplanar"):
            v = bracket_value(config, *x)
            return v == 0, v
        if k == "concurrent":
            ls = [join2(config[x[i]], config[x[i + 1]]) for i in (0, 2, 4)]
            v = det([l.coeffs for l in ls])
            return v == 0, v
        if k == "menelaus":
            v = menelaus_check(config, x[:3], join2(config[x[3]], config[x[4]]))
            return v == -1, v
        if k == "ceva":
            v = ceva_check(config, x[:3], x[3])
            return v == 1, v
        if k == "menelaus3d":
            v = menelaus3d_check(config, x[:4], join3(*(config[y] for y in x[4:7])))
            return v == 1, v
        if k == "ceva3d":
            v = ceva3d_check(config, x[:4], x[4])
            return v == 1, v
        raise ValueError(f"unknown statement kind {k}")


ARITY = {"collinear": 3, "coplanar": 4, "concurrent": 6, "menelaus": 5, "ceva": 4,
         "menelaus3d": 7, "ceva3d": 5}


@dataclass(frozen=True)
class TheoremSpec:
    name: str
    dim: int
    recipe: tuple
    hypotheses: tuple[Statement, ...] = ()
    conclusion: Statement | None = None
    nondegeneracy: tuple[tuple[str, ...], ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "recipe", tuple(self.recipe))
        object.__setattr__(self, "hypotheses", tuple(self.hypotheses))
        object.__setattr__(self, "nondegeneracy", tuple(tuple(b) for b in self.nondegeneracy))
        check_recipe(self)

    @property
    def labels(self) -> list[str]:
        return [s.label for s in self.recipe]


def check_recipe(spec: TheoremSpec):
    seen = set()
    for i, st in enumerate(spec.recipe):
        for r in st.refs():
            if r not in seen:
                raise RecipeError(f"step {i} ({st.label}) references undefined label {r}")
        if st.label in seen:
            raise RecipeError(f"label {st.label} defined twice")
        if spec.dim == 2 and isinstance(st, (PointOnPlane, MeetPlaneLine, Meet3Planes, PointOnPlanes,
                                             TransversalThroughPoint)):
            raise RecipeError(f"step {st.label} needs three-space")
        if spec.dim == 3 and isinstance(st, Meet2):
            raise RecipeError(f"step {st.label} is planar")
        seen.add(st.label)
    stmts = list(spec.hypotheses) + ([spec.conclusion] if spec.conclusion else [])
    for s in stmts:
        if ARITY.get(s.kind) != len(s.labels):
            raise RecipeError(f"statement {s} has wrong arity")
        for r in s.labels:
            if r not in seen:
                raise RecipeError(f"statement {s} references undefined label {r}")
    for b in spec.nondegeneracy:
        for r in b:
            if r not in seen:
                raise RecipeError(f"nondegeneracy bracket {b} references undefined label {r}")


# -- recipe execution --------------------------------------------------------------

def _draw(rng: random.Random, R: int, nonzero=False) -> int:
    while True:
        x = rng.randint(-R, R)
        if x or not nonzero:
            return x


def _combo(rng, R, pts):
    cs = [_draw(rng, R, nonzero=True) for _ in pts]
    n = len(pts[0].coords)
    return tuple(sum(c * p.coords[i] for c, p in zip(cs, pts)) for i in range(n))


def _plane(pts, labels):
    return join3(*(pts[x] for x in labels))


def _line2(pts, labels):
    return join2(*(pts[x] for x in labels))


def _eval_step(st, pts, rng, R, dim):
    if isinstance(st, FreePoint):
        v = [_draw(rng, R) for _ in range(dim)] + [_draw(rng, R, nonzero=True)]
        return tuple(v)
    if isinstance(st, PointOnLine):
        return _combo(rng, R, [pts[st.a], pts[st.b]])
    if isinstance(st, PointOnPlane):
        return _combo(rng, R, [pts[st.a], pts[st.b], pts[st.c]])
    if isinstance(st, Meet2):
        return meet2(_line2(pts, st.l), _line2(pts, st.m)).coords
    if isinstance(st, MeetPlaneLine):
        return meet_plane_line(_plane(pts, st.plane), pts[st.line[0]], pts[st.line[1]]).coords
    if isinstance(st, Meet3Planes):
        return meet3(_plane(pts, st.h1), _plane(pts, st.h2), _plane(pts, st.h3)).coords
    if isinstance(st, PointOnPlanes):
        rand = HyperplaneCoords(tuple(_draw(rng, R) for _ in range(4)))
        return meet3(_plane(pts, st.h1), _plane(pts, st.h2), rand).coords
    if isinstance(st, TransversalThroughPoint):
        h = join3(pts[st.p], pts[st.line2[0]], pts[st.line2[1]])
        return meet_plane_line(h, pts[st.line1[0]], pts[st.line1[1]]).coords
    raise RecipeError(f"unknown step {st}")


def run_recipe(spec: TheoremSpec, seed: int, R: int = DEFAULT_RANGE) -> Configuration:
    rng = random.Random(seed)
    pts: dict[str, HomCoords] = {}
    for st in spec.recipe:
        tries = MAX_RETRIES if isinstance(st, RANDOM_STEPS) else 1
        for _ in range(tries):
            try:
                vec = _eval_step(st, pts, rng, R, spec.dim)
                if not any(vec):
                    raise DegenerateInput(st.label)
            except (DegenerateInput, ZeroDivisionError):
                continue
            if vec[-1] == 0:
                continue      # at infinity: ratios would be undefined
            vec = primitive(vec)
            if any(proportional(vec, p.coords) for p in pts.values()):
                continue
            pts[st.label] = HomCoords(vec)
            break
        else:
            raise Resample(f"step {st.label} stayed degenerate after {tries} tries")
    return Configuration(spec.dim, pts)


def check_hypotheses(spec: TheoremSpec, config: Configuration) -> list[tuple[Statement, Fraction]]:
    """Failing hypotheses together with their witness values."""
    out = []
    for h in spec.hypotheses:
        ok, v = h.evaluate(config)
        if not ok:
            out.append((h, v))
    return out


def vanishing_nondegeneracy(spec: TheoremSpec, config: Configuration) -> list[tuple[str, ...]]:
    return [b for b in spec.nondegeneracy if bracket_value(config, *b) == 0]


# -- trials ------------------------------------------------------------------------

@dataclass
class TrialReport:
    name: str
    requested: int
    succeeded: int = 0          # passed on the first draw
    resampled: int = 0          # passed after at least one redraw
    failed: int = 0
    redraws: int = 0
    witness: object = None
    failure: str | None = None
    wall_time: float = 0.0
    forms: dict = field(default_factory=dict)

    @property
    def passed(self) -> int:
        return self.succeeded + self.resampled

    @property
    def ok(self) -> bool:
        return self.failed == 0 and self.passed == self.requested

    def merge(self, other: "TrialReport") -> "TrialReport":
        forms = dict(self.forms)
        for k, v in other.forms.items():
            forms[k] = forms.get(k, 0) + v
        return TrialReport(self.name, self.requested + other.requested, self.succeeded + other.succeeded,
                           self.resampled + other.resampled, self.failed + other.failed,
                           self.redraws + other.redraws, self.witness or other.witness,
                           self.failure or other.failure, self.wall_time + other.wall_time, forms)

    def summary(self) -> str:
        s = (f"{self.name}: {self.passed}/{self.requested} passed "
             f"({self.resampled} after redraw, {self.redraws} redraws) in {self.wall_time:.2f}s")
        if self.forms:
            s += "; forms " + ", ".join(f"{k}={v}" for k, v in sorted(self.forms.items()))
        if self.failure:
            s += f"; FAILURE: {self.failure}"
        return s


def form_name(proof) -> str:
    if isinstance(proof, BinomialProof):
        return "binomial"
    if isinstance(proof, QuadTiling):
        return "quad"
    if isinstance(proof, CMTriangulation):
        return "cm"
    raise TypeError(type(proof))


def check_form(proof, config: Configuration) -> bool:
    """True when the proof form verifies; Degenerate when a side condition fails."""
    if isinstance(proof, BinomialProof):
        rep = verify_numeric(proof, config)
        if rep.vanishing:
            raise Degenerate(f"vanishing brackets {rep.vanishing[:3]}")
        if not rep.hypotheses_hold:
            raise ProofFormDisagreement("binomial", f"hypotheses fail: {rep.failing_hypotheses()}")
        if not rep.conclusion_holds:
            raise ConclusionFailed("binomial conclusion fails")
        return True
    if isinstance(proof, QuadTiling):
        return verify_quad_proof(proof, config).ok
    if isinstance(proof, CMTriangulation):
        return verify_cm_proof(proof, config).ok
    raise TypeError(type(proof))


def trial_seed(seed: int, index: int, attempt: int = 0) -> int:
    s = seed ^ index
    return s if attempt == 0 else s + attempt * (1 << 64)


def _one_trial(spec, proofs, seed, index, R, rep: TrialReport):
    for attempt in range(MAX_RETRIES):
        try:
            cfg = run_recipe(spec, trial_seed(seed, index, attempt), R)
        except Resample:
            rep.redraws += 1
            continue
        bad = check_hypotheses(spec, cfg)
        if bad:
            raise HypothesisViolation(f"recipe broke {bad[0][0]} (value {bad[0][1]})")
        if vanishing_nondegeneracy(spec, cfg):
            rep.redraws += 1
            continue
        if spec.conclusion is not None:
            ok, val = spec.conclusion.evaluate(cfg)
            if not ok:
                rep.witness = cfg
                raise ConclusionFailed(f"{spec.conclusion} evaluates to {val}")
        try:
            results = {k: check_form(p, cfg) for k, p in proofs}
        except Degenerate:
            rep.redraws += 1
            continue
        except Exception:
            rep.witness = cfg
            raise
        for k, v in results.items():
            if v:
                rep.forms[k] = rep.forms.get(k, 0) + 1
        return attempt
    raise Resample(f"trial {index} stayed degenerate after {MAX_RETRIES} draws")


def certify_proof_forms(spec: TheoremSpec, proofs: Sequence = (), trials: int = 100, seed: int = 0,
                        R: int = DEFAULT_RANGE) -> TrialReport:
    rep = TrialReport(spec.name, trials)
    if isinstance(proofs, Mapping):
        proofs = list(proofs.items())
    else:
        proofs = [(form_name(p), p) for p in proofs]
    t0 = time.perf_counter()
    for i in range(trials):
        try:
            attempt = _one_trial(spec, proofs, seed, i, R, rep)
        except Resample as e:
            rep.failed += 1
            rep.failure = rep.failure or str(e)
            continue
        except (AssertionError, ValueError, ArithmeticError) as e:
            rep.failed += 1
            rep.failure = f"trial {i}: {type(e).__name__}: {e}"
            break
        if attempt == 0:
            rep.succeeded += 1
        else:
            rep.resampled += 1
    rep.wall_time = time.perf_counter() - t0
    return rep


def certify(spec: TheoremSpec, trials: int = 100, seed: int = 0, R: int = DEFAULT_RANGE) -> TrialReport:
    return certify_proof_forms(spec, (), trials, seed, R)
