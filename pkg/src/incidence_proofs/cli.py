"""incproof: verify, translate, certify and render incidence proofs.

Exit codes: 0 success, 1 verification failure, 2 usage or parse error.
"""
from __future__ import annotations

import argparse
import json
import random
import sys
from pathlib import Path

from .bracket_core import Configuration, HomCoords, gp_residual
from .certify import DEFAULT_RANGE, certify_proof_forms, check_form, run_recipe, Resample
from .fixtures import FIXTURE_IDS, load
from .proof_io import ParseError, ProofDocument, document_for, parse, render_dot, serialize
from .proofs_binomial import BinomialProof, NotAFinalPolynomial, verify_cancellation
from .tilings import (
    CMTriangulation, Degenerate, FormalResidue, QuadTiling, TopologyError, cm_parity_check,
    validate_surface, verify_cm_proof, verify_quad_proof,
)
from .translate import (
    AUTO, FULL, SHORTCUT, cm_to_binomial, menelaus_to_quad, normalize_degree3, quad_to_binomial,
    quad_to_menelaus,
)

OK, FAILED, USAGE = 0, 1, 2


class UsageError(Exception):
    pass


class Reporter:
    def __init__(self, as_json: bool):
        self.as_json = as_json

    def diag(self, level: str, code: str, msg: str, **extra):
        if self.as_json:
            print(json.dumps({"level": level, "code": code, "message": msg, **extra}, sort_keys=True),
                  file=sys.stderr)
        else:
            where = f" (line {extra['line']}, col {extra['col']})" if "line" in extra else ""
            print(f"{level}: {code}: {msg}{where}", file=sys.stderr)

    def out(self, text: str, **record):
        if self.as_json:
            print(json.dumps(record or {"message": text}, sort_keys=True, default=str))
        else:
            print(text)


# -- target resolution -----------------------------------------------------------

def resolve(target: str) -> list[tuple[str, ProofDocument]]:
    """A file path, a fixture id (all forms) or fixture.form."""
    p = Path(target)
    if p.is_file():
        return [(target, parse(p.read_text(encoding="utf-8")))]
    fid, _, form = target.partition(".")
    if fid not in FIXTURE_IDS:
        raise UsageError(f"{target!r} is neither a file nor a fixture ({', '.join(FIXTURE_IDS)})")
    fx = load(fid)
    if form:
        if form not in fx.form_names():
            raise UsageError(f"fixture {fid} has no form {form!r}; forms: {', '.join(fx.form_names())}")
        return [(target, fx.document(form))]
    return [(f"{fid}.{f}", d) for f, d in fx.documents().items()]


def load_config(path: str, dim: int) -> Configuration:
    data = json.loads(Path(path).read_text())
    return Configuration(dim, {k: HomCoords(tuple(v)) for k, v in data.items()})


# -- subcommands -----------------------------------------------------------------

def cmd_list(args, rep: Reporter) -> int:
    for fid in FIXTURE_IDS:
        forms = load(fid).form_names()
        rep.out(f"{fid}: {' '.join(forms)}", fixture=fid, forms=forms)
    return OK


def _structural(doc: ProofDocument) -> str:
    p = doc.proof
    if isinstance(p, BinomialProof):
        return verify_cancellation(p).summary()
    if isinstance(p, QuadTiling):
        t = verify_quad_proof(p).topology
        return f"quad tiling ok: V={t.V} E={t.E} F={t.F} chi={t.chi}"
    if isinstance(p, CMTriangulation):
        t = validate_surface(p)
        par = cm_parity_check(p)
        verify_cm_proof(p)
        return f"cm complex ok: V={t.V} E={t.E} F={t.F} chi={t.chi}, {par.menelaus} Menelaus, {par.ceva} Ceva"
    return "theorem only"


def cmd_verify(args, rep: Reporter) -> int:
    status = OK
    for name, doc in resolve(args.target):
        try:
            msg = _structural(doc)
        except (NotAFinalPolynomial, FormalResidue, TopologyError, ValueError) as e:
            rep.diag("error", type(e).__name__, f"{name}: {e}")
            status = FAILED
            continue
        config = None
        if args.config:
            config = load_config(args.config, doc.dim)
        elif doc.theorem is not None:
            try:
                config = run_recipe(doc.theorem, args.seed if args.seed is not None else 0)
            except Resample as e:
                rep.diag("warning", "Resample", f"{name}: {e}")
        if config is not None and doc.proof is not None:
            try:
                check_form(doc.proof, config)
                msg += "; numeric ok"
            except Degenerate as e:
                rep.diag("warning", "Degenerate", f"{name}: {e}")
                msg += "; numeric skipped (degenerate)"
            except (AssertionError, ValueError, ArithmeticError) as e:
                rep.diag("error", type(e).__name__, f"{name}: {e}")
                status = FAILED
                continue
        elif config is not None and doc.theorem is not None and doc.theorem.conclusion is not None:
            holds, val = doc.theorem.conclusion.evaluate(config)
            msg += f"; conclusion {'holds' if holds else 'fails'} ({val})"
            if not holds:
                status = FAILED
        rep.out(f"{name}: {msg}", target=name, ok=True, detail=msg)
    return status


def _translate(doc: ProofDocument, src: str, dst: str, mode: str):
    p = doc.proof
    kind = {"quad": QuadTiling, "cm": CMTriangulation, "binomial": BinomialProof}[src]
    if not isinstance(p, kind):
        raise UsageError(f"document {doc.name} is a {doc.kind} proof, not {src}")
    if (src, dst) == ("quad", "binomial"):
        return quad_to_binomial(p, mode=mode)
    if (src, dst) == ("quad", "menelaus"):
        if p.dim == 2:
            p = normalize_degree3(p)
        return quad_to_menelaus(p)
    if (src, dst) == ("cm", "quad"):
        return menelaus_to_quad(p)
    if (src, dst) == ("cm", "binomial"):
        return cm_to_binomial(p)
    raise UsageError(f"no translation from {src} to {dst}")


def cmd_translate(args, rep: Reporter) -> int:
    docs = resolve(args.target)
    want = {"quad": "quad", "cm": "cm", "binomial": "binomial"}[args.src]
    docs = [(n, d) for n, d in docs if d.kind == want]
    if not docs:
        raise UsageError(f"{args.target} has no {args.src} form")
    name, doc = docs[0]
    try:
        out = _translate(doc, args.src, args.dst, args.mode)
        new = document_for(out, f"{doc.name}.{args.dst}", doc.theorem, f"translated from {doc.kind}")
        _structural(new)
    except (NotAFinalPolynomial, FormalResidue, TopologyError, ValueError) as e:
        rep.diag("error", type(e).__name__, f"{name}: {e}")
        return FAILED
    text = serialize(new)
    if args.output:
        Path(args.output).write_text(text)
    else:
        sys.stdout.write(text)
    return OK


def cmd_certify(args, rep: Reporter) -> int:
    docs = resolve(args.target)
    theorem = next((d.theorem for _, d in docs if d.theorem is not None), None)
    if theorem is None:
        raise UsageError(f"{args.target} carries no construction recipe")
    forms = {n: d.proof for n, d in docs if d.proof is not None}
    r = certify_proof_forms(theorem, forms, args.trials, args.seed, args.range)
    rep.out(r.summary(), name=r.name, requested=r.requested, passed=r.passed, succeeded=r.succeeded,
            resampled=r.resampled, failed=r.failed, redraws=r.redraws, forms=r.forms, failure=r.failure)
    if not r.ok:
        rep.diag("error", "CertificationFailed", r.failure or f"{r.failed} trials failed")
    return OK if r.ok else FAILED


def cmd_render(args, rep: Reporter) -> int:
    docs = resolve(args.target)
    text = "".join(render_dot(d) for _, d in docs if d.proof is not None)
    if args.output:
        Path(args.output).write_text(text)
    else:
        sys.stdout.write(text)
    return OK


def cmd_gp(args, rep: Reporter) -> int:
    rng = random.Random(args.seed)
    labels = "abcde"
    bad = 0
    for i in range(args.trials):
        pts = {x: HomCoords(tuple(rng.randint(-args.range, args.range) for _ in range(3))) for x in labels}
        cfg = Configuration(2, pts)
        r = gp_residual(cfg, *labels)
        if r != 0:
            bad += 1
            rep.diag("error", "GPResidual", f"trial {i}: residual {r}")
    rep.out(f"gp-selftest: {args.trials - bad}/{args.trials} zero residuals",
            trials=args.trials, zero=args.trials - bad)
    return OK if bad == 0 else FAILED


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="incproof", description=__doc__.splitlines()[0])
    ap.add_argument("--json", action="store_true", help="JSON-lines output and diagnostics")
    sub = ap.add_subparsers(dest="cmd", required=True)

    sub.add_parser("list", help="fixture ids and their proof forms")

    v = sub.add_parser("verify", help="structural and numeric verification")
    v.add_argument("target")
    g = v.add_mutually_exclusive_group()
    g.add_argument("--config", help="JSON file mapping labels to homogeneous coordinates")
    g.add_argument("--seed", type=int)

    t = sub.add_parser("translate", help="convert between proof forms")
    t.add_argument("target")
    t.add_argument("--from", dest="src", choices=("quad", "cm", "binomial"), required=True)
    t.add_argument("--to", dest="dst", choices=("binomial", "menelaus", "quad"), required=True)
    t.add_argument("--mode", choices=(SHORTCUT, FULL, AUTO), default=AUTO)
    t.add_argument("-o", "--output")

    c = sub.add_parser("certify", help="randomized exact certification")
    c.add_argument("target")
    c.add_argument("--trials", type=int, default=100)
    c.add_argument("--seed", type=int, default=0)
    c.add_argument("--range", type=int, default=DEFAULT_RANGE)

    r = sub.add_parser("render", help="DOT export")
    r.add_argument("target")
    r.add_argument("--format", choices=("dot",), default="dot")
    r.add_argument("-o", "--output")

    gp = sub.add_parser("gp-selftest", help="three-term bracket identity on random points")
    gp.add_argument("--trials", type=int, default=1000)
    gp.add_argument("--seed", type=int, default=0)
    gp.add_argument("--range", type=int, default=DEFAULT_RANGE)
    return ap


COMMANDS = {"list": cmd_list, "verify": cmd_verify, "translate": cmd_translate, "certify": cmd_certify,
            "render": cmd_render, "gp-selftest": cmd_gp}


def main(argv=None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as e:
        return USAGE if e.code else OK
    rep = Reporter(args.json)
    try:
        return COMMANDS[args.cmd](args, rep)
    except ParseError as e:
        rep.diag("error", e.code, e.msg, line=e.line, col=e.col)
        return USAGE
    except (UsageError, OSError, json.JSONDecodeError) as e:
        rep.diag("error", "usage", str(e))
        return USAGE


if __name__ == "__main__":
    sys.exit(main())
