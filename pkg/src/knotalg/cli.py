"""Command-line front end: ``knotalg <command> ...``.

Exit codes: 0 on success, 1 on domain errors, 2 on usage errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import Sequence, TextIO

from . import __version__
from .alexander import alexander_poly, invariant_factors, modules_isomorphic, presentation
from .blanchfield import blanchfield_matrix
from .corpus import catalog_corpus, corpus_check, load_corpus
from .errors import KnotAlgError, NotFibered, ParseError, UnknownName
from .infection import FiberedKnotRecord, InfectionSpec, verdict
from .laurent import format_rational, parse_rational
from .seifert import CATALOG, FIBERED, SeifertMatrix, catalog, random_s_equivalent
from .signatures import (
    CirclePoint,
    circle_point,
    lt_signature_at,
    ordinary_signature,
    signature_integral,
    signature_profile,
)
from .solvable import derived_depth, in_derived, parse_word, tower_image

DEFAULT_EPS = "1/1000000"
MAX_LEVEL = 4
MAX_WORD = 64


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def _rational(text: str) -> Fraction:
    try:
        return parse_rational(text)
    except ParseError:
        raise argparse.ArgumentTypeError(f"not an exact rational: {text!r}") from None


def _positive_rational(text: str) -> Fraction:
    x = _rational(text)
    if x <= 0:
        raise argparse.ArgumentTypeError(f"must be positive: {text!r}")
    return x


def _common() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--json", action="store_true", help="machine-readable JSON output")
    p.add_argument("--eps", type=_positive_rational, default=Fraction(DEFAULT_EPS), help="interval width bound (exact rational)")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--corpus", help="JSON corpus file to resolve knot names from")
    p.add_argument("--approx", action="store_true", help="also print decimal approximations")
    return p


def build_parser() -> argparse.ArgumentParser:
    common = _common()
    parser = _Parser(prog="knotalg", description="Exact knot invariants and infection verdicts.")
    parser.add_argument("--version", action="version", version=f"knotalg {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name, help_):
        return sub.add_parser(name, help=help_, parents=[common])

    knot_help = "catalog name, corpus entry, or JSON matrix such as '[[1,-1],[0,1]]'"
    p = add("alex", "Alexander polynomial and invariant factors")
    p.add_argument("knot", help=knot_help)
    p = add("iso", "compare rational Alexander modules")
    p.add_argument("knot1", help=knot_help)
    p.add_argument("knot2", help=knot_help)
    p = add("blanchfield", "Blanchfield matrix (1 - t)(V - tV^T)^-1")
    p.add_argument("knot", help=knot_help)
    p = add("sig", "Levine-Tristram signature at one rational circle point")
    p.add_argument("knot", help=knot_help)
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--s", type=_rational, help="parameter s: omega = ((1-s^2) + 2si)/(1+s^2)")
    g.add_argument("--omega", help="exact point 're,im', e.g. '-1,0' or '3/5,4/5'")
    g.add_argument("--ordinary", action="store_true", help="ordinary signature of V + V^T")
    p = add("sig-profile", "arc table of the signature function")
    p.add_argument("knot", help=knot_help)
    p = add("sig-integral", "certified integral of the signature function")
    p.add_argument("knot", help=knot_help)
    p = add("s-equiv", "random S-equivalent matrix")
    p.add_argument("knot", help=knot_help)
    p.add_argument("--moves", type=int, default=3)
    p = add("derived", "derived-series membership of a free-group word")
    p.add_argument("--word", required=True)
    p.add_argument("--level", type=int, required=True)
    p.add_argument("--rank", type=int)
    p.add_argument("--max-level", type=int, default=MAX_LEVEL)
    p.add_argument("--max-length", type=int, default=MAX_WORD)
    p = add("infect", "decide whether Bl_n of K(eta,J1) and K(eta,J2) differ")
    p.add_argument("--base", required=True, help="fibered base knot")
    p.add_argument("--eta", required=True, help="word in the fiber's free group")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--j1", required=True, help=knot_help)
    p.add_argument("--j2", required=True, help=knot_help)
    p = add("corpus-check", "validate a corpus and run the invariant suite")
    p.add_argument("path", nargs="?", help="corpus JSON (default: bundled catalog)")
    p.add_argument("--variants", type=int, default=3)
    p = add("catalog", "list catalog knots")
    return parser


# ------------------------------------------------------------ resolution
def resolve_knot(spec: str, corpus_path: str | None = None) -> SeifertMatrix:
    s = spec.strip()
    if s.startswith("{") or s.startswith("["):
        return SeifertMatrix.from_json(s)
    if corpus_path:
        corpus = load_corpus(corpus_path, strict=True)
        if s in corpus.entries:
            return corpus.entries[s].seifert
    return catalog(s)


def _base_record(name: str, corpus_path: str | None) -> FiberedKnotRecord:
    if corpus_path:
        corpus = load_corpus(corpus_path, strict=True)
        if name in corpus.entries:
            entry = corpus.entries[name]
            if not entry.fibered:
                raise NotFibered(f"corpus entry {name!r} is not marked fibered")
            return entry.record()
    if name.startswith("{") or name.startswith("["):
        return FiberedKnotRecord.from_matrix(SeifertMatrix.from_json(name))
    return FiberedKnotRecord.from_catalog(name)


def _q(x: Fraction) -> str:
    return format_rational(x)


def _dec(x: Fraction) -> str:
    return f"{float(x):.12g}"


# --------------------------------------------------------------- commands
def cmd_alex(args, out):
    V = resolve_knot(args.knot, args.corpus)
    delta = alexander_poly(V)
    factors = invariant_factors(presentation(V))
    if args.json:
        return {"alexander": str(delta), "invariant_factors": [str(f) for f in factors]}
    out.write(f"{delta}\n")
    out.write("invariant factors: " + (", ".join(str(f) for f in factors) or "(trivial module)") + "\n")


def cmd_iso(args, out):
    V1 = resolve_knot(args.knot1, args.corpus)
    V2 = resolve_knot(args.knot2, args.corpus)
    iso = modules_isomorphic(V1, V2)
    if args.json:
        return {
            "isomorphic": iso,
            "invariant_factors_1": [str(f) for f in invariant_factors(presentation(V1))],
            "invariant_factors_2": [str(f) for f in invariant_factors(presentation(V2))],
        }
    out.write("isomorphic\n" if iso else "not isomorphic\n")


def cmd_blanchfield(args, out):
    V = resolve_knot(args.knot, args.corpus)
    W = blanchfield_matrix(V)
    rows = [[str(x) for x in row] for row in W]
    if args.json:
        return {"size": len(rows), "rows": rows}
    if not rows:
        out.write("(empty matrix)\n")
    for row in rows:
        out.write("[ " + " | ".join(row) + " ]\n")


def _parse_omega(text: str) -> CirclePoint:
    try:
        re_, im_ = text.split(",")
    except ValueError:
        raise ParseError(f"expected 're,im', got {text!r}") from None
    try:
        return CirclePoint(parse_rational(re_), parse_rational(im_))
    except ValueError as exc:
        raise ParseError(str(exc)) from None


def cmd_sig(args, out):
    V = resolve_knot(args.knot, args.corpus)
    if args.ordinary:
        value = ordinary_signature(V)
        omega = None
    else:
        omega = circle_point(args.s) if args.s is not None else _parse_omega(args.omega)
        value = lt_signature_at(V, omega)
    if args.json:
        res = {"signature": value}
        if omega is not None:
            res["omega"] = {"re": _q(omega.re), "im": _q(omega.im)}
        return res
    out.write(f"{value}\n")


def cmd_sig_profile(args, out):
    V = resolve_knot(args.knot, args.corpus)
    prof = signature_profile(V)
    rows = prof.rows()
    if args.json:
        return {
            "cuts": [
                {"lo": _q(c.lo), "hi": _q(c.hi), "exact": None if e is None else _q(e)}
                for c, e in zip(prof.cut_points, prof.exact_cuts)
            ],
            "arcs": rows,
        }
    out.write(f"{'arc':>3}  {'from (theta)':<28} {'to (theta)':<28} signature\n")
    for r in rows:
        line = f"{r['arc']:>3}  {r['from']:<28} {r['to']:<28} {r['signature']}"
        out.write(line + "\n")
    if args.approx:
        for i, c in enumerate(prof.cut_points):
            out.write(f"cut {i}: {c} ~ {_dec((c.lo + c.hi) / 2)}\n")


def cmd_sig_integral(args, out):
    V = resolve_knot(args.knot, args.corpus)
    iv = signature_integral(V, args.eps)
    if args.json:
        res = {"lo": _q(iv.lo), "hi": _q(iv.hi), "exact": iv.exact, "text": str(iv)}
        if args.approx:
            res["approx"] = _dec((iv.lo + iv.hi) / 2)
        return res
    text = f"{iv} (exact)" if iv.exact else str(iv)
    if args.approx:
        text += f"  ~ {_dec((iv.lo + iv.hi) / 2)}"
    out.write(text + "\n")


def cmd_s_equiv(args, out):
    V = resolve_knot(args.knot, args.corpus)
    if args.moves < 0:
        raise UsageError("--moves must be non-negative")
    W = random_s_equivalent(V, args.moves, args.seed)
    same = alexander_poly(W).equal_up_to_unit(alexander_poly(V))
    if args.json:
        return {"seifert": W.to_json(), "moves": args.moves, "seed": args.seed, "alexander_preserved": same}
    out.write(json.dumps(W.to_json()) + "\n")


def cmd_derived(args, out):
    if args.level < 0:
        raise UsageError("--level must be non-negative")
    if args.level > args.max_level:
        raise UsageError(f"--level {args.level} exceeds --max-level {args.max_level}")
    w = parse_word(args.word, args.rank)
    if len(w) > args.max_length:
        raise UsageError(f"word length {len(w)} exceeds --max-length {args.max_length}")
    member = in_derived(w, args.level)
    depth = derived_depth(w, args.max_level)
    if args.json:
        res = {"word": str(w), "rank": w.rank, "level": args.level, "member": member, "depth_lower_bound": depth}
        if args.level >= 1:
            res["image"] = tower_image(w, args.level - 1).serialize()
        return res
    out.write(f"{w} in F^({args.level}): {'true' if member else 'false'}\n")


def cmd_infect(args, out):
    base = _base_record(args.base, args.corpus)
    eta = parse_word(args.eta, base.fiber_rank)
    j1 = resolve_knot(args.j1, args.corpus)
    j2 = resolve_knot(args.j2, args.corpus)
    spec = InfectionSpec(base, eta, args.n, (j1, j2), (args.j1, args.j2))
    v = verdict(spec, args.eps)
    data = v.to_json()
    data["base"] = base.name
    data["infectors"] = [args.j1, args.j2]
    # the verdict is always emitted as JSON
    return data


def cmd_corpus_check(args, out):
    corpus = load_corpus(args.path) if args.path else catalog_corpus(args.seed)
    if args.path and args.seed:
        corpus.seed = args.seed
    results = corpus_check(corpus, variants=args.variants)
    ok = all(r.ok for r in results)
    if args.json:
        out.write(json.dumps({"entries": len(results), "ok": ok, "results": [r.to_json() for r in results]}, indent=2) + "\n")
    else:
        for r in results:
            out.write(f"{'PASS' if r.ok else 'FAIL'}  {r.name}\n")
            for f in r.failures:
                out.write(f"      {f}\n")
        out.write(f"{len(results)} entries, {'all pass' if ok else 'failures found'}\n")
    return None if ok else 1


def cmd_catalog(args, out):
    names = sorted(CATALOG)
    if args.json:
        return {"knots": [{"name": n, "seifert": CATALOG[n].to_json(), "fibered": n in FIBERED} for n in names]}
    for n in names:
        out.write(f"{n}{' (fibered)' if n in FIBERED else ''}\n")


COMMANDS = {
    "alex": cmd_alex,
    "iso": cmd_iso,
    "blanchfield": cmd_blanchfield,
    "sig": cmd_sig,
    "sig-profile": cmd_sig_profile,
    "sig-integral": cmd_sig_integral,
    "s-equiv": cmd_s_equiv,
    "derived": cmd_derived,
    "infect": cmd_infect,
    "corpus-check": cmd_corpus_check,
    "catalog": cmd_catalog,
}


def run(argv: Sequence[str] | None = None, out: TextIO | None = None, err: TextIO | None = None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(list(argv) if argv is not None else None)
        result = COMMANDS[args.command](args, out)
    except UsageError as exc:
        err.write(f"usage error: {exc}\n")
        return 2
    except SystemExit as exc:  # --help / --version
        return int(exc.code or 0)
    except (KnotAlgError, UnknownName) as exc:
        err.write(f"error: {exc}\n")
        return 1
    if isinstance(result, int):
        return result
    if result is not None:
        out.write(json.dumps(result, indent=2, sort_keys=True) + "\n")
    return 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
