"""Command-line entry point.

Reads one JSON request ``{"command": ..., "root_system": ..., "arguments": ...}``
and writes a JSON (or plain-text) report.  Exit status: 0 on success, 1 on
a verdict-level failure (failed oracle suite, or a non-``Applies`` theorem
verdict under ``--require-applies``), 2 on bad input.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import oracle, parabolic, parameters, serialize as ser, theorems
from .errors import ParseError, RadonFlagError
from .root_system import Weight
from .weyl import DEFAULT_GROUP_CAP, act, enumerate_group, star_act


def _arg(args, key, default=...):
    if key in args:
        return args[key]
    if default is ...:
        raise ParseError(f"missing argument {key!r}")
    return default


def _common(rs, args):
    I = ser.subset_from_json(_arg(args, "I"), rs)
    J = ser.subset_from_json(_arg(args, "J"), rs)
    w = ser.weyl_from_json(_arg(args, "w"), rs)
    return w, I, J


def _mu(rs, args, w):
    mu = args.get("mu")
    if mu is None:
        return Weight.zero(rs.rank)
    if mu == "det-twist":
        return theorems.mu_for_untwisted(w)
    return ser.weight_from_json(mu, rs)


def _fmt_weight(lam):
    return "(" + ", ".join(str(c) for c in lam) + ")"


def _cmd_roots(rs, args, opts):
    doc = {
        "rank": rs.rank,
        "cartan": [list(r) for r in rs.cartan],
        "positive_roots": [list(b) for b in rs.positive_roots],
        "coroots": [list(rs.coroot(b)) for b in rs.positive_roots],
        "rho": ser.weight_to_json(rs.rho),
    }
    lines = [f"rank {rs.rank}, {len(rs.positive_roots)} positive roots", "root        coroot"]
    lines += [f"{list(b)!s:<12}{list(rs.coroot(b))}" for b in rs.positive_roots]
    return doc, lines, 0


def _cmd_weyl(rs, args, opts):
    if "word" not in args:
        cap = opts.enumeration_cap or DEFAULT_GROUP_CAP
        elems = enumerate_group(rs, cap=cap)
        doc = {"order": len(elems),
               "elements": [{"word": list(w.word), "length": w.length} for w in elems]}
        lines = [f"|W| = {len(elems)}"] + [f"{w.length:>3}  {list(w.word)}" for w in elems]
        return doc, lines, 0
    w = ser.weyl_from_json(args["word"], rs)
    doc = {"word": list(w.word), "length": w.length, "inverse": list(w.inverse().word)}
    lines = [f"reduced word {list(w.word)}, length {w.length}"]
    if "lambda" in args:
        lam = ser.weight_from_json(args["lambda"], rs)
        doc["act"] = ser.weight_to_json(act(w, lam))
        doc["star_act"] = ser.weight_to_json(star_act(w, lam))
        lines += [f"w lambda   = {_fmt_weight(act(w, lam))}",
                  f"w * lambda = {_fmt_weight(star_act(w, lam))}"]
    return doc, lines, 0


def _cmd_star_pairs(rs, args, opts):
    I = ser.subset_from_json(args["I"], rs) if "I" in args else None
    J = ser.subset_from_json(args["J"], rs) if "J" in args else None
    cap = opts.enumeration_cap or DEFAULT_GROUP_CAP
    rows = [{"w": list(w.word), "I": ser.subset_to_json(II), "J": ser.subset_to_json(JJ),
             "length": w.length}
            for w, II, JJ in parabolic.condition_star_triples(rs, enumerate_group(rs, cap), I, J)]
    rows.sort(key=lambda r: (r["I"], r["J"], r["length"], r["w"]))
    lines = [f"{len(rows)} triples with wJ = I", "I          J          l   w"]
    lines += [f"{r['I']!s:<11}{r['J']!s:<11}{r['length']:<4}{r['w']}" for r in rows]
    return {"triples": rows}, lines, 0


def _cmd_factorize(rs, args, opts):
    w, I, J = _common(rs, args)
    steps = parabolic.bh_factorize(w, I, J)
    doc = [ser.step_to_json(st) for st in steps]
    lines = [f"l(w) = {w.length}, {len(steps)} factors"]
    lines += [f"v[alpha_{st.alpha}, {sorted(st.inner)}] = {list(st.factor.word)}"
              f"  (length {st.factor.length})" for st in steps]
    return doc, lines, 0


def _cmd_transport(rs, args, opts):
    w, I, J = _common(rs, args)
    lam = ser.weight_from_json(_arg(args, "lambda"), rs)
    label = parameters.transport(lam, w, _mu(rs, args, w), I, J)
    return (ser.tdo_to_json(label),
            [f"G/P_{sorted(label.variety)} with parameter {_fmt_weight(label.param)}"], 0)


def _cmd_check_equivalence(rs, args, opts):
    w, I, J = _common(rs, args)
    lam = ser.weight_from_json(_arg(args, "lambda"), rs)
    spec = theorems.check_equivalence(lam, w, _mu(rs, args, w), I, J)
    lines = [
        f"R^(w,mu)_+ : D^{_fmt_weight(spec.source.param)} on G/P_{sorted(spec.source.variety)}"
        f" -> D^{_fmt_weight(spec.target.param)} on G/P_{sorted(spec.target.variety)}",
        f"inverse R^(w',mu')_! with w' = {list(spec.inverse_w.word)},"
        f" mu' = {_fmt_weight(spec.inverse_mu)}",
    ]
    return ser.spec_to_json(spec), lines, 0


def _cmd_check_theorem2(rs, args, opts):
    w, I, J = _common(rs, args)
    lam = ser.weight_from_json(_arg(args, "lambda"), rs)
    rep = theorems.check_main_theorem2(lam, w, I, J)
    lines = [f"regular: {rep.regular}", "alpha  inner      factor      lambda_i        eta_i"
             "           irreducibility"]
    for c in rep.chain:
        lines.append(f"{c.step.alpha:<7}{sorted(c.step.inner)!s:<11}"
                     f"{list(c.step.factor.word)!s:<12}{_fmt_weight(c.lambda_i):<16}"
                     f"{_fmt_weight(c.eta_i):<16}{c.irreducibility.value}")
    lines.append(f"verdict: {rep.verdict.value}")
    if rep.conclusion:
        lines.append(rep.conclusion)
    status = 1 if opts.require_applies and rep.verdict is not theorems.Verdict.APPLIES else 0
    return ser.report_to_json(rep), lines, status


def _cmd_verify(rs, args, opts):
    suites = args.get("suites") or list(oracle.SUITES)
    seed = opts.seed if opts.seed is not None else int(args.get("seed", 0))
    cap = opts.enumeration_cap or oracle.DEFAULT_ORACLE_CAP
    n_weights = int(args.get("n_weights", 100))
    results = oracle.verify_all(rs, seed, cap, suites, n_weights)
    lines = [f"{'PASS' if r.passed else 'FAIL'}  {r.suite:<24}{r.instances_checked}"
             for r in results]
    for r in results:
        lines += [f"  {r.suite}: {f}" for f in r.failures]
    status = 0 if all(r.passed for r in results) else 1
    return [ser.suite_to_json(r) for r in results], lines, status


HANDLERS = {
    "roots": _cmd_roots,
    "weyl": _cmd_weyl,
    "star-pairs": _cmd_star_pairs,
    "factorize": _cmd_factorize,
    "transport": _cmd_transport,
    "check-equivalence": _cmd_check_equivalence,
    "check-theorem2": _cmd_check_theorem2,
    "verify": _cmd_verify,
}


def dumps(doc) -> str:
    return json.dumps(doc, indent=2, sort_keys=True, ensure_ascii=False) + "\n"


def run(request: ser.Request, fmt: str = "json", opts=None) -> tuple[str, int]:
    """Execute a request; returns the rendered document and the exit status."""
    if opts is None:
        opts = build_parser().parse_args([])
    try:
        rs = request.build()
        doc, lines, status = HANDLERS[request.command](rs, request.arguments, opts)
    except (RadonFlagError, TypeError, ValueError) as exc:
        code = getattr(exc, "code", ParseError.code)
        err = {"error": {"code": code, "message": str(exc)}}
        return (dumps(err) if fmt == "json" else f"error [{code}]: {exc}\n"), 2
    if fmt == "json":
        return dumps(doc), status
    return "\n".join(lines) + "\n", status


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="radonflag", description=__doc__.splitlines()[0])
    p.add_argument("--input", default="-", help="request JSON file, or - for stdin")
    p.add_argument("--format", choices=("json", "text"), default="json")
    p.add_argument("--require-applies", action="store_true",
                   help="exit 1 unless check-theorem2 returns Applies")
    p.add_argument("--enumeration-cap", type=int, default=None)
    p.add_argument("--seed", type=int, default=None)
    return p


def main(argv=None) -> int:
    opts = build_parser().parse_args(argv)
    try:
        if opts.input == "-":
            text = sys.stdin.read()
        else:
            with open(opts.input, encoding="utf-8") as fh:
                text = fh.read()
        request = ser.request_from_json(json.loads(text))
    except (OSError, json.JSONDecodeError, ParseError) as exc:
        code = getattr(exc, "code", ParseError.code)
        if opts.format == "json":
            sys.stdout.write(dumps({"error": {"code": code, "message": str(exc)}}))
        else:
            sys.stderr.write(f"error [{code}]: {exc}\n")
        return 2
    out, status = run(request, opts.format, opts)
    sys.stdout.write(out)
    return status


if __name__ == "__main__":
    sys.exit(main())
