"""Command-line front end.

Subcommands: seq gen|check, base gen|verify, code build|verify,
syndrome, inject, decode, simulate, report, bench.  All output goes to
stdout; --json switches to machine-readable JSON.  Exit codes: 0 ok,
1 domain error, 2 usage error, 3 decoding failure.
"""

from __future__ import annotations

import argparse
import csv
import json
import math
import sys
import time

from . import campaign, codebook, decoders, disjunct, sequences
from .channel import TestOutcome, inject_exhaustive, inject_explicit, syndrome
from .errors import DecodingFailure, InvalidInput, SqgtError
from .quantization import Thresholds, unit_thresholds


def _load_thresholds(spec: str) -> Thresholds:
    if spec.strip().startswith("["):
        return Thresholds.from_json(spec)
    with open(spec) as fh:
        return Thresholds.from_json(fh.read())


def _parse_ints(text: str) -> list[int]:
    try:
        return [int(v) for v in text.split()]
    except ValueError as exc:
        raise InvalidInput(f"expected space-separated integers, got {text!r}") from exc


def _emit(payload: dict, as_json: bool, human: str) -> None:
    if as_json:
        print(json.dumps(payload, sort_keys=True))
    else:
        print(human)


def _make_base(spec: str, d: int | None, e: int | None) -> disjunct.BinaryDisjunctCode:
    """Base spec grammar: identity:N | ks:Q,K | replicated:N,COPIES |
    random:M,N,DENSITY,SEED | file:PATH (file needs --base-d/--base-e)."""
    kind, _, rest = spec.partition(":")
    if kind == "identity":
        return disjunct.identity_code(int(rest))
    if kind == "ks":
        q, k = (int(v) for v in rest.split(","))
        return disjunct.kautz_singleton(q, k, d=d)
    if kind == "replicated":
        n, copies = (int(v) for v in rest.split(","))
        return disjunct.replicated_identity(n, copies)
    if kind == "random":
        parts = rest.split(",")
        m, n = int(parts[0]), int(parts[1])
        density = float(parts[2]) if len(parts) > 2 else None
        seed = int(parts[3]) if len(parts) > 3 else 0
        if d is None:
            raise InvalidInput("random base needs --base-d")
        return disjunct.random_code(m, n, d, e or 0, density=density, seed=seed)
    if kind == "file":
        with open(rest) as fh:
            matrix, _ = codebook.matrix_from_text(fh.read())
        if d is None or e is None:
            raise InvalidInput("file base needs --base-d and --base-e")
        return disjunct.user_code(matrix, d, e)
    raise InvalidInput(f"unknown base spec {spec!r}")


def _resolve_sequence(args, th: Thresholds) -> sequences.MultiplierSequence:
    if getattr(args, "sequence", None):
        with open(args.sequence) as fh:
            return sequences.MultiplierSequence.from_json(fh.read())
    if getattr(args, "values", None):
        return sequences.verified_sequence(
            _parse_ints(args.values), th, args.h, args.kind
        )
    return sequences.greedy_generate(th, args.h, args.K, args.kind)


# --- subcommand handlers ---


def cmd_seq_gen(args) -> int:
    th = _load_thresholds(args.thresholds)
    seq = sequences.greedy_generate(th, args.h, args.K, args.kind)
    _emit(json.loads(seq.to_json()), args.json, " ".join(str(v) for v in seq.values))
    return 0


def cmd_seq_check(args) -> int:
    th = _load_thresholds(args.thresholds)
    report = sequences.check_sequence(_parse_ints(args.values), th, args.h, args.kind)
    payload = {"pass": report.passed, "first_violation": report.first_violation}
    _emit(
        payload,
        args.json,
        "pass" if report.passed else f"fail: {report.first_violation}",
    )
    return 0 if report.passed else 1


def cmd_base_gen(args) -> int:
    if args.family == sequences.H_SUPERINCREASING and not args.greedy:
        base = sequences.base_recursive_superincreasing(args.h, args.K)
    else:
        base = sequences.greedy_generate_base(
            args.family, args.h, args.K, start=args.start
        )
    payload = {"family": base.family, "h": base.h, "values": list(base.values)}
    _emit(payload, args.json, " ".join(str(v) for v in base.values))
    return 0


def cmd_base_verify(args) -> int:
    ok = sequences.check_base(_parse_ints(args.values), args.family, args.h)
    _emit({"pass": ok}, args.json, "pass" if ok else "fail")
    return 0 if ok else 1


def cmd_code_build(args) -> int:
    th = _load_thresholds(args.thresholds)
    base = _make_base(args.base, args.base_d, args.base_e)
    seq = _resolve_sequence(args, th)
    code = codebook.build(base, seq, th, args.d, mode=args.mode)
    matrix_path, sidecar_path = codebook.save_code(code, args.out)
    payload = {
        "matrix": matrix_path,
        "sidecar": sidecar_path,
        "m": code.m,
        "n": code.n,
        "q": code.q,
    }
    _emit(
        payload,
        args.json,
        f"wrote {matrix_path} and {sidecar_path} ({code.m}x{code.n}, q={code.q})",
    )
    return 0


def cmd_code_verify(args) -> int:
    code = codebook.load_code(args.code)
    ok = codebook.verify_sq_separable(
        code, args.l, args.u, args.e, budget=args.budget
    )
    _emit({"pass": ok}, args.json, "pass" if ok else "fail")
    return 0 if ok else 1


def cmd_syndrome(args) -> int:
    code = codebook.load_code(args.code)
    cols = [v - 1 for v in _parse_ints(args.defectives)]
    outcome = syndrome(code, cols)
    _emit(
        json.loads(outcome.to_json()),
        args.json,
        " ".join(str(v) for v in outcome.y),
    )
    return 0


def cmd_inject(args) -> int:
    y = TestOutcome(tuple(_parse_ints(args.y)))
    if args.explicit:
        changes = []
        for part in args.explicit.split(","):
            pos, val = part.split(":")
            changes.append((int(pos), int(val)))
        outcomes = [inject_explicit(y, changes, args.Q)]
    else:
        outcomes = list(inject_exhaustive(y, args.e, args.Q))
    if args.json:
        print(json.dumps([json.loads(o.to_json()) for o in outcomes], sort_keys=True))
    else:
        for o in outcomes:
            print(" ".join(str(v) for v in o.y))
    return 0


def cmd_decode(args) -> int:
    code = codebook.load_code(args.code)
    y = _parse_ints(args.y)
    result = decoders.decode(y, code)
    cols = sorted(c + 1 for c in result.defectives)
    payload = {"defectives": cols, "warning": result.warning}
    _emit(payload, args.json, " ".join(str(c) for c in cols))
    return 0


def cmd_simulate(args) -> int:
    with open(args.config) as fh:
        cfg = json.load(fh)
    th = (
        Thresholds(tuple(cfg["thresholds"]))
        if isinstance(cfg["thresholds"], list)
        else _load_thresholds(cfg["thresholds"])
    )
    base_cfg = cfg["base"]
    base = _make_base(base_cfg["spec"], base_cfg.get("d"), base_cfg.get("e"))
    seq_cfg = cfg["sequence"]
    if "values" in seq_cfg:
        seq = sequences.verified_sequence(
            seq_cfg["values"], th, seq_cfg["h"], seq_cfg["kind"]
        )
    else:
        seq = sequences.greedy_generate(th, seq_cfg["h"], seq_cfg["K"], seq_cfg["kind"])
    code = codebook.build(base, seq, th, cfg["d"], mode=cfg.get("mode", "strict"))
    err = cfg.get("errors", {})
    summary = campaign.simulate_campaign(
        code,
        e_inject=err.get("e"),
        policy=err.get("policy", campaign.EXHAUSTIVE),
        seed=cfg.get("seed", 0),
        samples_per_set=err.get("samples", 10),
        budget=cfg.get("budget"),
        workers=args.workers,
    )
    payload = summary.as_dict()
    _emit(
        payload,
        args.json,
        f"cases={payload['cases']} successes={payload['successes']} "
        f"failures={payload['failures']} truncated={payload['truncated']}",
    )
    return 0 if summary.failures == 0 and not summary.truncated else 1


def cmd_report(args) -> int:
    th = _load_thresholds(args.thresholds) if args.thresholds else None
    report = codebook.feasibility_report(
        n=args.n, d=args.d, Q=args.Q, K=args.K, h=args.h, q=args.q, th=th
    )
    print(json.dumps(report, sort_keys=True))
    return 0


def _bench_code(K: int, kind: str, d: int):
    """Fixed-size base, growing sequence; unit thresholds keep every
    kind check cheap."""
    if kind == sequences.SQLO_S:
        values = sequences.base_recursive_superincreasing(d, K).values
    else:
        if d != 2:
            raise InvalidInput("bench SQLO_l sequences are generated for d=2 only")
        values = sequences.strong_lex_base(K).values
    top = sum(sorted(values)[-d:]) + 1
    th = unit_thresholds(top)
    seq = sequences.verified_sequence(values, th, d, kind)
    base = disjunct.identity_code(2)
    return codebook.build(base, seq, th, d, mode=codebook.PERMISSIVE)


def cmd_bench(args) -> int:
    Ks = [int(v) for v in args.Ks.split(",")]
    rows = []
    for K in Ks:
        for kind in (sequences.SQLO_S, sequences.SQLO_L):
            code = _bench_code(K, kind, args.d)
            D = [0, code.n - 2]  # two defectives sharing base column 0
            y = syndrome(code, D[: args.d])
            start = time.perf_counter()
            for _ in range(args.reps):
                decoders.decode(y, code)
            elapsed = (time.perf_counter() - start) / args.reps
            rows.append({"K": K, "decoder": kind, "mean_seconds": elapsed})
        table = sum(math.comb(K, i) for i in range(1, args.d + 1))
        rows.append({"K": K, "decoder": "quantized-bh-table-size", "mean_seconds": table})
    writer = csv.DictWriter(sys.stdout, fieldnames=["K", "decoder", "mean_seconds"])
    writer.writeheader()
    writer.writerows(rows)
    if args.out:
        with open(args.out, "w", newline="") as fh:
            writer = csv.DictWriter(fh, fieldnames=["K", "decoder", "mean_seconds"])
            writer.writeheader()
            writer.writerows(rows)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="sqgt")
    parser.add_argument("--json", action="store_true", help="machine-readable output")
    sub = parser.add_subparsers(dest="command", required=True)

    seq = sub.add_parser("seq").add_subparsers(dest="action", required=True)
    p = seq.add_parser("gen")
    p.add_argument("--kind", choices=sequences.KINDS, required=True)
    p.add_argument("--h", type=int, required=True)
    p.add_argument("--K", type=int, required=True)
    p.add_argument("--thresholds", required=True)
    p.set_defaults(func=cmd_seq_gen)
    p = seq.add_parser("check")
    p.add_argument("--kind", choices=sequences.KINDS, required=True)
    p.add_argument("--h", type=int, required=True)
    p.add_argument("--thresholds", required=True)
    p.add_argument("--values", required=True)
    p.set_defaults(func=cmd_seq_check)

    base = sub.add_parser("base").add_subparsers(dest="action", required=True)
    p = base.add_parser("gen")
    p.add_argument("--family", choices=sequences.FAMILIES, required=True)
    p.add_argument("--h", type=int, required=True)
    p.add_argument("--K", type=int, required=True)
    p.add_argument("--start", type=int, default=1)
    p.add_argument("--greedy", action="store_true")
    p.set_defaults(func=cmd_base_gen)
    p = base.add_parser("verify")
    p.add_argument("--family", choices=sequences.FAMILIES, required=True)
    p.add_argument("--h", type=int, required=True)
    p.add_argument("--values", required=True)
    p.set_defaults(func=cmd_base_verify)

    code = sub.add_parser("code").add_subparsers(dest="action", required=True)
    p = code.add_parser("build")
    p.add_argument("--thresholds", required=True)
    p.add_argument("--base", required=True, help="identity:N | ks:Q,K | replicated:N,C | random:M,N[,DENSITY[,SEED]] | file:PATH")
    p.add_argument("--base-d", type=int)
    p.add_argument("--base-e", type=int)
    p.add_argument("--sequence", help="sequence JSON file")
    p.add_argument("--values", help="explicit multiplier values")
    p.add_argument("--kind", choices=sequences.KINDS, default=sequences.QUANTIZED_BH)
    p.add_argument("--h", type=int, default=2)
    p.add_argument("--K", type=int, default=2)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--mode", choices=(codebook.STRICT, codebook.PERMISSIVE), default=codebook.STRICT)
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_code_build)
    p = code.add_parser("verify")
    p.add_argument("--code", required=True)
    p.add_argument("--l", type=int, default=1)
    p.add_argument("--u", type=int, required=True)
    p.add_argument("--e", type=int, default=0)
    p.add_argument("--budget", type=int, default=codebook.DEFAULT_SEPARABILITY_BUDGET)
    p.add_argument("--workers", type=int, default=1)
    p.set_defaults(func=cmd_code_verify)

    p = sub.add_parser("syndrome")
    p.add_argument("--code", required=True)
    p.add_argument("--defectives", required=True, help="1-based column indices")
    p.set_defaults(func=cmd_syndrome)

    p = sub.add_parser("inject")
    p.add_argument("--y", required=True)
    p.add_argument("--Q", type=int, required=True)
    p.add_argument("--e", type=int, default=0)
    p.add_argument("--explicit", help="comma-separated pos:val pairs")
    p.set_defaults(func=cmd_inject)

    p = sub.add_parser("decode")
    p.add_argument("--code", required=True)
    p.add_argument("--y", required=True)
    p.set_defaults(func=cmd_decode)

    p = sub.add_parser("simulate")
    p.add_argument("--config", required=True)
    p.add_argument("--workers", type=int, default=1)
    p.set_defaults(func=cmd_simulate)

    p = sub.add_parser("report")
    p.add_argument("--n", type=int)
    p.add_argument("--d", type=int)
    p.add_argument("--Q", type=int)
    p.add_argument("--K", type=int)
    p.add_argument("--h", type=int)
    p.add_argument("--q", type=int)
    p.add_argument("--thresholds")
    p.set_defaults(func=cmd_report)

    p = sub.add_parser("bench")
    p.add_argument("--Ks", default="4,8,12,16")
    p.add_argument("--d", type=int, default=2)
    p.add_argument("--reps", type=int, default=20)
    p.add_argument("--out")
    p.set_defaults(func=cmd_bench)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except DecodingFailure as exc:
        print(f"decoding failure: {exc}", file=sys.stderr)
        return 3
    except SqgtError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
