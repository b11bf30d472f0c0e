"""Command-line front end.

Exit codes: 0 success or positive certification, 1 the command ran but the
certification is negative, 2 invalid parameters or usage, 3 an internal
structural check failed.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import tempfile
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path

from . import __version__
from . import documents as docs
from .errors import ParameterError, StructuralCheckFailed, TriforgeError
from .fillings import (
    PermQuotient,
    assemble_triangle,
    classical_check,
    dihedral_quotient,
    emit_presentation,
    varju_sample,
)
from .fillings.certificates import (
    CERTIFIED_NOT_EXPANSIVE,
    REJECTED,
    certify_lps,
)
from .fillings.groups import sl2_quotient
from .fillings.schreier import format_presentation
from .fillings.varju import validate_parameters, order_k_elements
from .graphs import from_edgelist, graph_hash, to_edgelist
from .lps import DEFAULT_DEPTH_CAP, build_lps, scan_candidates, scan_row
from .spectral import CERTIFIED_TRUE, certify_expansive, certify_ramanujan, lambda1

EXIT_OK, EXIT_NEGATIVE, EXIT_PARAMS, EXIT_STRUCTURAL = 0, 1, 2, 3


class _Parser(argparse.ArgumentParser):
    """ArgumentParser that raises instead of exiting, so ``run`` owns exit codes."""

    def error(self, message):
        raise ParameterError(f"{self.prog}: {message}")


def _write(text: str, out: str | None) -> None:
    if out is None or out == "-":
        sys.stdout.write(text)
    else:
        Path(out).write_text(text)


def _emit(kind: str, payload: dict, args, parameters: dict, seed=None, tiers=None) -> None:
    doc = docs.make_document(kind, payload, parameters, seed, tiers)
    _write(docs.dumps(doc), args.out)


def cache_dir(args) -> Path:
    if args.cache_dir:
        return Path(args.cache_dir)
    env = os.environ.get("FORGE_CACHE_DIR")
    if env:
        return Path(env)
    return Path.home() / ".cache" / "triforge"


def _atomic_write(path: Path, text: str) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=".tmp-", suffix=".json")
    try:
        with os.fdopen(fd, "w") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


# ---------------------------------------------------------------- lps


def cmd_lps_build(args) -> int:
    lg = build_lps(args.p, args.q)
    if args.format == "edgelist":
        _write(to_edgelist(lg.graph), args.out)
        if args.out and args.out != "-":
            Path(args.out + ".labels").write_text(lg.label_sidecar())
    else:
        _emit("lps_graph", docs.lps_graph_payload(lg), args, {"p": args.p, "q": args.q})
    return EXIT_OK


def cmd_lps_certify(args) -> int:
    cert = certify_lps(args.p, args.q, exact=args.exact, depth_cap=args.depth_cap)
    _emit(
        "filling", docs.filling_payload(cert), args,
        {"p": args.p, "q": args.q, "exact": args.exact, "depth_cap": args.depth_cap},
        tiers=[cert.lambda1.status],
    )
    return EXIT_NEGATIVE if cert.lambda1.status == CERTIFIED_NOT_EXPANSIVE else EXIT_OK


def _scan_one(job) -> dict:
    p, q, depth_cap, cdir = job
    path = None
    if cdir is not None:
        path = Path(cdir) / f"scan-v{__version__}-p{p}-q{q}-d{depth_cap}.json"
        if path.exists():
            try:
                return json.loads(path.read_text())
            except json.JSONDecodeError:
                pass
    row = scan_row(p, q, depth_cap)
    if path is not None:
        _atomic_write(path, json.dumps(row, sort_keys=True))
    return row


def cmd_lps_scan(args) -> int:
    if args.q_min > args.q_max:
        raise ParameterError("--q-min must not exceed --q-max")
    qs = scan_candidates(args.p, args.q_min, args.q_max)
    cdir = None if args.no_cache else str(cache_dir(args))
    jobs = [(args.p, q, args.depth_cap, cdir) for q in qs]
    if args.workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=args.workers) as ex:
            rows = list(ex.map(_scan_one, jobs))
    else:
        rows = [_scan_one(j) for j in jobs]
    rows.sort(key=lambda r: r["q"])
    hits = [r["q"] for r in rows if r["rotund"] and r["bipartite"]]
    payload = {"p": args.p, "depth_cap": args.depth_cap, "rows": rows, "rotund_bipartite": hits}
    _emit(
        "lps_scan", payload, args,
        {"p": args.p, "q_min": args.q_min, "q_max": args.q_max, "depth_cap": args.depth_cap},
    )
    return EXIT_OK if hits else EXIT_NEGATIVE


# ---------------------------------------------------------------- triangle


def cmd_triangle_assemble(args) -> int:
    if len(args.cert) != 3:
        raise ParameterError("exactly three -c/--cert files are required")
    certs = []
    for path in args.cert:
        try:
            text = Path(path).read_text()
        except OSError as exc:
            raise ParameterError(f"cannot read {path}: {exc}") from None
        certs.append(docs.filling_from_payload(docs.loads(text, "filling")["payload"]))
    asm = assemble_triangle(*certs)
    _emit(
        "assembly", docs.assembly_payload(asm), args, {"certs": list(args.cert)},
        tiers=[c.lambda1.status for c in certs],
    )
    return EXIT_NEGATIVE if asm.verdict == REJECTED else EXIT_OK


# ---------------------------------------------------------------- varju


def cmd_varju_sample(args) -> int:
    rep = varju_sample(args.p, args.k, args.seed, args.trials, args.workers)
    _emit(
        "varju_report", rep.to_dict(), args,
        {"p": args.p, "k": args.k, "trials": args.trials}, seed=args.seed,
    )
    return EXIT_OK


# ---------------------------------------------------------------- present


def _random_quotients(p: int, k: int, seed: int) -> list[PermQuotient]:
    import numpy as np

    validate_parameters(p, k)
    elems = order_k_elements(p, k)
    if not elems:
        raise ParameterError(f"SL2({p}) has no elements of order {k}")
    out = []
    for pair in range(3):
        rng = np.random.default_rng([seed, pair])
        a = elems[int(rng.integers(len(elems)))]
        b = elems[int(rng.integers(len(elems)))]
        out.append(sl2_quotient(p, k, a, b))
    return out


def cmd_present(args) -> int:
    if args.dihedral:
        l, m, r = args.dihedral
        if min(l, m, r) < 2:
            raise ParameterError("dihedral parameters must be >= 2")
        k = 2
        pq12, pq13, pq23 = dihedral_quotient(l), dihedral_quotient(r), dihedral_quotient(m)
        params = {"dihedral": [l, m, r]}
    else:
        if args.k is None or args.p is None:
            raise ParameterError("present needs either --dihedral L M R or -k K -p P")
        k = args.k
        pq12, pq13, pq23 = _random_quotients(args.p, k, args.seed)
        params = {"p": args.p, "k": k}
    pres = emit_presentation(k, pq12, pq13, pq23)
    if args.format == "json":
        _emit("presentation", docs.presentation_payload(pres, k), args, params, seed=args.seed)
    else:
        _write(format_presentation(pres, k), args.out)
    return EXIT_OK


def cmd_classical_check(args) -> int:
    res = classical_check(args.l, args.m, args.r)
    status = "PASS" if res.passed else "FAIL"
    sys.stdout.write(
        f"{status} ({res.l},{res.m},{res.r}): emitted H1 rank={res.emitted[0]} torsion={list(res.emitted[1])}; "
        f"literal rank={res.literal[0]} torsion={list(res.literal[1])}; relators={res.relator_count}\n"
    )
    return EXIT_OK if res.passed else EXIT_NEGATIVE


# ---------------------------------------------------------------- spectral


def cmd_spectral(args) -> int:
    try:
        text = Path(args.input).read_text() if args.input != "-" else sys.stdin.read()
    except OSError as exc:
        raise ParameterError(f"cannot read {args.input}: {exc}") from None
    g = from_edgelist(text)
    k = g.regular_degree()
    if k is None:
        raise ParameterError("spectral analysis needs a regular graph")
    est, bound = lambda1(g)
    payload = {"vertices": g.n, "edges": g.m, "k": k, "graph_hash": graph_hash(g),
               "lambda1": {"estimate": float(est), "error_bound": float(bound)}}
    tiers = []
    if args.exact:
        for name, cert in (("expansive", certify_expansive(g)), ("ramanujan", certify_ramanujan(g))):
            entry = {"status": cert.status}
            if cert.reason:
                entry["reason"] = cert.reason
            if cert.inertia is not None:
                inr = cert.inertia
                entry["inertia"] = {"shift": str(inr.shift), "n_pos": inr.n_pos,
                                    "n_zero": inr.n_zero, "n_neg": inr.n_neg}
            payload[name] = entry
            tiers.append(cert.status)
    _emit("spectral_report", payload, args, {"input": args.input, "exact": args.exact}, tiers=tiers)
    if args.exact and payload["expansive"]["status"] != CERTIFIED_TRUE:
        return EXIT_NEGATIVE
    return EXIT_OK


# ---------------------------------------------------------------- parser


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="triforge", description="LPS graphs, filling certificates and triangle-group presentations.")
    parser.add_argument("--version", action="version", version=f"triforge {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def out_flag(sp):
        sp.add_argument("-o", "--out", help="output file (default: stdout)")

    lps = sub.add_parser("lps", help="LPS Ramanujan graphs")
    lsub = lps.add_subparsers(dest="action", required=True, parser_class=_Parser)

    b = lsub.add_parser("build", help="build X^{p,q}")
    b.add_argument("-p", type=int, required=True)
    b.add_argument("-q", type=int, required=True)
    b.add_argument("--format", choices=["json", "edgelist"], default="json")
    out_flag(b)
    b.set_defaults(func=cmd_lps_build)

    c = lsub.add_parser("certify", help="filling certificate for X^{p,q}")
    c.add_argument("-p", type=int, required=True)
    c.add_argument("-q", type=int, required=True)
    c.add_argument("--exact", action="store_true", help="exact inertia for the spectral gap")
    c.add_argument("--depth-cap", type=int, default=DEFAULT_DEPTH_CAP)
    out_flag(c)
    c.set_defaults(func=cmd_lps_certify)

    s = lsub.add_parser("scan", help="scan q for rotund bipartite X^{p,q}")
    s.add_argument("-p", type=int, required=True)
    s.add_argument("--q-min", type=int, default=5)
    s.add_argument("--q-max", type=int, default=300)
    s.add_argument("--depth-cap", type=int, default=DEFAULT_DEPTH_CAP)
    s.add_argument("--workers", type=int, default=1)
    s.add_argument("--cache-dir")
    s.add_argument("--no-cache", action="store_true")
    out_flag(s)
    s.set_defaults(func=cmd_lps_scan)

    tri = sub.add_parser("triangle", help="triangle-group assembly")
    tsub = tri.add_subparsers(dest="action", required=True, parser_class=_Parser)
    a = tsub.add_parser("assemble", help="assemble three filling certificates")
    a.add_argument("-c", "--cert", action="append", default=[], help="filling certificate JSON (give three)")
    out_flag(a)
    a.set_defaults(func=cmd_triangle_assemble)

    var = sub.add_parser("varju", help="random SL2(p) quotients")
    vsub = var.add_subparsers(dest="action", required=True, parser_class=_Parser)
    v = vsub.add_parser("sample", help="sample random quotients")
    v.add_argument("-p", type=int, required=True)
    v.add_argument("-k", type=int, required=True)
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--trials", type=int, default=100)
    v.add_argument("--workers", type=int, default=1)
    out_flag(v)
    v.set_defaults(func=cmd_varju_sample)

    pr = sub.add_parser("present", help="emit a presentation of an extended triangle group")
    pr.add_argument("--dihedral", type=int, nargs=3, metavar=("L", "M", "R"))
    pr.add_argument("-k", type=int)
    pr.add_argument("-p", type=int)
    pr.add_argument("--seed", type=int, default=0)
    pr.add_argument("--format", choices=["text", "json"], default="text")
    out_flag(pr)
    pr.set_defaults(func=cmd_present)

    cc = sub.add_parser("classical-check", help="compare with the reflection triangle group")
    cc.add_argument("l", type=int)
    cc.add_argument("m", type=int)
    cc.add_argument("r", type=int)
    cc.set_defaults(func=cmd_classical_check)

    sp = sub.add_parser("spectral", help="spectral report for an edge-list graph")
    sp.add_argument("-i", "--input", required=True, help="edge-list file ('-' for stdin)")
    sp.add_argument("--exact", action="store_true")
    out_flag(sp)
    sp.set_defaults(func=cmd_spectral)
    return parser


def run(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except StructuralCheckFailed as exc:
        print(f"error: structural check failed: {exc}", file=sys.stderr)
        return EXIT_STRUCTURAL
    except ParameterError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARAMS
    except TriforgeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARAMS
    except SystemExit as exc:  # --help / --version
        return int(exc.code or 0)


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
