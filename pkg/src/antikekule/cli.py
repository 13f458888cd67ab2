"""Command-line client for the antikekule service.

By default the CLI talks to the FastAPI app in-process (no server needed);
set ANTIKEKULE_SERVER to a base URL to target a running instance instead.

Exit codes: 0 success, 1 verification failure or inconclusive search,
2 disconnected input, 3 parse failure, 4 non-cubic input with pruning.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

import httpx

EXIT_CODES = {"disconnected": 2, "parse": 3, "non_cubic": 4}


def _client() -> httpx.Client:
    server = os.environ.get("ANTIKEKULE_SERVER")
    if server:
        return httpx.Client(base_url=server, timeout=None)
    from starlette.testclient import TestClient

    from .service import app

    return TestClient(app)


def _read_input(args) -> str:
    src = args.input
    if src == "-":
        return sys.stdin.read()
    if os.path.exists(src):
        with open(src, "r", encoding="ascii") as fh:
            return fh.read()
    # inline graph text (graph6 line or edge list)
    return src


def _payload(args) -> dict:
    return {"data": _read_input(args), "format": getattr(args, "format", "auto") or "auto"}


def _fail(resp: httpx.Response) -> int:
    detail = resp.json().get("detail", {})
    code = detail.get("code", "error") if isinstance(detail, dict) else "error"
    message = detail.get("message", str(detail)) if isinstance(detail, dict) else str(detail)
    print(f"error ({code}): {message}", file=sys.stderr)
    if code == "non_cubic":
        print("hint: rerun with --no-prune", file=sys.stderr)
    return EXIT_CODES.get(code, 1)


def _gen_request(client: httpx.Client, args, fmt: str) -> httpx.Response:
    return client.post(
        "/generate",
        json={
            "family": args.family,
            "params": args.params,
            "seed": args.seed,
            "format": fmt,
        },
    )


def cmd_gen(args) -> int:
    with _client() as client:
        resp = _gen_request(client, args, args.format)
        if resp.status_code != 200:
            return _fail(resp)
        sys.stdout.write(resp.json()["graph"])
    return 0


def _graph_arg(client: httpx.Client, args) -> dict | int:
    """Resolve the single input source to a graph payload dict."""
    if getattr(args, "gen", None):
        resp = _gen_request_inline(client, args)
        if resp.status_code != 200:
            return _fail(resp)
        return {"data": resp.json()["graph"], "format": "auto"}
    return {"data": _read_input(args), "format": "auto"}


def _gen_request_inline(client: httpx.Client, args) -> httpx.Response:
    return client.post(
        "/generate",
        json={
            "family": args.gen,
            "params": args.params or [],
            "seed": args.seed,
            "format": "graph6",
        },
    )


def cmd_ak(args) -> int:
    with _client() as client:
        payload = _graph_arg(client, args)
        if isinstance(payload, int):
            return payload
        resp = client.post(
            "/ak",
            json={
                "graph": payload,
                "prune": not args.no_prune,
                "k_max": args.kmax,
                "jobs": args.jobs,
            },
        )
        if resp.status_code != 200:
            return _fail(resp)
        doc = resp.json()
    if not doc["complete"]:
        print(f"inconclusive: no anti-Kekule set of size <= {args.kmax} found")
        return 1
    if args.json:
        doc["elapsed_ms"] = 0.0  # normalized for byte-identical reports
        print(json.dumps(doc, indent=2, sort_keys=True))
        return 0
    print(f"ak = {doc['ak']}")
    if args.all_sets:
        for s in doc["sets"]:
            print(" ".join(f"{u}-{v}" for u, v in s) if s else "∅")
    return 0


def cmd_match(args) -> int:
    with _client() as client:
        payload = _graph_arg(client, args)
        if isinstance(payload, int):
            return payload
        resp = client.post("/match", json={"graph": payload})
        if resp.status_code != 200:
            return _fail(resp)
        doc = resp.json()
    for u, v in doc["pairs"]:
        print(f"{u} {v}")
    if not doc["perfect"]:
        print("no perfect matching")
        w = doc.get("tutte_witness")
        if w:
            u = " ".join(str(x) for x in w["u"])
            print(f"tutte witness: U = {{{u}}}, odd components = {w['odd_components']}")
    return 0


def cmd_convert(args) -> int:
    with _client() as client:
        payload = _graph_arg(client, args)
        if isinstance(payload, int):
            return payload
        resp = client.post("/convert", json={"graph": payload, "to": args.to})
        if resp.status_code != 200:
            return _fail(resp)
        sys.stdout.write(resp.json()["graph"])
    return 0


def cmd_verify(args) -> int:
    with _client() as client:
        resp = client.post(
            "/verify", json={"suite": args.suite, "max_n": args.max_n, "seeds": args.seeds}
        )
        if resp.status_code != 200:
            return _fail(resp)
        doc = resp.json()
    for row in doc["rows"]:
        status = "ok" if row["ok"] else "FAIL"
        print(f"{status:4} {row['family']:<24} n={row['n']:<3} {row['value']}")
        if not row["ok"]:
            print(f"counterexample: {row['graph6']}")
    print("all passed" if doc["passed"] else "FAILED")
    return 0 if doc["passed"] else 1


def _add_input_args(p: argparse.ArgumentParser) -> None:
    p.add_argument(
        "input",
        nargs="?",
        help="graph source: file path, '-' for stdin, or inline graph text",
    )
    p.add_argument("--gen", metavar="FAMILY", help="generate the input graph instead")
    p.add_argument("--params", type=int, nargs="*", help="generator parameters")
    p.add_argument("--seed", type=int, help="generator seed (random_cubic)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="antikekule")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="emit a generator family member")
    p.add_argument("family")
    p.add_argument("params", type=int, nargs="*")
    p.add_argument("--seed", type=int)
    p.add_argument("--format", choices=["graph6", "edgelist"], default="graph6")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("ak", help="anti-Kekule number and smallest sets")
    _add_input_args(p)
    p.add_argument("--all-sets", action="store_true")
    p.add_argument("--no-prune", action="store_true")
    p.add_argument("--json", action="store_true")
    p.add_argument("--kmax", type=int, default=6)
    p.add_argument(
        "--jobs",
        type=int,
        default=int(os.environ.get("ANTIKEKULE_JOBS", "1")),
    )
    p.set_defaults(func=cmd_ak)

    p = sub.add_parser("match", help="maximum matching, with certificate if imperfect")
    _add_input_args(p)
    p.set_defaults(func=cmd_match)

    p = sub.add_parser("convert", help="convert between graph formats")
    _add_input_args(p)
    p.add_argument("--to", choices=["graph6", "edgelist", "dot"], required=True)
    p.set_defaults(func=cmd_convert)

    p = sub.add_parser("verify", help="run a theorem-verification suite")
    p.add_argument("--suite", required=True)
    p.add_argument("--max-n", type=int, default=16)
    p.add_argument("--seeds", type=int, default=0)
    p.set_defaults(func=cmd_verify)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if getattr(args, "input", None) and getattr(args, "gen", None):
        print("error: give either an input or --gen, not both", file=sys.stderr)
        return 1
    if hasattr(args, "input") and not args.input and not getattr(args, "gen", None):
        print("error: an input (path, '-', inline) or --gen is required", file=sys.stderr)
        return 1
    return args.func(args)


def entrypoint() -> None:
    raise SystemExit(main())
