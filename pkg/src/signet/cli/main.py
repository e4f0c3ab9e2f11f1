# src/signet/cli/main.py
"""``signet`` command line.

Usage::

    signet <group> <name> [--json FILE|-] [--jobs N]
    signet lens --json FILE
    signet batch FILE [--jobs N]
    signet accept SUITE [--scale X] [--seed N] [--jobs N]

Requests are JSON objects of parameters; the response is printed as one
line of canonical JSON. Exit codes: 0 success, 1 domain or acceptance
failure, 2 usage error, 3 I/O error.
"""

import argparse
import logging
import sys
from concurrent.futures import ThreadPoolExecutor
from typing import Dict, List, Optional, Sequence

from signet import __version__, config
from signet.cli import accept, codec
from signet.cli.dispatch import COMMANDS, Response, SchemaError, dispatch, respond
from signet.errors import ParseError, SignetError

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2
EXIT_IO = 3


def _command_tree() -> Dict[str, List[str]]:
    """``{"sturm": ["count", ...], "lens": [], ...}`` from the command table."""
    tree: Dict[str, List[str]] = {}
    for name in COMMANDS:
        group, _, sub = name.partition(" ")
        tree.setdefault(group, [])
        if sub:
            tree[group].append(sub)
    return tree


def _add_request_options(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--json", metavar="FILE", default=None, help="Request parameters as a JSON object ('-' for stdin).")
    parser.add_argument("--jobs", type=int, default=None, help="Worker threads, for commands that take them.")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="signet", description="Exact signatures of forms and their invariants.")
    parser.add_argument("--version", action="version", version=f"signet {__version__}")
    parser.add_argument("-v", "--verbose", action="store_true", help="Debug logging on stderr.")
    groups = parser.add_subparsers(dest="group", metavar="GROUP", required=True)

    for group, subs in _command_tree().items():
        gp = groups.add_parser(group, help=f"{group} commands")
        if subs:
            names = gp.add_subparsers(dest="name", metavar="NAME", required=True)
            for sub in subs:
                _add_request_options(names.add_parser(sub, help=f"{group} {sub}"))
        else:
            _add_request_options(gp)

    bp = groups.add_parser("batch", help="Run newline-delimited JSON requests.")
    bp.add_argument("file", help="Request file, one JSON object per line ('-' for stdin).")
    bp.add_argument("--jobs", type=int, default=None, help="Worker threads (default SIGNET_JOBS or 1).")

    ap = groups.add_parser("accept", help="Run an acceptance suite.")
    ap.add_argument("suite", choices=("all",) + accept.SUITES)
    ap.add_argument("--scale", type=float, default=1.0, help="Multiplier on instance counts.")
    ap.add_argument("--seed", type=int, default=accept.DEFAULT_SEED)
    ap.add_argument("--jobs", type=int, default=None)
    return parser


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _emit(obj) -> None:
    sys.stdout.write(codec.dumps(obj) + "\n")


def _jobs(args: argparse.Namespace) -> int:
    jobs = args.jobs if args.jobs is not None else config.default_jobs()
    return max(1, jobs)


# -------------------- single command --------------------
def run_command(cmd: str, args: argparse.Namespace) -> int:
    try:
        params = codec.loads(_read_text(args.json)) if args.json is not None else {}
    except OSError as exc:
        logger.error("cannot read %s: %s", args.json, exc)
        return EXIT_IO
    except ParseError as exc:
        _emit(Response(False, error={"code": exc.code, "message": str(exc)}).as_dict())
        return EXIT_FAILURE
    if not isinstance(params, dict):
        _emit(Response(False, error={"code": SchemaError.code, "message": "request is not a json object"}).as_dict())
        return EXIT_USAGE
    if params.get("cmd", cmd) != cmd:
        _emit(Response(False, error={"code": SchemaError.code, "message": f"request is for {params['cmd']!r}"}).as_dict())
        return EXIT_USAGE
    request = dict(params, cmd=cmd)
    if args.jobs is not None and "jobs" in COMMANDS[cmd].params and "jobs" not in request:
        request["jobs"] = args.jobs
    try:
        response = dispatch(request)
    except SchemaError as exc:
        _emit(Response(False, error={"code": exc.code, "message": str(exc)}).as_dict())
        return EXIT_USAGE
    _emit(response.as_dict())
    return EXIT_OK if response.ok else EXIT_FAILURE


# -------------------- batch --------------------
def _answer(line: str) -> Response:
    try:
        request = codec.loads(line)
    except SignetError as exc:
        return Response(False, error={"code": exc.code, "message": str(exc)})
    return respond(request)


def run_batch(lines: Sequence[str], jobs: int = 1) -> List[Response]:
    """Answer each non-blank line; responses keep input order for any ``jobs``."""
    requests = [line for line in lines if line.strip()]
    if jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(_answer, requests))
    return [_answer(line) for line in requests]


def _batch(args: argparse.Namespace) -> int:
    try:
        lines = _read_text(args.file).splitlines()
    except OSError as exc:
        logger.error("cannot read %s: %s", args.file, exc)
        return EXIT_IO
    responses = run_batch(lines, _jobs(args))
    for response in responses:
        _emit(response.as_dict())
    logger.info("batch: %d requests, %d failed", len(responses), sum(not r.ok for r in responses))
    return EXIT_OK if all(r.ok for r in responses) else EXIT_FAILURE


# -------------------- accept --------------------
def _accept(args: argparse.Namespace) -> int:
    reports = accept.run_suite(args.suite, scale=args.scale, seed=args.seed, jobs=_jobs(args))
    passed = all(r.passed for r in reports)
    _emit({"passed": passed, "suites": [r.as_dict() for r in reports]})
    return EXIT_OK if passed else EXIT_FAILURE


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    try:
        level = logging.DEBUG if args.verbose else config.log_level()
    except SignetError as exc:
        print(f"[error] {exc}", file=sys.stderr)
        return EXIT_USAGE
    logging.basicConfig(stream=sys.stderr, level=level, format="%(levelname)s %(name)s: %(message)s")

    if args.group == "batch":
        return _batch(args)
    if args.group == "accept":
        return _accept(args)
    cmd = args.group if getattr(args, "name", None) is None else f"{args.group} {args.name}"
    return run_command(cmd, args)


if __name__ == "__main__":
    sys.exit(main())
