from __future__ import annotations

import argparse
import logging
import sys
from pathlib import Path
from typing import Callable, Dict, List, Optional

from src.app.errors import AppError, EmptyPolyhedronError, NotConvexEvidence
from src.schemas.io_schema import render_json
from src.solver import runner

logger = logging.getLogger("convexpoly")


def _read(path: Optional[str]) -> Optional[bytes]:
    return None if path is None else Path(path).read_bytes()


def _emit(data: bytes, out: Optional[str]) -> None:
    if out is None:
        sys.stdout.buffer.write(data)
        sys.stdout.flush()
    else:
        Path(out).write_bytes(data)


def _add_common(p: argparse.ArgumentParser, *, constraints: bool = True, search: bool = True) -> None:
    p.add_argument("--poly", required=True, help="polynomial JSON file")
    if constraints:
        p.add_argument("--constraints", help="constraints JSON file (omit for R^n)")
    if search:
        p.add_argument("--seed", type=int, help="seed for the definite-point search")
        p.add_argument("--mode", choices=["randomized", "exhaustive"], help="definite-point search mode")
    p.add_argument("--out", help="result file (default: stdout)")
    p.add_argument("--log-level", help="DEBUG, INFO, WARNING, ...")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="convexpoly",
        description="Exact convex polynomial programming over rational polyhedra.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="minimize f over P to within eps, or certify unboundedness")
    _add_common(p)
    p.add_argument("--eps", help='rational accuracy, e.g. "1/1000000"')

    _add_common(sub.add_parser("decompose", help="f = fhat(Ux) - <w,x> and the quadratic lower bound"), constraints=False)
    _add_common(sub.add_parser("bound", help="radius R containing a minimizer"))
    _add_common(
        sub.add_parser("certify-unbounded", help="unboundedness ray or Farkas witness"), search=False
    )

    p = sub.add_parser("check-convexity", help="sample Hessians for a convexity violation")
    _add_common(p, constraints=False)
    p.add_argument("--trials", type=int, default=100)
    return parser


def _dispatch(args: argparse.Namespace, settings) -> runner.RunResult:
    poly = _read(args.poly)
    handlers: Dict[str, Callable[[], runner.RunResult]] = {
        "solve": lambda: runner.run_solve(
            poly, _read(args.constraints), eps=args.eps, seed=args.seed, mode=args.mode, settings=settings
        ),
        "decompose": lambda: runner.run_decompose(poly, seed=args.seed, mode=args.mode, settings=settings),
        "bound": lambda: runner.run_bound(
            poly, _read(args.constraints), seed=args.seed, mode=args.mode, settings=settings
        ),
        "certify-unbounded": lambda: runner.run_certify(poly, _read(args.constraints)),
        "check-convexity": lambda: runner.run_check_convexity(
            poly, trials=args.trials, seed=args.seed, settings=settings
        ),
    }
    return handlers[args.command]()


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        settings = runner.configure(args.log_level)
        result = _dispatch(args, settings)
    except EmptyPolyhedronError as e:
        logger.error("empty polyhedron", extra={"ctx": {"error": str(e)}})
        return runner.EXIT_EMPTY_POLYHEDRON
    except NotConvexEvidence as e:
        logger.error("not convex", extra={"ctx": {"error": str(e)}})
        return runner.EXIT_NOT_CONVEX
    except (AppError, OSError, ValueError) as e:
        logger.error("failed", extra={"ctx": {"error": str(e), "module": getattr(e, "module", None)}})
        return runner.EXIT_INTERNAL
    _emit(render_json(result.doc), args.out)
    return result.exit_code


if __name__ == "__main__":
    sys.exit(main())
