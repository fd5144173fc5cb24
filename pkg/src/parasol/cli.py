"""Command-line front end: replay a transaction file, write results and metrics.

Exit codes: 0 success, 1 usage error, 2 parse error, 3 I/O error.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
import time
from dataclasses import dataclass

from . import compress as compress_mod
from . import engine, fimi
from .wtree import WeepingTree

MODES = ("baseline", "parasol", "exact")
BACKENDS = ("flat", "wtree")
COMPRESS = ("off", "flat", "two-step")

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_PARSE = 2
EXIT_IO = 3


class UsageError(ValueError):
    pass


@dataclass
class RunConfig:
    input_path: str
    mode: str = "baseline"
    k: float = math.inf  # math.inf = unbounded
    epsilon: float | None = None
    sigma: float = 0.0
    backend: str = "flat"
    compress: str = "off"
    metrics_path: str | None = None
    out_path: str | None = None
    stride: int = 1
    summary_json: bool = False

    def validate(self) -> None:
        if self.mode not in MODES:
            raise UsageError(f"unknown mode {self.mode!r}")
        if self.backend not in BACKENDS:
            raise UsageError(f"unknown backend {self.backend!r}")
        if self.compress not in COMPRESS:
            raise UsageError(f"unknown compress setting {self.compress!r}")
        if self.mode == "parasol" and self.epsilon is None:
            raise UsageError("parasol mode requires --epsilon")
        if self.epsilon is not None and not 0.0 <= self.epsilon < 1.0:
            raise UsageError("epsilon must lie in [0, 1)")
        if not 0.0 <= self.sigma <= 1.0:
            raise UsageError("sigma must lie in [0, 1]")
        if self.k != math.inf and (self.k < 1 or int(self.k) != self.k):
            raise UsageError("k must be a positive integer or 'unbounded'")
        if self.stride < 1:
            raise UsageError("stride must be positive")
        if self.compress == "two-step" and self.backend != "wtree":
            raise UsageError("two-step compression needs --backend wtree")

    def effective(self) -> tuple[float, float | None]:
        """(k, epsilon) as handed to the engine after mode adjustments."""
        if self.mode == "exact":
            return math.inf, None  # nothing is ever evicted
        if self.mode == "baseline":
            return self.k, None  # epsilon ignored
        return self.k, self.epsilon


def run(config: RunConfig) -> int:
    """Replay the configured stream; returns a process exit code."""
    try:
        config.validate()
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE

    k, epsilon = config.effective()
    state = engine.StreamState(k=k, epsilon=epsilon, backend=config.backend)
    stats = fimi.ParseStats()

    started = time.perf_counter()
    try:
        with open(config.input_path, "r", encoding="utf-8") as fh:
            for t in fimi.parse_fimi(fh, stats):
                engine.process_transaction(state, t)
    except fimi.ParseError as exc:
        print(f"error: {config.input_path}: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO
    elapsed_ms = (time.perf_counter() - started) * 1000.0

    if config.compress == "two-step":
        assert isinstance(state.table, WeepingTree)
        final_entries = compress_mod.compress_two_step(state.table, state.delta)
    elif config.compress == "flat":
        final_entries = compress_mod.delta_compress(state.snapshot(), state.delta)
    else:
        final_entries = state.snapshot()

    threshold = config.sigma * state.i
    result_entries = [e for e in final_entries if e.count > threshold]
    weak = state.delta > threshold

    try:
        if config.out_path:
            with open(config.out_path, "w", encoding="utf-8") as fh:
                fimi.write_result(result_entries, fh)
        if config.metrics_path:
            with open(config.metrics_path, "w", encoding="utf-8") as fh:
                fimi.write_metrics(state.metrics, fh, stride=config.stride)
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO

    n = state.i
    ratio = state.delta / n if n else 0.0
    if config.summary_json:
        print(
            json.dumps(
                {
                    "n": n,
                    "k_n": len(state.table),
                    "delta": state.delta,
                    "ratio": ratio,
                    "time_ms": round(elapsed_ms, 3),
                    "weak_guarantee": weak,
                    "result_rows": len(result_entries),
                    "skipped_lines": stats.skipped,
                    "mode": config.mode,
                    "backend": config.backend,
                    "compress": config.compress,
                }
            )
        )
    else:
        print(
            f"n={n} k(n)={len(state.table)} delta={state.delta} "
            f"ratio={ratio:g} time_ms={elapsed_ms:.3f}"
        )
    return EXIT_OK


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # type: ignore[override]
        raise UsageError(message)


def _parse_k(text: str) -> float:
    if text == "unbounded":
        return math.inf
    try:
        return int(text)
    except ValueError:
        raise UsageError(f"invalid k: {text!r}") from None


def build_parser() -> _Parser:
    p = _Parser(prog="parasol", description=__doc__)
    p.add_argument("--input", required=True, help="transaction file, one per line")
    p.add_argument("--mode", required=True, choices=MODES)
    p.add_argument("--k", default="unbounded", help="entry budget (int or 'unbounded')")
    p.add_argument("--epsilon", type=float, default=None, help="error parameter")
    p.add_argument("--sigma", type=float, default=0.0, help="query support threshold")
    p.add_argument("--backend", default="flat", choices=BACKENDS)
    p.add_argument("--compress", default="off", choices=COMPRESS)
    p.add_argument("--metrics", default=None, help="write time-series CSV here")
    p.add_argument("--out", default=None, help="write the result table here")
    p.add_argument("--stride", type=int, default=1, help="metrics sampling stride")
    p.add_argument("--summary-json", action="store_true", help="JSON summary on stdout")
    return p


def main(argv: list[str] | None = None) -> int:
    try:
        args = build_parser().parse_args(argv)
        config = RunConfig(
            input_path=args.input,
            mode=args.mode,
            k=_parse_k(args.k),
            epsilon=args.epsilon,
            sigma=args.sigma,
            backend=args.backend,
            compress=args.compress,
            metrics_path=args.metrics,
            out_path=args.out,
            stride=args.stride,
            summary_json=args.summary_json,
        )
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    return run(config)


if __name__ == "__main__":
    sys.exit(main())
