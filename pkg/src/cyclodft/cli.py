"""Command line front end.

Exit codes: 0 success, 1 verification failure, 2 usage or configuration error.
"""

from __future__ import annotations

import argparse
import random
import sys
import time
from dataclasses import dataclass, field
from pathlib import Path
from typing import Sequence

from .errors import CycloDFTError
from .factorize import build_plan, plan_to_json
from .gf2m import DEFAULT_POLYS, FieldContext, format_element, make_field
from .golden import GOLDEN_CASES, PAPER_N7_ADDS, PAPER_N7_MULTS, golden_plan, plan_exports, verification_suite
from .schedule import OpCounter, direct_schedule
from .structure import Ordering, compose_pi_e
from .textio import format_vector, parse_vectors
from .transform import FORWARD_METHODS, INVERSE_METHODS, cyclotomic_dft

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_USAGE = 2


class UsageError(Exception):
    pass


@dataclass
class CliConfig:
    m: int = 3
    poly: int | None = None
    ordering: Ordering = Ordering.PAPER_CANONICAL
    basis: list[str] = field(default_factory=list)
    fmt: str = "pow"
    input: Path | None = None
    output: Path | None = None

    @classmethod
    def from_args(cls, args: argparse.Namespace) -> "CliConfig":
        try:
            ordering = Ordering.parse(args.ordering)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
        if args.m is not None:
            m = args.m
        elif args.poly is not None:
            m = args.poly.bit_length() - 1
        else:
            m = 3
        return cls(
            m=m,
            poly=args.poly,
            ordering=ordering,
            basis=list(args.basis or []),
            fmt=args.fmt,
            input=args.input,
            output=args.output,
        )

    def make_field(self) -> FieldContext:
        poly = self.poly if self.poly is not None else DEFAULT_POLYS.get(self.m)
        if poly is None:
            raise UsageError(f"no default polynomial for m={self.m}; pass --poly")
        return make_field(self.m, poly)

    def make_plan(self, fast: bool = True):
        return build_plan(self.make_field(), self.ordering, self.basis or None, fast=fast)


def _hex(text: str) -> int:
    try:
        return int(text, 16)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a hex bitmask: {text!r}") from None


def _write(cfg: CliConfig, text: str) -> None:
    if cfg.output is None:
        sys.stdout.write(text)
    else:
        cfg.output.write_text(text)


def _read_input(cfg: CliConfig) -> str:
    return cfg.input.read_text() if cfg.input is not None else sys.stdin.read()


# ---------------------------------------------------------------------------
# commands


def cmd_plan(cfg: CliConfig) -> int:
    plan = cfg.make_plan()
    fld = plan.field
    s = plan.structure
    lines = [
        f"field: GF(2^{fld.m}), poly {fld.primitive_poly:#x}, n = {fld.n}",
        f"ordering: {s.ordering.value}",
        "cosets: " + " ".join("{" + ",".join(map(str, c.elements)) + "}" for c in s.cosets),
        "Z: " + " ".join(map(str, s.z)),
        "(Pi E) order: " + " ".join(f"F{k}" for k in compose_pi_e(s)),
    ]
    for k in plan.bases.degrees:
        b, d = plan.bases.basis(k), plan.bases.dual(k)
        lines.append(f"basis m_k={k}: " + ",".join(format_element(fld, e) for e in b.elements))
        lines.append(f"dual  m_k={k}: " + ",".join(format_element(fld, e) for e in d.elements))
    text = "\n".join(lines) + "\n"
    for name, body in plan_exports(plan, cfg.fmt).items():
        text += f"\n{name}:\n{body}"
    sys.stdout.write(text)
    if cfg.output is not None:
        cfg.output.write_text(plan_to_json(plan, cfg.fmt) + "\n")
    return EXIT_OK


def _run_transform(cfg: CliConfig, method: str, table: dict) -> int:
    if method not in table:
        raise UsageError(f"unknown method {method!r}; choose from {sorted(table)}")
    plan = cfg.make_plan()
    fld = plan.field
    vectors = parse_vectors(fld, _read_input(cfg))
    out = []
    for v in vectors:
        out.append(format_vector(fld, table[method](v, plan), cfg.fmt))
    _write(cfg, "".join(line + "\n" for line in out))
    return EXIT_OK


def cmd_fft(cfg: CliConfig, method: str) -> int:
    return _run_transform(cfg, method, FORWARD_METHODS)


def cmd_ifft(cfg: CliConfig, method: str) -> int:
    return _run_transform(cfg, method, INVERSE_METHODS)


def cmd_verify(cfg: CliConfig, explicit_field: bool, fixtures: Path | None, trials: int, seed: int) -> int:
    if explicit_field:
        plans = [cfg.make_plan()]
    else:
        plans = [golden_plan(case) for case in GOLDEN_CASES]
    results = []
    for plan in plans:
        results += verification_suite(plan, fixtures, trials=trials, seed=seed)
    width = max(len(r.name) for r in results)
    for r in results:
        status = "PASS" if r.passed else "FAIL"
        print(f"{status}  {r.name:<{width}}  {r.detail}".rstrip())
    failed = [r for r in results if not r.passed]
    if failed:
        print(f"\n{len(failed)} check(s) failed; first: {failed[0].name}: {failed[0].detail}")
        return EXIT_VERIFY_FAILED
    print(f"\nall {len(results)} checks passed")
    return EXIT_OK


def cmd_bench(cfg: CliConfig, trials: int, seed: int) -> int:
    plan = cfg.make_plan()
    fld = plan.field
    n = fld.n
    direct = direct_schedule(plan)
    rng = random.Random(seed)
    vectors = [[rng.randrange(n + 1) for _ in range(n)] for _ in range(trials)]

    rows = [
        ("naive", FORWARD_METHODS["naive"]),
        ("cyclotomic", FORWARD_METHODS["cyclotomic"]),
        ("cyclotomic-direct", lambda f, p, counter=None: _cyc_with(direct, f, p, counter)),
        ("theorem1", FORWARD_METHODS["theorem1"]),
        ("inverse-cyclotomic", INVERSE_METHODS["cyclotomic"]),
    ]
    print(f"GF(2^{fld.m}) poly {fld.primitive_poly:#x}, n = {n}, trials = {trials}, seed = {seed}")
    print(f"{'method':<20}{'total s':>10}{'us/vec':>12}{'mults':>8}{'adds':>8}")
    for name, fn in rows:
        t0 = time.perf_counter()
        for v in vectors:
            fn(v, plan)
        dt = time.perf_counter() - t0
        counter = OpCounter()
        fn(vectors[0] if vectors else [0] * n, plan, counter=counter)
        note = ""
        if n == 7 and name == "cyclotomic":
            note = f"  (reported: {PAPER_N7_MULTS} mults, {PAPER_N7_ADDS} adds)"
        per = 1e6 * dt / max(trials, 1)
        print(f"{name:<20}{dt:>10.3f}{per:>12.1f}{counter.mults:>8}{counter.adds:>8}{note}")
    print("block strategies: " + " ".join(plan.schedule.labels))
    return EXIT_OK


def _cyc_with(schedule, f, plan, counter=None):
    return cyclotomic_dft(f, plan, schedule, counter)


# ---------------------------------------------------------------------------
# argument parsing


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--m", type=int, default=None, help="extension degree (default 3)")
    common.add_argument("--poly", type=_hex, default=None, help="primitive polynomial as hex bitmask")
    common.add_argument("--ordering", default="paper", help="coset ordering: paper | leader")
    common.add_argument("--basis", action="append", help="normal-basis generator in power form (repeatable)")
    common.add_argument("--fmt", choices=("pow", "hex"), default="pow")
    common.add_argument("--in", dest="input", type=Path, default=None)
    common.add_argument("--out", dest="output", type=Path, default=None)
    common.add_argument("--seed", type=int, default=0)

    p = argparse.ArgumentParser(prog="cyclodft", description="Cyclotomic DFT over GF(2^m)")
    sub = p.add_subparsers(dest="command", required=True)
    sub.add_parser("plan", parents=[common], help="print cosets, bases and factor matrices")
    for name in ("fft", "ifft"):
        sp = sub.add_parser(name, parents=[common], help=f"{name} of vectors read from --in or stdin")
        sp.add_argument("--method", default="cyclotomic", choices=("naive", "cyclotomic", "theorem1"))
    vp = sub.add_parser("verify", parents=[common], help="golden fixtures, identities and round trips")
    vp.add_argument("--fixtures", type=Path, default=None, help="fixture directory override")
    vp.add_argument("--trials", type=int, default=100)
    bp = sub.add_parser("bench", parents=[common], help="timings and operation counts per method")
    bp.add_argument("--trials", type=int, default=100)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0) and EXIT_USAGE
    try:
        cfg = CliConfig.from_args(args)
        if args.command == "plan":
            return cmd_plan(cfg)
        if args.command == "fft":
            return cmd_fft(cfg, args.method)
        if args.command == "ifft":
            return cmd_ifft(cfg, args.method)
        if args.command == "verify":
            explicit = args.m is not None or args.poly is not None or bool(args.basis)
            return cmd_verify(cfg, explicit, args.fixtures, args.trials, args.seed)
        if args.command == "bench":
            return cmd_bench(cfg, args.trials, args.seed)
    except (CycloDFTError, UsageError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    return EXIT_USAGE  # pragma: no cover


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
