"""Command-line front end.

Exit codes::

    analyze    0 unknown, 10 nonconstructible, 2 invalid input
    oracle     0 certificate found, 11 proven absent, 12 timeout or budget
    validate   0 passed, 1 failed
    corpus     0 ok
    any        2 unreadable input or unknown name, 1 internal failure

Budgets can also come from ``STRICTSPAN_BUDGET_SECS`` and
``STRICTSPAN_FACET_CAP``; flags win over the environment.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
import tempfile
from dataclasses import dataclass

from . import _backend, corpus, formats
from .ball import Verdict, theorem_decide
from .complex import Complex
from .errors import BudgetExceeded, ComplexError, GenerationStuck, InstanceUnavailable, Timeout
from .oracles import (
    BALL,
    DEFAULT_BUDGET_SECS,
    DEFAULT_FACET_CAP,
    MODES,
    is_constructible,
    is_shellable,
    tree_depth,
    verify_construction,
    verify_shelling,
)
from .validation import CATEGORIES, validate

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_INVALID = 2
EXIT_NONCONSTRUCTIBLE = 10
EXIT_ABSENT = 11
EXIT_BUDGET = 12

ENV_BUDGET = "STRICTSPAN_BUDGET_SECS"
ENV_CAP = "STRICTSPAN_FACET_CAP"


class UsageError(Exception):
    pass


@dataclass
class RunConfig:
    command: str
    source: str | None = None
    mode: str = BALL
    budget_secs: float = DEFAULT_BUDGET_SECS
    facet_cap: int = DEFAULT_FACET_CAP
    output_format: str = formats.JSON
    input_format: str = "auto"
    seed: int = 0
    method: str = "shellable"
    claim: str = "ball3"
    fast_path: bool = True
    backend: str | None = None

    def __post_init__(self):
        if self.budget_secs <= 0 or self.facet_cap <= 0:
            raise UsageError("budgets must be positive")


def _positive_float(text: str) -> float:
    v = float(text)
    if v <= 0:
        raise argparse.ArgumentTypeError("must be positive")
    return v


def _positive_int(text: str) -> int:
    v = int(text)
    if v <= 0:
        raise argparse.ArgumentTypeError("must be positive")
    return v


def load_named(name: str, seed: int) -> corpus.NamedInstance:
    """Resolve a corpus name, including ``random-ball:N`` and ``random-disk:N``."""
    kind, _, size = name.partition(":")
    if kind in ("random-ball", "random-disk") and size:
        try:
            n = int(size)
        except ValueError:
            raise UsageError(f"bad facet count in {name!r}") from None
        if n < 1:
            raise UsageError("facet count must be at least 1")
        gen = corpus.random_shellable_ball if kind == "random-ball" else corpus.random_2ball
        return corpus.NamedInstance(f"{name}@seed={seed}", gen(seed, n))
    try:
        return corpus.get(name)
    except InstanceUnavailable as exc:
        raise UsageError(f"{name}: unavailable ({exc})") from None
    except KeyError as exc:
        raise UsageError(str(exc.args[0])) from None


def load_input(cfg: RunConfig) -> tuple[Complex, str]:
    src = cfg.source
    if src is None:
        raise UsageError("no input given")
    if src.startswith("corpus:"):
        inst = load_named(src[len("corpus:"):], cfg.seed)
        return inst.complex, inst.name
    try:
        if src == "-":
            data = sys.stdin.buffer.read()
        else:
            with open(src, "rb") as fh:
                data = fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read {src}: {exc.strerror}") from None
    c, name = formats.parse_named(data, cfg.input_format)
    return c, name or src


def _render(payload: dict, fmt: str, text_lines: list[str]) -> str:
    if fmt == formats.JSON:
        return json.dumps(payload, sort_keys=True, indent=2) + "\n"
    return "\n".join(text_lines) + "\n"


def cmd_analyze(cfg: RunConfig) -> tuple[int, str]:
    c, name = load_input(cfg)
    report = theorem_decide(c)
    payload = {"input": name, "facets": len(c.facets), "vertices": len(c.vertices), **report.to_dict()}
    lines = [f"input: {name} ({len(c.facets)} facets, {len(c.vertices)} vertices)", f"verdict: {report.verdict.value}"]
    if report.verdict is Verdict.INVALID_INPUT:
        lines += [f"  {d}" for d in report.diagnostics]
    else:
        lines.append(f"reduced: {report.reduced}")
        for i, comp in enumerate(report.interior.components):
            lines.append(f"interior component {i}: vertices {sorted(comp.vertices)}, {len(comp.edges)} edges")
        for s in report.spanning:
            tag = "strict" if s.strict else f"nonstrict (component {s.witness[0]}, piece {s.witness[1]})"
            lines.append(f"spanning edge {s.edge[0]}-{s.edge[1]}: {tag}")
    code = {
        Verdict.UNKNOWN: EXIT_OK,
        Verdict.NONCONSTRUCTIBLE: EXIT_NONCONSTRUCTIBLE,
        Verdict.INVALID_INPUT: EXIT_INVALID,
    }[report.verdict]
    return code, _render(payload, cfg.output_format, lines)


def cmd_oracle(cfg: RunConfig) -> tuple[int, str]:
    c, name = load_input(cfg)
    payload = {
        "input": name,
        "method": cfg.method,
        "mode": cfg.mode if cfg.method == "constructible" else None,
        "budget_secs": cfg.budget_secs,
        "facet_cap": cfg.facet_cap,
        "certificate": None,
        "verified": None,
        "backend": cfg.backend or _backend.BACKEND,
    }
    try:
        if cfg.method == "shellable":
            cert = is_shellable(c, cfg.budget_secs, cfg.backend)
            verified = cert is not None and verify_shelling(c, cert)
        else:
            cert = is_constructible(c, cfg.mode, cfg.budget_secs, cfg.facet_cap, cfg.fast_path, cfg.backend)
            verified = cert is not None and verify_construction(c, cert, cfg.mode)
    except (Timeout, BudgetExceeded) as exc:
        payload.update(outcome="timeout" if isinstance(exc, Timeout) else "budget-exceeded", detail=str(exc))
        return EXIT_BUDGET, _render(payload, cfg.output_format, [f"{name}: {payload['outcome']}: {exc}"])
    except ComplexError as exc:
        raise UsageError(str(exc)) from None
    if cert is None:
        payload["outcome"] = "absent"
        return EXIT_ABSENT, _render(payload, cfg.output_format, [f"{name}: no {cfg.method} certificate exists (search exhausted)"])
    payload.update(outcome="found", certificate=cert.to_dict(), verified=verified)
    if cfg.method == "shellable":
        lines = [f"{name}: shelling order of {len(cert.order)} facets, verified={verified}"]
        lines += [" ".join(map(str, f)) for f in cert.order]
    else:
        lines = [f"{name}: construction tree of depth {tree_depth(cert)} ({cfg.mode} mode), verified={verified}"]
    return (EXIT_OK if verified else EXIT_FAILED), _render(payload, cfg.output_format, lines)


def cmd_validate(cfg: RunConfig) -> tuple[int, str]:
    c, name = load_input(cfg)
    rep = validate(c, cfg.claim)
    payload = {"input": name, **rep.to_dict()}
    lines = [f"{name}: {rep.summary}"] + [f"  {f}" for f in rep.failures]
    return (EXIT_OK if rep.passed else EXIT_FAILED), _render(payload, cfg.output_format, lines)


def cmd_corpus(cfg: RunConfig, action: str, name: str | None) -> tuple[int, str]:
    if action == "list":
        rows = [(inst.name, len(inst.complex.facets), inst.complex.dimension) for inst in corpus.all_instances()]
        if cfg.output_format == formats.JSON:
            payload = [{"name": n, "facets": k, "dimension": d} for n, k, d in rows]
            return EXIT_OK, json.dumps(payload, sort_keys=True, indent=2) + "\n"
        return EXIT_OK, "".join(f"{n}\t{k} facets\tdim {d}\n" for n, k, d in rows)
    if not name:
        raise UsageError("corpus export needs a NAME")
    inst = load_named(name, cfg.seed)
    return EXIT_OK, formats.export(inst.complex, cfg.output_format, inst.name)


def _env_default(var: str, conv, fallback):
    raw = os.environ.get(var)
    if raw is None or raw == "":
        return fallback
    try:
        return conv(raw)
    except (ValueError, argparse.ArgumentTypeError):
        raise UsageError(f"{var}={raw!r} is not a positive number") from None


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="strictspan",
        description="Strict spanning edges, shellability and constructibility of simplicial 3-balls",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", dest="output_format", choices=(formats.JSON, formats.TEXT), default=formats.JSON,
                        help="output format (default json)")
    common.add_argument("--seed", type=int, default=0, help="seed for random-ball:N / random-disk:N corpus entries")
    common.add_argument("-o", "--output", help="write output to this file instead of stdout")

    inputs = argparse.ArgumentParser(add_help=False)
    inputs.add_argument("input", help="facet-list file, '-' for stdin, or corpus:NAME")
    inputs.add_argument("--input-format", choices=("auto", formats.TEXT, formats.JSON), default="auto")

    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("analyze", parents=[common, inputs], help="apply the strict-spanning-edge test")

    p = sub.add_parser("oracle", parents=[common, inputs], help="exact shellability / constructibility search")
    p.add_argument("--method", choices=("shellable", "constructible"), default="shellable")
    p.add_argument("--mode", choices=MODES, default=BALL)
    p.add_argument("--budget-secs", type=_positive_float, default=None)
    p.add_argument("--facet-cap", type=_positive_int, default=None)
    p.add_argument("--no-fast-path", action="store_true", help="skip the shelling shortcut for constructibility")
    p.add_argument("--backend", choices=("cython", "python"), default=None)

    p = sub.add_parser("validate", parents=[common, inputs], help="check a claimed category")
    p.add_argument("--claim", choices=CATEGORIES, default="ball3")

    p = sub.add_parser("corpus", parents=[common], help="list or export built-in instances")
    p.add_argument("action", choices=("list", "export"))
    p.add_argument("name", nargs="?")
    return parser


def _write_atomic(path: str, text: str) -> None:
    d = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(dir=d, prefix=".strictspan-")
    try:
        with os.fdopen(fd, "w") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def run(argv: list[str] | None = None) -> tuple[int, str, str]:
    """Execute a command; returns ``(exit code, stdout text, stderr text)``."""
    args = build_parser().parse_args(argv)
    try:
        cfg = RunConfig(
            command=args.command,
            source=getattr(args, "input", None),
            output_format=args.output_format,
            input_format=getattr(args, "input_format", "auto"),
            seed=args.seed,
        )
        if args.command == "oracle":
            cfg.method = args.method
            cfg.mode = args.mode
            cfg.fast_path = not args.no_fast_path
            cfg.backend = args.backend
            cfg.budget_secs = args.budget_secs or _env_default(ENV_BUDGET, _positive_float, DEFAULT_BUDGET_SECS)
            cfg.facet_cap = args.facet_cap or _env_default(ENV_CAP, _positive_int, DEFAULT_FACET_CAP)
        if args.command == "validate":
            cfg.claim = args.claim
        if args.command == "analyze":
            code, out = cmd_analyze(cfg)
        elif args.command == "oracle":
            code, out = cmd_oracle(cfg)
        elif args.command == "validate":
            code, out = cmd_validate(cfg)
        else:
            code, out = cmd_corpus(cfg, args.action, args.name)
    except (UsageError, ComplexError, GenerationStuck) as exc:
        return EXIT_INVALID, "", f"strictspan: error: {exc}\n"
    if args.output:
        _write_atomic(args.output, out)
        out = ""
    return code, out, ""


def main(argv: list[str] | None = None) -> int:
    code, out, err = run(argv)
    if out:
        sys.stdout.write(out)
    if err:
        sys.stderr.write(err)
    return code


if __name__ == "__main__":
    sys.exit(main())
