"""Command-line entry point: info | color | bounds | induced.

Exit codes: 0 ok, 1 invalid coloring (a defect), 2 bad configuration,
3 enumeration cap or search budget exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass

from .colorings import (
    METHODS,
    color_graph,
    coloring_csv,
    hawtin_ctx,
    hawtin_image_graph,
    hawtin_palette,
    verify_coloring,
)
from .errors import GrassError, SizeLimitExceeded
from .graphs import build_graph, ctx_for_q, pencil_clique, valency
from .oracle import DEFAULT_EXACT_CAP, DEFAULT_NODE_BUDGET, chromatic_bounds, exact_chromatic
from .projlinalg import DEFAULT_ENUM_CAP, enumerate_subspaces, gaussian_binomial

EXIT_OK, EXIT_INVALID, EXIT_CONFIG, EXIT_CAP = 0, 1, 2, 3


class ConfigError(GrassError):
    pass


@dataclass
class RunConfig:
    command: str
    q: int | None = None
    n: int | None = None
    m: int = 2
    method: str = "moore"
    exact: bool = False
    format: str = "json"
    out: str | None = None
    enum_cap: int = DEFAULT_ENUM_CAP
    exact_cap: int = DEFAULT_EXACT_CAP
    node_budget: int = DEFAULT_NODE_BUDGET


def _is_prime_power(q) -> bool:
    try:
        ctx_for_q(q, 1)
    except (ValueError, GrassError):
        return False
    return True


def _require_qnm(cfg: RunConfig, need_q=True):
    if cfg.n is None or (need_q and cfg.q is None):
        raise ConfigError("--q and --n are required")
    if need_q and not _is_prime_power(cfg.q):
        raise ConfigError(f"q={cfg.q} is not a prime power")
    if not 0 < cfg.m < cfg.n:
        raise ConfigError(f"requires 0 < m < n, got m={cfg.m}, n={cfg.n}")


def _check_hawtin(cfg: RunConfig):
    if cfg.m != 2:
        raise ConfigError("hawtin colors lines; m must be 2")
    hawtin_ctx(cfg.q, cfg.n)


def info_table(q: int, n: int, m: int) -> dict:
    lower = gaussian_binomial(n - m + 1, 1, q)
    out = {
        "q": q, "n": n, "m": m,
        "vertices": gaussian_binomial(n, m, q),
        "valency": valency(q, n, m),
        "lower_bound": lower,
        "upper_bound": gaussian_binomial(n, 1, q),
    }
    if m == 2 and q & (q - 1) == 0 and n % 2 == 0:
        out["hawtin_palette"] = hawtin_palette(q, n)
        out["hawtin_strict_limit"] = 2 * lower
        out["two_lower_minus_one"] = 2 * lower - 1
    return out


def _grassmann(cfg):
    return build_graph("grassmann", (cfg.q, cfg.n, cfg.m), enum_cap=cfg.enum_cap)


def cmd_info(cfg: RunConfig):
    _require_qnm(cfg)
    return info_table(cfg.q, cfg.n, cfg.m), EXIT_OK


def cmd_color(cfg: RunConfig):
    if cfg.method not in METHODS:
        raise ConfigError(f"unknown method {cfg.method!r}")
    if cfg.method == "johnson_sum":
        _require_qnm(cfg, need_q=False)
        g = build_graph("johnson", (cfg.n, cfg.m), enum_cap=cfg.enum_cap)
    else:
        _require_qnm(cfg)
        if cfg.method == "hawtin":
            _check_hawtin(cfg)
        family = "qkneser" if cfg.method == "kneser_point" else "grassmann"
        g = build_graph(family, (cfg.q, cfg.n, cfg.m), enum_cap=cfg.enum_cap)
    coloring = color_graph(cfg.method, g)
    report = verify_coloring(coloring)
    code = EXIT_OK if report.valid else EXIT_INVALID
    if cfg.format == "csv":
        return coloring_csv(coloring), code
    return report.to_dict(), code


def _pencil_seed(g, cfg):
    ctx = ctx_for_q(cfg.q, 1)
    t = None if cfg.m == 1 else next(iter(enumerate_subspaces(cfg.n, cfg.m - 1, ctx.base)))
    where = {s: i for i, s in enumerate(g.vertices)}
    return sorted(where[s] for s in pencil_clique(t, cfg.n, cfg.m, ctx))


def cmd_bounds(cfg: RunConfig):
    _require_qnm(cfg)
    g = _grassmann(cfg)
    if cfg.exact:
        b = exact_chromatic(g, cfg.node_budget, cfg.exact_cap)
        code = EXIT_CAP if b.exact is None else EXIT_OK
    else:
        b = chromatic_bounds(g, cfg.node_budget, seed=_pencil_seed(g, cfg))
        code = EXIT_OK
    report = {
        "graph": g.summary(),
        "bounds": b.to_dict(),
        "formulas": info_table(cfg.q, cfg.n, cfg.m),
    }
    return report, code


def cmd_induced(cfg: RunConfig):
    if cfg.q is None or cfg.n is None:
        raise ConfigError("--q and --n are required")
    hawtin_ctx(cfg.q, cfg.n)
    g, pencil = hawtin_image_graph(cfg.q, cfg.n)
    b = chromatic_bounds(g, cfg.node_budget, seed=pencil)
    target = gaussian_binomial(cfg.n - 1, 1, cfg.q)
    report = {
        "q": cfg.q,
        "n": cfg.n,
        "lines": gaussian_binomial(cfg.n, 2, cfg.q),
        "image_vertices": len(g),
        "graph": g.summary(),
        "bounds": b.to_dict(),
        "grassmann_lower_bound": target,
        "clique_lower_reaches_grassmann_bound": b.lower >= target,
        "greedy_upper_exceeds_grassmann_bound": b.upper > target,
    }
    return report, EXIT_OK


COMMANDS = {"info": cmd_info, "color": cmd_color, "bounds": cmd_bounds, "induced": cmd_induced}


def _render_table(report) -> str:
    lines = []

    def walk(prefix, obj):
        if isinstance(obj, dict):
            for k, v in obj.items():
                if isinstance(v, (dict, list)):
                    walk(f"{prefix}{k}.", v)
                else:
                    lines.append(f"{prefix}{k}: {v}")
        elif isinstance(obj, list):
            for i, v in enumerate(obj):
                walk(f"{prefix}{i}.", v)

    walk("", report)
    return "\n".join(lines) + "\n"


def render(report, fmt: str) -> str:
    if isinstance(report, str):
        return report
    if fmt == "table":
        return _render_table(report)
    return json.dumps(report, indent=2) + "\n"


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--q", type=int)
    common.add_argument("--n", type=int)
    common.add_argument("--m", type=int, default=2)
    common.add_argument("--method", default="moore")
    common.add_argument("--exact", action="store_true")
    common.add_argument("--format", choices=("json", "csv", "table"), default="json")
    common.add_argument("--out")
    common.add_argument("--enum-cap", type=int, default=DEFAULT_ENUM_CAP)
    common.add_argument("--exact-cap", type=int, default=DEFAULT_EXACT_CAP)
    common.add_argument("--node-budget", type=int, default=DEFAULT_NODE_BUDGET)
    parser = argparse.ArgumentParser(prog="grasscolor",
                                     description="Colorings of Grassmann graphs J_q(n, m).")
    sub = parser.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        sub.add_parser(name, parents=[common])
    return parser


def run(cfg: RunConfig) -> tuple[str, int]:
    """Execute one command; configuration problems propagate as exceptions."""
    report, code = COMMANDS[cfg.command](cfg)
    return render(report, cfg.format), code


def _fail(exc: Exception, code: int) -> int:
    sys.stderr.write(json.dumps({"error": type(exc).__name__, "detail": str(exc)}) + "\n")
    return code


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    cfg = RunConfig(**vars(args))
    try:
        text, code = run(cfg)
    except SizeLimitExceeded as exc:
        return _fail(exc, EXIT_CAP)
    except (GrassError, ValueError) as exc:
        return _fail(exc, EXIT_CONFIG)
    if cfg.out:
        with open(cfg.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
