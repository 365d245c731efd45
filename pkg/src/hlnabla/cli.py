"""Command line: ``hlnabla verify | expand | table``.

Exit codes: 0 all cases passed, 1 some case failed, 2 invalid configuration or
arguments, 3 an internal arithmetic error (the offending case is reported).
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction

from .partitions import PartitionError, enumerate_partitions, is_two_col, parse_partition
from .suites import SAFE_LIMITS, SUITES, Grid, run_case, suite_cases

log = logging.getLogger("hlnabla")

EXIT_OK, EXIT_FAIL, EXIT_CONFIG, EXIT_ARITH = 0, 1, 2, 3
FORMATS = ("json", "csv", "plain")
MEMORY_ENV = "NABLAHL_MAX_MEMORY_MB"
TABLE_LIMITS = {"n": 10, "a": 8, "b": 8, "k": 8}
DEFAULTS = {"suite": "all", "a_max": 3, "b_max": 3, "k_max": 3, "format": "plain",
            "output": None, "jobs": 1}


class ConfigError(ValueError):
    pass


# ---------------------------------------------------------------------------
# configuration


def load_config(path: str) -> dict:
    """Read a TOML config; keys may sit at top level or under a [verify] table."""
    try:
        import tomllib
    except ModuleNotFoundError:
        import tomli as tomllib
    try:
        with open(path, "rb") as fh:
            data = tomllib.load(fh)
    except (OSError, tomllib.TOMLDecodeError) as exc:
        raise ConfigError(f"cannot read config {path}: {exc}") from exc
    data = data.get("verify", data)
    out = {}
    for key, val in data.items():
        key = key.replace("-", "_")
        if key not in DEFAULTS:
            raise ConfigError(f"unknown config key {key!r}")
        out[key] = val
    return out


def resolve_config(args: argparse.Namespace) -> dict:
    """Flags override the config file, which overrides defaults."""
    cfg = dict(DEFAULTS)
    if args.config:
        cfg.update(load_config(args.config))
    for key in DEFAULTS:
        val = getattr(args, key, None)
        if val is not None:
            cfg[key] = val
    for key in ("a_max", "b_max", "k_max", "jobs"):
        if not isinstance(cfg[key], int) or isinstance(cfg[key], bool) or cfg[key] < 0:
            raise ConfigError(f"{key} must be a nonnegative integer, got {cfg[key]!r}")
    if cfg["jobs"] < 1:
        raise ConfigError("jobs must be at least 1")
    if cfg["suite"] not in SUITES + ("all",):
        raise ConfigError(f"unknown suite {cfg['suite']!r}")
    if cfg["format"] not in FORMATS:
        raise ConfigError(f"unknown format {cfg['format']!r}")
    for key, limit in SAFE_LIMITS.items():
        if cfg[key] > limit:
            log.warning("%s = %d is above the safe limit %d; this may be slow", key, cfg[key], limit)
    return cfg


def apply_memory_limit() -> None:
    raw = os.environ.get(MEMORY_ENV)
    if not raw:
        return
    try:
        mb = int(raw)
        if mb <= 0:
            raise ValueError
    except ValueError:
        raise ConfigError(f"{MEMORY_ENV} must be a positive integer, got {raw!r}") from None
    import resource
    limit = mb * 1024 * 1024
    _, hard = resource.getrlimit(resource.RLIMIT_AS)
    if hard != resource.RLIM_INFINITY:
        limit = min(limit, hard)
    resource.setrlimit(resource.RLIMIT_AS, (limit, hard))


# ---------------------------------------------------------------------------
# rendering


def _dump(obj) -> str:
    return json.dumps(obj, separators=(", ", ": "))


def render_report(records: list[dict], fmt: str) -> str:
    if fmt == "json":
        return "".join(_dump(r) + "\n" for r in records)
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["check", "params", "pass", "witness", "millis"])
        for r in records:
            w.writerow([r["check"], _dump(r["params"]), r["pass"],
                        "" if r["witness"] is None else _dump(r["witness"]), r["millis"]])
        return buf.getvalue()
    lines = []
    for r in records:
        params = " ".join(f"{k}={_plain(v)}" for k, v in r["params"].items())
        line = f"{'PASS' if r['pass'] else 'FAIL'} {r['check']} {params}".rstrip()
        if not r["pass"] and r["witness"] is not None:
            line += f"  witness={_dump(r['witness'])}"
        lines.append(f"{line}  ({r['millis']} ms)")
    return "".join(x + "\n" for x in lines)


def _plain(v) -> str:
    if isinstance(v, list):
        return ",".join(map(str, v)) if all(not isinstance(x, list) for x in v) else _dump(v)
    return str(v)


def _emit(text: str, output: str | None) -> None:
    if output:
        with open(output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


# ---------------------------------------------------------------------------
# commands


def run_suite(cfg: dict) -> tuple[int, list[dict]]:
    grid = Grid(cfg["a_max"], cfg["b_max"], cfg["k_max"])
    cases = suite_cases(cfg["suite"], grid)
    if cfg["jobs"] > 1 and len(cases) > 1:
        with ProcessPoolExecutor(max_workers=cfg["jobs"]) as pool:
            records = list(pool.map(run_case, cases, chunksize=max(1, len(cases) // (4 * cfg["jobs"]))))
    else:
        records = [run_case(c) for c in cases]
    if any(r.get("arithmetic_error") for r in records):
        status = EXIT_ARITH
    elif all(r["pass"] for r in records):
        status = EXIT_OK
    else:
        status = EXIT_FAIL
    return status, records


def cmd_verify(args) -> int:
    cfg = resolve_config(args)
    status, records = run_suite(cfg)
    _emit(render_report(records, cfg["format"]), cfg["output"])
    passed = sum(r["pass"] for r in records)
    print(f"{cfg['suite']}: {passed}/{len(records)} cases passed", file=sys.stderr)
    for r in records:
        if r.get("arithmetic_error"):
            print(f"arithmetic error in {r['check']} {_dump(r['params'])}: {r['witness']['error']}",
                  file=sys.stderr)
    return status


def _parse_at(text: str) -> dict:
    out = {}
    for part in text.split(","):
        name, sep, val = part.partition("=")
        name = name.strip()
        if not sep or name not in ("q", "t") or name in out:
            raise ConfigError(f"bad substitution {part!r}; expected q=<value>,t=<value>")
        try:
            out[name] = Fraction(val.strip())
        except (ValueError, ZeroDivisionError):
            raise ConfigError(f"bad value in substitution {part!r}") from None
    return {k: (int(v) if v.denominator == 1 else v) for k, v in out.items()}


def expand(mu_text: str, basis: str, at: str | None = None):
    from .symfunc import macdonald, modified_hl, modified_hl_inverted
    try:
        mu = parse_partition(mu_text)
    except (PartitionError, ValueError) as exc:
        raise ConfigError(str(exc)) from exc
    if basis == "hl0":
        v = modified_hl(mu)
    elif basis == "hl0-inv":
        v = modified_hl_inverted(mu)
    elif basis == "macdonald":
        if not is_two_col(mu):
            raise ConfigError(f"the macdonald basis needs a two-column partition, got {mu_text}")
        v = macdonald(mu)
    else:
        raise ConfigError(f"unknown basis {basis!r}")
    if at:
        v = v.evaluate(**_parse_at(at))
    return v


def render_vector(v, fmt: str) -> str:
    if fmt == "json":
        return _dump(v.to_json()) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["partition", "coefficient"])
        for lam, c in v.items():
            w.writerow([",".join(map(str, lam)), str(c)])
        return buf.getvalue()
    return str(v) + "\n"


def cmd_expand(args) -> int:
    v = expand(args.mu, args.basis, args.at)
    _emit(render_vector(v, args.format), args.output)
    return EXIT_OK


def _bounded(name: str, val) -> int:
    if val is None:
        raise ConfigError(f"--{name} is required")
    if val < 0 or val > TABLE_LIMITS[name]:
        raise ConfigError(f"--{name} must lie in [0, {TABLE_LIMITS[name]}]")
    return val


def build_table(kind: str, n=None, a=None, b=None, k=None) -> dict:
    from . import nabla
    from .tableaux import kostka_foulkes_column
    if kind == "kostka-foulkes":
        n = _bounded("n", n)
        rows = []
        parts = enumerate_partitions(n)
        for mu in parts:
            col = kostka_foulkes_column(mu)
            rows += [{"lambda": list(lam), "mu": list(mu), "value": str(col[lam])}
                     for lam in parts if lam in col]
        return {"kind": kind, "n": n, "entries": rows}
    a, b = _bounded("a", a), _bounded("b", b)
    if kind == "transition-matrix":
        mat = nabla.transition_matrix(a, b)
        return {"kind": kind, "a": a, "b": b, "rows": [[str(e) for e in row] for row in mat.entries]}
    if kind == "matrix-power":
        k = _bounded("k", k)
        mat = nabla.matrix_power(a, b, k)
        return {"kind": kind, "a": a, "b": b, "k": k,
                "rows": [[str(e) for e in row] for row in mat.entries]}
    raise ConfigError(f"unknown table {kind!r}")


def render_table(tab: dict, fmt: str) -> str:
    if fmt == "json":
        return _dump(tab) + "\n"
    buf = io.StringIO()
    if "entries" in tab:
        if fmt == "csv":
            w = csv.writer(buf, lineterminator="\n")
            w.writerow(["lambda", "mu", "value"])
            for e in tab["entries"]:
                w.writerow([",".join(map(str, e["lambda"])), ",".join(map(str, e["mu"])), e["value"]])
        else:
            for e in tab["entries"]:
                buf.write(f"K[{','.join(map(str, e['lambda']))}; {','.join(map(str, e['mu']))}] "
                          f"= {e['value']}\n")
        return buf.getvalue()
    if fmt == "csv":
        w = csv.writer(buf, lineterminator="\n")
        for row in tab["rows"]:
            w.writerow(row)
    else:
        width = max(len(x) for row in tab["rows"] for x in row)
        for row in tab["rows"]:
            buf.write("[ " + "  ".join(x.rjust(width) for x in row) + " ]\n")
    return buf.getvalue()


def cmd_table(args) -> int:
    tab = build_table(args.kind, n=args.n, a=args.a, b=args.b, k=args.k)
    _emit(render_table(tab, args.format), args.output)
    return EXIT_OK


# ---------------------------------------------------------------------------
# entry point


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="hlnabla",
                                description="Exact checks for nabla on two-column Hall-Littlewood "
                                            "polynomials.")
    sub = p.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", help="run a verification suite over a parameter grid")
    v.add_argument("--suite", choices=SUITES + ("all",))
    v.add_argument("--a-max", dest="a_max", type=int)
    v.add_argument("--b-max", dest="b_max", type=int)
    v.add_argument("--k-max", dest="k_max", type=int)
    v.add_argument("--format", choices=FORMATS)
    v.add_argument("--output")
    v.add_argument("--jobs", type=int)
    v.add_argument("--config", help="TOML file with defaults for the flags above")
    v.set_defaults(func=cmd_verify)

    e = sub.add_parser("expand", help="Schur expansion of a basis element")
    e.add_argument("--mu", required=True, help="partition, e.g. 2,1,1")
    e.add_argument("--basis", choices=("hl0", "hl0-inv", "macdonald"), default="hl0")
    e.add_argument("--at", help="substitution such as q=0,t=1")
    e.add_argument("--format", choices=FORMATS, default="plain")
    e.add_argument("--output")
    e.set_defaults(func=cmd_expand)

    t = sub.add_parser("table", help="Kostka-Foulkes tables and transition matrices")
    t.add_argument("kind", choices=("kostka-foulkes", "transition-matrix", "matrix-power"))
    t.add_argument("--n", type=int)
    t.add_argument("--a", type=int)
    t.add_argument("--b", type=int)
    t.add_argument("--k", type=int)
    t.add_argument("--format", choices=FORMATS, default="plain")
    t.add_argument("--output")
    t.set_defaults(func=cmd_table)
    return p


def main(argv=None) -> int:
    logging.basicConfig(level=logging.WARNING, format="%(levelname)s: %(message)s")
    args = build_parser().parse_args(argv)
    try:
        apply_memory_limit()
        return args.func(args)
    except ConfigError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except (ArithmeticError, ZeroDivisionError) as exc:
        print(f"arithmetic error: {exc}", file=sys.stderr)
        return EXIT_ARITH


if __name__ == "__main__":
    sys.exit(main())
