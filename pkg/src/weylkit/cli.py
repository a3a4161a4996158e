"""Command-line entry point.

Configuration files use a plain line grammar: one "key value" pair per
line, '#' comments, blank lines ignored.  Duplicate keys follow a
last-wins rule (a warning is recorded); unknown keys are rejected with
the offending line number.  Reports are TSV with the fixed columns
check_id, anchor, status, witness and are byte-identical across runs
with the same configuration.
"""

import argparse
import sys
from dataclasses import dataclass, fields, replace

from . import alcove, checks, fourier, lattices, laurent, pgl2, reps, weyl, witt
from .cartan import cartan_datum
from .errors import ConfigError, WeylkitError


@dataclass(frozen=True)
class SuiteConfig:
    suites: tuple = checks.SUITES
    q: int = 2
    p: int = 3
    n: int = 1
    prec: int = 8
    window: int = 6
    denominator: int = 6
    order_cap: int = 24
    out: str = ""
    format: str = "tsv"


_INT_KEYS = {"q", "p", "n", "prec", "window", "denominator", "order_cap"}
_STR_KEYS = {"out", "format"}


def parse_config(text):
    """Returns (SuiteConfig, warnings)."""
    values = {}
    warnings = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, _, rest = line.partition(" ")
        rest = rest.strip()
        if key == "suite":
            chosen = tuple(rest.split())
            unknown = [s for s in chosen if s not in checks.SUITES]
            if unknown:
                raise ConfigError(f"unknown suite {unknown[0]!r}", line=lineno)
            value = chosen
            key = "suites"
        elif key in _INT_KEYS:
            try:
                value = int(rest)
            except ValueError:
                raise ConfigError(f"{key} needs an integer", line=lineno)
        elif key in _STR_KEYS:
            value = rest
        else:
            raise ConfigError(f"unknown key {key!r}", line=lineno)
        if key in values:
            warnings.append(f"line {lineno}: duplicate key {key},"
                            " last value wins")
        values[key] = value
    config = replace(SuiteConfig(), **values)
    _validate(config)
    return config, warnings


def _validate(config):
    if not pgl2._is_prime_power(config.q):
        raise ConfigError(f"q={config.q} is not a prime power")
    if config.prec < 1 or config.window < 1 or config.denominator < 1:
        raise ConfigError("budgets must be positive")
    if config.format not in ("tsv", "text"):
        raise ConfigError(f"unknown format {config.format!r}")


def render_config(config):
    lines = [f"suite {' '.join(config.suites)}"]
    for f in fields(SuiteConfig):
        if f.name == "suites":
            continue
        value = getattr(config, f.name)
        if value != "":
            lines.append(f"{f.name} {value}")
    return "\n".join(lines) + "\n"


def _load_config(path):
    if path is None:
        return SuiteConfig(), []
    with open(path, encoding="utf-8") as handle:
        return parse_config(handle.read())


def _emit(rows, header, config, out_stream):
    lines = ["\t".join(header)]
    lines += ["\t".join(str(x) for x in row) for row in rows]
    text = "\n".join(lines) + "\n"
    if config.out:
        with open(config.out, "w", encoding="utf-8") as handle:
            handle.write(text)
    out_stream.write(text)


def _cmd_verify(args, config, out):
    suites = tuple(args.suite) if args.suite else config.suites
    rows = checks.run_checks(config, suites=suites)
    _emit(rows, ("check_id", "anchor", "status", "witness"), config, out)
    return 0 if all(r[2] == "PASS" for r in rows) else 1


def _cmd_weyl(args, config, out):
    datum = cartan_datum(args.type)
    J = tuple(int(x) for x in args.j.split()) if args.j else ()
    matrix = weyl.quotient_coxeter_matrix(datum, J, order_cap=config.order_cap)
    result = weyl.min_coset_generators(datum, J)
    rows = [("coxeter_row", i,
             " ".join("inf" if str(x) == "inf" else str(x) for x in row), "")
            for i, row in enumerate(matrix)]
    for k, w in result.generators:
        rows.append(("generator", k, weyl.word_str(w), "ok"))
    for k in result.failures:
        rows.append(("generator", k, "-", "no minimal normalizer"))
    _emit(rows, ("kind", "index", "value", "note"), config, out)
    return 0


def _cmd_cells(args, config, out):
    datum = cartan_datum(args.type)
    J = tuple(int(x) for x in args.j.split()) if args.j else ()
    grid = alcove.sample_grid(datum, J, config.denominator)
    rows = []
    for d in grid:
        cell = alcove.cell_of(d)
        t = alcove.p_J(datum, J, d)
        rows.append((
            " ".join(str(c[0]) for c in d.coords),
            "{" + ",".join(str(s) for s in cell.S) + "}",
            t.order,
            " ".join(str(v) for v in t.values),
        ))
    _emit(rows, ("point", "cell", "torus_order", "torus_coords"), config, out)
    return 0


def _cmd_reps(args, config, out):
    datum = cartan_datum(args.type)
    J = tuple(int(x) for x in args.j.split()) if args.j else ()
    geo = alcove.geometry(datum, J)
    rows = []
    for d in alcove.sample_grid(datum, J, config.denominator):
        cell = alcove.cell_of(d)
        letters = [k for k in geo.jcheck if k not in set(cell.S)]
        t = alcove.p_J(datum, J, d)
        for idx, rho in enumerate(reps.lift_characters(geo, letters)):
            rep = reps.build_irreducible(datum, J, cell.S, d, rho)
            norm = reps.character_norm(rep, t.order)
            rows.append((
                " ".join(str(c[0]) for c in d.coords),
                idx,
                rep.dimension,
                norm.render(),
            ))
    _emit(rows, ("point", "character", "dimension", "norm"), config, out)
    return 0


def _cmd_fourier(args, config, out):
    if args.group not in fourier.GROUPS:
        raise WeylkitError(f"unknown group {args.group!r};"
                           f" choices: {sorted(fourier.GROUPS)}")
    gamma = fourier.GROUPS[args.group]()
    pairs = fourier.m_set(gamma)
    matrix = fourier.pairing_matrix(gamma)
    rows = []
    for p, row in zip(pairs, matrix):
        rows.append((f"({p.x},{p.sigma})",
                     "\t".join(c.render() for c in row)))
    _emit(rows, ("pair", "row"), config, out)
    return 0


def _cmd_pgl2(args, config, out):
    q = args.q or config.q
    matrix = laurent.parse_matrix(args.matrix, q)
    rows = []
    if args.op in ("class", "all"):
        rows.append(("class", pgl2.iwahori_class(matrix)))
    if args.op in ("disc", "all") and pgl2.iwahori_class(matrix) == "I2":
        rows.append(("discriminant_valuation",
                     pgl2.discriminant_valuation(matrix)))
    if args.op in ("count", "all") and pgl2.iwahori_class(matrix) == "I2":
        rows.append(("fixed_point_count",
                     pgl2.fixed_point_count(matrix, prec=config.prec)))
    _emit(rows, ("result", "value"), config, out)
    return 0


def _cmd_witt(args, config, out):
    rows = []
    if args.enum:
        p = args.p or config.p
        n = config.n if args.n is None else args.n
        points, direct = lattices.enumerate_X_n(p, n)
        rows.append(("count", len(points)))
        rows.append(("direct_count", direct))
        for z in points:
            rows.append(("point", ";".join(
                ",".join(str(x) for x in row) for row in z.basis)))
    else:
        p = args.p or config.p
        m = args.m or 2
        rows.append(("oracle", "PASS" if witt.oracle_check(p, m) else "FAIL"))
        rows.append(("one", witt.witt_one(p, m).render()))
        rows.append(("p_image", witt.from_integer(p, p, m).render()))
    _emit(rows, ("result", "value"), config, out)
    return 0


def build_parser():
    parser = argparse.ArgumentParser(
        prog="weylkit", description="exact verification suites")
    parser.add_argument("--config", help="configuration file")
    sub = parser.add_subparsers(dest="command", required=True)

    p_verify = sub.add_parser("verify", help="run the check registry")
    p_verify.add_argument("--suite", action="append",
                          choices=checks.SUITES)
    p_verify.set_defaults(func=_cmd_verify)

    p_weyl = sub.add_parser("weyl", help="quotient Coxeter data")
    p_weyl.add_argument("--type", default="C2")
    p_weyl.add_argument("--j", default="")
    p_weyl.set_defaults(func=_cmd_weyl)

    p_cells = sub.add_parser("cells", help="grid points, cells, torus data")
    p_cells.add_argument("--type", default="A1")
    p_cells.add_argument("--j", default="")
    p_cells.set_defaults(func=_cmd_cells)

    p_reps = sub.add_parser("reps", help="induced modules over the grid")
    p_reps.add_argument("--type", default="A1")
    p_reps.add_argument("--j", default="")
    p_reps.set_defaults(func=_cmd_reps)

    p_fourier = sub.add_parser("fourier", help="pairing matrices")
    p_fourier.add_argument("--group", default="z2")
    p_fourier.set_defaults(func=_cmd_fourier)

    p_pgl2 = sub.add_parser("pgl2", help="Iwahori class and counts")
    p_pgl2.add_argument("--q", type=int)
    p_pgl2.add_argument("--matrix", default="0,1;e,0")
    p_pgl2.add_argument("--op", default="all",
                        choices=("class", "disc", "count", "all"))
    p_pgl2.set_defaults(func=_cmd_pgl2)

    p_witt = sub.add_parser("witt", help="Witt arithmetic and lattices")
    p_witt.add_argument("--p", type=int)
    p_witt.add_argument("--m", type=int)
    p_witt.add_argument("--n", type=int)
    p_witt.add_argument("--enum", action="store_true",
                        help="enumerate certified lattice points")
    p_witt.set_defaults(func=_cmd_witt)

    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        config, warnings = _load_config(args.config)
        for warning in warnings:
            print(f"warning: {warning}", file=sys.stderr)
        return args.func(args, config, sys.stdout)
    except ConfigError as exc:
        location = f" (line {exc.line})" if exc.line else ""
        print(f"usage error: {exc}{location}", file=sys.stderr)
        return 2
    except WeylkitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
