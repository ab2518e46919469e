"""Command line front end: census, tom, blowup, h2, chartab, slp.

Exit codes: 0 success, 1 usage (bad flags, inconsistent parameters),
2 data-format errors (unreadable or malformed files, declared q not
matching the data), 3 computation errors (bounds exceeded, non-integral
decompositions, misaligned generators).  All stdout output is assembled
into one string and written at the end, so identical inputs give
byte-identical output; --threads never changes what is printed.
"""

import argparse
import json
import sys
from dataclasses import dataclass
from pathlib import Path

from .census import ModuleAction, census_brute_force, census_from_tom
from .chartab import (
    field_of_definition_size,
    galois_partition_by_degree,
    rational_degree_census,
)
from .cohomology import GroupModulePair, h2_dimension, splits_implies
from .ffield import FFMatrix, blow_up
from .formats import (
    ParseError,
    parse_chartab,
    parse_ext_matrix,
    parse_fixed_vector,
    parse_meataxe,
    parse_slp,
    parse_tom,
    write_census_report,
    write_meataxe,
    write_tom,
)
from .permgroup import SUBGROUP_BOUND, Perm, PermGroup
from .slp import evaluate
from .tom import compute_tom, decompose_fixed_vector

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_FORMAT = 2
EXIT_COMPUTE = 3


class UsageError(Exception):
    pass


class DataError(Exception):
    """Well-formed files whose content contradicts the declared parameters."""


@dataclass(frozen=True)
class CliConfig:
    subcommand: str
    inputs: tuple = ()
    out: str | None = None
    p: int | None = None
    k: int | None = None
    q: int | None = None
    subgroup_bound: int = SUBGROUP_BOUND
    threads: int = 1
    verbose: bool = False

    def __post_init__(self):
        if self.p is not None and self.k is not None and self.q is not None:
            if self.q != self.p**self.k:
                raise UsageError(f"q = {self.q} does not equal p^k = {self.p}^{self.k}")
        if self.subgroup_bound < 1:
            raise UsageError("bounds must be positive")
        if self.threads < 1:
            raise UsageError("threads must be positive")


def _prime_power(q: int):
    if q < 2:
        raise UsageError(f"q must be a prime power, got {q}")
    p = 2
    while p * p <= q and q % p:
        p += 1
    if q % p:
        p = q
    n, k = q, 0
    while n % p == 0:
        n //= p
        k += 1
    if n != 1:
        raise UsageError(f"q = {q} is not a prime power")
    return p, k


def _note(cfg, msg):
    if cfg.verbose:
        print(msg, file=sys.stderr)


def _read(path: str) -> str:
    return Path(path).read_text()


def _matrix_file(path: str) -> FFMatrix:
    text = _read(path)
    if text.lstrip().startswith("{"):
        return parse_ext_matrix(text)
    obj = parse_meataxe(text)
    if not isinstance(obj, FFMatrix):
        raise DataError(f"{path}: expected a matrix file, found permutations")
    return obj


def _perm_group(path: str) -> PermGroup:
    obj = parse_meataxe(_read(path))
    if isinstance(obj, FFMatrix) or not obj:
        raise DataError(f"{path}: expected a mode 12 permutation file")
    return PermGroup(obj[0].degree, obj)


def _gen_matrices(pathlist: str, q: int):
    paths = pathlist.split(",")
    mats = [_matrix_file(p) for p in paths]
    for path, m in zip(paths, mats):
        if m.field.q != q:
            raise DataError(f"{path}: matrix is over GF({m.field.q}), declared q = {q}")
        if m.field != mats[0].field:
            raise DataError("generator matrices live over different fields")
    return mats


def _census_summary(report) -> str:
    return (
        f"regular_orbits {report.regular_orbits}\n"
        f"staborders {list(report.staborders)}\n"
    )


def _cmd_census(args) -> str:
    p, k = _prime_power(args.q)
    cfg = CliConfig(
        subcommand=f"census {args.mode}",
        out=getattr(args, "out", None),
        p=p,
        k=k,
        q=args.q,
        threads=args.threads,
        verbose=args.verbose,
    )
    mats = _gen_matrices(args.gens, args.q)
    action = ModuleAction(mats)
    _note(cfg, f"{len(mats)} generator matrices on GF({action.q})^{action.d}")
    if args.mode == "tom":
        tom = parse_tom(_read(args.tom))
        report = census_from_tom(tom, action, threads=cfg.threads)
    else:
        group = _perm_group(args.perm)
        _note(cfg, f"group of order {group.order()} on {group.degree} points")
        report = census_brute_force(group, action)
    if cfg.out:
        Path(cfg.out).write_text(write_census_report(report))
    return _census_summary(report)


def _cmd_tom(args) -> str:
    if args.mode == "compute":
        cfg = CliConfig(
            subcommand="tom compute",
            out=args.out,
            subgroup_bound=args.max_order,
            verbose=args.verbose,
        )
        group = _perm_group(args.perm)
        _note(cfg, f"group of order {group.order()} on {group.degree} points")
        tom = compute_tom(group, bound=cfg.subgroup_bound)
        Path(cfg.out).write_text(write_tom(tom))
        return f"{tom.n} classes\n"
    tom = parse_tom(_read(args.tom))
    fixed = parse_fixed_vector(_read(args.fixed))
    decomp = decompose_fixed_vector(tom, fixed)
    return f"decomp {list(decomp)}\n"


def _cmd_blowup(args) -> str:
    cfg = CliConfig(
        subcommand="blowup",
        p=args.p,
        k=args.k,
        q=args.p**args.k,
        verbose=args.verbose,
    )
    modulus = None
    if args.modulus is not None:
        if args.k == 1:
            raise UsageError("--modulus only applies to extension fields (k >= 2)")
        try:
            modulus = tuple(int(t) for t in args.modulus.split(","))
        except ValueError:
            raise UsageError("--modulus takes comma-separated integers") from None
    text = _read(args.infile)
    if text.lstrip().startswith("{"):
        data = json.loads(text)
        if modulus is not None:
            stored = data.get("modulus")
            if stored is not None and tuple(stored) != modulus:
                raise DataError(
                    f"{args.infile}: file modulus {stored} conflicts with --modulus"
                )
            data["modulus"] = list(modulus)
        m = parse_ext_matrix(json.dumps(data))
    else:
        m = parse_meataxe(text)
        if not isinstance(m, FFMatrix):
            raise DataError(f"{args.infile}: expected a matrix file")
    if m.field.p != cfg.p or m.field.k != cfg.k:
        raise DataError(
            f"{args.infile}: matrix is over GF({m.field.p}^{m.field.k}), "
            f"declared p = {cfg.p}, k = {cfg.k}"
        )
    _note(cfg, f"blowing up a {m.rows}x{m.cols} matrix over GF({m.field.q})")
    return write_meataxe(blow_up(m))


def _cmd_h2(args) -> str:
    cfg = CliConfig(
        subcommand="h2", p=args.p, k=1, q=args.p, verbose=args.verbose
    )
    group = _perm_group(args.perm)
    mats = _gen_matrices(args.mod, cfg.q)
    pair = GroupModulePair(group, mats)
    _note(cfg, f"group of order {group.order()}, module GF({pair.p})^{pair.d}")
    dim = h2_dimension(pair)
    return f"{dim}\n{splits_implies(pair, dim)}\n"


def _cmd_chartab(args) -> str:
    table = parse_chartab(_read(args.table))
    lines = [f"table {table.name} ({table.n_classes} classes)"]
    lines.append(f"rational degree census: {rational_degree_census(table)}")
    for degree, orbits in galois_partition_by_degree(table):
        shown = " ".join("(" + ", ".join(str(i) for i in o) + ")" for o in orbits)
        word = "class" if len(orbits) == 1 else "classes"
        lines.append(f"degree {degree}: {len(orbits)} Galois {word}: {shown}")
    if args.brauer is not None:
        sizes = [field_of_definition_size(row, args.brauer) for row in table.rows]
        lines.append(f"field of definition sizes (p={args.brauer}): {sizes}")
    return "\n".join(lines) + "\n"


def _cmd_slp(args) -> str:
    prog = parse_slp(_read(args.slp))
    inputs = []
    for path in args.inputs.split(","):
        text = _read(path)
        if text.lstrip().startswith("{"):
            inputs.append(parse_ext_matrix(text))
        else:
            obj = parse_meataxe(text)
            if isinstance(obj, FFMatrix):
                inputs.append(obj)
            else:
                inputs.extend(obj)
    results = evaluate(prog, inputs)
    if not results:
        return ""
    if isinstance(results[0], Perm):
        return write_meataxe(results)
    return "".join(write_meataxe(m) for m in results)


def _build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(
        prog="burnside",
        description="Orbit censuses over tables of marks, with the supporting "
        "finite-field, character and cohomology tools.",
    )
    sub = top.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--threads", type=int, default=1, help="worker count (output-neutral)")
        p.add_argument("--verbose", action="store_true", help="progress notes on stderr")

    census = sub.add_parser("census", help="orbit census of a dual module")
    csub = census.add_subparsers(dest="mode", required=True)
    ct = csub.add_parser("tom", help="census through a table of marks")
    ct.add_argument("--tom", required=True, help="tom file with straight-line programs")
    ct.add_argument("--gens", required=True, help="comma-separated generator matrix files")
    ct.add_argument("--q", required=True, type=int, help="field size of the module")
    ct.add_argument("--out", help="write the full census report here")
    common(ct)
    cb = csub.add_parser("brute", help="census by enumerating the dual space")
    cb.add_argument("--perm", required=True, help="mode 12 permutation generator file")
    cb.add_argument("--gens", required=True, help="comma-separated generator matrix files")
    cb.add_argument("--q", required=True, type=int, help="field size of the module")
    common(cb)

    tom = sub.add_parser("tom", help="tables of marks")
    tsub = tom.add_subparsers(dest="mode", required=True)
    tc = tsub.add_parser("compute", help="table of marks of a permutation group")
    tc.add_argument("--perm", required=True, help="mode 12 permutation generator file")
    tc.add_argument("--out", required=True, help="output tom file")
    tc.add_argument("--max-order", type=int, default=SUBGROUP_BOUND,
                    help="largest group order to accept")
    common(tc)
    td = tsub.add_parser("decompose", help="decompose a fixed-point vector")
    td.add_argument("--tom", required=True, help="tom file")
    td.add_argument("--fixed", required=True, help="fixed-vector JSON file")
    common(td)

    bl = sub.add_parser("blowup", help="rewrite a GF(p^k) matrix over GF(p)")
    bl.add_argument("--in", dest="infile", required=True, help="matrix file")
    bl.add_argument("--p", required=True, type=int)
    bl.add_argument("--k", required=True, type=int)
    bl.add_argument("--modulus", help="comma-separated modulus coefficients, ascending")
    common(bl)

    h2 = sub.add_parser("h2", help="second cohomology dimension")
    h2.add_argument("--perm", required=True, help="mode 12 permutation generator file")
    h2.add_argument("--mod", required=True, help="comma-separated module matrix files")
    h2.add_argument("--p", required=True, type=int)
    common(h2)

    ch = sub.add_parser("chartab", help="character table reports")
    chsub = ch.add_subparsers(dest="mode", required=True)
    cr = chsub.add_parser("report", help="rational degrees and Galois classes")
    cr.add_argument("--table", required=True, help="character table JSON file")
    cr.add_argument("--brauer", type=int, help="report GF(p^m) fields of definition")
    common(cr)

    slp = sub.add_parser("slp", help="straight-line programs")
    ssub = slp.add_subparsers(dest="mode", required=True)
    se = ssub.add_parser("eval", help="evaluate a program on inputs")
    se.add_argument("--slp", required=True, help="program file")
    se.add_argument("--inputs", required=True, help="comma-separated input files")
    common(se)
    return top


_DISPATCH = {
    "census": _cmd_census,
    "tom": _cmd_tom,
    "blowup": _cmd_blowup,
    "h2": _cmd_h2,
    "chartab": _cmd_chartab,
    "slp": _cmd_slp,
}


def main(argv=None) -> int:
    try:
        args = _build_parser().parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    try:
        out = _DISPATCH[args.command](args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (ParseError, DataError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FORMAT
    except (ValueError, ArithmeticError, RuntimeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_COMPUTE
    sys.stdout.write(out)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
