"""Command-line surface: products, coproducts, basis changes, pairings,
antipodes, posets (text/JSON/DOT/figure), count tables and the
verification suites.

Outputs are byte-stable for fixed inputs; verification progress goes to
stderr so stdout stays golden-file clean.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import counting, ncqsym, ncsym, posets
from . import setcomp as sc
from . import setpart as sp
from .linalg import (Element, element_from_json, element_to_json, pairing,
                     PARTITION_BASES, COMPOSITION_BASES)
from .setcomp import SetComposition, SetCompositionError
from .setpart import SetPartition, SetPartitionError


class UsageError(Exception):
    pass


def _parse_index(basis, text):
    try:
        if basis in PARTITION_BASES:
            return SetPartition.parse(text)
        if basis in COMPOSITION_BASES:
            return SetComposition.parse(text)
    except (SetPartitionError, SetCompositionError) as exc:
        raise UsageError(f"bad index {text!r}: {exc}") from None
    raise UsageError(f"unknown basis {basis!r}")


def _render_element(x, fmt):
    if fmt == "json":
        return element_to_json(x)
    if fmt == "text":
        return str(x)
    raise UsageError(f"format {fmt!r} not supported for elements")


def cmd_mul(args):
    basis = args.basis
    x = Element.monomial(basis, _parse_index(basis, args.idx1))
    y = Element.monomial(basis, _parse_index(basis, args.idx2))
    module = ncsym if basis in PARTITION_BASES else ncqsym
    print(_render_element(module.mul(x, y), args.format))
    return 0


def cmd_comul(args):
    basis = args.basis
    x = Element.monomial(basis, _parse_index(basis, args.idx))
    module = ncsym if basis in PARTITION_BASES else ncqsym
    out = module.comul(x)
    if args.format == "json":
        terms = {f"{a} (x) {b}": c for (a, b), c in out.terms.items()}
        print(json.dumps({"bases": list(out.bases),
                          "terms": {k: terms[k] for k in sorted(terms)}}))
    else:
        print(str(out))
    return 0


def cmd_convert(args):
    x = element_from_json(args.element)
    src, dst = x.basis, args.to
    if src in PARTITION_BASES and dst in PARTITION_BASES:
        out = ncsym.to_basis(x, dst)
    elif src in COMPOSITION_BASES and dst in COMPOSITION_BASES:
        out = ncqsym.to_basis(x, dst)
    else:
        raise UsageError(f"no conversion from {src} to {dst}")
    print(_render_element(out, args.format))
    return 0


def cmd_pair(args):
    x = element_from_json(args.elt1)
    y = element_from_json(args.elt2)
    if x.basis in PARTITION_BASES:
        x = ncsym.to_basis(x, "m") if x.basis != "m" else x
        y = ncsym.to_basis(y, "w") if y.basis != "w" else y
    else:
        x = ncqsym.to_basis(x, "M") if x.basis != "M" else x
        y = ncqsym.to_basis(y, "W") if y.basis != "W" else y
    print(pairing(x, y))
    return 0


def cmd_antipode(args):
    basis = args.basis
    x = Element.monomial(basis, _parse_index(basis, args.idx))
    module = ncsym if basis in PARTITION_BASES else ncqsym
    print(_render_element(module.antipode(x), args.format))
    return 0


def _build_poset(order, arg):
    if order == "star-partitions":
        n = int(arg)
        return posets.build(sp.partitions_of(n), sp.star_leq)
    if order == "refinement-partitions":
        n = int(arg)
        return posets.build(sp.partitions_of(n), sp.leq_refinement)
    if order == "star-compositions":
        n = int(arg)
        return posets.build(sc.compositions_of(n), sc.star_leq)
    if order == "refinement-compositions":
        n = int(arg)
        return posets.build(sc.compositions_of(n), sc.leq_refinement)
    if order == "sharp":
        alpha = tuple(int(t) for t in arg.split(","))
        n = sum(alpha)
        return posets.build(sc.alpha_class(n, alpha), sc.sharp_leq)
    raise UsageError(f"unknown order {order!r}")


def cmd_poset(args):
    try:
        p = _build_poset(args.order, args.arg)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if args.figure:
        p.render_figure(args.figure)
    if args.dot:
        sys.stdout.write(p.dot_export())
    else:
        print(p.to_json())
    return 0


_TABLES = {
    "bell": lambda n: [("n", "bell")] + [(i, counting.bell(i)) for i in range(n + 1)],
    "stirling": lambda n: [("n", "k", "stirling2")] + [
        (i, k, counting.stirling2(i, k))
        for i in range(1, n + 1) for k in range(1, i + 1)],
    "atomic": lambda n: [("k", "i", "count")] + [
        (k, i, c) for k, row in counting.atomic_counts(n).items()
        for i, c in sorted(row.items())],
    "comp-atomic": lambda n: [("k", "i", "count")] + [
        (k, i, c) for k, row in counting.comp_atomic_counts(n).items()
        for i, c in sorted(row.items())],
    "lyndon": lambda n: [("k", "i", "count")] + [
        (k, i, c) for k, row in counting.lyndon_counts(n).items()
        for i, c in sorted(row.items())],
}


def cmd_count(args):
    name = args.table
    n = args.n_max
    if name in _TABLES:
        rows = _TABLES[name](n)
        for row in rows:
            print("\t".join(str(x) for x in row))
        if args.figure:
            _table_figure(rows, name, args.figure)
        return 0
    if name.startswith("identity-"):
        which = name[len("identity-"):]
        report = counting.series_identity_check(
            which, trunc_part=n, trunc_comp=min(n, 7), trunc_sharp=min(n, 5))
        print(json.dumps(report))
        return 0 if report["status"] == "pass" else 1
    if name == "identities":
        bad = 0
        for which in ("i", "ii", "iii", "iv", "v", "vi"):
            report = counting.series_identity_check(
                which, trunc_part=n, trunc_comp=min(n, 7), trunc_sharp=min(n, 5))
            print(json.dumps(report))
            bad += report["status"] != "pass"
        return 1 if bad else 0
    raise UsageError(f"unknown table {name!r}")


def _table_figure(rows, name, path):
    import matplotlib
    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    header, data = rows[0], rows[1:]
    xs = list(range(len(data)))
    ys = [row[-1] for row in data]
    labels = [",".join(str(x) for x in row[:-1]) for row in data]
    fig, ax = plt.subplots(figsize=(max(4, 0.5 * len(data)), 3.5))
    ax.bar(xs, ys, color="0.4")
    ax.set_xticks(xs, labels, rotation=90, fontsize=7)
    ax.set_yscale("log" if max(ys, default=1) > 1000 else "linear")
    ax.set_title(name)
    ax.set_ylabel(header[-1])
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def _progress(msg):
    print(msg, file=sys.stderr, flush=True)


def _run_checks(checks):
    bad = 0
    for c in checks:
        print(json.dumps(c))
        bad += c["status"] != "pass"
    return 1 if bad else 0


def cmd_verify(args):
    from . import verify as vf

    suites = {
        "hopf": vf.verify_hopf,
        "duality": vf.verify_duality,
        "mult": vf.verify_multiplicativity,
        "oracle": vf.verify_oracle,
        "free": lambda n: ncsym.verify_free(n),
        "cofree": lambda n: ncsym.verify_cofree(n),
        "free-cofree-qsym": lambda n: ncqsym.verify_free_cofree(n),
        "posets": vf.verify_posets,
        "series": vf.verify_series,
        "zeta": vf.verify_zeta,
    }
    if args.suite == "all":
        checks = []
        for name, fn in suites.items():
            _progress(f"suite {name} ...")
            checks.extend(fn(args.n_max))
        return _run_checks(checks)
    if args.suite not in suites:
        raise UsageError(f"unknown suite {args.suite!r}")
    _progress(f"suite {args.suite} ...")
    return _run_checks(suites[args.suite](args.n_max))


def build_parser():
    parser = argparse.ArgumentParser(
        prog="nchopf",
        description="Exact Hopf-algebra computations over set partitions "
                    "and set compositions.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_format(p):
        p.add_argument("--format", choices=("text", "json"), default="text")

    p = sub.add_parser("mul", help="product of two basis elements")
    p.add_argument("basis")
    p.add_argument("idx1")
    p.add_argument("idx2")
    add_format(p)
    p.set_defaults(fn=cmd_mul)

    p = sub.add_parser("comul", help="coproduct of a basis element")
    p.add_argument("basis")
    p.add_argument("idx")
    add_format(p)
    p.set_defaults(fn=cmd_comul)

    p = sub.add_parser("convert", help="basis change of a JSON element")
    p.add_argument("to")
    p.add_argument("element", help="element JSON")
    add_format(p)
    p.set_defaults(fn=cmd_convert)

    p = sub.add_parser("pair", help="duality pairing of two JSON elements")
    p.add_argument("elt1")
    p.add_argument("elt2")
    p.set_defaults(fn=cmd_pair)

    p = sub.add_parser("antipode", help="antipode of a basis element")
    p.add_argument("basis")
    p.add_argument("idx")
    add_format(p)
    p.set_defaults(fn=cmd_antipode)

    p = sub.add_parser("poset", help="build a poset, export JSON/DOT/figure")
    p.add_argument("order", choices=("star-partitions", "refinement-partitions",
                                     "star-compositions",
                                     "refinement-compositions", "sharp"))
    p.add_argument("arg", help="size n, or a comma-separated part-size list")
    p.add_argument("--dot", action="store_true")
    p.add_argument("--figure", metavar="PATH")
    p.set_defaults(fn=cmd_poset)

    p = sub.add_parser("count", help="count tables (TSV) and identity checks")
    p.add_argument("table")
    p.add_argument("n_max", type=int)
    p.add_argument("--figure", metavar="PATH")
    p.set_defaults(fn=cmd_count)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("suite")
    p.add_argument("n_max", type=int)
    p.set_defaults(fn=cmd_verify)

    return parser


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if exc.code else 0
    try:
        return args.fn(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (SetPartitionError, SetCompositionError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
