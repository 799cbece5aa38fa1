"""
Command-line front end: batch computation, verification and JSON export.

Every subcommand writes a JSON document to stdout (or `--out FILE`) and a
one-line human summary to stderr.  Output is deterministic: keys sorted,
element lists sorted lexicographically.  Exit codes: 0 success, 1 invalid
input, 2 verification failure.
"""

from __future__ import annotations

import argparse
import json
import sys

from .compositions import enumerate_maximal, hook_kind, is_maximal, split_even_odd
from .counting import dim_center, size_sigma_formula
from .cyclic_shift import equiv_classes, label_max_classes
from .hecke import t_leq_sigma
from .permutations import cycle_string
from .stair_classes import sigma_class, stair_form
from .verify import run_suites

__all__ = ["main"]


class _CliError(Exception):
    """Invalid input; maps to exit code 1."""


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _CliError(message)


def _parse_alpha(text: str) -> tuple[int, ...]:
    try:
        alpha = tuple(int(part) for part in text.split(",") if part.strip())
    except ValueError:
        raise _CliError(f"cannot parse composition {text!r}")
    if any(a < 1 for a in alpha):
        raise _CliError(f"composition parts must be positive: {text!r}")
    return alpha


def _emit(doc, args, summary: str) -> None:
    text = json.dumps(doc, sort_keys=True, indent=2)
    if getattr(args, "out", None):
        with open(args.out, "w") as fh:
            fh.write(text + "\n")
    else:
        sys.stdout.write(text + "\n")
    print(summary, file=sys.stderr)


def _class_entry(cls) -> dict:
    return {
        "alpha": list(cls.alpha) if cls.alpha is not None else None,
        "length": cls.common_length,
        "size": cls.size,
        "rep": list(cls.min_element),
        "elements": [list(w) for w in cls.sorted_elements()],
    }


def _cmd_classes(args) -> int:
    classes = equiv_classes(args.n, args.twist, args.stratum, force=args.force)
    if args.twist == "id" and args.stratum == "max":
        labelled = label_max_classes(args.n, force=args.force)
        by_min = {cls.min_element: cls for cls in labelled.values()}
        classes = [by_min[c.min_element] for c in classes]
    doc = {
        "n": args.n,
        "twist": args.twist,
        "stratum": args.stratum,
        "classes": [_class_entry(c) for c in classes],
    }
    _emit(doc, args,
          f"{len(classes)} classes of S_{args.n} "
          f"(twist={args.twist}, stratum={args.stratum})")
    return 0


def _cmd_sigma(args) -> int:
    alpha = _parse_alpha(args.alpha)
    if not is_maximal(alpha):
        raise _CliError(f"not a maximal composition: {alpha}")
    try:
        cls = sigma_class(alpha, force=args.force)
    except ValueError as exc:
        raise _CliError(str(exc))
    doc = _class_entry(cls)
    _emit(doc, args,
          f"class of {alpha}: {cls.size} elements of length {cls.common_length}")
    return 0


def _cmd_stairform(args) -> int:
    alpha = _parse_alpha(args.alpha)
    sf = stair_form(alpha)
    doc = {
        "alpha": list(alpha),
        "one_line": list(sf),
        "cycles": cycle_string(sf),
        "maximal": is_maximal(alpha),
    }
    _emit(doc, args, f"stair form of {alpha}: {cycle_string(sf)}")
    return 0


def _cmd_dim(args) -> int:
    value = dim_center(args.n)
    _emit(value, args, f"dim of the center at n={args.n}: {value}")
    return 0


def _cmd_count(args) -> int:
    alpha = _parse_alpha(args.alpha)
    if not is_maximal(alpha):
        raise _CliError(f"not a maximal composition: {alpha}")
    _, odds, _ = split_even_odd(alpha)
    formula = None
    if not odds or hook_kind(odds) != "not_hook":
        formula = size_sigma_formula(alpha)
    enumerated = None
    try:
        enumerated = sigma_class(alpha, force=args.force).size
    except ValueError:
        pass
    if formula is None and enumerated is None:
        raise _CliError(
            f"no closed formula for {alpha} (odd parts are not a hook) and "
            "enumeration exceeds the practical bound; use --force"
        )
    doc = {"alpha": list(alpha), "formula": formula, "enumerated": enumerated}
    _emit(doc, args,
          f"size of the class of {alpha}: formula={formula} "
          f"enumerated={enumerated}")
    return 0


def _basis_entry(alpha, n, force) -> dict:
    element = t_leq_sigma(alpha, n, force=force)
    terms = [{"w": list(w), "c": c} for w, c in sorted(element.terms.items())]
    return {
        "alpha": list(alpha),
        "ideal_size": element.support_size(),
        "terms": terms,
    }


def _cmd_basis(args) -> int:
    if args.alpha:
        alpha = _parse_alpha(args.alpha)
        if not is_maximal(alpha):
            raise _CliError(f"not a maximal composition: {alpha}")
        if sum(alpha) != args.n:
            raise _CliError(f"|{alpha}| != {args.n}")
        doc = _basis_entry(alpha, args.n, args.force)
        _emit(doc, args,
              f"basis element of {alpha}: {doc['ideal_size']} terms")
        return 0
    alphas = enumerate_maximal(args.n)
    doc = {
        "n": args.n,
        "dim": dim_center(args.n),
        "elements": [_basis_entry(a, args.n, args.force) for a in alphas],
    }
    _emit(doc, args, f"center basis at n={args.n}: {doc['dim']} elements")
    return 0


def _cmd_verify(args) -> int:
    report = run_suites(args.n, args.suite, force=args.force)
    _emit(report, args,
          f"verification at n={args.n} ({args.suite}): "
          + ("PASS" if report["ok"] else "FAIL"))
    return 0 if report["ok"] else 2


def _build_parser() -> _Parser:
    parser = _Parser(prog="heckezero", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, fn, **kwargs):
        p = sub.add_parser(name, **kwargs)
        p.set_defaults(fn=fn)
        p.add_argument("--out", help="write the JSON document to this file")
        p.add_argument("--force", action="store_true",
                       help="lift the practical degree bound on brute force")
        return p

    p = add("classes", _cmd_classes, help="equivalence-class catalog of S_n")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--twist", choices=("id", "nu"), default="id")
    p.add_argument("--stratum", choices=("max", "min", "all"), default="max")

    p = add("sigma", _cmd_sigma, help="the class labelled by a composition")
    p.add_argument("--alpha", required=True, help='comma syntax, e.g. "3,1,1"')
    p.add_argument("--format", choices=("json",), default="json")

    p = add("stairform", _cmd_stairform, help="stair form of a composition")
    p.add_argument("--alpha", required=True)

    p = add("dim", _cmd_dim, help="dimension of the center")
    p.add_argument("--n", type=int, required=True)

    p = add("count", _cmd_count, help="cardinality of a labelled class")
    p.add_argument("--alpha", required=True)

    p = add("basis", _cmd_basis, help="central basis elements as term lists")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--alpha", default=None)

    p = add("verify", _cmd_verify, help="cross-check suites at one degree")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--suite", choices=("all", "classes", "hooks", "iprod",
                                       "center"), default="all")
    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        return args.fn(args)
    except _CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
