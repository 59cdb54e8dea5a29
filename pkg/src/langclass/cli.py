"""Command-line front end.

Every verb prints exactly one JSON document (sorted keys, rationals as
strings) and exits 0. Library errors print ``{code, message, position?}`` and
exit 1; malformed command lines exit 2. Simple-root indices on the command
line and in printed words are 1-based.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Callable, Sequence

from . import jsonio
from .chamber import a_star_space, dominant_conjugate, is_regular, maximal_levi_of
from .errors import InputFormatError, LanglandsError
from .fuzz import roundtrip
from .grammar import format_lparam, parse_lparam
from .lparam import (
    MODES,
    GLnLParameter,
    assemble,
    centralizer_shape,
    classify,
    component_groups_agree,
    equivalent,
    is_relevant,
    is_tempered,
    new_lparameter,
    twist,
    z_of,
    z_star_of,
)
from .root_datum import cartan_matrix, dual, gln_datum
from .weyl import GaloisAction, generate_weyl, relative_weyl


class UsageError(Exception):
    pass


def _read_json(arg: str):
    """A JSON document given inline or as a path to a file."""
    text = arg
    if os.path.isfile(arg):
        with open(arg, encoding="utf-8") as fh:
            text = fh.read()
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputFormatError(f"invalid JSON: {exc.msg}", (exc.lineno, exc.colno)) from None


def _parameter(args, text: str) -> GLnLParameter:
    if args.json:
        return jsonio.lparam_from_json(_read_json(text))
    segs = parse_lparam(text)
    n = args.n if args.n is not None else sum(s.dim for s in segs)
    return new_lparameter(n, args.d, segs)


def _levi(text: str) -> list[int]:
    """``"1,3"`` to 0-based indices ``[0, 2]``; the empty string is the empty set."""
    try:
        values = [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise UsageError(f"--levi expects comma-separated integers, got {text!r}") from None
    return [v - 1 for v in values]


def _datum(args):
    if args.datum is not None:
        try:
            with open(args.datum, encoding="utf-8") as fh:
                doc = json.load(fh)
        except OSError as exc:
            raise UsageError(f"cannot read {args.datum}: {exc.strerror}") from None
        except json.JSONDecodeError as exc:
            raise InputFormatError(f"invalid JSON: {exc.msg}", (exc.lineno, exc.colno)) from None
        return jsonio.datum_from_json(doc)
    if args.n is None:
        raise UsageError("give --datum FILE or --n N")
    datum = gln_datum(args.n)
    return datum, GaloisAction.trivial(datum)


# --- parameter verbs -------------------------------------------------------------


def cmd_classify(args):
    return jsonio.triple_to_json(classify(_parameter(args, args.expr), args.mode))


def cmd_assemble(args):
    phi = assemble(jsonio.triple_from_json(_read_json(args.triple)), args.mode)
    out = jsonio.lparam_to_json(phi)
    out["expr"] = format_lparam(phi.segments)
    return out


def cmd_tempered(args):
    return {"tempered": is_tempered(_parameter(args, args.expr))}


def cmd_z(args):
    return {"exponents": jsonio.vector_to_json(z_of(_parameter(args, args.expr)).exponents)}


def cmd_zstar(args):
    return {"exponents": jsonio.vector_to_json(z_star_of(_parameter(args, args.expr)).exponents)}


def cmd_twist(args):
    beta = jsonio.rational_from_json(args.beta)
    phi = twist(_parameter(args, args.expr), beta)
    out = jsonio.lparam_to_json(phi)
    out["expr"] = format_lparam(phi.segments)
    return out


def cmd_relevant(args):
    return {"relevant": is_relevant(_parameter(args, args.expr))}


def cmd_equiv(args):
    return {"equivalent": equivalent(_parameter(args, args.first), _parameter(args, args.second))}


def cmd_centralizer(args):
    shape = centralizer_shape(_parameter(args, args.expr))
    return {"component_group_order": shape.component_group_order, "gl_factors": list(shape.gl_factors)}


def cmd_component_groups(args):
    return {"holds": component_groups_agree(_parameter(args, args.expr))}


# --- datum, Weyl and chamber verbs ------------------------------------------------


def cmd_datum(args):
    datum, action = _datum(args)
    if args.action == "validate":
        return {"rank": datum.rank, "semisimple_rank": datum.semisimple_rank, "valid": True}
    if args.action == "dual":
        return jsonio.datum_to_json(dual(datum), action.dual())
    return {"cartan": jsonio.matrix_to_json(cartan_matrix(datum))}


def cmd_weyl(args):
    datum, action = _datum(args)
    W = generate_weyl(datum)
    if args.action == "order":
        return {"order": len(W)}
    if args.action == "elements":
        return {"elements": [jsonio.element_to_json(w) for w in W.elements], "order": len(W)}
    if args.levi is None:
        raise UsageError("weyl relative needs --levi")
    rel = relative_weyl(W, _levi(args.levi), action)
    return {
        "elements": [jsonio.element_to_json(w) for w in rel.elements],
        "lattice": jsonio.matrix_to_json(rel.lattice.basis),
        "levi": sorted(i + 1 for i in rel.base_I0),
        "order": len(rel),
        "restricted": [jsonio.matrix_to_json(m) for m in rel.restricted],
    }


def cmd_chamber(args):
    if args.levi is None or args.nu is None:
        raise UsageError(f"chamber {args.action} needs --levi and --nu")
    datum, action = _datum(args)
    I = _levi(args.levi)
    nu = jsonio.vector_from_json(_read_json(args.nu))
    W = generate_weyl(datum)
    space0 = a_star_space(datum, I, W=W)
    # projected root coordinates depend on the chosen invariant form, so report it
    out = {"gram": [jsonio.vector_to_json(row) for row in space0.gram]}
    if args.action == "regular":
        out["regular"] = is_regular(nu, space0)
    elif args.action == "maxlevi":
        out["levi"] = sorted(i + 1 for i in maximal_levi_of(nu, space0, action))
    else:
        w, point = dominant_conjugate(nu, relative_weyl(W, I, action), space0)
        out.update(element=jsonio.element_to_json(w), point=jsonio.vector_to_json(point))
    return out


def cmd_roundtrip(args):
    if args.fuzz < 0:
        raise UsageError("--fuzz must be non-negative")
    report = roundtrip(args.fuzz, args.seed, args.nmax, args.d)
    return {"cases": report.cases, "failures": report.failures, "ok": report.ok, "seed": report.seed}


# --- argument parsing ------------------------------------------------------------


def _common(d_default: int | None = 1) -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--n", type=int, help="group rank n (default: sum of segment dimensions)")
    p.add_argument("--d", type=int, default=d_default, help="division algebra index d")
    p.add_argument("--datum", metavar="FILE", help="root datum JSON file")
    p.add_argument("--mode", choices=MODES, default="quotient")
    p.add_argument("--json", action="store_true", help="read parameters as JSON, inline or from a file")
    p.add_argument("--seed", type=int, default=0)
    return p


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="langclass", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="verb", required=True)
    common = _common()

    def verb(name: str, func: Callable, help: str, positional: Sequence[str] = ("expr",), parent=common):
        p = sub.add_parser(name, parents=[parent], help=help)
        for pos in positional:
            p.add_argument(pos)
        p.set_defaults(func=func)
        return p

    verb("classify", cmd_classify, "standard triple of a parameter")
    verb("assemble", cmd_assemble, "parameter of a standard triple (JSON)", ("triple",))
    verb("tempered", cmd_tempered, "is the parameter tempered")
    verb("z", cmd_z, "exponents of z(phi)")
    verb("zstar", cmd_zstar, "exponents of z_*(phi)")
    verb("twist", cmd_twist, "twist by a central exponent").add_argument("--beta", required=True)
    verb("relevant", cmd_relevant, "relevance for GL_m(D)")
    verb("equiv", cmd_equiv, "conjugacy of two parameters", ("first", "second"))
    verb("centralizer", cmd_centralizer, "shape of the centralizer of the image")
    verb("check71", cmd_component_groups, "component groups of phi and its tempered Levi part agree")

    verb("datum", cmd_datum, "validate, dualize or print the Cartan matrix of a datum", ()) \
        .add_argument("action", choices=("validate", "dual", "cartan"))
    p = verb("weyl", cmd_weyl, "Weyl group order, elements, or relative Weyl group", ())
    p.add_argument("action", choices=("order", "elements", "relative"))
    p.add_argument("--levi", help="1-based simple roots, comma separated")
    p = verb("chamber", cmd_chamber, "dominant conjugate, maximal Levi, regularity", ())
    p.add_argument("action", choices=("dominant", "maxlevi", "regular"))
    p.add_argument("--levi", help="1-based simple roots, comma separated")
    p.add_argument("--nu", help="JSON array of rationals")

    p = verb("roundtrip", cmd_roundtrip, "fuzzed classification round trips", (), _common(None))
    p.add_argument("--fuzz", type=int, default=1000)
    p.add_argument("--nmax", type=int, default=12)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        result = args.func(args)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"langclass: error: {exc}", file=sys.stderr)
        return 2
    except LanglandsError as exc:
        sys.stdout.write(jsonio.dumps(exc.to_json()))
        return 1
    sys.stdout.write(jsonio.dumps(result))
    return 0


if __name__ == "__main__":
    sys.exit(main())
