"""Command-line interface.

Exit codes: 0 success, 1 bad input or undefined operation, 2 a verification
check failed.  Inputs are JSON complexes (``{"state", "facets", "labels"?}``)
or ``catalog:NAME``.
"""

from __future__ import annotations

import argparse
import itertools
import json
import sys

from . import catalog
from .binary_ops import join, join_origin, product, product_origin
from .complex import ComplexError, SimplicialPair, VOID, loads, simplex, sorted_facets, to_dict
from .homology import as_coeff, homology
from .kunneth import check_join_kunneth, check_product_kunneth, splitting_check, uct_check
from .local import LocalHomologyMismatch, local_homology
from .manifolds import BoundaryNotClosed, boundary, check_manifold_theorem, classify
from .ring_properties import GorensteinRouteMismatch, classify_ring, gorenstein_join_law, gorenstein_product_law
from .stanley_reisner import ideal

EXIT_OK, EXIT_INPUT, EXIT_VERIFY = 0, 1, 2

ORACLES = ("kunneth-join", "kunneth-product", "splitting", "uct", "boundary-formula",
           "gorenstein-join", "gorenstein-product")

DEFAULT_VERIFY_SET = ("irrelevant", "point", "two_points", "sphere1", "ball1", "ball2", "moebius")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def read_complex(source: str):
    if source.startswith("catalog:"):
        return catalog.get(source.split(":", 1)[1])
    try:
        with open(source) as fh:
            text = fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read {source}: {exc.strerror}") from None
    try:
        return loads(text)
    except json.JSONDecodeError as exc:
        raise UsageError(f"malformed JSON in {source}: {exc}") from None


def complex_json(cx) -> dict:
    return to_dict(cx)


def _emit(args, text: str):
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text if text.endswith("\n") else text + "\n")
    else:
        print(text)


def _dump(obj) -> str:
    return json.dumps(obj, sort_keys=True)


# verbs

def cmd_homology(args) -> int:
    cx = read_complex(args.inp)
    pair = SimplicialPair(cx, read_complex(args.sub) if args.sub else VOID)
    coeff = as_coeff(args.coeff)
    h = homology(pair, coeff)
    _emit(args, _dump(h.to_json()) if args.format == "json" else h.format(coeff))
    return EXIT_OK


def _report_dict(r) -> dict:
    return {
        "coeff": r.coeff, "n": r.n, "flags": r.flags(),
        "boundary": None if r.boundary is None else complex_json(r.boundary),
        "components": [sorted_facets(c) for c in r.components],
    }


def cmd_classify(args) -> int:
    r = classify(read_complex(args.inp), args.coeff)
    d = _report_dict(r)
    if args.format == "json":
        _emit(args, _dump(d))
    else:
        lines = [f"n = {d['n']}  coeff = {d['coeff']}"]
        lines += [f"{k}: {v}" for k, v in d["flags"].items()]
        lines.append(f"boundary: {None if r.boundary is None else sorted_facets(r.boundary)}"
                     + ("" if r.boundary is None else f" ({r.boundary.state.value})"))
        lines.append(f"boundary components: {len(r.components)}")
        _emit(args, "\n".join(lines))
    return EXIT_OK


def cmd_boundary(args) -> int:
    bd = boundary(read_complex(args.inp), args.coeff)
    _emit(args, _dump(complex_json(bd)))
    return EXIT_OK


def cmd_ring_class(args) -> int:
    r = classify_ring(read_complex(args.inp), args.coeff)
    d = {"coeff": r.coeff, "CM": r.CM, "Bbm": r.Bbm, "twoCM": r.twoCM, "Gorenstein": r.Gorenstein,
         "cone_points": r.cone_points, "core": complex_json(r.core),
         "witnesses": {k: [list(v[0]), v[1]] for k, v in r.witnesses.items()}, "routes": r.routes}
    if args.format == "json":
        _emit(args, _dump(d))
    else:
        lines = [f"{k}: {d[k]}" for k in ("coeff", "CM", "Bbm", "twoCM", "Gorenstein", "cone_points")]
        lines += [f"{k} fails at face {v[0]} degree {v[1]}" for k, v in d["witnesses"].items()]
        _emit(args, "\n".join(lines))
    return EXIT_OK


def _parse_simplex(text: str) -> tuple:
    text = text.strip()
    if not text:
        return ()
    try:
        return simplex(int(t) for t in text.split(","))
    except ValueError:
        raise UsageError(f"cannot parse simplex {text!r}; expected e.g. 1,2") from None


def cmd_local(args) -> int:
    coeff = as_coeff(args.coeff)
    r = local_homology(read_complex(args.inp), _parse_simplex(args.simplex), coeff)
    if args.format == "json":
        _emit(args, _dump({"simplex": list(r.simplex), "via_link": r.via_link.to_json(),
                           "via_cost": r.via_cost.to_json()}))
    else:
        _emit(args, f"simplex {list(r.simplex)}\n"
                    f"via link:       {r.via_link.format(coeff)}\n"
                    f"via contrastar: {r.via_cost.format(coeff)}")
    return EXIT_OK


def _binary(args, op, origin) -> int:
    a, b = read_complex(args.a), read_complex(args.b)
    _emit(args, _dump(complex_json(op(a, b))))
    if args.origin:
        with open(args.origin, "w") as fh:
            fh.write(_dump({str(k): list(v) for k, v in sorted(origin(a, b).items())}) + "\n")
    return EXIT_OK


def cmd_join(args) -> int:
    return _binary(args, join, join_origin)


def cmd_product(args) -> int:
    return _binary(args, product, product_origin)


def cmd_ideal(args) -> int:
    cx = read_complex(args.inp)
    universe = None
    if args.universe:
        try:
            universe = [int(t.strip().lstrip("v")) for t in args.universe.split(",") if t.strip()]
        except ValueError:
            raise UsageError(f"cannot parse universe {args.universe!r}") from None
    ide = ideal(cx, universe)
    if args.cas:
        _emit(args, ide.cas_block())
    elif args.format == "json":
        _emit(args, _dump(ide.to_json()))
    else:
        _emit(args, ide.format())
    return EXIT_OK


def _verify_one(name, a, b, args):
    coeff = as_coeff(args.coeff)
    if name == "kunneth-join":
        r = check_join_kunneth(a, b, coeff)
        return r.ok, [f"degree {q}: predicted {p}, actual {x}" for q, p, x in r.witnesses]
    if name == "kunneth-product":
        r = check_product_kunneth(a, b, coeff)
        return r.ok, [f"degree {q}: predicted {p}, actual {x}" for q, p, x in r.witnesses]
    if name == "splitting":
        r = splitting_check(a, b, coeff)
        if not r.applicable:
            return None, ["not applicable: unit pair"]
        return r.ok, [f"degree {q}: split {p}, product {x}" for q, p, x in r.witnesses]
    if name == "uct":
        if coeff.kind != "F":
            raise UsageError("uct needs --coeff F<p>")
        r = uct_check(a, coeff.p)
        return r.ok, [f"degree {q}: predicted {p}, actual {x}" for q, p, x in r.witnesses]
    if name == "boundary-formula":
        field = coeff if coeff.is_field else as_coeff("F2")
        r = check_manifold_theorem(a, b, args.op, args.kind, field)
        if not r.applicable:
            return None, ["not applicable: excluded factor"]
        bad = [k for k, v in r.clauses.items() if v is not None and v[0] != v[1]]
        return r.ok, [f"clause {k} differs" for k in bad]
    if name == "gorenstein-join":
        lhs, rhs = gorenstein_join_law(a, b, coeff)
        return lhs == rhs, [] if lhs == rhs else [f"join Gorenstein {lhs}, factors {rhs}"]
    if name == "gorenstein-product":
        res = gorenstein_product_law(a, b, coeff)
        if res is None:
            return None, ["not applicable: a factor has dimension < 1"]
        lhs, rhs = res
        return lhs == rhs, [] if lhs == rhs else [f"product Gorenstein {lhs}, predicted {rhs}"]
    raise UsageError(f"unknown oracle {name!r}")


def cmd_verify(args) -> int:
    if args.a:
        lefts = [(args.a, read_complex(args.a))]
        rights = [(args.b, read_complex(args.b))] if args.b else lefts
    else:
        lefts = rights = [(n, catalog.get(n)) for n in DEFAULT_VERIFY_SET]
    failures = 0
    lines = []
    for (na, a), (nb, b) in itertools.product(lefts, rights):
        ok, notes = _verify_one(args.oracle, a, b, args)
        status = "n/a" if ok is None else ("pass" if ok else "FAIL")
        failures += ok is False
        lines.append(f"{args.oracle} {na} {nb}: {status}" + "".join(f"\n  {n}" for n in notes if ok is False))
        if args.oracle == "uct":
            break
    lines.append("pass" if not failures else f"{failures} failure(s)")
    _emit(args, "\n".join(lines))
    return EXIT_VERIFY if failures else EXIT_OK


def cmd_catalog(args) -> int:
    if not args.name:
        _emit(args, "\n".join(catalog.names()))
    else:
        _emit(args, _dump(complex_json(catalog.get(args.name))))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="augmental", description="Augmented simplicial complexes and their homology.")
    sub = p.add_subparsers(dest="verb", required=True, parser_class=_Parser)

    def common(sp, coeff=True):
        sp.add_argument("--out", help="write output here instead of stdout")
        sp.add_argument("--format", choices=("text", "json"), default="text")
        if coeff:
            sp.add_argument("--coeff", default="Z", help="Z, Q or F<p> for a prime p")
        return sp

    sp = common(sub.add_parser("homology"))
    sp.add_argument("--in", dest="inp", required=True)
    sp.add_argument("--sub", help="subcomplex for relative homology")
    sp.set_defaults(func=cmd_homology)

    for verb, fn in (("classify", cmd_classify), ("boundary", cmd_boundary), ("ring-class", cmd_ring_class)):
        sp = common(sub.add_parser(verb))
        sp.add_argument("--in", dest="inp", required=True)
        sp.set_defaults(func=fn)

    sp = common(sub.add_parser("local"))
    sp.add_argument("--in", dest="inp", required=True)
    sp.add_argument("--simplex", default="", help="comma separated vertex ids; empty for ()")
    sp.set_defaults(func=cmd_local)

    for verb, fn in (("join", cmd_join), ("product", cmd_product)):
        sp = common(sub.add_parser(verb), coeff=False)
        sp.add_argument("-a", "--a", required=True)
        sp.add_argument("-b", "--b", required=True)
        sp.add_argument("--origin", help="write the vertex origin map here")
        sp.set_defaults(func=fn)

    sp = common(sub.add_parser("ideal"), coeff=False)
    sp.add_argument("--in", dest="inp", required=True)
    sp.add_argument("--universe", help="comma separated vertex ids, e.g. 1,2,3")
    sp.add_argument("--cas", action="store_true", help="emit a ring declaration and ideal assignment")
    sp.set_defaults(func=cmd_ideal)

    sp = common(sub.add_parser("verify"))
    sp.add_argument("oracle", choices=ORACLES)
    sp.add_argument("-a", "--a")
    sp.add_argument("-b", "--b")
    sp.add_argument("--op", choices=("join", "product"), default="join")
    sp.add_argument("--kind", choices=("pseudo", "quasi", "hm"), default="hm")
    sp.set_defaults(func=cmd_verify)

    sp = common(sub.add_parser("catalog"), coeff=False)
    sp.add_argument("name", nargs="?")
    sp.set_defaults(func=cmd_catalog)
    return p


def run(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (LocalHomologyMismatch, GorensteinRouteMismatch) as exc:
        print(f"internal consistency failure: {exc}", file=sys.stderr)
        return EXIT_VERIFY
    except BoundaryNotClosed as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (ComplexError, ValueError, KeyError, TypeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
