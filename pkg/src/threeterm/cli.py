"""Command line front end.

Exit codes: 0 success, 2 validation error, 3 precision error, 64 usage error.
JSON goes to stdout, diagnostics to stderr.
"""

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor

from .classify_galois import (ClassificationRequest, DEFAULT_CAP, count_standard_forms,
                              enumerate_standard_forms, is_galois, splitting_field)
from .eisenstein import indices, l_equiv, phi_LK, ram_break, rho
from .errors import PrecisionError, ValidationError
from .ext_arith import minpoly_uniformizer
from .local_field import ext_str, k_make, teich_lift
from .reduce import reduce_to_standard
from .serialize import (dumps, field_from_json, fixture, load_field, load_poly, poly_to_json,
                        read_json, standard_form_from_json, standard_form_to_json)

EXIT_OK, EXIT_FAIL, EXIT_VALIDATION, EXIT_PRECISION, EXIT_USAGE = 0, 1, 2, 3, 64


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _emit(doc):
    sys.stdout.write(dumps(doc))


def _emit_line(doc):
    sys.stdout.write(json.dumps(doc, sort_keys=True) + "\n")


def _poly(args, attr="poly"):
    K = load_field(args.field) if getattr(args, "field", None) else None
    return load_poly(getattr(args, attr), K)


# --- subcommands ---------------------------------------------------------------------

def cmd_field_check(args):
    K = load_field(args.field)
    F = K.residue
    _emit({"field": K.spec(), "q": F.q, "e_K": ext_str(K.e_K), "modulus_irreducible": True})
    return EXIT_OK


def _profile_table(pr):
    rows = [("j", "tilde_i_j", "i_j")]
    for j in range(pr.k + 1):
        t = pr.tilde[j]
        rows.append((str(j), "?" if t is None else str(ext_str(t)), str(ext_str(pr.idx[j]))))
    width = [max(len(r[c]) for r in rows) for c in range(3)]
    return "\n".join("  ".join(v.rjust(w) for v, w in zip(r, width)) for r in rows) + "\n"


def cmd_indices(args):
    f = _poly(args)
    pr = indices(f)
    if args.table:
        sys.stdout.write(_profile_table(pr))
    else:
        _emit(pr.to_json())
    return EXIT_OK


def cmd_rho(args):
    f = _poly(args)
    pr = indices(f)
    hs = [args.h] if args.h else range(1, f.n + 1)
    doc = {"ell": args.ell, "rho": {str(h): ext_str(rho(pr, h, args.ell)) for h in hs}}
    phi = phi_LK(pr, args.ell)
    doc["phi_LK"] = ext_str(phi) if phi == float("inf") else str(phi)
    if pr.two_index:
        doc["break"] = str(ram_break(pr))
    _emit(doc)
    return EXIT_OK


def cmd_equiv(args):
    K = load_field(args.field) if args.field else None
    f = load_poly(args.f, K)
    g = load_poly(args.g, K if K is not None else f.field)
    _emit({"ell": args.ell, "equivalent": l_equiv(f, g, args.ell)})
    return EXIT_OK


def cmd_minpoly(args):
    f = _poly(args)
    _emit(poly_to_json(minpoly_uniformizer(f, args.expr)))
    return EXIT_OK


def cmd_reduce(args):
    f = _poly(args)
    sf, trace = reduce_to_standard(f, args.ell_max)
    doc = standard_form_to_json(sf)
    doc["certified_ell"] = trace.ell_reached + 1
    doc["polynomial"] = poly_to_json(sf.render(), inline_field=False)["terms"]
    if args.trace:
        with open(args.trace, "w", encoding="utf-8") as fh:
            fh.write(dumps(trace.to_json()))
    _emit(doc)
    return EXIT_OK


def _classify_chunk(spec, k, i0, cap, omega_codes, galois_filter):
    K = k_make(spec)
    F = K.residue
    req = ClassificationRequest(K, k, i0, cap)
    out = []
    for sf in enumerate_standard_forms(req, [F.from_code(c) for c in omega_codes]):
        verdict = is_galois(sf)
        if galois_filter and not verdict.galois:
            continue
        doc = standard_form_to_json(sf)
        doc["galois"] = verdict.galois
        out.append(doc)
    return out


def cmd_classify(args):
    K = load_field(args.field)
    req = ClassificationRequest(K, args.k, args.i0, args.cap)
    if args.count_only and not args.galois_filter:
        _emit({"count": count_standard_forms(req)})
        return EXIT_OK
    if count_standard_forms(req) > req.cap:
        next(enumerate_standard_forms(req))  # raises CapExceeded
    spec, codes = K.spec(), [w.code for w in K.residue.nonzero()]
    if args.jobs > 1:
        # one task per omega; map() returns results in omega order
        tasks = [(spec, args.k, args.i0, args.cap, [c], args.galois_filter) for c in codes]
        with ProcessPoolExecutor(max_workers=args.jobs) as ex:
            parts = list(ex.map(_classify_chunk, *zip(*tasks)))
    else:
        parts = [_classify_chunk(spec, args.k, args.i0, args.cap, codes, args.galois_filter)]
    docs = [d for part in parts for d in part]
    if args.count_only:
        _emit({"count": len(docs)})
    else:
        for d in docs:
            _emit_line(d)
    return EXIT_OK


def _galois_doc(sf):
    doc = standard_form_to_json(sf)
    doc.update(is_galois(sf).to_json())
    doc["splitting_field"] = splitting_field(sf).to_json()
    return doc


def cmd_galois(args):
    K = load_field(args.field) if args.field else None
    if args.form:
        sf = standard_form_from_json(read_json(args.form), K)
        _emit(_galois_doc(sf))
    elif args.poly:
        sf, _ = reduce_to_standard(load_poly(args.poly, K), args.ell_max)
        _emit(_galois_doc(sf))
    elif K is not None and args.k is not None and args.i0 is not None:
        req = ClassificationRequest(K, args.k, args.i0, args.cap)
        for sf in enumerate_standard_forms(req):
            _emit_line(_galois_doc(sf))
    else:
        raise UsageError("galois needs --form, --poly, or --field with --k and --i0")
    return EXIT_OK


# --- worked examples -----------------------------------------------------------------

def _degree9_literal_forms(K):
    """The 16 degree-9 polynomials over Q3(zeta_8) with i0 = i1 = 8, written directly."""
    from .eisenstein import EisensteinPoly
    F = K.residue
    minus_one = F(-1)
    polys = []
    for gamma in F.elements():           # X^9 + 3X^8 - 3(1 + 3 gamma)
        c9 = (K.one() + teich_lift(gamma, K) * 3) * 3
        polys.append(("minus_one", EisensteinPoly(K, 9, {1: K.from_int(-3), 9: c9})))
    for w in F.nonzero():                # X^9 - 3 w X^8 - 3
        if w != minus_one:
            polys.append(("other", EisensteinPoly(K, 9, {1: teich_lift(w, K) * 3, 9: K.from_int(3)})))
    return polys


def verify_examples():
    """Reproduce the four worked examples; returns rows (name, expected, got, ok)."""
    rows = []
    K = fixture("Q3z8")
    req = ClassificationRequest(K, 2, 8)
    forms = list(enumerate_standard_forms(req))
    literal = _degree9_literal_forms(K)
    matched = all(sum(sf.render().equal_coefficients(g) for _, g in literal) == 1 for sf in forms)
    rows.append(("Q3z8 i0=8: number of forms", "16", str(len(forms)), len(forms) == 16))
    rows.append(("Q3z8 i0=8: literal forms", "all 16 match", "match" if matched else "mismatch",
                 matched and len(forms) == len(literal)))
    gal = [is_galois(sf).galois for sf in forms]
    minus_one = [sf.omega == K.residue(-1) for sf in forms]
    ok = gal == minus_one and sum(gal) == 9
    rows.append(("Q3z8 i0=8: Galois forms", "9 (omega = -1)", str(sum(gal)), ok))
    for name, expected in (("three_index_deg9", (7, 3, 0)), ("deg6_char3", (4, 0)),
                           ("three_index_q3", (12, 3, 0))):
        got = indices(fixture(name)).idx
        rows.append((f"{name} indices", str(expected), str(tuple(got)), tuple(got) == expected))
    return rows


def cmd_verify_examples(args):
    rows = verify_examples()
    width = max(len(r[0]) for r in rows)
    for name, expected, got, ok in rows:
        sys.stdout.write(f"{'PASS' if ok else 'FAIL'}  {name.ljust(width)}  expected {expected}  got {got}\n")
    return EXIT_OK if all(r[3] for r in rows) else EXIT_FAIL


# --- parser --------------------------------------------------------------------------

def build_parser():
    p = _Parser(prog="threeterm", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", parser_class=_Parser)

    def add(name, fn, help_):
        sp = sub.add_parser(name, help=help_)
        sp.set_defaults(func=fn)
        return sp

    sp = add("field-check", cmd_field_check, "validate a field description")
    sp.add_argument("--field", required=True)

    sp = add("indices", cmd_indices, "indices of inseparability of a polynomial")
    sp.add_argument("--poly", required=True)
    sp.add_argument("--field")
    sp.add_argument("--table", action="store_true", help="aligned table instead of JSON")

    sp = add("rho", cmd_rho, "rho_h(ell) values and phi_{L/K}(ell)")
    sp.add_argument("--poly", required=True)
    sp.add_argument("--field")
    sp.add_argument("--ell", type=int, required=True)
    sp.add_argument("--h", type=int)

    sp = add("equiv", cmd_equiv, "ell-equivalence of two polynomials")
    sp.add_argument("--f", required=True)
    sp.add_argument("--g", required=True)
    sp.add_argument("--field")
    sp.add_argument("--ell", type=int, required=True)

    sp = add("minpoly", cmd_minpoly, "minimum polynomial of a uniformizer g(pi_L)")
    sp.add_argument("--poly", required=True)
    sp.add_argument("--field")
    sp.add_argument("--expr", required=True, help='polynomial in X, e.g. "X + (2*g)*X^3"')

    sp = add("reduce", cmd_reduce, "reduce to standard form")
    sp.add_argument("--poly", required=True)
    sp.add_argument("--field")
    sp.add_argument("--ell-max", type=int)
    sp.add_argument("--trace", help="write the reduction trace JSON to this path")

    sp = add("classify", cmd_classify, "enumerate all standard forms for (K, k, i0)")
    sp.add_argument("--field", required=True)
    sp.add_argument("--k", type=int, required=True)
    sp.add_argument("--i0", type=int, required=True)
    sp.add_argument("--count-only", action="store_true")
    sp.add_argument("--galois-filter", action="store_true", help="only Galois extensions")
    sp.add_argument("--jobs", type=int, default=1)
    sp.add_argument("--cap", type=int, default=DEFAULT_CAP)
    sp.add_argument("--seed", type=int, default=0, help="accepted for uniformity; unused")

    sp = add("galois", cmd_galois, "Galois criterion and splitting field")
    sp.add_argument("--form", help="standard form JSON")
    sp.add_argument("--poly", help="polynomial JSON (reduced first)")
    sp.add_argument("--field")
    sp.add_argument("--k", type=int)
    sp.add_argument("--i0", type=int)
    sp.add_argument("--ell-max", type=int)
    sp.add_argument("--cap", type=int, default=DEFAULT_CAP)

    sp = add("verify-paper", cmd_verify_examples, "reproduce the worked examples")
    sp.add_argument("--seed", type=int, default=0, help="accepted for uniformity; unused")
    return p


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if args.command is None:
            raise UsageError("a subcommand is required")
        return args.func(args)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ValidationError as exc:
        print(f"validation error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_VALIDATION
    except PrecisionError as exc:
        print(f"precision error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_PRECISION
    except (OSError, json.JSONDecodeError) as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_VALIDATION


if __name__ == "__main__":
    sys.exit(main())
