"""``hessencount`` command line.

Each verb parses its arguments, calls one library routine and prints the
result.  Exit codes: 0 success, 1 a verification failed, 2 unparseable
input, 3 a domain error such as an unrealizable type, 4 budget exhausted.
"""
from __future__ import annotations

import argparse
import json
import sys

from . import counting, gfq, hessenberg, symfunc, tableaux, verify
from .algebra import parse_partition

EXIT_OK, EXIT_FAILED, EXIT_PARSE, EXIT_DOMAIN, EXIT_BUDGET = 0, 1, 2, 3, 4


class _ParseError(Exception):
    pass


def _parse(fn, text, what):
    try:
        return fn(text)
    except (ValueError, TypeError) as exc:
        raise _ParseError(f"bad {what} {text!r}: {exc}") from exc


def _q(text):
    q = _parse(int, text, "q")
    _parse(gfq.field, q, "q")
    return q


def _q_list(text):
    return [_q(x) for x in text.split(",") if x.strip()]


def _dump(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"), ensure_ascii=False)


def _symfunc_out(f, args):
    return _dump(f.to_json()) if args.json else str(f)


# ---------------------------------------------------------------------------
# verbs
# ---------------------------------------------------------------------------

def cmd_count(args):
    m = _parse(hessenberg.parse_hess, args.hess, "Hessenberg function")
    tau = _parse(gfq.parse_type, args.type, "type")
    q = _q(args.q)
    rep = counting.count_report(m, tau, q, bruteforce=args.bruteforce)
    out = rep.to_json()
    out["field"] = gfq.field(q).describe()
    return _dump(out)


def cmd_bruteforce(args):
    m = _parse(hessenberg.parse_hess, args.hess, "Hessenberg function")
    tau = _parse(gfq.parse_type, args.type, "type")
    q = _q(args.q)
    value = counting.bruteforce_count(m, tau, q)
    return _dump({"m": list(m), "type": str(tau), "q": q, "bruteforce": value,
                  "field": gfq.field(q).describe()})


def cmd_poincare(args):
    m = _parse(hessenberg.parse_hess, args.hess, "Hessenberg function")
    if args.regular is not None:
        mu = _parse(parse_partition, args.regular, "partition")
        rep = counting.poincare_regular(m, mu)
    else:
        jordan = _parse(counting.parse_jordan, args.jordan, "Jordan type")
        rep = counting.poincare(m, jordan)
    return _dump(rep.to_json()) if args.json else str(rep.poly)


def cmd_csf(args):
    m = _parse(hessenberg.parse_hess, args.hess, "Hessenberg function")
    f = hessenberg.csqf(m) if args.basis == "e" else hessenberg.csqf_monomial(m)
    return _symfunc_out(f, args)


def cmd_hl(args):
    lam = _parse(parse_partition, args.lam, "partition")
    return _symfunc_out(symfunc.convert(tableaux.hall_littlewood(lam), args.basis), args)


def cmd_kostka(args):
    shape = _parse(parse_partition, args.shape, "shape")
    content = _parse(parse_partition, args.content, "content")
    out = {
        "shape": list(shape),
        "content": list(content),
        "kostka": tableaux.kostka_number(shape, content),
        "kostka_foulkes": list(tableaux.kostka_foulkes(shape, content).coeffs),
    }
    if args.tableaux:
        out["tableaux"] = [
            {"rows": tableaux.format_rows(T), "cocharge": tableaux.cocharge(T)}
            for T in tableaux.enumerate_ssyt(shape, content)
        ]
    return _dump(out)


def cmd_ftau(args):
    tau = _parse(gfq.parse_type, args.type, "type")
    f = gfq.f_tau(tau)
    if args.q is not None:
        q = _q(args.q)
        if not tau.is_realizable(q):
            raise gfq.Unrealizable(f"type {tau} is not realizable over F_{q}")
        f = symfunc.specialize_t(f, q)
    return _symfunc_out(symfunc.convert(f, args.basis), args)


def cmd_triples(args):
    n = _parse(int, args.n, "n")
    return _dump([
        {"m0": list(tr.m0), "m1": list(tr.m1), "m2": list(tr.m2),
         "condition": tr.condition, "i": tr.i}
        for tr in hessenberg.modular_triples(n)
    ])


def cmd_verify(args):
    n = _parse(int, args.n, "n")
    report = verify.verify_suite(n, _q_list(args.q), workers=args.workers)
    text = _dump(report.to_json()) if args.json else report.table()
    return text, (EXIT_OK if report.passed else EXIT_FAILED)


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="hessencount", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="verb", required=True)

    c = sub.add_parser("count", help="point count of a Hessenberg variety over F_q")
    c.add_argument("--hess", required=True, help='e.g. "2,3,3" or "NNENEE"')
    c.add_argument("--type", required=True, help='e.g. "(1,[1]);(1,[1]);(1,[1])"')
    c.add_argument("--q", required=True)
    c.add_argument("--bruteforce", action="store_true", help="also run the flag enumeration")
    c.set_defaults(func=cmd_count)

    b = sub.add_parser("bruteforce", help="flag enumeration only")
    b.add_argument("--hess", required=True)
    b.add_argument("--type", required=True)
    b.add_argument("--q", required=True)
    b.set_defaults(func=cmd_bruteforce)

    pp = sub.add_parser("poincare", help="Poincare polynomial over C")
    pp.add_argument("--hess", required=True)
    g = pp.add_mutually_exclusive_group(required=True)
    g.add_argument("--jordan", help='one partition per eigenvalue, e.g. "1;1;1" or "2,1"')
    g.add_argument("--regular", help="Jordan blocks of a regular operator, e.g. 2,1")
    pp.add_argument("--json", action="store_true")
    pp.set_defaults(func=cmd_poincare)

    x = sub.add_parser("csf", help="chromatic quasisymmetric function")
    x.add_argument("--hess", required=True)
    x.add_argument("--basis", choices=("e", "m"), default="e")
    x.add_argument("--json", action="store_true")
    x.set_defaults(func=cmd_csf)

    hl = sub.add_parser("hl", help="modified Hall-Littlewood function")
    hl.add_argument("--lam", required=True)
    hl.add_argument("--basis", choices=symfunc.BASES, default="s")
    hl.add_argument("--json", action="store_true")
    hl.set_defaults(func=cmd_hl)

    k = sub.add_parser("kostka", help="Kostka number and Kostka-Foulkes polynomial")
    k.add_argument("--shape", required=True)
    k.add_argument("--content", required=True)
    k.add_argument("--tableaux", action="store_true", help="list tableaux with cocharge")
    k.set_defaults(func=cmd_kostka)

    f = sub.add_parser("ftau", help="invariant-flag generating function of a type")
    f.add_argument("--type", required=True)
    f.add_argument("--q", help="specialize t = q")
    f.add_argument("--basis", choices=symfunc.BASES, default="m")
    f.add_argument("--json", action="store_true")
    f.set_defaults(func=cmd_ftau)

    t = sub.add_parser("triples", help="modular-law triples on [n]")
    t.add_argument("--n", required=True)
    t.set_defaults(func=cmd_triples)

    v = sub.add_parser("verify", help="run the cross-check suite")
    v.add_argument("--n", required=True)
    v.add_argument("--q", default="2")
    v.add_argument("--json", action="store_true")
    v.add_argument("--workers", type=int, default=1)
    v.set_defaults(func=cmd_verify)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)  # argparse exits with 2 itself
    try:
        result = args.func(args)
    except _ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except gfq.BudgetExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (ValueError, ArithmeticError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    code = EXIT_OK
    if isinstance(result, tuple):
        result, code = result
    print(result)
    return code


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
