"""Command line front end.

Exit codes: 0 success, 1 a verification failed, 2 invalid input, 3 a desk
bound was exceeded, 4 a corrupt cache entry.
"""

import argparse
import json
import os
import sys
from fractions import Fraction
from pathlib import Path

from .errors import BoundExceeded, InvalidArgument
from .partitions import parse_partition

EXIT_OK, EXIT_FAIL, EXIT_INVALID, EXIT_BOUND, EXIT_CACHE = 0, 1, 2, 3, 4


class CacheCorrupt(Exception):
    pass


def dumps(obj):
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def _label(backend, text):
    from .hall import VectF1Backend, VectFqBackend

    if isinstance(backend, (VectF1Backend, VectFqBackend)):
        text = text.strip() or "0"
        try:
            n = int(text)
        except ValueError:
            raise InvalidArgument(f"{backend.id} labels are dimensions, got {text!r}") from None
        if n < 0:
            raise InvalidArgument("dimensions must be nonnegative")
        return n
    return parse_partition(text)


def cmd_hall_mult(args):
    from .algebra import HallElement
    from .hall import hall_multiply, parse_backend

    backend_id = args.backend
    if args.q is not None:
        parts = backend_id.split(":")
        if parts[0] == "fq":
            backend_id = f"fq:{args.q}:{parts[2] if len(parts) == 3 else 6}"
        elif parts[0] == "vect":
            backend_id = f"vect:{args.q}"
    backend = parse_backend(backend_id)
    left, right = _label(backend, args.left), _label(backend, args.right)
    prod = hall_multiply(backend, HallElement.basis(left), HallElement.basis(right))
    print(prod.format())
    print(dumps({"backend": backend.id, "left": _json_label(left), "right": _json_label(right),
                 "product": prod.to_json()}))
    return EXIT_OK


def _json_label(x):
    return x if isinstance(x, int) else list(x)


def cache_dir(args):
    path = args.cache_dir or os.environ.get("HALLFORGE_CACHE")
    return Path(path) if path else None


def _cache_name(lam, mu, nu):
    enc = lambda p: "-".join(map(str, p)) or "0"
    return f"hallpoly_{enc(lam)}_{enc(mu)}_{enc(nu)}.json"


def _validate_cached(lam, mu, nu, poly):
    """Recount one field and compare with the stored polynomial."""
    from .fq_linear import hall_constant_direct, hall_sample_points

    q = hall_sample_points(lam.size, 1)[0]
    fresh = hall_constant_direct(q, lam, mu, nu)
    if poly(q) != fresh:
        raise CacheCorrupt(f"cached polynomial gives {poly(q)} at q={q}, direct count is {fresh}")


def read_cached_poly(path, lam, mu, nu):
    from .qpoly import QPoly

    try:
        data = json.loads(path.read_text())
        if (data["lambda"], data["mu"], data["nu"]) != (list(lam), list(mu), list(nu)):
            raise CacheCorrupt("cache entry is for a different triple")
        poly = QPoly.from_json(data["poly"])
    except CacheCorrupt:
        raise
    except (ValueError, KeyError, TypeError) as exc:
        raise CacheCorrupt(f"unreadable cache entry: {exc}") from None
    _validate_cached(lam, mu, nu, poly)
    return poly


def cmd_hall_poly(args):
    from .fq_linear import hall_polynomial

    lam, mu, nu = (parse_partition(x) for x in (args.lam, args.mu, args.nu))
    where = cache_dir(args)
    path = where / _cache_name(lam, mu, nu) if where else None
    poly = None
    source = "computed"
    if path is not None and path.exists():
        poly = read_cached_poly(path, lam, mu, nu)
        source = "cache"
    if poly is None:
        poly = hall_polynomial(lam, mu, nu)
        if path is not None:
            path.parent.mkdir(parents=True, exist_ok=True)
            record = {"lambda": list(lam), "mu": list(mu), "nu": list(nu), "poly": poly.to_json()}
            path.write_text(dumps(record) + "\n")
    print(poly.format("t"))
    if args.json:
        print(dumps({"lambda": list(lam), "mu": list(mu), "nu": list(nu), "poly": poly.to_json(),
                     "source": source}))
    return EXIT_OK


# verification suites

def verify_zelevinsky(args):
    from .fq_linear import flag_count_direct
    from .partitions import ones, partitions_of
    from .zelevinsky import b_polynomial, b_polynomial_by_sequences

    cases, failures = 0, []
    for n in range(args.size + 1):
        for lam in partitions_of(n):
            for mu in partitions_of(n):
                b = b_polynomial(lam, mu)
                seq = b_polynomial_by_sequences(lam, mu)
                cases += 1
                if seq != b:
                    failures.append({"lambda": list(lam), "mu": list(mu), "arrays": b.to_json(),
                                     "sequences": seq.to_json()})
                for q in args.qs:
                    direct = flag_count_direct(q, mu, [ones(r) for r in lam])
                    if b(q) != direct:
                        failures.append({"lambda": list(lam), "mu": list(mu), "q": q,
                                         "polynomial": b(q), "flags": direct})
    return cases, failures


def verify_green(args):
    from .hall import VectFqBackend, coproduct_prime, green_compatibility_check
    from .algebra import HallElement

    backend = VectFqBackend(args.q)
    cases, failures = 0, []
    for a in range(args.dim + 1):
        for b in range(args.dim + 1):
            ok, report = green_compatibility_check(backend, a, b)
            cases += 1
            if not ok:
                failures.append({"a": a, "b": b, "first_difference": report["first_difference"]})
    for n in range(args.dim + 1):
        delta = coproduct_prime(backend, HallElement.basis(n))
        expected = {(k, n - k): Fraction(1, args.q ** (k * (n - k))) for k in range(n + 1)}
        cases += 1
        if {key: Fraction(v) for key, v in delta.terms.items()} != expected:
            failures.append({"coproduct_of": n, "got": delta.format()})
    return cases, failures


def verify_segal(args):
    from .flags import two_segal_cardinality_check

    ok, report = two_segal_cardinality_check(args.q, args.dim)
    failures = [f for sq in report["squares"] for f in sq["failures"]] + report["simplicial_failures"]
    return len(report["squares"]), failures


def verify_symfunc(args):
    from .partitions import partitions_of
    from .symfunc import (SymFunc, elementary_to_monomial, elementary_to_monomial_by_products,
                          hall_littlewood_image, phi_image)
    from .errors import ConsistencyError

    cases, failures = 0, []
    for n in range(args.size + 1):
        for lam in partitions_of(n):
            cases += 1
            try:
                if elementary_to_monomial(lam, cross_check=False) != elementary_to_monomial_by_products(lam):
                    failures.append({"lambda": list(lam), "check": "e to m"})
                if n <= 5:
                    phi_image(lam)
                    if hall_littlewood_image(lam).specialize(1) != SymFunc.m(lam):
                        failures.append({"lambda": list(lam), "check": "hall-littlewood at t=1"})
            except ConsistencyError as exc:
                failures.append({"lambda": list(lam), "check": str(exc)})
    return cases, failures


def verify_statistics(args):
    from .qpoly import (inversion_partition_function, lattice_area_partition_function, q_binomial,
                        q_factorial)

    cases, failures = 0, []
    for n in range(min(args.size, 8) + 1):
        cases += 1
        if inversion_partition_function(n) != q_factorial(n):
            failures.append({"inversions": n})
    for total in range(args.size + 1):
        for m in range(total + 1):
            cases += 1
            if lattice_area_partition_function(m, total - m) != q_binomial(total, m):
                failures.append({"lattice": [m, total - m]})
    return cases, failures


def verify_f1_bridge(args):
    from .f1 import f1t_hall_constant
    from .fq_linear import hall_polynomial
    from .partitions import partitions_of

    cases, failures = 0, []
    for n in range(args.size + 1):
        for k in range(n + 1):
            for lam in partitions_of(n):
                for mu in partitions_of(n - k):
                    for nu in partitions_of(k):
                        cases += 1
                        a, b = f1t_hall_constant(lam, mu, nu), hall_polynomial(lam, mu, nu)(1)
                        if a != b:
                            failures.append({"lambda": list(lam), "mu": list(mu), "nu": list(nu),
                                             "f1t": a, "at_one": b})
    return cases, failures


SUITES = {
    "zelevinsky": verify_zelevinsky,
    "green": verify_green,
    "segal": verify_segal,
    "symfunc": verify_symfunc,
    "statistics": verify_statistics,
    "f1-bridge": verify_f1_bridge,
}


def cmd_verify(args):
    cases, failures = SUITES[args.suite](args)
    print(dumps({"suite": args.suite, "cases": cases, "failures": failures}))
    return EXIT_OK if not failures else EXIT_FAIL


def _qs(text):
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a list of field sizes: {text!r}") from None


def build_parser():
    parser = argparse.ArgumentParser(prog="hallforge", description="Hall algebra computations and checks.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("hall-mult", help="product of two basis elements")
    p.add_argument("--backend", required=True, help="fq:<q>:<N>, vect:<q>, f1 or f1t")
    p.add_argument("--left", default="")
    p.add_argument("--right", default="")
    p.add_argument("--q", type=int, default=None, help="override the field size of an fq/vect backend")
    p.set_defaults(func=cmd_hall_mult)

    p = sub.add_parser("hall-poly", help="Hall polynomial g^lam_{mu nu}(t)")
    p.add_argument("--lam", required=True)
    p.add_argument("--mu", required=True)
    p.add_argument("--nu", required=True)
    p.add_argument("--cache-dir", default=None, help="defaults to $HALLFORGE_CACHE")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_hall_poly)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("suite", choices=sorted(SUITES))
    p.add_argument("--q", type=int, default=2)
    p.add_argument("--qs", type=_qs, default=[2, 3])
    p.add_argument("--dim", type=int, default=2)
    p.add_argument("--size", type=int, default=4)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INVALID if exc.code else EXIT_OK
    try:
        return args.func(args)
    except CacheCorrupt as exc:
        print(f"error: corrupt cache: {exc}", file=sys.stderr)
        return EXIT_CACHE
    except BoundExceeded as exc:
        print(f"error: bound exceeded: {exc}", file=sys.stderr)
        return EXIT_BOUND
    except (InvalidArgument, ValueError) as exc:
        print(f"error: invalid input: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
