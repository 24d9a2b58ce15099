"""Command-line front end.

Exit codes: 0 success (all checks pass), 1 runtime or I/O failure (including
a failing verification suite), 2 usage errors, 3 mathematical ambiguity in
relation discovery.
"""

import argparse
import json
import os
import re
import sys

from .evaluator import CacheError, ResidueCache, eval_table, parse_index, parse_signs
from .harmonic import all_compositions
from .identities import (
    default_weighted_indices,
    verify_antipode,
    verify_conj38,
    verify_depth2,
    verify_example24,
    verify_key_identity,
    verify_lemmas,
    verify_parity,
    verify_ppt,
    verify_prop21,
    verify_sum_formula,
    verify_weighted_perm,
)
from .modmath import sieve_primes
from .relations import (
    AmbiguousRelationError,
    descriptor_str,
    dimension_estimate,
    dseq,
    express_in_basis,
    fib,
)

CACHE_ENV = "FMZV_CACHE"
SUITES = ("key", "parity", "antipode", "prop21", "depth2", "example24",
          "sumformula", "ppt", "weighted1", "weighted2", "conj38", "lemmas")
WEIGHT_GUARD = 12
DEPTH_GUARD = 6
DIMS_GUARD = 7


class UsageError(Exception):
    pass


def _parse_prime_range(text):
    m = re.fullmatch(r"(\d+)\.\.(\d+)", text)
    if not m:
        raise UsageError("prime range must look like lo..hi, got %r" % text)
    lo, hi = int(m.group(1)), int(m.group(2))
    if lo < 5 or hi < lo:
        raise UsageError("prime range needs 5 <= lo <= hi, got %s" % text)
    return sieve_primes(lo, hi)


def _bound(value, default, name, guard):
    v = default if value is None else value
    if v < 1:
        raise UsageError("%s must be >= 1" % name)
    if v > guard:
        raise UsageError("%s > %d refused (cost guard); lower the bound" % (name, guard))
    return v


def build_parser():
    parser = argparse.ArgumentParser(
        prog="fmzv",
        description="Finite multiple zeta values mod p: computation, identity "
                    "verification, and relation discovery.")
    parser.add_argument("--cache", help="residue cache file (env %s; flag wins)" % CACHE_ENV)
    parser.add_argument("--jobs", type=int, default=1, help="worker processes (default 1)")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compute", help="evaluate one value at each prime of a range")
    p.add_argument("--variant", choices=("zeta", "zeta2", "zeta2star", "euler"),
                   default="zeta2")
    p.add_argument("--index", required=True, help="comma-separated index, e.g. 1,2")
    p.add_argument("--signs", help="euler signs, e.g. +,- (euler only)")
    p.add_argument("--primes", default="5..200", help="inclusive range lo..hi")
    p.add_argument("--format", choices=("json", "csv", "text"), default="text")

    p = sub.add_parser("verify", help="run an identity verification suite")
    p.add_argument("--suite", required=True, choices=SUITES)
    p.add_argument("--primes", default="5..200")
    p.add_argument("--format", choices=("json", "csv", "text"), default="text")
    p.add_argument("--kmax", type=int)
    p.add_argument("--wmax", type=int)
    p.add_argument("--rmax", type=int)
    p.add_argument("--dmax", type=int)

    p = sub.add_parser("discover", help="express a value over a candidate basis")
    p.add_argument("--target", required=True, help="target index, e.g. 2,1")
    p.add_argument("--variant", choices=("zeta", "zeta2", "zeta2star", "euler"),
                   default="zeta2", help="variant of the target column")
    p.add_argument("--signs", help="euler signs for the target (euler only)")
    p.add_argument("--basis", required=True,
                   help="'odd' (all-odd level-2 indices), 'odd3' (odd>=3 level-1 "
                        "indices), or explicit semicolon-separated indices")
    p.add_argument("--basis-variant", choices=("zeta", "zeta2", "zeta2star"),
                   help="variant of explicit basis columns (default: target variant)")
    p.add_argument("--weight", type=int, help="weight of the keyword basis "
                                              "(default: target weight)")
    p.add_argument("--primes", default="5..200")
    p.add_argument("--height-bound", type=int, default=10 ** 6)
    p.add_argument("--format", choices=("json",), default="json")

    p = sub.add_parser("dims", help="dimension experiment for one weight")
    p.add_argument("--weight", type=int, required=True)
    p.add_argument("--primes", default="5..200")
    p.add_argument("--height-bound", type=int, default=10 ** 6)
    p.add_argument("--format", choices=("json", "csv", "text"), default="text")

    p = sub.add_parser("cache", help="inspect or clear the residue cache")
    p.add_argument("action", choices=("info", "clear"))
    return parser


def _open_cache(args):
    path = args.cache or os.environ.get(CACHE_ENV)
    if not path:
        return None, None
    return path, ResidueCache(path)


def _print(text):
    sys.stdout.write(text if text.endswith("\n") else text + "\n")


def _run_compute(args, cache):
    index = parse_index(args.index)
    signs = parse_signs(args.signs) if args.signs else None
    primes = _parse_prime_range(args.primes)
    if not primes:
        raise UsageError("no primes in range %s" % args.primes)
    table = eval_table(args.variant, index, signs=signs, primes=primes,
                       cache=cache, jobs=args.jobs)
    pairs = [(p, table.rows[p]) for p in primes]
    if args.format == "json":
        _print(json.dumps({"variant": args.variant,
                           "index": list(index),
                           "signs": None if signs is None else list(signs),
                           "rows": [[p, v] for p, v in pairs]}, indent=2))
    elif args.format == "csv":
        _print("prime,residue\n" + "".join("%d,%d\n" % pv for pv in pairs))
    else:
        width = max(len(str(primes[-1])), len("prime"))
        lines = ["prime".ljust(width) + "  residue"]
        lines += [str(p).ljust(width) + "  %d" % v for p, v in pairs]
        _print("\n".join(lines))
    return 0


def _run_verify(args, cache):
    primes = _parse_prime_range(args.primes)
    jobs = args.jobs
    s = args.suite
    if s == "prop21":
        rep = verify_prop21(_bound(args.kmax, 9, "kmax", WEIGHT_GUARD),
                            primes=primes, cache=cache, jobs=jobs)
    elif s == "depth2":
        rep = verify_depth2(_bound(args.kmax, 9, "kmax", WEIGHT_GUARD),
                            primes=primes, cache=cache, jobs=jobs)
    elif s == "key":
        rep = verify_key_identity(_bound(args.wmax, 7, "wmax", WEIGHT_GUARD),
                                  primes=primes, cache=cache, jobs=jobs)
    elif s == "parity":
        rep = verify_parity(_bound(args.wmax, 7, "wmax", WEIGHT_GUARD),
                            primes=primes, cache=cache, jobs=jobs)
    elif s == "antipode":
        rep = verify_antipode(_bound(args.dmax, 5, "dmax", DEPTH_GUARD),
                              _bound(args.wmax, 8, "wmax", WEIGHT_GUARD),
                              primes=primes, cache=cache, jobs=jobs)
    elif s == "example24":
        rep = verify_example24(_bound(args.wmax, 9, "wmax", WEIGHT_GUARD),
                               primes=primes, cache=cache, jobs=jobs)
    elif s == "sumformula":
        rep = verify_sum_formula(_bound(args.kmax, 10, "kmax", WEIGHT_GUARD),
                                 primes=primes, cache=cache, jobs=jobs)
    elif s == "ppt":
        rep = verify_ppt(_bound(args.rmax, 6, "rmax", DEPTH_GUARD),
                         primes=primes, cache=cache, jobs=jobs)
    elif s in ("weighted1", "weighted2"):
        level = 1 if s == "weighted1" else 2
        wmax = _bound(args.wmax, 8 if level == 1 else 9, "wmax", WEIGHT_GUARD)
        dmax = _bound(args.dmax, 4, "dmax", 4)
        indices = default_weighted_indices(level, wmax=wmax, dmax=dmax)
        rep = verify_weighted_perm(level, indices=indices, primes=primes,
                                   cache=cache, jobs=jobs)
    elif s == "conj38":
        rep = verify_conj38(_bound(args.rmax, 8, "rmax", WEIGHT_GUARD),
                            primes=primes, cache=cache, jobs=jobs)
    else:
        rep = verify_lemmas(_bound(args.kmax, 10, "kmax", WEIGHT_GUARD),
                            _bound(args.wmax, 8, "wmax", WEIGHT_GUARD),
                            _bound(args.dmax, 4, "dmax", DEPTH_GUARD))
    if args.format == "json":
        _print(rep.to_json())
    elif args.format == "csv":
        _print(rep.to_csv())
    else:
        _print(rep.to_text())
    return 0 if rep.passed else 1


def _keyword_basis(keyword, weight):
    if keyword == "odd":
        return [("zeta2", ix) for ix in all_compositions(weight)
                if all(x % 2 for x in ix)]
    return [("zeta", ix) for ix in all_compositions(weight)
            if all(x % 2 and x >= 3 for x in ix)]


def _run_discover(args, cache):
    target_index = parse_index(args.target)
    signs = parse_signs(args.signs) if args.signs else None
    target = (args.variant, target_index, signs)
    weight = args.weight if args.weight is not None else sum(target_index)
    if weight > WEIGHT_GUARD:
        raise UsageError("weight > %d refused (cost guard)" % WEIGHT_GUARD)
    if args.basis in ("odd", "odd3"):
        basis = _keyword_basis(args.basis, weight)
    else:
        bvariant = args.basis_variant or args.variant
        if bvariant == "euler":
            raise UsageError("explicit euler basis columns are not supported")
        basis = [(bvariant, parse_index(part))
                 for part in args.basis.split(";") if part]
    if not basis:
        raise UsageError("basis is empty for weight %d" % weight)

    wmax = max([sum(target_index)] + [sum(ix) for _, ix in basis])
    primes = [p for p in _parse_prime_range(args.primes) if p > wmax + 2]
    if len(primes) < 4:
        raise UsageError("need at least 4 primes above weight + 2; widen --primes")

    def run(ps):
        return express_in_basis(target, basis, ps, height_bound=args.height_bound,
                                cache=cache, jobs=args.jobs)

    coeffs = run(primes)
    half_a, half_b = primes[0::2], primes[1::2]
    ca, cb = run(half_a), run(half_b)
    if coeffs is None or ca is None or cb is None:
        stability = "unknown"
    else:
        stability = "stable" if coeffs == ca == cb else "unstable"
    doc = {
        "target": descriptor_str(target),
        "basis": [descriptor_str(b) for b in basis],
        "coefficients": None if coeffs is None else [str(c) for c in coeffs],
        "status": "expressed" if coeffs is not None else "no_relation",
        "stability": stability,
        "primes": primes,
        "primes_half_a": half_a,
        "primes_half_b": half_b,
        "height_bound": args.height_bound,
    }
    _print(json.dumps(doc, indent=2))
    return 0


def _run_dims(args, cache):
    k = args.weight
    if k < 1:
        raise UsageError("weight must be >= 1")
    if k > DIMS_GUARD:
        raise UsageError("weight > %d refused (cost guard)" % DIMS_GUARD)
    primes = [p for p in _parse_prime_range(args.primes) if p > k + 2]
    if len(primes) < 4:
        raise UsageError("need at least 4 primes above weight + 2; widen --primes")
    m2, dim2 = dimension_estimate(k, variant="zeta2", primes=primes,
                                  height_bound=args.height_bound,
                                  cache=cache, jobs=args.jobs)
    m1, dim1 = dimension_estimate(k, variant="zeta", primes=primes,
                                  height_bound=args.height_bound,
                                  cache=cache, jobs=args.jobs)
    want2 = fib(k)
    want1 = dseq(k - 3) if k >= 3 else 0
    rows = [("2", m2, dim2, want2), ("1", m1, dim1, want1)]
    if args.format == "json":
        _print(json.dumps({
            "weight": k,
            "level2": {"relations": m2, "estimated_dim": dim2,
                       "conjectured_dim": want2, "agree": dim2 == want2},
            "level1": {"relations": m1, "estimated_dim": dim1,
                       "conjectured_dim": want1, "agree": dim1 == want1},
            "columns": 2 ** (k - 1),
            "primes": primes,
        }, indent=2))
    elif args.format == "csv":
        out = ["level,relations,estimated_dim,conjectured_dim,agree"]
        out += ["%s,%d,%d,%d,%s" % (lv, m, d, w, "true" if d == w else "false")
                for lv, m, d, w in rows]
        _print("\n".join(out))
    else:
        out = []
        for lv, m, d, w in rows:
            out.append("level %s weight %d: %d relations among %d columns, "
                       "estimated dim %d, conjectured %d (%s)"
                       % (lv, k, m, 2 ** (k - 1), d, w,
                          "agree" if d == w else "DISAGREE"))
        _print("\n".join(out))
    return 0


def _run_cache(args, cache, path):
    if path is None:
        raise UsageError("no cache path configured (use --cache or %s)" % CACHE_ENV)
    if args.action == "info":
        _print("%s: %d cells" % (path, len(cache)))
        return 0
    cache.close()
    if os.path.exists(path):
        os.remove(path)
    _print("%s: cleared" % path)
    return 0


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    cache = None
    try:
        path, cache = _open_cache(args)
        if args.command == "compute":
            return _run_compute(args, cache)
        if args.command == "verify":
            return _run_verify(args, cache)
        if args.command == "discover":
            return _run_discover(args, cache)
        if args.command == "dims":
            return _run_dims(args, cache)
        return _run_cache(args, cache, path)
    except (UsageError, ValueError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2
    except AmbiguousRelationError as exc:
        print("ambiguous: %s" % exc, file=sys.stderr)
        return 3
    except (OSError, CacheError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 1
    finally:
        if cache is not None:
            cache.close()


if __name__ == "__main__":
    sys.exit(main())
