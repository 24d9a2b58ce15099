"""Numeric verification suites for the closed forms, identities, and conjectures.

Every suite returns a Report of per-case rows; a row passes iff its two sides
are exactly equal (residues mod p, or canonical strings for symbolic rows).
A case of weight k skips primes p <= k + 2, so Bernoulli indices stay positive
and small denominators stay invertible.
"""

import csv
import io
import itertools
import json
import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import partial

from .bernoulli import L2, Zk
from .evaluator import memo_merge, memo_keys, memo_new_since, value_of
from .harmonic import (
    all_compositions,
    antipode_sum,
    compositions,
    lemma_R_check,
    lemma_g_check,
)
from .modmath import crt_combine, mod_inv, rat_reconstruct

__all__ = [
    "Case",
    "Report",
    "coeff_C",
    "verify_prop21",
    "verify_depth2",
    "verify_key_identity",
    "verify_parity",
    "verify_antipode",
    "verify_example24",
    "verify_sum_formula",
    "verify_ppt",
    "ppt_constants",
    "verify_weighted_perm",
    "default_weighted_indices",
    "verify_conj38",
    "verify_lemmas",
]


# ---------------------------------------------------------------------------
# report plumbing

@dataclass
class Case:
    case: str
    prime: int | None
    lhs: str
    rhs: str
    passed: bool


@dataclass
class Report:
    suite: str
    params: dict
    cases: list[Case] = field(default_factory=list)

    @property
    def total(self):
        return len(self.cases)

    @property
    def failed(self):
        return sum(1 for c in self.cases if not c.passed)

    @property
    def passed(self):
        return self.failed == 0

    def to_json(self) -> str:
        doc = {
            "suite": self.suite,
            "params": {k: str(v) for k, v in sorted(self.params.items())},
            "cases": [
                {"case": c.case, "prime": c.prime, "lhs": c.lhs, "rhs": c.rhs, "pass": c.passed}
                for c in self.cases
            ],
            "summary": {"total": self.total, "passed": self.total - self.failed, "failed": self.failed},
        }
        return json.dumps(doc, indent=2)

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["case", "prime", "lhs", "rhs", "pass"])
        for c in self.cases:
            writer.writerow([c.case, "" if c.prime is None else c.prime, c.lhs, c.rhs,
                             "true" if c.passed else "false"])
        return buf.getvalue()

    def to_text(self) -> str:
        headers = ("case", "prime", "lhs", "rhs", "pass")
        rows = [(c.case, "" if c.prime is None else str(c.prime), c.lhs, c.rhs,
                 "pass" if c.passed else "FAIL") for c in self.cases]
        widths = [max(len(h), *(len(r[i]) for r in rows)) if rows else len(h)
                  for i, h in enumerate(headers)]
        lines = ["  ".join(h.ljust(w) for h, w in zip(headers, widths)).rstrip()]
        for r in rows:
            lines.append("  ".join(x.ljust(w) for x, w in zip(r, widths)).rstrip())
        lines.append("suite %s: %d cases, %d passed, %d failed"
                     % (self.suite, self.total, self.total - self.failed, self.failed))
        return "\n".join(lines) + "\n"


def _sorted_report(suite, params, rows) -> Report:
    rows = sorted(rows, key=lambda c: (c.case, -1 if c.prime is None else c.prime))
    return Report(suite=suite, params=params, cases=rows)


def _num_case(name, p, lhs, rhs) -> Case:
    return Case(case=name, prime=p, lhs=str(lhs), rhs=str(rhs), passed=lhs == rhs)


def _filtered(primes, weight):
    return [p for p in primes if p > weight + 2]


def _frac_mod(q: Fraction, p: int) -> int:
    return q.numerator * mod_inv(q.denominator, p) % p


def _prime_worker(fn, p):
    before = memo_keys()
    rows = fn(p, None)
    return rows, memo_new_since(before)


def _per_prime(fn, primes, jobs, cache):
    # fn(p, cache) -> list[Case]; workers never touch the disk cache
    if jobs <= 1 or len(primes) < 2:
        rows = []
        for p in primes:
            rows.extend(fn(p, cache))
        return rows
    from concurrent.futures import ProcessPoolExecutor

    rows = []
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        for rws, cells in pool.map(partial(_prime_worker, fn), primes):
            rows.extend(rws)
            memo_merge(cells)
            if cache is not None:
                for (variant, index, signs, q), v in cells.items():
                    cache.add(variant, index, signs, q, v)
    return rows


def _indices_of_weight_up_to(wmax, dmax=None):
    out = []
    for k in range(1, wmax + 1):
        for index in all_compositions(k):
            if dmax is None or len(index) <= dmax:
                out.append(index)
    return out


def _istr(index):
    return "(" + ",".join(map(str, index)) + ")"


# ---------------------------------------------------------------------------
# the C coefficient

def coeff_C(index) -> int:
    """Alternating binomial sum over proper partial weights; 0 in depth 1."""
    index = tuple(index)
    if len(index) < 1:
        raise ValueError("coeff_C needs depth >= 1")
    k = sum(index)
    total = 0
    s = 0
    for kj in index[:-1]:
        s += kj
        total += (-1) ** s * math.comb(k, s)
    return total


# ---------------------------------------------------------------------------
# suites

def _prop21_rows(kmax, p, cache):
    rows = []
    for k in range(1, kmax + 1):
        if p <= k + 2:
            continue
        lhs = value_of("zeta2", (k,), None, p, cache)
        if k == 1:
            rhs = -2 * L2(p) % p
        else:
            rhs = (2 - pow(2, k, p)) * Zk(k, p) % p
        rows.append(_num_case("k=%d" % k, p, lhs, rhs))
    return rows


def verify_prop21(kmax=9, primes=(), cache=None, jobs=1) -> Report:
    """Depth-1 closed forms: weight 1 vs the Fermat quotient, weight >= 2 vs Zk."""
    rows = _per_prime(partial(_prop21_rows, kmax), list(primes), jobs, cache)
    return _sorted_report("prop21", {"kmax": kmax}, rows)


def _depth2_rows(kmax, p, cache):
    rows = []
    for k in range(3, kmax + 1, 2):
        if p <= k + 2:
            continue
        zk = Zk(k, p)
        inv2 = mod_inv(2, p)
        for k1 in range(1, k):
            k2 = k - k1
            lhs = value_of("zeta2", (k1, k2), None, p, cache)
            rhs = inv2 * (((-1) ** k2 * math.comb(k, k2) + pow(2, k, p) - 2) % p) % p * zk % p
            rows.append(_num_case(_istr((k1, k2)), p, lhs, rhs))
    return rows


def verify_depth2(kmax=9, primes=(), cache=None, jobs=1) -> Report:
    """Odd-weight depth-2 closed form against the binomial expression times Zk."""
    rows = _per_prime(partial(_depth2_rows, kmax), list(primes), jobs, cache)
    return _sorted_report("depth2", {"kmax": kmax}, rows)


def _key_rows(wmax, p, cache):
    rows = []
    for index in _indices_of_weight_up_to(wmax):
        k = sum(index)
        if p <= k + 2:
            continue
        lhs = value_of("zeta", index, None, p, cache)
        rhs = 0
        for i in range(len(index) + 1):
            sign = pow(p - 1, sum(index[i:]), p)
            rhs = (rhs + sign
                   * value_of("zeta2", index[:i], None, p, cache)
                   * value_of("zeta2", tuple(reversed(index[i:])), None, p, cache)) % p
        rows.append(_num_case(_istr(index), p, lhs, rhs))
    return rows


def verify_key_identity(wmax=7, primes=(), cache=None, jobs=1) -> Report:
    """Level-1 value as the alternating prefix/reversed-suffix convolution of level-2 values."""
    rows = _per_prime(partial(_key_rows, wmax), list(primes), jobs, cache)
    return _sorted_report("key", {"wmax": wmax}, rows)


def _parity_rows(wmax, p, cache):
    rows = []
    for index in _indices_of_weight_up_to(wmax):
        k, r = sum(index), len(index)
        if p <= k + 2:
            continue
        lhs = value_of("zeta2", index, None, p, cache)
        rhs = 0
        for i in range(r + 1):
            term = (value_of("zeta", tuple(reversed(index[:i])), None, p, cache)
                    * value_of("zeta2star", index[i:], None, p, cache)) % p
            rhs = (rhs + pow(p - 1, i, p) * term) % p
        rhs = pow(p - 1, r + k, p) * rhs % p
        rows.append(_num_case(_istr(index), p, lhs, rhs))
    return rows


def verify_parity(wmax=7, primes=(), cache=None, jobs=1) -> Report:
    """Level-2 value as the signed convolution of reversed level-1 prefixes and star suffixes."""
    rows = _per_prime(partial(_parity_rows, wmax), list(primes), jobs, cache)
    return _sorted_report("parity", {"wmax": wmax}, rows)


def _antipode_num_rows(dmax, wmax, p, cache):
    rows = []
    for index in _indices_of_weight_up_to(wmax, dmax):
        k = sum(index)
        if p <= k + 2:
            continue
        lhs = 0
        for j in range(len(index) + 1):
            term = (value_of("zeta2", tuple(reversed(index[:j])), None, p, cache)
                    * value_of("zeta2star", index[j:], None, p, cache)) % p
            lhs = (lhs + pow(p - 1, j, p) * term) % p
        rows.append(_num_case("num %s" % _istr(index), p, lhs, 0))
    return rows


def verify_antipode(dmax=5, wmax=8, primes=(), cache=None, jobs=1) -> Report:
    """Alternating prefix/star-suffix sums: symbolically zero, and zero mod each prime."""
    rows = []
    for index in _indices_of_weight_up_to(wmax, dmax):
        diff = antipode_sum(index)
        rows.append(Case(case="sym %s" % _istr(index), prime=None,
                         lhs="0" if diff.is_zero() else str(diff), rhs="0",
                         passed=diff.is_zero()))
    rows.extend(_per_prime(partial(_antipode_num_rows, dmax, wmax), list(primes), jobs, cache))
    return _sorted_report("antipode", {"dmax": dmax, "wmax": wmax}, rows)


def _example24_rows(wmax, p, cache):
    rows = []
    inv2 = mod_inv(2, p)
    for k in range(3, wmax + 1, 2):
        if p <= k + 2:
            continue
        for k1 in range(1, k):
            k2 = k - k1
            lhs = value_of("zeta2", (k1, k2), None, p, cache)
            rhs = -inv2 * ((value_of("zeta2", (k,), None, p, cache)
                            + value_of("zeta", (k2, k1), None, p, cache)) % p) % p
            rows.append(_num_case("i %s" % _istr((k1, k2)), p, lhs, rhs))
    for k in range(4, wmax + 1, 2):
        if p <= k + 2:
            continue
        for k1 in range(1, k - 1):
            for k2 in range(1, k - k1):
                k3 = k - k1 - k2
                lhs = value_of("zeta2", (k1, k2, k3), None, p, cache)
                rhs = (value_of("zeta", (k1, k2, k3), None, p, cache)
                       - value_of("zeta2", (k1 + k2, k3), None, p, cache)
                       - value_of("zeta2", (k1, k2 + k3), None, p, cache)
                       + value_of("zeta", (k1, k2), None, p, cache)
                       * value_of("zeta2", (k3,), None, p, cache)) % p
                rhs = inv2 * rhs % p
                rows.append(_num_case("ii %s" % _istr((k1, k2, k3)), p, lhs, rhs))
    return rows


def verify_example24(wmax=9, primes=(), cache=None, jobs=1) -> Report:
    """Two closed-form rewrites: odd-weight pairs and even-weight triples."""
    rows = _per_prime(partial(_example24_rows, wmax), list(primes), jobs, cache)
    return _sorted_report("example24", {"wmax": wmax}, rows)


def _comb0(n, m):
    # binomial with the hard-zero convention outside 0 <= m <= n
    if m < 0 or n < 0 or m > n:
        return 0
    return math.comb(n, m)


def _sum_formula_rows(kmax, p, cache):
    rows = []
    for k in range(1, kmax + 1):
        if p <= k + 2:
            continue
        # odd-entry block sums B(k,i) and B1(k,i), shared across r
        bsum = {}
        b1sum = {}
        for i in range(1, k + 1):
            if (k - i) % 2:
                continue
            tot = tot1 = 0
            for comp in compositions(k, i):
                if all(x % 2 for x in comp):
                    tot = (tot + value_of("zeta2", comp, None, p, cache)) % p
                    if all(x >= 3 for x in comp):
                        tot1 = (tot1 + value_of("zeta2", comp, None, p, cache)) % p
            bsum[i] = tot
            b1sum[i] = tot1
        for r in range(1, k + 1):
            lhs = 0
            for comp in compositions(k, r):
                lhs = (lhs + value_of("zeta2", comp, None, p, cache)) % p
            rhs = 0
            for i in range(1, r + 1):
                if (k - i) % 2:
                    continue
                rhs = (rhs + _comb0((k - i) // 2, r - i) * bsum[i]) % p
            rhs = pow(p - 1, k + r, p) * rhs % p
            rows.append(_num_case("S(%d,%d)" % (k, r), p, lhs, rhs))

            lhs1 = 0
            for comp in compositions(k, r, min_part=2):
                lhs1 = (lhs1 + value_of("zeta2", comp, None, p, cache)) % p
            rhs1 = 0
            for i in range(1, r + 1):
                if (k - i) % 2:
                    continue
                rhs1 = (rhs1 + _comb0((k - 3 * i) // 2, r - i) * b1sum[i]) % p
            rhs1 = pow(p - 1, k + r, p) * rhs1 % p
            rows.append(_num_case("S1(%d,%d)" % (k, r), p, lhs1, rhs1))
    return rows


def verify_sum_formula(kmax=10, primes=(), cache=None, jobs=1) -> Report:
    """Fixed-depth sum formulas against binomial-weighted all-odd block sums."""
    rows = _per_prime(partial(_sum_formula_rows, kmax), list(primes), jobs, cache)
    return _sorted_report("sumformula", {"kmax": kmax}, rows)


def _one_odd_compositions(k, r, i):
    """Compositions of k into r parts with part i odd and every other part even."""
    def rec(remaining, pos):
        if pos == r:
            if remaining == 0:
                yield ()
            return
        lo = 1 if pos == i - 1 else 2
        step = 2
        for x in range(lo, remaining + 1, step):
            tail_min = sum(1 if q == i - 1 else 2 for q in range(pos + 1, r))
            if remaining - x < tail_min:
                break
            for rest in rec(remaining - x, pos + 1):
                yield (x,) + rest
    yield from rec(k, 0)


def _one_odd_lhs(k, r, i, p, cache):
    tot = 0
    for comp in _one_odd_compositions(k, r, i):
        tot = (tot + value_of("zeta2", comp, None, p, cache)) % p
    return tot


def _ppt_special_rows(rmax, p, cache):
    rows = []
    for r in range(1, rmax + 1):
        k = 2 * r - 1
        if p <= k + 2:
            continue
        ref = value_of("zeta2", (k,), None, p, cache)
        for i in range(1, r + 1):
            pattern = (2,) * (i - 1) + (1,) + (2,) * (r - i)
            lhs = value_of("zeta2", pattern, None, p, cache)
            coeff = Fraction((-1) ** (r - 1) * math.comb(2 * r - 1, 2 * i - 1), 2 ** (2 * r - 2))
            rhs = _frac_mod(coeff, p) * ref % p
            rows.append(_num_case("special r=%d i=%d" % (r, i), p, lhs, rhs))
    return rows


def _one_odd_patterns(max_weight):
    pats = []
    for k in range(3, max_weight + 1, 2):
        for r in range(1, (k + 1) // 2 + 1):
            for i in range(1, r + 1):
                pats.append((k, r, i))
    return pats


def ppt_constants(max_weight, primes, cache=None):
    """Reconstructed rational c with (one-odd pattern sum) = c * (depth-1 value).

    Uses every prime where the depth-1 reference value is nonzero; returns a
    dict (k, r, i) -> Fraction or None when reconstruction fails.
    """
    out = {}
    for k, r, i in _one_odd_patterns(max_weight):
        pairs = []
        for p in _filtered(primes, k):
            ref = value_of("zeta2", (k,), None, p, cache)
            if ref == 0:
                continue
            ratio = _one_odd_lhs(k, r, i, p, cache) * mod_inv(ref, p) % p
            pairs.append((ratio, p))
        if not pairs:
            out[(k, r, i)] = None
            continue
        R, M = crt_combine(pairs)
        out[(k, r, i)] = rat_reconstruct(R, M)
    return out


def verify_ppt(rmax=6, primes=(), recon_weight_max=None, cache=None, jobs=1) -> Report:
    """One-odd-rest-even pattern sums as rational multiples of the depth-1 value.

    Part one checks the displayed two-power binomial constant for the
    all-twos-and-one-1 patterns; part two reconstructs the constant for every
    one-odd pattern from training primes and re-verifies it on held-out primes.
    """
    primes = list(primes)
    rows = _per_prime(partial(_ppt_special_rows, rmax), primes, jobs, cache)
    if recon_weight_max is None:
        recon_weight_max = 2 * rmax + 1
    for k, r, i in _one_odd_patterns(recon_weight_max):
        name = "pattern k=%d r=%d i=%d" % (k, r, i)
        usable = _filtered(primes, k)
        split = max(1, (2 * len(usable) + 2) // 3)
        train, held = usable[:split], usable[split:]
        c = ppt_constants(k, train, cache).get((k, r, i)) if train else None
        if c is None:
            rows.append(Case(case=name, prime=None, lhs="reconstruction failed",
                             rhs="rational constant", passed=False))
            continue
        rows.append(Case(case=name + " c", prime=None, lhs=str(c), rhs=str(c), passed=True))
        for p in held:
            lhs = c.denominator * _one_odd_lhs(k, r, i, p, cache) % p
            rhs = c.numerator * value_of("zeta2", (k,), None, p, cache) % p
            rows.append(_num_case(name + " heldout", p, lhs, rhs))
    return _sorted_report("ppt", {"rmax": rmax, "recon_weight_max": recon_weight_max}, rows)


def default_weighted_indices(level, wmax=None, dmax=4):
    """Index families for the permutation-weighted checks.

    Level 1: every index of depth <= dmax and weight <= wmax.  Level 2: the
    hypothesis family (all entries even except an odd last entry).
    """
    if level == 1:
        wmax = 8 if wmax is None else wmax
        return _indices_of_weight_up_to(wmax, dmax)
    wmax = 9 if wmax is None else wmax
    out = []
    for index in _indices_of_weight_up_to(wmax, dmax):
        if index[-1] % 2 == 1 and all(x % 2 == 0 for x in index[:-1]):
            out.append(index)
    return out


def _check_weighted_hypothesis(level, index):
    if level == 2:
        if index[-1] % 2 == 0 or any(x % 2 for x in index[:-1]):
            raise ValueError("level-2 weighted identity needs even entries with an odd last entry, got %r" % (index,))


def _weighted_rows(level, indices, p, cache):
    variant = "zeta" if level == 1 else "zeta2"
    factor = 2 if level == 1 else 1
    rows = []
    for index in indices:
        k, r = sum(index), len(index)
        if p <= k + 2:
            continue
        lhs = 0
        for perm in itertools.permutations(range(r)):
            coeff = r + 1 - 2 * (perm.index(r - 1) + 1)
            if coeff:
                permuted = tuple(index[t] for t in perm)
                lhs = (lhs + coeff * value_of(variant, permuted, None, p, cache)) % p
        csum = 0
        head, last = index[:-1], index[-1]
        for tau in itertools.permutations(range(r - 1)):
            csum += coeff_C(tuple(head[t] for t in tau) + (last,))
        rhs = 0 if csum == 0 else (-1) ** r * factor * csum * Zk(k, p) % p
        rows.append(_num_case(_istr(index), p, lhs, rhs))
    return rows


def verify_weighted_perm(level, indices=None, primes=(), cache=None, jobs=1) -> Report:
    """Position-weighted permutation sums against C-coefficient multiples of Zk."""
    if level not in (1, 2):
        raise ValueError("level must be 1 or 2")
    if indices is None:
        indices = default_weighted_indices(level)
    indices = [tuple(ix) for ix in indices]
    for index in indices:
        if not index:
            raise ValueError("empty index not allowed")
        if len(index) > 4:
            raise ValueError("depth > 4 rejected (cost r!)")
        _check_weighted_hypothesis(level, index)
    rows = _per_prime(partial(_weighted_rows, level, indices), list(primes), jobs, cache)
    return _sorted_report("weighted%d" % level, {"level": level, "indices": len(indices)}, rows)


def _conj38_rows(rmax, p, cache):
    rows = []
    for r in range(1, rmax + 1):
        for a in range(0, r + 1):
            k = r + a
            if p <= k + 2:
                continue
            lhs = 0
            for positions in itertools.combinations(range(r), a):
                index = tuple(2 if t in positions else 1 for t in range(r))
                odd_twos = sum(1 for t in positions if (t + 1) % 2 == 1)
                coeff = (-1) ** odd_twos * 2 ** a - 1
                if coeff:
                    lhs = (lhs + coeff * value_of("zeta2", index, None, p, cache)) % p
            rows.append(_num_case("r=%d a=%d" % (r, a), p, lhs, 0))
    return rows


def verify_conj38(rmax=8, primes=(), cache=None, jobs=1) -> Report:
    """Weighted vanishing sums over {1,2}-indices with a fixed count of twos."""
    rows = _per_prime(partial(_conj38_rows, rmax), list(primes), jobs, cache)
    return _sorted_report("conj38", {"rmax": rmax}, rows)


def verify_lemmas(g_kmax=10, r_wmax=8, r_dmax=4) -> Report:
    """Symbolic checks of the two combinatorial recursions (no primes involved)."""
    rows = []
    for k in range(1, g_kmax + 1):
        for r in range(1, k + 1):
            for a in range(0, r + 1):
                ok = lemma_g_check(k, r, a)
                rows.append(Case(case="g k=%d r=%d a=%d" % (k, r, a), prime=None,
                                 lhs="0" if ok else "nonzero", rhs="0", passed=ok))
    for index in _indices_of_weight_up_to(r_wmax, r_dmax):
        if len(index) >= 2:
            ok = lemma_R_check(index)
            rows.append(Case(case="R %s" % _istr(index), prime=None,
                             lhs="0" if ok else "nonzero", rhs="0", passed=ok))
    return _sorted_report("lemmas", {"g_kmax": g_kmax, "r_wmax": r_wmax, "r_dmax": r_dmax}, rows)
