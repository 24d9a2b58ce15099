"""Evaluation of finite multiple zeta value variants mod p.

Index convention: in zeta(k_1,...,k_r) the exponent k_1 is attached to the
smallest summation variable, so the sum runs over 0 < m_1 < ... < m_r < p
(level 1) or with m_r <= (p-1)/2 (level 2, "below p/2").  Variants:

  zeta       level 1, strict sum up to p-1
  zeta2      level 2, strict sum up to (p-1)/2
  zeta2star  level 2, non-strict (<=) sum up to (p-1)/2
  euler      level 1 with numerator signs eps_i^(m_i), eps_i in {+1,-1}

The streaming DP holds r running accumulators T_1..T_r with
T_j(M) = T_j(M-1) + T_{j-1}(M-1) * M^(-k_j); inverses are produced in
4096-element batches (one modular inversion per batch).
"""

import os
from dataclasses import dataclass, field
from itertools import islice

from .modmath import batch_inv, check_prime, is_prime

__all__ = [
    "VARIANTS",
    "eval_zeta",
    "eval_zeta2",
    "eval_zeta2_star",
    "eval_euler",
    "eval_even_form",
    "eval_odd_form",
    "eval_table",
    "value_of",
    "ResidueTable",
    "ResidueCache",
    "CacheError",
    "index_to_str",
    "parse_index",
    "signs_to_str",
    "parse_signs",
    "clear_memo",
]

VARIANTS = ("zeta", "zeta2", "zeta2star", "euler")

_BLOCK = 4096


class CacheError(Exception):
    pass


def check_index(index) -> tuple[int, ...]:
    index = tuple(index)
    if any(not isinstance(k, int) or k < 1 for k in index):
        raise ValueError("index entries must be positive integers, got %r" % (index,))
    return index


def index_to_str(index) -> str:
    return ",".join(str(k) for k in index)


def parse_index(s: str) -> tuple[int, ...]:
    if not s:
        return ()
    return check_index(int(part) for part in s.split(","))


def signs_to_str(signs) -> str:
    return ",".join("+" if e > 0 else "-" for e in signs)


def parse_signs(s: str) -> tuple[int, ...]:
    if not s:
        return ()
    out = []
    for part in s.split(","):
        if part == "+":
            out.append(1)
        elif part == "-":
            out.append(-1)
        else:
            raise ValueError("bad sign %r" % part)
    return tuple(out)


def _dp_sum(ks, values, p, strict=True, signs=None):
    # core streaming recurrence; `values` iterates the summation range ascending
    r = len(ks)
    if r == 0:
        return 1
    T = [1] + [0] * r
    order = range(r, 0, -1) if strict else range(1, r + 1)
    it = iter(values)
    while True:
        block = list(islice(it, _BLOCK))
        if not block:
            break
        invs = batch_inv(block, p)
        for m, im in zip(block, invs):
            for j in order:
                t = T[j - 1]
                if t:
                    w = pow(im, ks[j - 1], p)
                    if signs is not None and signs[j - 1] < 0 and m & 1:
                        w = p - w
                    T[j] = (T[j] + t * w) % p
    return T[r]


def eval_zeta(index, p: int) -> int:
    """Level-1 value: sum over 0 < m_1 < ... < m_r < p of prod m_i^(-k_i) mod p."""
    index = check_index(index)
    check_prime(p)
    return _dp_sum(index, range(1, p), p)


def eval_zeta2(index, p: int) -> int:
    """Level-2 value: same sum restricted to m_r <= (p-1)/2."""
    index = check_index(index)
    check_prime(p)
    return _dp_sum(index, range(1, (p - 1) // 2 + 1), p)


def eval_zeta2_star(index, p: int) -> int:
    """Level-2 star value: non-strict sum 0 < m_1 <= ... <= m_r <= (p-1)/2."""
    index = check_index(index)
    check_prime(p)
    return _dp_sum(index, range(1, (p - 1) // 2 + 1), p, strict=False)


def eval_euler(index, signs, p: int) -> int:
    """Signed level-1 sum with numerators eps_i^(m_i)."""
    index = check_index(index)
    signs = tuple(signs)
    if len(signs) != len(index) or any(e not in (1, -1) for e in signs):
        raise ValueError("signs must be a +/-1 vector matching the index depth")
    check_prime(p)
    return _dp_sum(index, range(1, p), p, signs=signs)


def eval_even_form(index, p: int) -> int:
    """2^k times the level-1-style sum over even n_1 < ... < n_r < p.

    Must agree with eval_zeta2; kept as an independent summation route.
    """
    index = check_index(index)
    check_prime(p)
    k = sum(index)
    return pow(2, k, p) * _dp_sum(index, range(2, p, 2), p) % p


def eval_odd_form(index, p: int) -> int:
    """(-2)^k times the sum over odd n_r < ... < n_1 < p (exponents reversed).

    Must agree with eval_zeta2; kept as an independent summation route.
    """
    index = check_index(index)
    check_prime(p)
    k = sum(index)
    return pow(p - 2, k, p) * _dp_sum(tuple(reversed(index)), range(1, p, 2), p) % p


# ---------------------------------------------------------------------------
# cache + batch driver

@dataclass
class ResidueTable:
    variant: str
    index: tuple[int, ...]
    signs: tuple[int, ...] | None
    rows: dict[int, int] = field(default_factory=dict)


class ResidueCache:
    """Append-only text cache, one cell per line: variant,index,signs,p,residue.

    The whole file is read at construction; add() appends a line immediately.
    Only one process may write (the CLI and suites route all writes through
    the parent process).
    """

    def __init__(self, path: str):
        self.path = path
        self._cells: dict[tuple, int] = {}
        self._fh = None
        if os.path.exists(path):
            self._load()

    def _load(self):
        with open(self.path, "r", encoding="ascii") as fh:
            for lineno, raw in enumerate(fh, start=1):
                line = raw.strip()
                if not line:
                    continue
                try:
                    key, residue = self._parse_line(line)
                except Exception:
                    raise CacheError("%s:%d: bad cache line: %r" % (self.path, lineno, line))
                self._cells[key] = residue

    @staticmethod
    def _parse_line(line: str):
        parts = line.split(",")
        variant = parts[0]
        if variant not in VARIANTS:
            raise ValueError("unknown variant")
        residue = int(parts[-1])
        p = int(parts[-2])
        middle = parts[1:-2]
        if middle and middle[-1] == "":
            index = tuple(int(x) for x in middle[:-1])
            signs = None
        else:
            cut = next(i for i, x in enumerate(middle) if x in ("+", "-"))
            index = tuple(int(x) for x in middle[:cut])
            signs = parse_signs(",".join(middle[cut:]))
        if not index or any(k < 1 for k in index):
            raise ValueError("bad index")
        if (variant == "euler") != (signs is not None):
            raise ValueError("signs/variant mismatch")
        if signs is not None and len(signs) != len(index):
            raise ValueError("signs length mismatch")
        if p < 5 or not is_prime(p) or not 0 <= residue < p:
            raise ValueError("bad prime or residue")
        return (variant, index, signs, p), residue

    def get(self, variant, index, signs, p):
        return self._cells.get((variant, tuple(index), signs, p))

    def add(self, variant, index, signs, p, residue):
        key = (variant, tuple(index), signs, p)
        if key in self._cells:
            return
        self._cells[key] = residue
        if self._fh is None:
            self._fh = open(self.path, "a", encoding="ascii")
        sgn = signs_to_str(signs) if signs is not None else ""
        self._fh.write("%s,%s,%s,%d,%d\n" % (variant, index_to_str(index), sgn, p, residue))
        self._fh.flush()

    def close(self):
        if self._fh is not None:
            self._fh.close()
            self._fh = None

    def __len__(self):
        return len(self._cells)


# process-level memo of computed cells; purely an optimization
_MEMO: dict[tuple, int] = {}


def clear_memo():
    _MEMO.clear()


def memo_keys():
    return set(_MEMO)


def memo_new_since(keys):
    # cells added after a memo_keys() snapshot; lets pool workers ship results back
    return {k: v for k, v in _MEMO.items() if k not in keys}


def memo_merge(cells):
    _MEMO.update(cells)


def compute_cell(variant: str, index, signs, p: int) -> int:
    """Uncached single-cell evaluation (also the worker entry for pools)."""
    if variant == "zeta":
        return eval_zeta(index, p)
    if variant == "zeta2":
        return eval_zeta2(index, p)
    if variant == "zeta2star":
        return eval_zeta2_star(index, p)
    if variant == "euler":
        return eval_euler(index, signs, p)
    raise ValueError("unknown variant %r" % variant)


def value_of(variant: str, index, signs, p: int, cache: ResidueCache | None = None) -> int:
    """Memoized single-cell evaluation, consulting/updating the disk cache if given."""
    index = tuple(index)
    if not index:
        return 1
    key = (variant, index, signs, p)
    v = _MEMO.get(key)
    if v is not None:
        return v
    if cache is not None:
        v = cache.get(variant, index, signs, p)
        if v is not None:
            _MEMO[key] = v
            return v
    v = compute_cell(variant, index, signs, p)
    _MEMO[key] = v
    if cache is not None:
        cache.add(variant, index, signs, p, v)
    return v


def eval_table(variant, index, signs=None, primes=(), cache=None, jobs=1) -> ResidueTable:
    """Evaluate one cell per prime; primes must be nonempty and ascending."""
    if variant not in VARIANTS:
        raise ValueError("unknown variant %r" % (variant,))
    index = check_index(index)
    if (variant == "euler") != (signs is not None):
        raise ValueError("euler requires signs; other variants forbid them")
    if signs is not None:
        signs = tuple(signs)
    primes = list(primes)
    if not primes or any(b <= a for a, b in zip(primes, primes[1:])):
        raise ValueError("primes must be a nonempty ascending list")
    for p in primes:
        check_prime(p)
    rows = {}
    if jobs > 1 and index:
        todo = []
        for p in primes:
            key = (variant, index, signs, p)
            if key in _MEMO:
                rows[p] = _MEMO[key]
            elif cache is not None and cache.get(variant, index, signs, p) is not None:
                rows[p] = _MEMO[key] = cache.get(variant, index, signs, p)
            else:
                todo.append(p)
        if todo:
            from concurrent.futures import ProcessPoolExecutor

            with ProcessPoolExecutor(max_workers=jobs) as pool:
                results = list(pool.map(_pool_cell, [(variant, index, signs, p) for p in todo]))
            for p, v in zip(todo, results):
                rows[p] = _MEMO[(variant, index, signs, p)] = v
                if cache is not None:
                    cache.add(variant, index, signs, p, v)
    else:
        for p in primes:
            rows[p] = value_of(variant, index, signs, p, cache)
    return ResidueTable(variant=variant, index=index, signs=signs, rows=rows)


def _pool_cell(args):
    return compute_cell(*args)
