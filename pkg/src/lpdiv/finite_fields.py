"""Exact arithmetic in GF(p^m) for small p, with bulk character-sum kernels
for p = 2.

Elements are plain ints: for p = 2 the bits are coordinates in the power
basis of the modulus; for odd p the base-p digits are.  A ``FiniteField``
is immutable after construction and safe to share across workers.

The p = 2 character-sum kernel walks the multiplicative group as powers of
the field generator.  Two realizations exist behind ``char_sum``:

* a table kernel (m <= ``TABLE_MAX_M``): one full power table g^0..g^{N-1}
  is built by repeated doubling, after which any rational map is evaluated
  on the whole group with vectorized index arithmetic;
* a streaming kernel (larger m, maps with monomial denominator): the index
  range is cut into fixed chunks, each chunk's starting power is computed
  by square-and-multiply, and within a chunk the geometric progressions
  g^{e*i} advance through precomputed block tables.  Chunks may run in
  parallel processes; partial sums are exact ints, so the result does not
  depend on the partitioning.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from . import gfpoly

DEFAULT_MAX_M = 34
TABLE_MAX_M = 22
_BLOCK = 1 << 18
_CHUNK = 1 << 20
THREADS_ENV_VAR = "LPDIV_THREADS"


class NoPrime(ValueError):
    """The requested characteristic is not a prime number."""


class ModulusReducible(ValueError):
    """A supplied field modulus factors over GF(p)."""


class TooLarge(ValueError):
    """An enumeration exceeds the configured bound."""


class Pole:
    """Outcome of evaluating a rational map where its denominator vanishes."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "POLE"


POLE = Pole()


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def factor_int(n: int) -> dict[int, int]:
    """Prime factorization by trial division (fine for n <= ~2^40)."""
    out: dict[int, int] = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def resolve_threads(threads: int | None) -> int:
    if threads is not None:
        if threads < 1:
            raise ValueError("threads must be >= 1")
        return threads
    env = os.environ.get(THREADS_ENV_VAR)
    if env:
        return max(1, int(env))
    return os.cpu_count() or 1


@dataclass(frozen=True)
class RationalMap:
    """A rational function num(x)/den(x) with coefficients in GF(p).

    Stored reduced: num and den share no factor over GF(p), and den is
    monic.  Construct with ascending coefficient sequences.
    """

    p: int
    num: tuple[int, ...]
    den: tuple[int, ...]

    def __init__(self, p: int, num, den=(1,)):
        num_n = gfpoly.normalize(num, p)
        den_n = gfpoly.normalize(den, p)
        if not den_n:
            raise ZeroDivisionError("rational map with zero denominator")
        g = gfpoly.gcd(num_n, den_n, p)
        if gfpoly.degree(g) > 0:
            num_n = gfpoly.divmod_(num_n, g, p)[0]
            den_n = gfpoly.divmod_(den_n, g, p)[0]
        inv_lead = pow(den_n[-1], p - 2, p)
        if inv_lead != 1:
            num_n = gfpoly.normalize([c * inv_lead for c in num_n], p)
            den_n = gfpoly.normalize([c * inv_lead for c in den_n], p)
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "num", num_n)
        object.__setattr__(self, "den", den_n)

    def to_json_dict(self) -> dict:
        return {"num": list(self.num), "den": list(self.den)}

    @classmethod
    def from_json_dict(cls, obj: dict, p: int) -> "RationalMap":
        return cls(p, tuple(obj["num"]), tuple(obj["den"]))

    def laurent_exponents(self) -> tuple[int, ...] | None:
        """Exponent multiset of f as a Laurent polynomial, or None when the
        denominator is not a monomial."""
        support = [i for i, c in enumerate(self.den) if c]
        if len(support) != 1:
            return None
        j = support[0]
        return tuple(e - j for e, c in enumerate(self.num) if c)


class FiniteField:
    """GF(p^m) with a fixed monic irreducible modulus and a known generator
    of the multiplicative group."""

    def __init__(self, p: int, m: int, modulus: tuple[int, ...] | None = None):
        if not _is_prime(p):
            raise NoPrime(f"{p} is not prime")
        if m < 1:
            raise ValueError("extension degree must be >= 1")
        if modulus is None:
            modulus = _default_modulus(p, m)
        else:
            modulus = gfpoly.normalize(modulus, p)
            if gfpoly.degree(modulus) != m or modulus[-1] != 1:
                raise ValueError(f"modulus must be monic of degree {m}")
            if not gfpoly.is_irreducible(modulus, p):
                raise ModulusReducible(f"modulus {list(modulus)} factors over GF({p})")
        self.p = p
        self.m = m
        self.modulus = modulus
        self.order = p**m
        if p == 2:
            self._mod_int = gfpoly.encode(modulus, 2)
            self._top_bit = 1 << m
        self.generator = self._find_generator()
        if p == 2:
            self._trace_mask = self._build_trace_mask()
        self._exps = None
        self._logs = None
        self._small_exps = None
        self._small_logs = None

    # -- scalar arithmetic ------------------------------------------------

    def add(self, a: int, b: int) -> int:
        if self.p == 2:
            return a ^ b
        p = self.p
        out = 0
        mult = 1
        for _ in range(self.m):
            out += ((a + b) % p) * mult
            a //= p
            b //= p
            mult *= p
        return out

    def sub(self, a: int, b: int) -> int:
        if self.p == 2:
            return a ^ b
        return self.add(a, self.neg(b))

    def neg(self, a: int) -> int:
        if self.p == 2:
            return a
        p = self.p
        out = 0
        mult = 1
        for _ in range(self.m):
            out += ((-a) % p) * mult
            a //= p
            mult *= p
        return out

    def mul(self, a: int, b: int) -> int:
        if self.p == 2:
            r = 0
            mod_int = self._mod_int
            top = self._top_bit
            while b:
                if b & 1:
                    r ^= a
                b >>= 1
                a <<= 1
                if a & top:
                    a ^= mod_int
            return r
        prod = gfpoly.mul(self.coeff_vector(a), self.coeff_vector(b), self.p)
        return self.from_coeff_vector(gfpoly.mod(prod, self.modulus, self.p))

    def pow_el(self, a: int, e: int) -> int:
        if e < 0:
            return self.pow_el(self.inv(a), -e)
        r = 1
        while e:
            if e & 1:
                r = self.mul(r, a)
            a = self.mul(a, a)
            e >>= 1
        return r

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return self.pow_el(a, self.order - 2)

    def trace(self, a: int) -> int:
        """Trace down to GF(p): a + a^p + ... + a^(p^(m-1))."""
        if self.p == 2:
            return (a & self._trace_mask).bit_count() & 1
        acc = 0
        x = a
        for _ in range(self.m):
            acc = self.add(acc, x)
            x = self.pow_el(x, self.p)
        return acc  # lies in the prime field, so the encoding is the value

    def elements(self) -> range:
        return range(self.order)

    def coeff_vector(self, a: int) -> tuple[int, ...]:
        if self.p == 2:
            return tuple((a >> i) & 1 for i in range(self.m))
        out = []
        for _ in range(self.m):
            out.append(a % self.p)
            a //= self.p
        return tuple(out)

    def from_coeff_vector(self, vec) -> int:
        out = 0
        for c in reversed(tuple(vec)):
            out = out * self.p + (c % self.p)
        return out

    def to_json_dict(self) -> dict:
        return {"p": self.p, "m": self.m, "modulus": list(self.modulus)}

    def __repr__(self):
        return f"FiniteField(p={self.p}, m={self.m})"

    # -- construction helpers ---------------------------------------------

    def _find_generator(self) -> int:
        n = self.order - 1
        if n == 1:
            return 1
        prime_divs = sorted(factor_int(n))
        for cand in range(2, self.order):
            if all(self.pow_el(cand, n // r) != 1 for r in prime_divs):
                return cand
        raise AssertionError("no generator found; modulus not irreducible?")

    def _build_trace_mask(self) -> int:
        # Tr is GF(2)-linear, so one AND + popcount-parity per element once
        # the traces of the power-basis elements are known.
        mask = 0
        for j in range(self.m):
            x = 1 << j
            acc = 0
            y = x
            for _ in range(self.m):
                acc ^= y
                y = self.mul(y, y)
            if acc == 1:
                mask |= 1 << j
        return mask

    # -- bulk kernels (p = 2) ----------------------------------------------

    def _byte_tables(self, c: int) -> np.ndarray:
        """tables[b][v] = c * (v << 8b) for v in [0, 256); multiplying a whole
        uint64 array by the constant c is then a few table gathers."""
        nbytes = (self.m + 7) // 8
        tables = np.zeros((nbytes, 256), dtype=np.uint64)
        mod_int = self._mod_int
        top = self._top_bit
        basis = c
        for b in range(nbytes):
            row = tables[b]
            bas = []
            t = basis
            for _ in range(8):
                bas.append(t)
                t <<= 1
                if t & top:
                    t ^= mod_int
            basis = t
            for v in range(1, 256):
                low = v & -v
                row[v] = row[v ^ low] ^ np.uint64(bas[low.bit_length() - 1])
        return tables

    def _const_mul_block(self, c: int, block: np.ndarray) -> np.ndarray:
        if c == 0:
            return np.zeros_like(block)
        tables = self._byte_tables(c)
        out = tables[0][block & np.uint64(0xFF)]
        for b in range(1, tables.shape[0]):
            out ^= tables[b][(block >> np.uint64(8 * b)) & np.uint64(0xFF)]
        return out

    def power_tables(self) -> tuple[np.ndarray, np.ndarray]:
        """(exps, logs): exps[i] = g^i for i < 2^m - 1, logs its inverse
        permutation (logs[0] is unused).  Built once, cached."""
        if self._exps is None:
            n = self.order - 1
            exps = np.zeros(max(n, 1), dtype=np.uint64)
            exps[0] = 1
            filled = 1
            while filled < n:
                step = min(filled, n - filled)
                c = self.pow_el(self.generator, filled)
                exps[filled : filled + step] = self._const_mul_block(c, exps[:step])
                filled += step
            logs = np.zeros(self.order, dtype=np.int64)
            logs[exps] = np.arange(max(n, 1), dtype=np.int64)
            self._exps = exps
            self._logs = logs
        return self._exps, self._logs

    def bulk_trace_bits(self, block: np.ndarray) -> np.ndarray:
        return (np.bitwise_count(block & np.uint64(self._trace_mask)) & np.uint8(1)).astype(
            np.int64
        )

    def geometric_block(self, ratio: int, length: int) -> np.ndarray:
        """[ratio^0, ratio^1, ..., ratio^(length-1)] by repeated doubling."""
        out = np.zeros(length, dtype=np.uint64)
        out[0] = 1
        filled = 1
        while filled < length:
            step = min(filled, length - filled)
            c = self.pow_el(ratio, filled)
            out[filled : filled + step] = self._const_mul_block(c, out[:step])
            filled += step
        return out

    # -- small-field log tables (odd p) -------------------------------------

    def small_log_tables(self) -> tuple[list[int], list[int]]:
        """Discrete log/antilog lists for small fields (Zech-style usage:
        quadratic characters, inverses); order capped at 2^22."""
        if self.order > 1 << 22:
            raise TooLarge("log tables capped at order 2^22")
        if self._small_exps is None:
            n = self.order - 1
            exps = [1] * max(n, 1)
            logs = [0] * self.order
            x = 1
            for i in range(n):
                exps[i] = x
                logs[x] = i
                x = self.mul(x, self.generator)
            self._small_exps = exps
            self._small_logs = logs
        return self._small_exps, self._small_logs


@lru_cache(maxsize=None)
def _cached_field(p: int, m: int, modulus: tuple[int, ...] | None) -> FiniteField:
    return FiniteField(p, m, modulus)


@lru_cache(maxsize=None)
def _default_modulus(p: int, m: int) -> tuple[int, ...]:
    # Lexicographically-first monic irreducible: scan by encoded value of the
    # non-leading coefficients.
    for cand in gfpoly.monic_polys(m, p):
        if gfpoly.is_irreducible(cand, p):
            return cand
    raise AssertionError(f"no irreducible polynomial of degree {m} over GF({p})")


def make_field(p: int, m: int, modulus=None) -> FiniteField:
    """Field constructor; instances are cached and shared (they are
    immutable)."""
    mod_key = tuple(int(c) for c in modulus) if modulus is not None else None
    return _cached_field(p, m, mod_key)


def field_from_json_dict(obj: dict) -> FiniteField:
    return make_field(int(obj["p"]), int(obj["m"]), obj.get("modulus"))


def trace(field: FiniteField, x: int) -> int:
    return field.trace(x)


def eval_rational_map(field: FiniteField, f: RationalMap, x: int):
    """f(x), or POLE where the denominator vanishes."""
    if f.p != field.p:
        raise ValueError("rational map characteristic does not match the field")
    den = _eval_poly(field, f.den, x)
    if den == 0:
        return POLE
    num = _eval_poly(field, f.num, x)
    if num == 0:
        return 0
    return field.mul(num, field.inv(den))


def _eval_poly(field: FiniteField, coeffs: tuple[int, ...], x: int) -> int:
    acc = 0
    for c in reversed(coeffs):
        acc = field.add(field.mul(acc, x), c % field.p)
    return acc


def char_sum(
    field: FiniteField,
    f: RationalMap,
    *,
    threads: int | None = None,
    max_m: int = DEFAULT_MAX_M,
    table_max_m: int = TABLE_MAX_M,
) -> int:
    """Sum of (-1)^Tr(f(x)) over every x in the field where f is defined.

    Exact, and independent of how the enumeration is chunked.
    """
    if field.p != 2:
        raise ValueError("character sums are implemented for p = 2 only")
    if f.p != 2:
        raise ValueError("rational map must be over GF(2)")
    if field.m > max_m:
        raise TooLarge(f"m = {field.m} exceeds the enumeration bound {max_m}")
    if field.m <= table_max_m:
        return _char_sum_table(field, f)
    exponents = f.laurent_exponents()
    if exponents is None:
        raise TooLarge(
            f"m = {field.m} exceeds the power-table bound {table_max_m} and the "
            "denominator is not a monomial; raise table_max_m to proceed"
        )
    return _char_sum_stream(field, f, exponents, resolve_threads(threads))


def _zero_point_term(field: FiniteField, f: RationalMap) -> int:
    if f.den[0] % 2 == 0:
        return 0  # x = 0 is a pole
    f0 = f.num[0] % 2 if f.num else 0
    tr0 = (field.m & 1) if f0 else 0
    return 1 - 2 * tr0


def _char_sum_table(field: FiniteField, f: RationalMap) -> int:
    n = field.order - 1
    exps, logs = field.power_tables()
    num_terms = [e for e, c in enumerate(f.num) if c]
    den_terms = [e for e, c in enumerate(f.den) if c]
    total = _zero_point_term(field, f)
    for lo in range(0, n, _CHUNK):
        hi = min(lo + _CHUNK, n)
        i = np.arange(lo, hi, dtype=np.int64)

        def eval_terms(terms):
            vals = np.zeros(hi - lo, dtype=np.uint64)
            for e in terms:
                if e == 0:
                    vals ^= np.uint64(1)
                else:
                    vals ^= exps[(e * i) % n]
            return vals

        num_vals = eval_terms(num_terms)
        den_vals = eval_terms(den_terms)
        defined = den_vals != 0
        nz = defined & (num_vals != 0)
        f_vals = np.zeros_like(num_vals)
        f_vals[nz] = exps[(logs[num_vals[nz]] - logs[den_vals[nz]]) % n]
        tr = field.bulk_trace_bits(f_vals)
        total += int(defined.sum()) - 2 * int(tr[defined].sum())
    return total


def _stream_range(args) -> int:
    p, m, modulus, exponents, lo, hi = args
    field = make_field(p, m, modulus)
    n = field.order - 1
    length = min(_BLOCK, n)
    tables = [field.geometric_block(field.pow_el(field.generator, e % n), length) for e in exponents]
    mask = np.uint64(field._trace_mask)
    partial = 0
    for start in range(lo, hi, length):
        cnt = min(length, hi - start)
        w = np.zeros(cnt, dtype=np.uint64)
        for e, table in zip(exponents, tables):
            c0 = field.pow_el(field.generator, (e * start) % n)
            w ^= field._const_mul_block(c0, table[:cnt])
        tr = (np.bitwise_count(w & mask) & np.uint8(1)).astype(np.int64)
        partial += cnt - 2 * int(tr.sum())
    return partial


def _char_sum_stream(
    field: FiniteField, f: RationalMap, exponents: tuple[int, ...], threads: int
) -> int:
    n = field.order - 1
    total = _zero_point_term(field, f)
    bounds = [n * t // threads for t in range(threads + 1)]
    jobs = [
        (field.p, field.m, field.modulus, exponents, bounds[t], bounds[t + 1])
        for t in range(threads)
        if bounds[t] < bounds[t + 1]
    ]
    if len(jobs) <= 1:
        return total + sum(_stream_range(job) for job in jobs)
    from concurrent.futures import ProcessPoolExecutor

    with ProcessPoolExecutor(max_workers=len(jobs)) as pool:
        return total + sum(pool.map(_stream_range, jobs))
