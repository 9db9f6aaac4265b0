"""Arithmetic in F_q (q = p^m) and in the working extension F_q[x]/(f).

Base-field elements are plain ints in ``[0, q)``: digit ``i`` of the
base-p expansion is the coefficient of ``y^i`` in F_p[y]/(modulus).
Extension elements are length-n coefficient vectors; their integer
*index* ``sum(c_i * q**i)`` is the vertex label used by graph code, and it
coincides with the base-p packing of all n*m prime-field digits.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property

import numpy as np

from . import poly
from .factor import is_prime
from .errors import (
    DegreeMismatch,
    DegreeTooSmall,
    DivisionByZero,
    FieldMismatch,
    NotMonic,
    NotPrime,
    ReducibleModulus,
    SizeGuard,
    UsageError,
)

SIZE_GUARD = 2**24
MAX_Q = 2**62
_TABLE_Q = 4096  # largest q for dense q*q numpy tables


@dataclass(frozen=True)
class BaseField:
    """F_q with q = p^m, elements encoded as ints in [0, q)."""

    p: int
    m: int = 1
    modulus: tuple = ()

    @property
    def q(self) -> int:
        return self.p**self.m

    @property
    def is_prime(self) -> bool:
        return self.m == 1

    def __repr__(self) -> str:
        if self.m == 1:
            return f"F_{self.p}"
        return f"F_{self.q}[{poly.format_list(self.modulus)}]"

    # -- scalar ops ---------------------------------------------------------

    def digits(self, a: int) -> list[int]:
        p = self.p
        out = []
        for _ in range(self.m):
            out.append(a % p)
            a //= p
        return out

    def from_digits(self, ds) -> int:
        v = 0
        for d in reversed(list(ds)):
            v = v * self.p + d
        return v

    def add(self, a: int, b: int) -> int:
        p = self.p
        if self.m == 1:
            return (a + b) % p
        if p == 2:
            return a ^ b
        out, w = 0, 1
        while a or b:
            out += ((a % p + b % p) % p) * w
            a //= p
            b //= p
            w *= p
        return out

    def neg(self, a: int) -> int:
        p = self.p
        if self.m == 1:
            return -a % p
        if p == 2:
            return a
        out, w = 0, 1
        while a:
            out += (-(a % p) % p) * w
            a //= p
            w *= p
        return out

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if self.m == 1:
            return a * b % self.p
        if a == 0 or b == 0:
            return 0
        tables = self._log_tables
        if tables is None:
            return self._mul_poly(a, b)
        exp, log = tables
        return exp[(log[a] + log[b]) % (self.q - 1)]

    def inv(self, a: int) -> int:
        if a == 0:
            raise DivisionByZero("inverse of zero in base field")
        if self.m == 1:
            return pow(a, -1, self.p)
        tables = self._log_tables
        if tables is None:
            return self.pow(a, self.q - 2)
        exp, log = tables
        return exp[(-log[a]) % (self.q - 1)]

    def pow(self, a: int, e: int) -> int:
        if self.m == 1:
            return pow(a, e, self.p)
        result = 1
        while e:
            if e & 1:
                result = self.mul(result, a)
            e >>= 1
            if e:
                a = self.mul(a, a)
        return result

    def _mul_poly(self, a: int, b: int) -> int:
        Fp = prime_field(self.p)
        prod = poly.mod(Fp, poly.mul(Fp, poly.trim(self.digits(a)), poly.trim(self.digits(b))), self.modulus)
        return self.from_digits(prod)

    @cached_property
    def _log_tables(self):
        q = self.q
        if self.m == 1 or q > 2**20:
            return None
        order = q - 1
        primes = poly._prime_divisors(order)
        for g in range(2, q):
            if all(self._pow_poly(g, order // r) != 1 for r in primes):
                break
        exp = [0] * order
        log = [0] * q
        x = 1
        for k in range(order):
            exp[k] = x
            log[x] = k
            x = self._mul_poly(x, g)
        return exp, log

    def _pow_poly(self, a: int, e: int) -> int:
        result = 1
        while e:
            if e & 1:
                result = self._mul_poly(result, a)
            e >>= 1
            if e:
                a = self._mul_poly(a, a)
        return result

    # -- dense tables for vectorized code -----------------------------------

    def _check_table(self):
        if self.q > _TABLE_Q:
            raise SizeGuard(f"q={self.q} too large for dense field tables")

    @cached_property
    def add_table(self) -> np.ndarray:
        self._check_table()
        q = self.q
        if self.m == 1:
            a = np.arange(q)
            return (a[:, None] + a[None, :]) % q
        return np.array([[self.add(a, b) for b in range(q)] for a in range(q)], dtype=np.int64)

    @cached_property
    def mul_table(self) -> np.ndarray:
        self._check_table()
        q = self.q
        if self.m == 1:
            a = np.arange(q)
            return (a[:, None] * a[None, :]) % q
        return np.array([[self.mul(a, b) for b in range(q)] for a in range(q)], dtype=np.int64)

    @cached_property
    def neg_table(self) -> np.ndarray:
        return np.array([self.neg(a) for a in range(self.q)], dtype=np.int64)


_PRIME_FIELDS: dict[int, BaseField] = {}


def prime_field(p: int) -> BaseField:
    F = _PRIME_FIELDS.get(p)
    if F is None:
        F = _PRIME_FIELDS[p] = BaseField(p, 1, ())
    return F


def monic_from_index(q: int, k: int, t: int) -> tuple:
    """The t-th monic polynomial of degree k (constant term varies fastest)."""
    out = []
    for _ in range(k):
        out.append(t % q)
        t //= q
    out.append(1)
    return tuple(out)


def base_field_new(p: int, m: int = 1, modulus=None) -> BaseField:
    """Validated F_{p^m}; without a modulus the canonically first irreducible is used."""
    if not isinstance(p, int) or not is_prime(p):
        raise NotPrime(f"{p} is not prime")
    if m < 1:
        raise DegreeMismatch("extension degree m must be >= 1")
    if p**m > MAX_Q:
        raise SizeGuard(f"q = {p}^{m} does not fit in a machine word")
    Fp = prime_field(p)
    if m == 1:
        if modulus is not None and len(poly.trim(modulus)) not in (0, 2):
            raise DegreeMismatch("modulus degree must equal m")
        return Fp
    if modulus is None:
        for t in range(p**m):
            cand = monic_from_index(p, m, t)
            if poly.is_irreducible(Fp, cand):
                modulus = cand
                break
    modulus = poly.trim(modulus)
    if any(not 0 <= c < p for c in modulus):
        raise UsageError("modulus coefficients must lie in [0, p)")
    if len(modulus) - 1 != m:
        raise DegreeMismatch(f"modulus has degree {len(modulus) - 1}, expected {m}")
    if modulus[-1] != 1:
        raise NotMonic("modulus must be monic")
    if not poly.is_irreducible(Fp, modulus):
        raise ReducibleModulus(f"{poly.format_list(modulus)} is reducible over F_{p}")
    return BaseField(p, m, modulus)


@dataclass(frozen=True)
class ExtField:
    """F_{q^n} = F_q[x]/(f); the unit group has order N = q^n - 1."""

    base: BaseField
    f: tuple
    allow_large: bool = field(default=False, compare=False)

    @property
    def n(self) -> int:
        return len(self.f) - 1

    @property
    def q(self) -> int:
        return self.base.q

    @property
    def size(self) -> int:
        """q^n, the number of field elements (and of vertex indices)."""
        return self.base.q ** self.n

    @property
    def N(self) -> int:
        return self.size - 1

    def __repr__(self) -> str:
        return f"ExtField({self.base!r}, f={poly.format_list(self.f)})"

    def check_size(self):
        if self.N > SIZE_GUARD and not self.allow_large:
            raise SizeGuard(f"N = {self.N} exceeds the 2^24 table guard (use force)")

    # -- element constructors -----------------------------------------------

    def element(self, coeffs) -> Xelt:
        c = list(coeffs)
        if len(c) > self.n:
            return Xelt(self, self._reduce_poly(poly.trim(c)))
        c += [0] * (self.n - len(c))
        return Xelt(self, tuple(c))

    def from_index(self, idx: int) -> Xelt:
        q = self.q
        c = []
        for _ in range(self.n):
            c.append(idx % q)
            idx //= q
        return Xelt(self, tuple(c))

    @property
    def one(self) -> Xelt:
        return Xelt(self, (1,) + (0,) * (self.n - 1))

    @property
    def zero(self) -> Xelt:
        return Xelt(self, (0,) * self.n)

    @property
    def alpha(self) -> Xelt:
        return Xelt(self, (0, 1) + (0,) * (self.n - 2))

    def evaluate(self, g, at: Xelt | None = None) -> Xelt:
        """g(at) for a polynomial g over F_q; ``at`` defaults to alpha."""
        if at is None:
            return self.element(self._reduce_poly(poly.trim(g)))
        acc = self.zero
        for c in reversed(g):
            acc = acc * at + self.scalar(c)
        return acc

    def scalar(self, c: int) -> Xelt:
        return Xelt(self, (c,) + (0,) * (self.n - 1))

    # -- raw tuple arithmetic -----------------------------------------------

    @cached_property
    def _fneg(self) -> tuple:
        F = self.base
        return tuple(F.neg(c) for c in self.f[:-1])

    def _reduce_poly(self, a: tuple) -> tuple:
        r = poly.mod(self.base, a, self.f)
        return tuple(r) + (0,) * (self.n - len(r))

    def _add(self, a: tuple, b: tuple) -> tuple:
        F = self.base
        if F.m == 1:
            p = F.p
            return tuple((x + y) % p for x, y in zip(a, b))
        return tuple(F.add(x, y) for x, y in zip(a, b))

    def _neg(self, a: tuple) -> tuple:
        F = self.base
        return tuple(F.neg(x) for x in a)

    def _mul(self, a: tuple, b: tuple) -> tuple:
        n = self.n
        F = self.base
        fneg = self._fneg
        prod = [0] * (2 * n - 1)
        if F.m == 1:
            p = F.p
            for i, ai in enumerate(a):
                if ai:
                    for j, bj in enumerate(b):
                        prod[i + j] += ai * bj
            for k in range(2 * n - 2, n - 1, -1):
                c = prod[k] % p
                if c:
                    base = k - n
                    for i, fi in enumerate(fneg):
                        prod[base + i] += c * fi
            return tuple(x % p for x in prod[:n])
        fadd, fmul = F.add, F.mul
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    if bj:
                        prod[i + j] = fadd(prod[i + j], fmul(ai, bj))
        for k in range(2 * n - 2, n - 1, -1):
            c = prod[k]
            if c:
                base = k - n
                for i, fi in enumerate(fneg):
                    if fi:
                        prod[base + i] = fadd(prod[base + i], fmul(c, fi))
        return tuple(prod[:n])

    def _inv(self, a: tuple) -> tuple:
        g, s, _ = poly.xgcd(self.base, poly.trim(a), self.f)
        if g != (1,):
            raise DivisionByZero("element is not invertible")
        return tuple(s) + (0,) * (self.n - len(s))

    def _pow(self, a: tuple, e: int) -> tuple:
        if e < 0:
            a, e = self._inv(a), -e
        result = (1,) + (0,) * (self.n - 1)
        if e == 0:
            if not any(a):
                raise DivisionByZero("0**0 is undefined")
            return result
        while e:
            if e & 1:
                result = self._mul(result, a)
            e >>= 1
            if e:
                a = self._mul(a, a)
        return result

    def index(self, a: tuple) -> int:
        v = 0
        q = self.q
        for c in reversed(a):
            v = v * q + c
        return v

    # -- vectorized helpers (arrays of coefficient rows) ----------------------

    @cached_property
    def _place(self) -> np.ndarray:
        return self.q ** np.arange(self.n, dtype=np.int64)

    def coeff_array(self, idx) -> np.ndarray:
        """(K, n) coefficient rows for an array of element indices."""
        idx = np.asarray(idx, dtype=np.int64)
        return (idx[:, None] // self._place[None, :]) % self.q

    def index_array(self, C: np.ndarray) -> np.ndarray:
        return C @ self._place

    def vadd(self, A: np.ndarray, B: np.ndarray) -> np.ndarray:
        F = self.base
        if F.m == 1:
            return (A + B) % F.p
        return F.add_table[A, B]

    @cached_property
    def _fold(self) -> np.ndarray:
        # row i*n+j holds x^(i+j) mod f, so one matmul multiplies and reduces
        n = self.n
        rows = []
        for i in range(n):
            for j in range(n):
                mono = (0,) * (i + j) + (1,)
                rows.append(self._reduce_poly(mono))
        return np.array(rows, dtype=np.int64)

    def vmul(self, A: np.ndarray, B: np.ndarray) -> np.ndarray:
        """Row-wise products of coefficient arrays (B may broadcast as one row)."""
        n = self.n
        F = self.base
        A = np.asarray(A, dtype=np.int64)
        B = np.broadcast_to(np.asarray(B, dtype=np.int64), A.shape)
        K = A.shape[0]
        if F.m == 1:
            outer = (A[:, :, None] * B[:, None, :]).reshape(K, n * n)
            return (outer @ self._fold) % F.p
        at, mt = F.add_table, F.mul_table
        fneg = np.asarray(self._fneg, dtype=np.int64)
        prod = np.zeros((K, 2 * n - 1), dtype=np.int64)
        for i in range(n):
            prod[:, i : i + n] = at[prod[:, i : i + n], mt[A[:, i : i + 1], B]]
        for k in range(2 * n - 2, n - 1, -1):
            c = prod[:, k]
            prod[:, k - n : k] = at[prod[:, k - n : k], mt[c[:, None], fneg[None, :]]]
        return prod[:, :n]

    def vpow(self, A: np.ndarray, e: int) -> np.ndarray:
        A = np.asarray(A, dtype=np.int64)
        result = np.zeros_like(A)
        result[:, 0] = 1
        while e:
            if e & 1:
                result = self.vmul(result, A)
            e >>= 1
            if e:
                A = self.vmul(A, A)
        return result

    def mul_perms(self, elements) -> np.ndarray:
        """For each c, the array ``perm[v] = index(v * c)`` over all q^n indices.

        Multiplication by a fixed c is F_p-linear on the n*m prime-field
        digits of an index, so each map is one small matrix applied to the
        digit table.
        """
        self.check_size()
        p = self.base.p
        nm = self.n * self.base.m
        basis = [self.from_index(p**j) for j in range(nm)]
        mats = []
        for c in elements:
            cols = [_index_digits(self.index(self._mul(b.c, c.c)), p, nm) for b in basis]
            mats.append(np.array(cols, dtype=np.int64))  # row j = image of basis j
        if not mats:
            return np.zeros((0, self.size), dtype=np.int64)
        stacked = np.concatenate(mats, axis=1)  # (nm, k*nm)
        pw = p ** np.arange(nm, dtype=np.int64)
        total = self.size
        out = np.empty((len(mats), total), dtype=np.int64)
        chunk = 1 << 16
        for start in range(0, total, chunk):
            idx = np.arange(start, min(total, start + chunk), dtype=np.int64)
            D = (idx[:, None] // pw[None, :]) % p
            img = (D @ stacked) % p
            out[:, start : start + len(idx)] = (img.reshape(len(idx), len(mats), nm) @ pw).T
        return out


def _index_digits(v: int, p: int, nm: int) -> list[int]:
    out = []
    for _ in range(nm):
        out.append(v % p)
        v //= p
    return out


class Xelt:
    """An element of an ExtField, stored as its coefficient tuple."""

    __slots__ = ("ext", "c")

    def __init__(self, ext: ExtField, c: tuple):
        self.ext = ext
        self.c = c

    def _other(self, other) -> tuple:
        if isinstance(other, Xelt):
            if other.ext is not self.ext and other.ext != self.ext:
                raise FieldMismatch("operands belong to different fields")
            return other.c
        if isinstance(other, int):
            return self.ext.scalar(other % self.ext.q if self.ext.base.m == 1 else other).c
        return NotImplemented

    def __add__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return Xelt(self.ext, self.ext._add(self.c, o))

    __radd__ = __add__

    def __neg__(self):
        return Xelt(self.ext, self.ext._neg(self.c))

    def __sub__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return Xelt(self.ext, self.ext._add(self.c, self.ext._neg(o)))

    def __mul__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return Xelt(self.ext, self.ext._mul(self.c, o))

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return Xelt(self.ext, self.ext._mul(self.c, self.ext._inv(o)))

    def __pow__(self, e: int):
        return Xelt(self.ext, self.ext._pow(self.c, e))

    def inv(self) -> Xelt:
        return Xelt(self.ext, self.ext._inv(self.c))

    def __eq__(self, other):
        if isinstance(other, Xelt):
            return self.c == other.c and (self.ext is other.ext or self.ext == other.ext)
        if isinstance(other, int):
            return self.c == self.ext.scalar(other).c
        return NotImplemented

    def __hash__(self):
        return hash(self.c)

    def __bool__(self):
        return any(self.c)

    @property
    def index(self) -> int:
        return self.ext.index(self.c)

    def __repr__(self):
        return f"Xelt({list(self.c)})"


def ext_field_new(base: BaseField, f, force: bool = False) -> ExtField:
    """Validated F_q[x]/(f). ``force`` lifts the 2^24 size guard."""
    f = poly.trim(f)
    if any(not 0 <= c < base.q for c in f):
        raise UsageError("coefficients of f must lie in [0, q)")
    if len(f) - 1 <= 1:
        raise DegreeTooSmall("f must have degree n > 1")
    if f[-1] != 1:
        raise NotMonic(f"f = {poly.format_list(f)} is not monic")
    ext = ExtField(base, f, allow_large=force)
    ext.check_size()
    if not poly.is_irreducible(base, f):
        raise ReducibleModulus(f"f = {poly.format_list(f)} is reducible over {base!r}")
    return ext


def element_degree(a: Xelt) -> int:
    """Degree of the minimal polynomial of ``a`` over F_q (1 for zero)."""
    ext = a.ext
    q = ext.q
    b = a.c
    for k in range(1, ext.n + 1):
        b = ext._pow(b, q) if any(b) else b
        if b == a.c:
            return k
    raise AssertionError("Frobenius orbit longer than n")


def element_degrees(ext: ExtField, idx) -> np.ndarray:
    """Vectorized ``element_degree`` over an array of element indices."""
    A = ext.coeff_array(idx)
    out = np.zeros(len(A), dtype=np.int64)
    B = A
    for k in range(1, ext.n + 1):
        B = ext.vpow(B, ext.q)
        hit = (out == 0) & np.all(B == A, axis=1)
        out[hit] = k
    return out
