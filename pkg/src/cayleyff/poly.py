"""Dense univariate polynomials over a base field F_q.

A polynomial is a tuple of base-field elements (ints in ``[0, q)``) in
ascending powers with no trailing zeros; the zero polynomial is ``()``.
Every function takes the base field first so the same code serves prime
fields and their extensions.
"""

from __future__ import annotations

import re
from typing import TYPE_CHECKING, Sequence

from .errors import DivisionByZero, NotMonic, UsageError, ZeroPolynomial

if TYPE_CHECKING:
    from .field import BaseField

Poly = tuple


def trim(c: Sequence[int]) -> Poly:
    c = list(c)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


def degree(a: Poly) -> int:
    """Degree of ``a``; -1 for the zero polynomial."""
    return len(a) - 1


def add(F: BaseField, a: Poly, b: Poly) -> Poly:
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, bi in enumerate(b):
        out[i] = F.add(out[i], bi)
    return trim(out)


def neg(F: BaseField, a: Poly) -> Poly:
    return tuple(F.neg(c) for c in a)


def sub(F: BaseField, a: Poly, b: Poly) -> Poly:
    return add(F, a, neg(F, b))


def scale(F: BaseField, a: Poly, c: int) -> Poly:
    if c == 0:
        return ()
    return trim(F.mul(x, c) for x in a)


def mul(F: BaseField, a: Poly, b: Poly) -> Poly:
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    fadd, fmul = F.add, F.mul
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                if bj:
                    out[i + j] = fadd(out[i + j], fmul(ai, bj))
    return trim(out)


def divmod_(F: BaseField, a: Poly, b: Poly) -> tuple[Poly, Poly]:
    if not b:
        raise DivisionByZero("polynomial division by zero")
    db = len(b) - 1
    if len(a) - 1 < db:
        return (), a
    inv_lead = F.inv(b[-1])
    r = list(a)
    qt = [0] * (len(a) - db)
    for k in range(len(a) - 1, db - 1, -1):
        c = r[k]
        if c == 0:
            continue
        c = F.mul(c, inv_lead)
        qt[k - db] = c
        for i, bi in enumerate(b):
            if bi:
                r[k - db + i] = F.sub(r[k - db + i], F.mul(c, bi))
    return trim(qt), trim(r[:db])


def mod(F: BaseField, a: Poly, b: Poly) -> Poly:
    return divmod_(F, a, b)[1]


def monic(F: BaseField, a: Poly) -> Poly:
    if not a:
        return a
    return scale(F, a, F.inv(a[-1]))


def gcd(F: BaseField, a: Poly, b: Poly) -> Poly:
    """Monic gcd (zero if both inputs are zero)."""
    while b:
        a, b = b, mod(F, a, b)
    return monic(F, a)


def xgcd(F: BaseField, a: Poly, b: Poly) -> tuple[Poly, Poly, Poly]:
    """Return ``(g, s, t)`` with ``s*a + t*b = g`` and ``g`` monic."""
    r0, r1 = a, b
    s0, s1 = (1,), ()
    t0, t1 = (), (1,)
    while r1:
        qt, r = divmod_(F, r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, sub(F, s0, mul(F, qt, s1))
        t0, t1 = t1, sub(F, t0, mul(F, qt, t1))
    if not r0:
        return (), s0, t0
    c = F.inv(r0[-1])
    return scale(F, r0, c), scale(F, s0, c), scale(F, t0, c)


def power(F: BaseField, a: Poly, e: int) -> Poly:
    result: Poly = (1,)
    while e:
        if e & 1:
            result = mul(F, result, a)
        e >>= 1
        if e:
            a = mul(F, a, a)
    return result


def powmod(F: BaseField, a: Poly, e: int, m: Poly) -> Poly:
    result: Poly = mod(F, (1,), m)
    a = mod(F, a, m)
    while e:
        if e & 1:
            result = mod(F, mul(F, result, a), m)
        e >>= 1
        if e:
            a = mod(F, mul(F, a, a), m)
    return result


def evaluate(F: BaseField, a: Poly, x: int) -> int:
    acc = 0
    for c in reversed(a):
        acc = F.add(F.mul(acc, x), c)
    return acc


def _prime_divisors(k: int) -> list[int]:
    out, r = [], 2
    while r * r <= k:
        if k % r == 0:
            out.append(r)
            while k % r == 0:
                k //= r
        r += 1
    if k > 1:
        out.append(k)
    return out


def is_irreducible(F: BaseField, g: Poly) -> bool:
    """Rabin's test: x^(q^k) = x mod g, and gcd(x^(q^(k/r)) - x, g) = 1 for primes r | k."""
    if not g:
        raise ZeroPolynomial("zero polynomial")
    if g[-1] != 1:
        raise NotMonic(f"polynomial {list(g)} is not monic")
    k = len(g) - 1
    if k < 1:
        raise UsageError("irreducibility needs degree >= 1")
    if k == 1:
        return True
    x = (0, 1)
    checkpoints = {k // r for r in _prime_divisors(k)}
    h = x
    for e in range(1, k + 1):
        h = powmod(F, h, F.q, g)
        if e in checkpoints and len(gcd(F, sub(F, h, x), g)) != 1:
            return False
    return h == mod(F, x, g)


# -- text format ------------------------------------------------------------

_TERM = re.compile(r"^(\d*)\*?(x(?:\^(\d+))?)?$")


def parse(text: str, F: BaseField | None = None) -> Poly:
    """Parse ``"[1,1,0,0,1]"`` or ``"x^4+x+1"`` into an ascending tuple.

    Coefficients are base-field element codes in ``[0, q)``. With ``F``
    given, a leading ``-`` on a term negates it in the field.
    """
    s = text.strip().replace(" ", "")
    if not s:
        raise UsageError("empty polynomial")
    if s.startswith("["):
        if not s.endswith("]"):
            raise UsageError(f"malformed coefficient list {text!r}")
        body = s[1:-1]
        coeffs = [int(t) for t in body.split(",")] if body else []
        if F is not None and any(not 0 <= c < F.q for c in coeffs):
            raise UsageError(f"coefficient out of range in {text!r}")
        return trim(coeffs)
    s = s.replace("-", "+-")
    terms: dict[int, int] = {}
    for tok in s.split("+"):
        if not tok:
            continue
        sign = tok.startswith("-")
        tok = tok.lstrip("-")
        m = _TERM.match(tok)
        if not m or not tok:
            raise UsageError(f"cannot parse term {tok!r} in {text!r}")
        coef = int(m.group(1)) if m.group(1) else 1
        if m.group(2) is None:
            if not m.group(1):
                raise UsageError(f"cannot parse term {tok!r}")
            exp = 0
        else:
            exp = int(m.group(3)) if m.group(3) else 1
        if F is not None:
            if not 0 <= coef < F.q:
                raise UsageError(f"coefficient {coef} out of range for q={F.q}")
            if sign:
                coef = F.neg(coef)
            terms[exp] = F.add(terms.get(exp, 0), coef)
        else:
            if sign:
                raise UsageError("negative terms need a field")
            terms[exp] = terms.get(exp, 0) + coef
    if not terms:
        return ()
    out = [0] * (max(terms) + 1)
    for e, c in terms.items():
        out[e] = c
    return trim(out)


def format_list(a: Poly) -> str:
    """Canonical coefficient-list form, e.g. ``[1,1,0,0,1]``."""
    return "[" + ",".join(str(c) for c in a) + "]"


def format_human(a: Poly) -> str:
    if not a:
        return "0"
    parts = []
    for e in range(len(a) - 1, -1, -1):
        c = a[e]
        if c == 0:
            continue
        if e == 0:
            parts.append(str(c))
        else:
            mono = "x" if e == 1 else f"x^{e}"
            parts.append(mono if c == 1 else f"{c}{mono}")
    return "+".join(parts)
