"""Arithmetic in Z_p[x] and in GF(p^n) = Z_p[x] / (m).

Field elements are encoded as integers in ``[0, q)`` whose base-p digits are
the coefficients of the residue polynomial, digit ``i`` holding the
coefficient of ``x^i``.  Once a :class:`FieldCtx` is built, multiplication,
inversion and powering go through the log/antilog tables; addition is always
digit-wise (XOR in characteristic 2).
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from functools import lru_cache
from math import gcd
from typing import Iterator, Sequence

import numpy as np

HARD_MAX_Q = 2**31
DEFAULT_MAX_Q = 2**20


class FieldError(ValueError):
    """Raised for invalid field parameters or arithmetic on mismatched data."""


# ---------------------------------------------------------------------------
# small integer helpers


def prime_factors(n: int) -> list[int]:
    """Distinct prime factors of ``n`` in increasing order (trial division)."""
    out = []
    f = 2
    while f * f <= n:
        if n % f == 0:
            out.append(f)
            while n % f == 0:
                n //= f
        f += 1
    if n > 1:
        out.append(n)
    return out


def is_prime(n: int) -> bool:
    return n >= 2 and prime_factors(n) == [n]


def divisors(n: int) -> list[int]:
    small, large = [], []
    f = 1
    while f * f <= n:
        if n % f == 0:
            small.append(f)
            if f * f != n:
                large.append(n // f)
        f += 1
    return small + large[::-1]


# ---------------------------------------------------------------------------
# polynomials over Z_p


@dataclass(frozen=True)
class Poly:
    """Polynomial over Z_p, ``coeffs[i]`` is the coefficient of ``x^i``.

    Coefficients are reduced mod p and trailing zeros stripped on
    construction, so equal polynomials compare equal.
    """

    coeffs: tuple[int, ...]
    p: int

    def __post_init__(self):
        if self.p < 2:
            raise FieldError(f"characteristic must be a prime, got {self.p}")
        c = [int(v) % self.p for v in self.coeffs]
        while c and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "coeffs", tuple(c))

    @classmethod
    def from_list(cls, coeffs: Sequence[int], p: int) -> "Poly":
        return cls(tuple(coeffs), p)

    @classmethod
    def monomial(cls, k: int, p: int, c: int = 1) -> "Poly":
        return cls((0,) * k + (c,), p)

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def __add__(self, other: "Poly") -> "Poly":
        _same_char(self, other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        return Poly(tuple(x + (b[i] if i < len(b) else 0) for i, x in enumerate(a)), self.p)

    def __neg__(self) -> "Poly":
        return Poly(tuple(-c for c in self.coeffs), self.p)

    def __sub__(self, other: "Poly") -> "Poly":
        return self + (-other)

    def __mul__(self, other: "Poly") -> "Poly":
        _same_char(self, other)
        if not self.coeffs or not other.coeffs:
            return Poly((), self.p)
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return Poly(tuple(out), self.p)

    def __mod__(self, other: "Poly") -> "Poly":
        return poly_rem(self, other)

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if not c:
                continue
            if i == 0:
                terms.append(str(c))
                continue
            mono = "x" if i == 1 else f"x^{i}"
            terms.append(mono if c == 1 else f"{c}{mono}")
        return "+".join(terms)

    def to_json(self) -> list[int]:
        """Low-degree-first coefficient list, e.g. x^4+2x+2 -> [2, 2, 0, 0, 1]."""
        return list(self.coeffs)


def _same_char(a: Poly, b: Poly) -> None:
    if a.p != b.p:
        raise FieldError(f"characteristic mismatch: {a.p} vs {b.p}")


_TERM = re.compile(r"^(\d*)\*?(?:(x)(?:\^(\d+))?)?$")


def parse_poly(text: str, p: int) -> Poly:
    """Parse ``"x^4+2x+2"``, ``"x^4-x-1"`` or a JSON list ``"[2,2,0,0,1]"``."""
    s = text.replace(" ", "").replace("**", "^")
    if s.startswith("["):
        return Poly.from_list(json.loads(s), p)
    if not s:
        raise FieldError("empty polynomial string")
    s = s.replace("-", "+-")
    coeffs: dict[int, int] = {}
    for raw in s.split("+"):
        if not raw:
            continue
        sign = 1
        if raw.startswith("-"):
            sign, raw = -1, raw[1:]
        m = _TERM.match(raw)
        if not m or (not m.group(1) and not m.group(2)):
            raise FieldError(f"cannot parse term {raw!r} in {text!r}")
        c = int(m.group(1)) if m.group(1) else 1
        k = (int(m.group(3)) if m.group(3) else 1) if m.group(2) else 0
        coeffs[k] = coeffs.get(k, 0) + sign * c
    top = max(coeffs)
    return Poly(tuple(coeffs.get(i, 0) for i in range(top + 1)), p)


def poly_divmod(a: Poly, m: Poly) -> tuple[Poly, Poly]:
    _same_char(a, m)
    if m.is_zero():
        raise ZeroDivisionError("polynomial division by zero")
    p = a.p
    r = list(a.coeffs)
    dm = m.degree
    lead_inv = pow(m.coeffs[-1], -1, p)
    quot = [0] * max(len(r) - dm, 0)
    for i in range(len(r) - 1, dm - 1, -1):
        c = r[i] % p
        if not c:
            continue
        f = c * lead_inv % p
        quot[i - dm] = f
        for j, mc in enumerate(m.coeffs):
            r[i - dm + j] -= f * mc
    return Poly(tuple(quot), p), Poly(tuple(r[:dm]), p)


def poly_rem(a: Poly, m: Poly) -> Poly:
    """Remainder of ``a`` modulo ``m`` in canonical form (degree < deg m)."""
    return poly_divmod(a, m)[1]


def poly_gcd(a: Poly, b: Poly) -> Poly:
    """Monic gcd (zero if both inputs are zero)."""
    while not b.is_zero():
        a, b = b, poly_rem(a, b)
    if a.is_zero():
        return a
    inv = pow(a.coeffs[-1], -1, a.p)
    return Poly(tuple(c * inv for c in a.coeffs), a.p)


def poly_powmod(base: Poly, k: int, m: Poly) -> Poly:
    result = Poly((1,), base.p) % m
    b = base % m
    while k:
        if k & 1:
            result = (result * b) % m
        b = (b * b) % m
        k >>= 1
    return result


def is_irreducible(m: Poly) -> bool:
    """Rabin's test: x^(p^n) = x mod m and gcd(x^(p^(n/r)) - x, m) = 1 for primes r | n."""
    if m.degree < 1:
        raise FieldError(f"irreducibility of a constant polynomial ({m}) is undefined")
    n, p = m.degree, m.p
    if n == 1:
        return True
    x = Poly.monomial(1, p)
    if poly_powmod(x, p**n, m) != x:
        return False
    for r in prime_factors(n):
        h = poly_powmod(x, p ** (n // r), m) - x
        if poly_gcd(h, m).degree != 0:
            return False
    return True


def _x_is_primitive(m: Poly) -> bool:
    p, n = m.p, m.degree
    order = p**n - 1
    x = Poly.monomial(1, p)
    one = Poly((1,), p) % m
    if poly_powmod(x, order, m) != one:
        return False
    return all(poly_powmod(x, order // r, m) != one for r in prime_factors(order))


def primitive_polynomials(p: int, n: int) -> Iterator[Poly]:
    """Monic irreducible degree-n polynomials with x primitive, lexicographic order.

    The order compares coefficient vectors from degree n-1 down to degree 0,
    which is numeric order of the lower coefficients read as a base-p number.
    """
    if not is_prime(p) or n < 1:
        raise FieldError(f"need a prime p and n >= 1, got p={p}, n={n}")
    for tail in range(p**n):
        digits = [(tail // p**i) % p for i in range(n)]
        if digits[0] == 0:
            continue
        m = Poly(tuple(digits) + (1,), p)
        if is_irreducible(m) and _x_is_primitive(m):
            yield m


def find_primitive_polynomial(p: int, n: int) -> Poly:
    return next(primitive_polynomials(p, n))


# ---------------------------------------------------------------------------
# fields


@dataclass(frozen=True)
class FieldSpec:
    p: int
    n: int
    modulus: Poly

    def __post_init__(self):
        if not is_prime(self.p):
            raise FieldError(f"p={self.p} is not prime")
        if self.n < 1:
            raise FieldError(f"extension degree must be >= 1, got {self.n}")
        if self.modulus.p != self.p or self.modulus.degree != self.n:
            raise FieldError(f"modulus {self.modulus} is not a degree-{self.n} polynomial over F_{self.p}")
        if not self.modulus.is_monic():
            raise FieldError(f"modulus {self.modulus} is not monic")
        if self.p**self.n > HARD_MAX_Q:
            raise FieldError(f"q={self.p}^{self.n} exceeds the hard bound 2^31")

    @property
    def q(self) -> int:
        return self.p**self.n


DEFAULT_MODULI = {
    (3, 4): (2, 2, 0, 0, 1),  # x^4+2x+2, i.e. x^4-x-1
    (3, 5): (1, 2, 0, 0, 0, 1),  # x^5+2x+1, i.e. x^5-x+1
    (2, 6): (1, 1, 0, 0, 0, 0, 1),  # x^6+x+1
}


def default_modulus(p: int, n: int) -> Poly:
    if (p, n) in DEFAULT_MODULI:
        return Poly(DEFAULT_MODULI[(p, n)], p)
    return find_primitive_polynomial(p, n)


@dataclass(frozen=True, eq=False)
class FieldCtx:
    """GF(p^n) with a fixed primitive root and its log/antilog tables.

    ``antilog[k]`` is the encoding of ``generator^k`` for ``0 <= k < q-1``;
    ``log[e]`` is the exponent of the nonzero encoding ``e`` (``log[0] == -1``).
    All arithmetic methods accept ints; ``add``, ``neg`` and ``sub`` also
    accept numpy integer arrays.
    """

    spec: FieldSpec
    generator: int
    antilog: np.ndarray = field(repr=False)
    log: np.ndarray = field(repr=False)

    @property
    def p(self) -> int:
        return self.spec.p

    @property
    def n(self) -> int:
        return self.spec.n

    @property
    def q(self) -> int:
        return self.spec.q

    @property
    def modulus(self) -> Poly:
        return self.spec.modulus

    @property
    def ctx_id(self) -> str:
        return f"GF({self.p}^{self.n})[{self.modulus}]"

    def __repr__(self) -> str:
        return f"FieldCtx({self.ctx_id}, generator={self.generator})"

    # addition is digit-wise and needs no tables
    def add(self, a, b):
        p = self.p
        if p == 2:
            return a ^ b
        out = 0
        scale = 1
        for _ in range(self.n):
            out = out + ((a // scale + b // scale) % p) * scale
            scale *= p
        return out

    def neg(self, a):
        p = self.p
        if p == 2:
            return a
        out = 0
        scale = 1
        for _ in range(self.n):
            out = out + ((-(a // scale)) % p) * scale
            scale *= p
        return out

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def scalar(self, c: int, a):
        """Multiply by the prime-field constant ``c``."""
        p = self.p
        out = 0
        scale = 1
        for _ in range(self.n):
            out = out + (((a // scale) % p) * c % p) * scale
            scale *= p
        return out

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        return int(self.antilog[(int(self.log[a]) + int(self.log[b])) % (self.q - 1)])

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return int(self.antilog[(-int(self.log[a])) % (self.q - 1)])

    def pow(self, a: int, k: int) -> int:
        if a == 0:
            if k < 0:
                raise ZeroDivisionError("negative power of zero")
            return 1 if k == 0 else 0
        return int(self.antilog[(int(self.log[a]) * k) % (self.q - 1)])

    def gpow(self, k: int) -> int:
        """Encoding of ``generator^k``."""
        return int(self.antilog[k % (self.q - 1)])

    def element_order(self, a: int) -> int:
        if a == 0:
            raise FieldError("zero has no multiplicative order")
        return (self.q - 1) // gcd(int(self.log[a]), self.q - 1)

    def element(self, value: int) -> "Element":
        return Element(value, self)

    def from_poly(self, poly: Poly) -> int:
        r = poly_rem(poly, self.modulus)
        return sum(c * self.p**i for i, c in enumerate(r.coeffs))

    def to_poly(self, a: int) -> Poly:
        return Poly(tuple(self.coefficients(a)), self.p)

    def coefficients(self, a: int) -> list[int]:
        """Low-degree-first coefficient vector of length n."""
        return [(a // self.p**i) % self.p for i in range(self.n)]

    def encode(self, coeffs: Sequence[int]) -> int:
        if len(coeffs) != self.n or any(not 0 <= c < self.p for c in coeffs):
            raise FieldError(f"not a coefficient vector of F_{self.q}: {coeffs}")
        return sum(c * self.p**i for i, c in enumerate(coeffs))

    def poly_mul(self, a: int, b: int) -> int:
        """Table-free product via polynomial multiplication and reduction."""
        return self.from_poly(self.to_poly(a) * self.to_poly(b))

    def describe(self, a: int) -> dict:
        return {
            "encoding": int(a),
            "log": None if a == 0 else int(self.log[a]),
            "poly": str(self.to_poly(a)),
        }


def _times_x(a: int, p: int, n: int, low: Sequence[int]) -> int:
    """Multiply encoding ``a`` by x modulo the monic modulus with lower coefficients ``low``."""
    top = a // p ** (n - 1)
    a = (a % p ** (n - 1)) * p
    if top:
        out = 0
        for i in range(n):
            d = ((a // p**i) - top * low[i]) % p
            out += d * p**i
        return out
    return a


def _powers(g: int, p: int, n: int, modulus: Poly, limit: int) -> list[int]:
    """Encodings of g^0, g^1, ... up to the first repeat of 1 or ``limit`` terms."""
    low = list(modulus.coeffs[:n])
    q = p**n
    mod_int = sum(c * p**i for i, c in enumerate(modulus.coeffs))
    x = p if n > 1 else (-low[0]) % p
    out = [1]
    cur = 1
    if g == x and p == 2 and n > 1:
        for _ in range(limit - 1):
            cur <<= 1
            if cur & q:
                cur ^= mod_int
            if cur == 1:
                break
            out.append(cur)
        return out
    if g == x and n > 1:
        for _ in range(limit - 1):
            cur = _times_x(cur, p, n, low)
            if cur == 1:
                break
            out.append(cur)
        return out
    gp = Poly(tuple((g // p**i) % p for i in range(n)), p)
    cur_p = Poly((1,), p)
    for _ in range(limit - 1):
        cur_p = poly_rem(cur_p * gp, modulus)
        cur = sum(c * p**i for i, c in enumerate(cur_p.coeffs))
        if cur == 1:
            break
        out.append(cur)
    return out


def build_ctx(spec: FieldSpec, max_q: int = DEFAULT_MAX_Q) -> FieldCtx:
    """Build tables for GF(p^n); the generator is x when x is primitive.

    Otherwise the nonzero encodings are searched in increasing order for the
    first primitive root.
    """
    p, n, q = spec.p, spec.n, spec.q
    if q > max_q:
        raise FieldError(f"q={q} exceeds the table bound {max_q}")
    if not is_irreducible(spec.modulus):
        raise FieldError(f"modulus {spec.modulus} is not irreducible over F_{p}")
    x = p if n > 1 else (-spec.modulus.coeffs[0]) % p
    candidates = [x] + [c for c in range(1, q) if c != x]
    for g in candidates:
        pw = _powers(g, p, n, spec.modulus, q - 1)
        if len(pw) == q - 1:
            break
    else:  # pragma: no cover - a finite field always has a primitive root
        raise FieldError("no primitive root found")
    antilog = np.asarray(pw, dtype=np.int64)
    log = np.full(q, -1, dtype=np.int64)
    log[antilog] = np.arange(q - 1, dtype=np.int64)
    return FieldCtx(spec=spec, generator=int(g), antilog=antilog, log=log)


@lru_cache(maxsize=None)
def _cached_ctx(p: int, n: int, coeffs: tuple[int, ...]) -> FieldCtx:
    return build_ctx(FieldSpec(p, n, Poly(coeffs, p)))


def make_field(p: int, n: int, modulus: Poly | str | None = None) -> FieldCtx:
    """Field GF(p^n) with the default (or given) modulus; contexts are cached."""
    if modulus is None:
        modulus = default_modulus(p, n)
    elif isinstance(modulus, str):
        modulus = parse_poly(modulus, p)
    return _cached_ctx(p, n, modulus.coeffs)


def element_order(a: "Element") -> int:
    return a.ctx.element_order(a.value)


@dataclass(frozen=True, eq=False)
class Element:
    """A field element bound to its context; supports the usual operators."""

    value: int
    ctx: FieldCtx

    def __post_init__(self):
        if not 0 <= self.value < self.ctx.q:
            raise FieldError(f"encoding {self.value} out of range for q={self.ctx.q}")

    def _check(self, other: "Element") -> None:
        if other.ctx is not self.ctx:
            raise FieldError(f"elements from different fields: {self.ctx.ctx_id} vs {other.ctx.ctx_id}")

    def _lift(self, other) -> "Element":
        if isinstance(other, int):
            return Element(self.ctx.scalar(other % self.ctx.p, 1), self.ctx)
        self._check(other)
        return other

    def __eq__(self, other) -> bool:
        if isinstance(other, Element):
            return self.ctx is other.ctx and self.value == other.value
        if isinstance(other, int):
            return self == self._lift(other)
        return NotImplemented

    def __hash__(self) -> int:
        return hash((id(self.ctx), self.value))

    def __add__(self, other):
        other = self._lift(other)
        return Element(self.ctx.add(self.value, other.value), self.ctx)

    __radd__ = __add__

    def __neg__(self):
        return Element(self.ctx.neg(self.value), self.ctx)

    def __sub__(self, other):
        other = self._lift(other)
        return Element(self.ctx.sub(self.value, other.value), self.ctx)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._lift(other)
        return Element(self.ctx.mul(self.value, other.value), self.ctx)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._lift(other)
        return Element(self.ctx.mul(self.value, self.ctx.inv(other.value)), self.ctx)

    def __pow__(self, k: int):
        return Element(self.ctx.pow(self.value, k), self.ctx)

    def inverse(self) -> "Element":
        return Element(self.ctx.inv(self.value), self.ctx)

    def order(self) -> int:
        return self.ctx.element_order(self.value)

    @property
    def coefficients(self) -> list[int]:
        return self.ctx.coefficients(self.value)

    def __repr__(self) -> str:
        return f"Element({self.ctx.to_poly(self.value)} in GF({self.ctx.q}))"
