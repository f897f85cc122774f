"""Exact scalars and univariate polynomials over the rationals and prime fields.

Field objects carry the arithmetic; scalar values themselves are plain
Python objects (`fractions.Fraction` for the rationals, canonical residues
in ``[0, p)`` for a prime field).  All operations are exact.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from .errors import (
    DivisionByZero,
    FieldMismatch,
    NotMonic,
    ScaleExceeded,
    WrongField,
    ZeroInput,
)

# guard for monic-poly enumeration in trial-division factoring
_ENUMERATION_CAP = 2_000_000


class Rationals:
    """The field of rational numbers.  Values are Fraction instances."""

    kind = "Q"
    finite = False
    char = 0
    native = True  # values support +, -, * directly

    zero = Fraction(0)
    one = Fraction(1)

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def inv(self, a):
        if a == 0:
            raise DivisionByZero("inverse of zero")
        return 1 / Fraction(a)

    def div(self, a, b):
        if b == 0:
            raise DivisionByZero("division by zero")
        return Fraction(a) / b

    def reduce(self, a):
        return a

    def from_int(self, i):
        return Fraction(i)

    def sort_key(self, a):
        # canonical order: by (numerator, denominator) after normalization
        a = Fraction(a)
        return (a.numerator, a.denominator)

    def format(self, a) -> str:
        return str(Fraction(a))

    def parse(self, s: str):
        return Fraction(s)

    def random(self, rng, span=5):
        return Fraction(rng.randint(-span, span))

    def nth_roots(self, a, n: int):
        """All rational x with x**n == a, sorted canonically."""
        if a == 0:
            raise ZeroInput("nth_roots of zero")
        a = Fraction(a)
        if n == 1:
            return [a]
        # x = u/v in lowest terms forces u**n = numerator, v**n = denominator
        neg = a < 0
        num, den = abs(a.numerator), a.denominator
        u = _int_nth_root(num, n)
        v = _int_nth_root(den, n)
        if u is None or v is None:
            return []
        roots = []
        if neg:
            if n % 2 == 1:
                roots.append(Fraction(-u, v))
        else:
            r = Fraction(u, v)
            roots = [r, -r] if n % 2 == 0 else [r]
        return sorted(roots, key=self.sort_key)

    def __repr__(self):
        return "QQ"

    def __eq__(self, other):
        return isinstance(other, Rationals)

    def __hash__(self):
        return hash("Q")


def _int_nth_root(v: int, n: int):
    """Exact integer n-th root of v >= 1, or None."""
    if v == 1:
        return 1
    lo, hi = 1, 1
    while hi**n < v:
        hi *= 2
    while lo < hi:
        mid = (lo + hi) // 2
        if mid**n < v:
            lo = mid + 1
        else:
            hi = mid
    return lo if lo**n == v else None


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    i = 2
    while i * i <= p:
        if p % i == 0:
            return False
        i += 1
    return True


class PrimeField:
    """The field with p elements. Values are canonical residues in [0, p)."""

    kind = "Fp"
    finite = True
    native = True

    def __init__(self, p: int):
        if not _is_prime(p):
            raise WrongField("p must be prime, got %r" % (p,))
        self.p = p
        self.char = p
        self.order = p
        self.zero = 0
        self.one = 1 % p

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return (a * b) % self.p

    def neg(self, a):
        return (-a) % self.p

    def inv(self, a):
        if a % self.p == 0:
            raise DivisionByZero("inverse of zero")
        return pow(a, self.p - 2, self.p)

    def div(self, a, b):
        return (a * self.inv(b)) % self.p

    def reduce(self, a):
        return a % self.p

    def from_int(self, i):
        return i % self.p

    def elements(self):
        return range(self.p)

    def nonzero_elements(self):
        return range(1, self.p)

    def sort_key(self, a):
        return a

    def format(self, a) -> str:
        return str(a % self.p)

    def parse(self, s: str):
        return int(s) % self.p

    def random(self, rng):
        return rng.randrange(self.p)

    def nth_roots(self, a, n: int):
        a = a % self.p
        if a == 0:
            raise ZeroInput("nth_roots of zero")
        return [x for x in range(1, self.p) if pow(x, n, self.p) == a]

    def __repr__(self):
        return "GF(%d)" % self.p

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("Fp", self.p))


class ExtensionField:
    """GF(p^k) as polynomials modulo a fixed irreducible.

    Internal helper for field-extension property tests; not part of the
    JSON field surface.  Values are coefficient tuples of length k.
    """

    kind = "Fq"
    finite = True
    native = False

    def __init__(self, p: int, modulus):
        # modulus: monic coefficients low-first, degree k >= 2
        self.p = p
        self.char = p
        self.base = GF(p)
        self.modulus = tuple(c % p for c in modulus)
        assert self.modulus[-1] == 1
        self.k = len(self.modulus) - 1
        self.order = p**self.k
        self.zero = (0,) * self.k
        self.one = tuple([1 % p] + [0] * (self.k - 1))

    def _wrap(self, coeffs):
        p, k = self.p, self.k
        c = [x % p for x in coeffs]
        while len(c) >= k + 1:
            # reduce leading term against modulus
            lead = c.pop()
            if lead:
                d = len(c) - k
                for i in range(k):
                    c[d + i] = (c[d + i] - lead * self.modulus[i]) % p
        c += [0] * (k - len(c))
        return tuple(c)

    def add(self, a, b):
        return tuple((x + y) % self.p for x, y in zip(a, b))

    def sub(self, a, b):
        return tuple((x - y) % self.p for x, y in zip(a, b))

    def neg(self, a):
        return tuple((-x) % self.p for x in a)

    def mul(self, a, b):
        k = self.k
        out = [0] * (2 * k - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return self._wrap(out)

    def inv(self, a):
        if a == self.zero:
            raise DivisionByZero("inverse of zero")
        # fields used here are tiny; scan is fine
        for b in self.elements():
            if self.mul(a, b) == self.one:
                return b
        raise AssertionError("no inverse found; modulus not irreducible?")

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def from_int(self, i):
        return tuple([i % self.p] + [0] * (self.k - 1))

    def elements(self):
        for tup in itertools.product(range(self.p), repeat=self.k):
            yield tup

    def nonzero_elements(self):
        for e in self.elements():
            if e != self.zero:
                yield e

    def sort_key(self, a):
        return a

    def format(self, a) -> str:
        return ",".join(str(x) for x in a)

    def parse(self, s: str):
        return tuple(int(x) % self.p for x in s.split(","))

    def random(self, rng):
        return tuple(rng.randrange(self.p) for _ in range(self.k))

    def nth_roots(self, a, n: int):
        if a == self.zero:
            raise ZeroInput("nth_roots of zero")
        return sorted(
            (x for x in self.nonzero_elements() if self._pow(x, n) == a),
            key=self.sort_key,
        )

    def _pow(self, a, n):
        out = self.one
        for _ in range(n):
            out = self.mul(out, a)
        return out

    def __repr__(self):
        return "GF(%d^%d)" % (self.p, self.k)

    def __eq__(self, other):
        return (
            isinstance(other, ExtensionField)
            and other.p == self.p
            and other.modulus == self.modulus
        )

    def __hash__(self):
        return hash(("Fq", self.p, self.modulus))


QQ = Rationals()

_prime_fields: dict = {}


def GF(p: int, k: int = 1):
    """Field constructor: GF(p) prime field, GF(p, 2) a quadratic extension."""
    if k == 1:
        if p not in _prime_fields:
            _prime_fields[p] = PrimeField(p)
        return _prime_fields[p]
    if k != 2:
        raise WrongField("only quadratic extensions are provided")
    if p == 2:
        return ExtensionField(2, (1, 1, 1))  # x^2 + x + 1
    # x^2 - s for the first quadratic nonresidue s
    squares = {pow(x, 2, p) for x in range(1, p)}
    s = next(x for x in range(2, p) if x not in squares)
    return ExtensionField(p, (-s % p, 0, 1))


def field_to_json(field) -> dict:
    if isinstance(field, Rationals):
        return {"kind": "Q"}
    if isinstance(field, PrimeField):
        return {"kind": "Fp", "p": field.p}
    raise WrongField("field %r has no JSON form" % (field,))


def field_from_json(data: dict):
    kind = data.get("kind")
    if kind == "Q":
        return QQ
    if kind == "Fp":
        return GF(int(data["p"]))
    raise WrongField("unknown field kind %r" % (kind,))


@dataclass(frozen=True)
class Scalar:
    """A field element tagged with its field; the JSON-boundary type."""

    field: object
    value: object

    def __str__(self):
        return self.field.format(self.value)


def scalar(field, v) -> Scalar:
    if isinstance(v, Scalar):
        if v.field != field:
            raise FieldMismatch("scalar belongs to %r" % (v.field,))
        return v
    if isinstance(v, str):
        return Scalar(field, field.parse(v))
    return Scalar(field, field.from_int(v) if isinstance(v, int) else v)


def scalar_arith(a: Scalar, b: Scalar, op: str) -> Scalar:
    """Exact field arithmetic on tagged scalars; op in {add, sub, mul, div}."""
    if a.field != b.field:
        raise FieldMismatch("%r vs %r" % (a.field, b.field))
    f = a.field
    if op == "add":
        return Scalar(f, f.add(a.value, b.value))
    if op == "sub":
        return Scalar(f, f.sub(a.value, b.value))
    if op == "mul":
        return Scalar(f, f.mul(a.value, b.value))
    if op == "div":
        if b.value == f.zero:
            raise DivisionByZero("division by zero")
        return Scalar(f, f.div(a.value, b.value))
    raise ValueError("unknown op %r" % (op,))


def nth_roots(a: Scalar, n: int):
    return [Scalar(a.field, r) for r in a.field.nth_roots(a.value, n)]


class Poly:
    """Univariate polynomial; coefficients stored low degree first."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field, coeffs):
        c = [field.reduce(x) if field.native else x for x in coeffs]
        while c and c[-1] == field.zero:
            c.pop()
        self.field = field
        self.coeffs = tuple(c)

    @classmethod
    def from_ints(cls, field, ints):
        return cls(field, [field.from_int(i) for i in ints])

    @classmethod
    def x_minus(cls, field, a):
        return cls(field, [field.neg(a), field.one])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1  # zero polynomial has degree -1

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == self.field.one

    def leading(self):
        return self.coeffs[-1]

    def __eq__(self, other):
        return (
            isinstance(other, Poly)
            and self.field == other.field
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((self.field, self.coeffs))

    def __add__(self, other):
        f = self.field
        a, b = self.coeffs, other.coeffs
        n = max(len(a), len(b))
        a = a + (f.zero,) * (n - len(a))
        b = b + (f.zero,) * (n - len(b))
        return Poly(f, [f.add(x, y) for x, y in zip(a, b)])

    def __sub__(self, other):
        f = self.field
        a, b = self.coeffs, other.coeffs
        n = max(len(a), len(b))
        a = a + (f.zero,) * (n - len(a))
        b = b + (f.zero,) * (n - len(b))
        return Poly(f, [f.sub(x, y) for x, y in zip(a, b)])

    def __mul__(self, other):
        f = self.field
        if self.is_zero() or other.is_zero():
            return Poly(f, [])
        out = [f.zero] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, x in enumerate(self.coeffs):
            if x == f.zero:
                continue
            for j, y in enumerate(other.coeffs):
                out[i + j] = f.add(out[i + j], f.mul(x, y))
        return Poly(f, out)

    def scale(self, c):
        f = self.field
        return Poly(f, [f.mul(c, x) for x in self.coeffs])

    def monic(self):
        if self.is_zero():
            return self
        return self.scale(self.field.inv(self.leading()))

    def divmod(self, other):
        f = self.field
        if other.is_zero():
            raise DivisionByZero("polynomial division by zero")
        rem = list(self.coeffs)
        d = other.degree
        lead_inv = f.inv(other.leading())
        quo = [f.zero] * max(0, len(rem) - d)
        while len(rem) - 1 >= d and rem:
            c = f.mul(rem[-1], lead_inv)
            k = len(rem) - 1 - d
            quo[k] = c
            for i, oc in enumerate(other.coeffs):
                rem[k + i] = f.sub(rem[k + i], f.mul(c, oc))
            while rem and rem[-1] == f.zero:
                rem.pop()
        return Poly(f, quo), Poly(f, rem)

    def __call__(self, x):
        f = self.field
        out = f.zero
        for c in reversed(self.coeffs):
            out = f.add(f.mul(out, x), c)
        return out

    def __repr__(self):
        if self.is_zero():
            return "Poly(0)"
        terms = []
        for i, c in enumerate(self.coeffs):
            if c != self.field.zero:
                terms.append("%s*x^%d" % (self.field.format(c), i))
        return "Poly(%s)" % " + ".join(terms)

    def sort_key(self):
        f = self.field
        return (self.degree, tuple(f.sort_key(c) for c in self.coeffs))


def _monic_polys(field, degree):
    """All monic polynomials of the given degree over a prime field."""
    if field.p**degree > _ENUMERATION_CAP:
        raise ScaleExceeded(
            "enumeration of %d^%d monic polynomials" % (field.p, degree)
        )
    for tail in itertools.product(range(field.p), repeat=degree):
        yield Poly(field, list(tail) + [1])


def poly_factor_fp(f: Poly):
    """Factor a monic polynomial over F_p into irreducibles.

    Returns a list of (factor, multiplicity) with factors monic and sorted
    by (degree, coefficients).  Trial division in increasing degree: any
    divisor found is automatically irreducible because all lower-degree
    factors were already removed.
    """
    if not isinstance(f.field, PrimeField):
        raise WrongField("factoring is implemented over prime fields")
    if f.degree < 1:
        raise NotMonic("degree >= 1 required")
    if not f.is_monic():
        raise NotMonic("leading coefficient must be 1")
    field = f.field
    factors = {}
    rem = f
    # linear factors by root scan
    for r in field.elements():
        while rem.degree >= 1 and rem(r) == 0:
            factors.setdefault(Poly.x_minus(field, r), 0)
            factors[Poly.x_minus(field, r)] += 1
            rem, r0 = rem.divmod(Poly.x_minus(field, r))
            assert r0.is_zero()
    d = 2
    while 2 * d <= rem.degree:
        # one full pass removes every irreducible factor of degree d
        for cand in _monic_polys(field, d):
            while True:
                quo, r0 = rem.divmod(cand)
                if r0.is_zero():
                    factors.setdefault(cand, 0)
                    factors[cand] += 1
                    rem = quo
                else:
                    break
            if 2 * d > rem.degree:
                break
        d += 1
    if rem.degree >= 1:
        factors.setdefault(rem.monic(), 0)
        factors[rem.monic()] += 1
    out = sorted(factors.items(), key=lambda kv: kv[0].sort_key())
    return out


def linear_roots_fp(f: Poly):
    """Roots in F_p of f with multiplicities, as a list of (root, mult)."""
    out = []
    for fac, mult in poly_factor_fp(f.monic()):
        if fac.degree == 1:
            # x + c -> root -c
            out.append((f.field.neg(fac.coeffs[0]), mult))
    return out


def rational_roots(f: Poly):
    """Rational roots of f over Q with multiplicities."""
    field = f.field
    if not isinstance(field, Rationals):
        raise WrongField("rational_roots requires the rational field")
    if f.is_zero():
        raise ZeroInput("zero polynomial")
    # clear denominators to primitive integer form
    den = 1
    for c in f.coeffs:
        den = den * Fraction(c).denominator // _gcd(den, Fraction(c).denominator)
    ints = [int(Fraction(c) * den) for c in f.coeffs]
    g = 0
    for c in ints:
        g = _gcd(g, abs(c))
    ints = [c // g for c in ints]
    lead, const = ints[-1], next((c for c in ints if c != 0))
    cands = set()
    for r in _divisors(abs(const)):
        for s in _divisors(abs(lead)):
            cands.add(Fraction(r, s))
            cands.add(Fraction(-r, s))
    cands.add(Fraction(0))
    out = []
    for r in sorted(cands, key=field.sort_key):
        if f(r) == 0:
            mult = 0
            rem = f
            while not rem.is_zero() and rem(r) == 0 and rem.degree >= 1:
                rem, _ = rem.divmod(Poly.x_minus(field, r))
                mult += 1
            if mult:
                out.append((r, mult))
    return out


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return a


def _divisors(n):
    if n == 0:
        return [1]
    out = []
    i = 1
    while i * i <= n:
        if n % i == 0:
            out.append(i)
            out.append(n // i)
        i += 1
    return sorted(set(out))
