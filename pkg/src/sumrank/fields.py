"""Exact arithmetic in prime fields and relative extension-field towers.

A field is either F_p for a prime p, or an extension of another field by a
monic irreducible modulus polynomial.  Towers are kept relative (an extension
of F_q is built directly over F_q, never flattened to the prime field), so the
polynomial-basis coordinate map is linear over the immediate base field by
construction.

Elements are stored as canonical indices in ``range(order)``: for a prime
field the index is the residue; for an extension the index is the mixed-radix
encoding of the coefficient vector with the constant term as the least
significant digit.  That makes the canonical enumeration plain ``range(order)``
and keeps matrices as numpy integer arrays.
"""

from __future__ import annotations

import itertools
from functools import reduce

import numpy as np

from .errors import NotExtension, NotPrime, NotPrimePower, NotSubfield

# Full multiplication/addition tables are only built for fields up to this
# order (memory is order^2 per table).
_TABLE_MAX_ORDER = 1024

# Deterministic primality by trial division is acceptable below this bound;
# larger characteristics are out of scope.
_PRIME_LIMIT = 2**32


def is_prime(n: int) -> bool:
    """Deterministic trial-division primality test for n < 2^32."""
    if n < 2:
        return False
    if n >= _PRIME_LIMIT:
        raise NotPrime(f"primality testing for p >= 2^32 is out of scope (got {n})")
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


class FieldCtx:
    """A finite field: a prime field or a relative extension of another field.

    Do not call the constructor directly; use :func:`make_prime_field` and
    :func:`make_extension` so that moduli are chosen canonically.

    Attributes:
        kind: "prime" or "ext".
        order: number of elements.
        characteristic: the prime at the bottom of the tower.
        base: the base field (extension fields only).
        degree: extension degree over ``base`` (extension fields only).
        modulus: monic modulus polynomial as a tuple of base-field indices,
            constant term first, length ``degree + 1`` (extension fields only).
    """

    __slots__ = (
        "kind", "order", "characteristic", "base", "degree", "modulus",
        "_key", "_add_t", "_mul_t", "_inv_t", "_vadd_u", "_vmul_u",
    )

    def __init__(self, kind, *, p=None, base=None, degree=None, modulus=None):
        self.kind = kind
        if kind == "prime":
            self.order = p
            self.characteristic = p
            self.base = None
            self.degree = 1
            self.modulus = None
            self._key = ("prime", p)
        else:
            self.base = base
            self.degree = degree
            self.modulus = tuple(modulus)
            self.order = base.order**degree
            self.characteristic = base.characteristic
            self._key = ("ext", base._key, degree, self.modulus)
        self._add_t = None
        self._mul_t = None
        self._inv_t = None
        self._vadd_u = None
        self._vmul_u = None

    # -- identity ---------------------------------------------------------

    def __eq__(self, other):
        return isinstance(other, FieldCtx) and self._key == other._key

    def __hash__(self):
        return hash(self._key)

    def __repr__(self):
        return f"FieldCtx({self.descriptor()})"

    def descriptor(self) -> str:
        """Tower notation, e.g. ``2``, ``2^4``, ``2^2^2``."""
        if self.kind == "prime":
            return str(self.order)
        return f"{self.base.descriptor()}^{self.degree}"

    def tower_orders(self) -> list[int]:
        """Orders of every level of the tower, bottom (prime) first."""
        if self.kind == "prime":
            return [self.order]
        return self.base.tower_orders() + [self.order]

    # -- coordinates ------------------------------------------------------

    def coords(self, a: int) -> tuple[int, ...]:
        """Coefficient vector of index ``a`` over the base field, constant first."""
        if self.kind == "prime":
            raise NotExtension("prime field elements have no coordinate vector")
        q = self.base.order
        out = []
        for _ in range(self.degree):
            out.append(a % q)
            a //= q
        return tuple(out)

    def from_coords(self, cs) -> int:
        """Inverse of :meth:`coords`; short vectors are zero-padded."""
        if self.kind == "prime":
            raise NotExtension("prime field elements have no coordinate vector")
        cs = list(cs)
        if len(cs) > self.degree:
            raise ValueError(f"got {len(cs)} coordinates, degree is {self.degree}")
        q = self.base.order
        a = 0
        for c in reversed(cs):
            a = a * q + int(c)
        return a

    # -- scalar arithmetic on canonical indices ---------------------------

    def add(self, a: int, b: int) -> int:
        if self.kind == "prime":
            return (a + b) % self.order
        ca, cb = self.coords(a), self.coords(b)
        return self.from_coords(self.base.add(x, y) for x, y in zip(ca, cb))

    def neg(self, a: int) -> int:
        if self.kind == "prime":
            return (-a) % self.order
        return self.from_coords(self.base.neg(x) for x in self.coords(a))

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if self.kind == "prime":
            return (a * b) % self.order
        prod = _poly_mul(self.base, list(self.coords(a)), list(self.coords(b)))
        prod = _poly_mod(self.base, prod, list(self.modulus))
        prod += [0] * (self.degree - len(prod))
        return self.from_coords(prod)

    def pow(self, a: int, e: int) -> int:
        if e < 0:
            return self.pow(self.inv(a), -e)
        if self.kind == "prime":
            return pow(a, e, self.order)
        result, sq = 1, a
        while e:
            if e & 1:
                result = self.mul(result, sq)
            sq = self.mul(sq, sq)
            e >>= 1
        return result

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("division by zero in " + self.descriptor())
        if self.kind == "prime":
            return pow(a, -1, self.order)
        return self.pow(a, self.order - 2)

    # -- vectorized arithmetic on numpy index arrays ----------------------
    #
    # Prime fields use modular arithmetic directly; small extension fields
    # use cached lookup tables (fancy indexing broadcasts); large extension
    # fields fall back to an elementwise ufunc.

    def _tables(self):
        if self._mul_t is None:
            n = self.order
            add_t = np.empty((n, n), dtype=np.int64)
            mul_t = np.empty((n, n), dtype=np.int64)
            for a in range(n):
                for b in range(a, n):
                    s = self.add(a, b)
                    p = self.mul(a, b)
                    add_t[a, b] = add_t[b, a] = s
                    mul_t[a, b] = mul_t[b, a] = p
            self._add_t, self._mul_t = add_t, mul_t
        return self._add_t, self._mul_t

    def vadd(self, a, b):
        if self.kind == "prime":
            return (a + b) % self.order
        if self.order <= _TABLE_MAX_ORDER:
            add_t, _ = self._tables()
            return add_t[a, b]
        if self._vadd_u is None:
            self._vadd_u = np.frompyfunc(self.add, 2, 1)
        return self._vadd_u(a, b).astype(np.int64)

    def vmul(self, a, b):
        if self.kind == "prime":
            return (a * b) % self.order
        if self.order <= _TABLE_MAX_ORDER:
            _, mul_t = self._tables()
            return mul_t[a, b]
        if self._vmul_u is None:
            self._vmul_u = np.frompyfunc(self.mul, 2, 1)
        return self._vmul_u(a, b).astype(np.int64)

    def vneg(self, a):
        if self.kind == "prime":
            return (-a) % self.order
        return self.vmul(np.int64(self.neg(1)), a)

    def vsub(self, a, b):
        if self.kind == "prime":
            return (a - b) % self.order
        return self.vadd(a, self.vneg(b))

    # -- elements ---------------------------------------------------------

    def elem(self, idx: int) -> "FieldElem":
        """Element with the given canonical index."""
        idx = int(idx)
        if not 0 <= idx < self.order:
            raise ValueError(f"index {idx} out of range for {self.descriptor()}")
        return FieldElem(self, idx)

    @property
    def zero(self) -> "FieldElem":
        return FieldElem(self, 0)

    @property
    def one(self) -> "FieldElem":
        return FieldElem(self, 1)

    def gen(self) -> "FieldElem":
        """The adjoined root x of the modulus (extension fields only)."""
        if self.kind == "prime":
            raise NotExtension("prime fields have no adjoined generator")
        return FieldElem(self, self.from_coords([0, 1] if self.degree > 1 else [1]))

    def __iter__(self):
        return (FieldElem(self, i) for i in range(self.order))


class FieldElem:
    """An element of a :class:`FieldCtx`, identified by its canonical index."""

    __slots__ = ("ctx", "idx")

    def __init__(self, ctx: FieldCtx, idx: int):
        self.ctx = ctx
        self.idx = idx

    def _coerce(self, other) -> int:
        if isinstance(other, FieldElem):
            if other.ctx != self.ctx:
                from .errors import FieldMismatch

                raise FieldMismatch(
                    f"{self.ctx.descriptor()} vs {other.ctx.descriptor()}"
                )
            return other.idx
        if isinstance(other, (int, np.integer)):
            return int(other) % self.ctx.characteristic if self.ctx.kind == "prime" else int(other)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        return FieldElem(self.ctx, self.ctx.add(self.idx, o))

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        return FieldElem(self.ctx, self.ctx.sub(self.idx, o))

    def __rsub__(self, other):
        o = self._coerce(other)
        return FieldElem(self.ctx, self.ctx.sub(o, self.idx))

    def __mul__(self, other):
        o = self._coerce(other)
        return FieldElem(self.ctx, self.ctx.mul(self.idx, o))

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        return FieldElem(self.ctx, self.ctx.mul(self.idx, self.ctx.inv(o)))

    def __neg__(self):
        return FieldElem(self.ctx, self.ctx.neg(self.idx))

    def __pow__(self, e: int):
        return FieldElem(self.ctx, self.ctx.pow(self.idx, e))

    def inverse(self) -> "FieldElem":
        return FieldElem(self.ctx, self.ctx.inv(self.idx))

    def __bool__(self):
        return self.idx != 0

    def __eq__(self, other):
        if isinstance(other, FieldElem):
            return self.ctx == other.ctx and self.idx == other.idx
        if isinstance(other, (int, np.integer)):
            return self.idx == int(other)
        return NotImplemented

    def __hash__(self):
        return hash((self.ctx, self.idx))

    def __repr__(self):
        return f"<{self.ctx.descriptor()}:{elem_to_str(self)}>"

    @property
    def coeffs(self) -> tuple["FieldElem", ...]:
        """Coefficient vector over the base field (extension fields only)."""
        return tuple(self.ctx.base.elem(c) for c in self.ctx.coords(self.idx))


# -- polynomial helpers over an arbitrary FieldCtx ------------------------
# Polynomials are lists of element indices, constant term first, no implied
# normalization except where stated.


def _poly_trim(a):
    while a and a[-1] == 0:
        a.pop()
    return a


def _poly_mul(ctx, a, b):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai == 0:
            continue
        for j, bj in enumerate(b):
            out[i + j] = ctx.add(out[i + j], ctx.mul(ai, bj))
    return _poly_trim(out)

def _poly_mod(ctx, a, f):
    """Remainder of a modulo f; f need not be monic."""
    a = list(a)
    df = len(_poly_trim(list(f))) - 1
    lead_inv = ctx.inv(f[df])
    while len(_poly_trim(a)) - 1 >= df and a:
        da = len(a) - 1
        c = ctx.mul(a[da], lead_inv)
        shift = da - df
        for i in range(df + 1):
            a[shift + i] = ctx.sub(a[shift + i], ctx.mul(c, f[i]))
        _poly_trim(a)
    return a


def _poly_gcd(ctx, a, b):
    a, b = _poly_trim(list(a)), _poly_trim(list(b))
    while b:
        a, b = b, _poly_mod(ctx, a, b)
        b = _poly_trim(b)
    if a:  # normalize monic
        inv = ctx.inv(a[-1])
        a = [ctx.mul(c, inv) for c in a]
    return a


def _poly_powmod(ctx, a, e, f):
    result, sq = [1], _poly_mod(ctx, list(a), f)
    while e:
        if e & 1:
            result = _poly_mod(ctx, _poly_mul(ctx, result, sq), f)
        sq = _poly_mod(ctx, _poly_mul(ctx, sq, sq), f)
        e >>= 1
    return result


def _prime_factors(n: int) -> list[int]:
    out, f = [], 2
    while f * f <= n:
        if n % f == 0:
            out.append(f)
            while n % f == 0:
                n //= f
        f += 1
    if n > 1:
        out.append(n)
    return out


def poly_is_irreducible(base: FieldCtx, f) -> bool:
    """Irreducibility of a monic polynomial over ``base`` (Rabin's test).

    f of degree n is irreducible over F_Q iff x^(Q^n) = x mod f and, for each
    prime divisor l of n, gcd(x^(Q^(n/l)) - x, f) = 1.
    """
    f = list(f)
    n = len(f) - 1
    if n <= 0:
        return False
    if n == 1:
        return True
    Q = base.order
    x = [0, 1]

    def x_pow_Q_pow(k):
        r = x
        for _ in range(k):
            r = _poly_powmod(base, r, Q, f)
        return r

    for ell in _prime_factors(n):
        g = _poly_trim(
            [base.sub(a, b) for a, b in itertools.zip_longest(x_pow_Q_pow(n // ell), x, fillvalue=0)]
        )
        if len(_poly_gcd(base, g, f)) != 1:
            return False
    top = x_pow_Q_pow(n)
    diff = _poly_trim(
        [base.sub(a, b) for a, b in itertools.zip_longest(top, x, fillvalue=0)]
    )
    return not diff


# -- public constructors ---------------------------------------------------

_EXT_CACHE: dict[tuple, FieldCtx] = {}


def make_prime_field(p: int) -> FieldCtx:
    """Prime field F_p.

    Raises:
        NotPrime: if p is composite or < 2.
    """
    if not is_prime(p):
        raise NotPrime(f"{p} is not prime")
    return FieldCtx("prime", p=p)


def make_extension(base: FieldCtx, degree: int) -> FieldCtx:
    """Degree-``degree`` extension of ``base`` with the canonical modulus.

    The modulus is the lexicographically smallest monic irreducible polynomial
    of that degree over ``base``, ordering coefficient tuples constant term
    first under the canonical enumeration of base elements.  Degree 1 returns
    ``base`` unchanged.
    """
    if degree < 1:
        raise ValueError(f"extension degree must be >= 1, got {degree}")
    if degree == 1:
        return base
    key = (base._key, degree)
    ctx = _EXT_CACHE.get(key)
    if ctx is not None:
        return ctx
    Q = base.order
    for tup in itertools.product(range(Q), repeat=degree):
        f = list(tup) + [1]
        if poly_is_irreducible(base, f):
            ctx = FieldCtx("ext", base=base, degree=degree, modulus=f)
            _EXT_CACHE[key] = ctx
            return ctx
    raise AssertionError("no irreducible polynomial found (impossible)")


def field_from_order(q: int) -> FieldCtx:
    """Field of order q as a single-step extension of its prime field.

    Raises:
        NotPrimePower: if q is not a prime power.
    """
    if q < 2:
        raise NotPrimePower(f"{q} is not a prime power")
    p = min(_prime_factors(q))
    e = 0
    n = q
    while n % p == 0:
        n //= p
        e += 1
    if n != 1:
        raise NotPrimePower(f"{q} is not a prime power")
    base = make_prime_field(p)
    return make_extension(base, e)


def parse_field(descriptor: str) -> FieldCtx:
    """Parse tower notation ``p^s1^s2...`` into a FieldCtx."""
    parts = descriptor.split("^")
    ctx = make_prime_field(int(parts[0]))
    for s in parts[1:]:
        ctx = make_extension(ctx, int(s))
    return ctx


def enumerate_field(ctx: FieldCtx):
    """Yield all elements of ctx once, in canonical order."""
    return iter(ctx)


def pi_coords(e: FieldElem) -> tuple[FieldElem, ...]:
    """Polynomial-basis coordinates of e over its immediate base field.

    This is the F_base-linear bijection from the extension onto base^degree
    used when concatenating codes.

    Raises:
        NotExtension: if e lives in a prime field.
    """
    if e.ctx.kind == "prime":
        raise NotExtension("pi_coords requires an extension-field element")
    return e.coeffs


def frobenius_power(e: FieldElem, i: int, q: int) -> FieldElem:
    """e raised to the power q^i, where q is a tower-level order of e's field.

    Raises:
        NotSubfield: if q is not the order of a level of the tower.
    """
    ctx = e.ctx
    if q not in ctx.tower_orders():
        raise NotSubfield(f"{q} is not a tower level of {ctx.descriptor()}")
    if i < 0:
        raise ValueError("Frobenius power index must be nonnegative")
    if e.idx == 0 or i == 0:
        return e
    exponent = pow(q, i, ctx.order - 1)
    if exponent == 0:
        exponent = ctx.order - 1
    return e**exponent


def elem_to_str(e: FieldElem) -> str:
    """Serialize an element as comma-separated base-field indices, constant first."""
    if e.ctx.kind == "prime":
        return str(e.idx)
    return ",".join(str(c) for c in e.ctx.coords(e.idx))


def elem_from_str(ctx: FieldCtx, s: str) -> FieldElem:
    """Inverse of :func:`elem_to_str`."""
    if ctx.kind == "prime":
        return ctx.elem(int(s))
    return ctx.elem(ctx.from_coords(int(c) for c in s.split(",")))
