"""Exact arithmetic in small finite fields GF(p^e).

Elements are represented by their index in the canonical enumeration:
an element with polynomial-basis coefficients (c0, c1, ..., c_{e-1})
over GF(p) has index c0 + c1*p + ... + c_{e-1}*p^(e-1).  Index order is
therefore the canonical element order (zero first, then 1, then the
class of x, ...), and GF(4) enumerates as [0, 1, a, a+1] where a is the
class of x modulo the default modulus x^2 + x + 1.

Multiplication uses discrete log/antilog tables with respect to a fixed
primitive element; addition works on the base-p digit vectors.  Both are
exposed in scalar form (`Field.add`, `Field.mul`, ...) and in vectorized
form over numpy index arrays (`Field.vadd`, `Field.vmul`, ...).  The
`Felt` wrapper provides operator syntax and guards against mixing
elements of different fields.

Default moduli are chosen deterministically: the monic polynomial of
degree e with the smallest coefficient encoding such that the class of
x generates the multiplicative group.  For GF(4) this is x^2 + x + 1,
so a satisfies a^2 + a + 1 = 0.  Fields larger than 2^16 are rejected;
this module targets desk-scale experimentation, not cryptography.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterator, Sequence

import numpy as np

MAX_FIELD_SIZE = 1 << 16


class FieldError(Exception):
    """Invalid field construction or unsupported field operation."""


class FieldMismatchError(FieldError):
    """Operands belong to different fields."""


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    i = 2
    while i * i <= n:
        if n % i == 0:
            return False
        i += 1
    return True


def factor_prime_power(q: int) -> tuple[int, int]:
    """Return (p, s) with q = p^s, or raise FieldError."""
    if q < 2:
        raise FieldError(f"{q} is not a prime power")
    for p in range(2, q + 1):
        if q % p == 0:
            s = 0
            m = q
            while m % p == 0:
                m //= p
                s += 1
            if m != 1:
                raise FieldError(f"{q} is not a prime power")
            return p, s
    raise FieldError(f"{q} is not a prime power")


# ---------------------------------------------------------------------------
# Polynomial helpers over GF(p), used only during field construction.
# Polynomials are little-endian coefficient tuples.


def _poly_trim(f: Sequence[int]) -> tuple[int, ...]:
    f = list(f)
    while f and f[-1] == 0:
        f.pop()
    return tuple(f)


def _poly_mul(f, g, p):
    out = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a:
            for j, b in enumerate(g):
                out[i + j] = (out[i + j] + a * b) % p
    return _poly_trim(out)


def _poly_divmod(f, g, p):
    f = list(f)
    dg = len(g) - 1
    lead_inv = pow(g[-1], p - 2, p)
    quot = [0] * max(0, len(f) - dg)
    while len(_poly_trim(f)) - 1 >= dg and any(f):
        f = list(_poly_trim(f))
        shift = len(f) - 1 - dg
        c = (f[-1] * lead_inv) % p
        quot[shift] = c
        for i, b in enumerate(g):
            f[shift + i] = (f[shift + i] - c * b) % p
    return _poly_trim(quot), _poly_trim(f)


def _is_irreducible(f: Sequence[int], p: int) -> bool:
    """Trial division by all monic polynomials up to degree deg(f)//2."""
    f = _poly_trim(f)
    deg = len(f) - 1
    if deg <= 0:
        return False
    if deg == 1:
        return True
    for d in range(1, deg // 2 + 1):
        for enc in range(p**d):
            g = [(enc // p**i) % p for i in range(d)] + [1]
            _, rem = _poly_divmod(f, g, p)
            if not rem:
                return False
    return True


def _search_default_modulus(p: int, e: int) -> tuple[int, ...]:
    """Smallest monic degree-e polynomial whose x-class is primitive."""
    order = p**e
    for enc in range(order):
        modulus = tuple((enc // p**i) % p for i in range(e)) + (1,)
        if _x_class_order(modulus, p, e) == order - 1:
            return modulus
    raise FieldError(f"no primitive modulus found for GF({p}^{e})")


def _x_class_order(modulus, p, e):
    """Multiplicative order of the class of x in GF(p)[x]/(modulus), 0 if not a unit.

    If the order is p^e - 1 the quotient ring has p^e - 1 distinct units and is
    therefore a field, so a full-order result certifies irreducibility as well.
    """
    order = p**e
    one = (1,) + (0,) * (e - 1)
    x = tuple(1 if i == 1 else 0 for i in range(e)) if e > 1 else ((-modulus[0]) % p,)

    def mul(a, b):
        prod = [0] * (2 * e - 1) if e > 1 else [0]
        for i, u in enumerate(a):
            if u:
                for j, v in enumerate(b):
                    prod[i + j] = (prod[i + j] + u * v) % p
        for d in range(len(prod) - 1, e - 1, -1):
            c = prod[d]
            if c:
                prod[d] = 0
                for i in range(e):
                    prod[d - e + i] = (prod[d - e + i] - c * modulus[i]) % p
        return tuple(prod[:e])

    cur = one
    for k in range(1, order):
        cur = mul(cur, x)
        if cur == one:
            return k
        if not any(cur):
            return 0
    return 0


class Field:
    """GF(p^e) with table-backed arithmetic on integer element indices.

    Parameters
    ----------
    p : prime characteristic.
    e : extension degree over GF(p).
    modulus : optional monic irreducible polynomial of degree e over
        GF(p), as a little-endian coefficient list of length e+1.
        Defaults to the canonical primitive modulus for (p, e).
    """

    def __init__(self, p: int, e: int, modulus: Sequence[int] | None = None):
        if not _is_prime(p):
            raise FieldError(f"characteristic {p} is not prime")
        if e < 1:
            raise FieldError(f"extension degree must be >= 1, got {e}")
        order = p**e
        if order > MAX_FIELD_SIZE:
            raise FieldError(f"field size {order} exceeds desk-scale limit {MAX_FIELD_SIZE}")
        self.p = p
        self.e = e
        self.order = order
        if modulus is None:
            modulus = _search_default_modulus(p, e)
        else:
            modulus = tuple(c % p for c in modulus)
            if len(modulus) != e + 1 or modulus[-1] != 1:
                raise FieldError("modulus must be monic of degree e")
            if not _is_irreducible(modulus, p):
                raise FieldError(f"modulus {list(modulus)} is reducible over GF({p})")
        self.modulus = tuple(modulus)

        # digit table: index -> base-p coefficient vector
        idx = np.arange(order, dtype=np.int64)
        self._digits = np.stack([(idx // p**i) % p for i in range(e)], axis=-1)
        self._pows = np.array([p**i for i in range(e)], dtype=np.int64)

        # exp/log tables for the fixed primitive element
        self.primitive = self._find_primitive()
        self._exp = np.zeros(order - 1, dtype=np.int64)
        self._log = np.zeros(order, dtype=np.int64)
        acc = 1
        for k in range(order - 1):
            self._exp[k] = acc
            self._log[acc] = k
            acc = self._mul_raw(acc, self.primitive)
        if acc != 1:
            raise FieldError("primitive element does not have full order")

    # -- construction internals --------------------------------------------

    def _mul_raw(self, a: int, b: int) -> int:
        """Table-free multiply, used while building the log tables."""
        da = self._digits[a]
        db = self._digits[b]
        prod = [0] * (2 * self.e - 1) if self.e > 1 else [0]
        for i, u in enumerate(da):
            if u:
                for j, v in enumerate(db):
                    prod[i + j] = (prod[i + j] + int(u) * int(v)) % self.p
        for d in range(len(prod) - 1, self.e - 1, -1):
            c = prod[d]
            if c:
                prod[d] = 0
                for i in range(self.e):
                    prod[d - self.e + i] = (prod[d - self.e + i] - c * self.modulus[i]) % self.p
        return int(sum(c * self.p**i for i, c in enumerate(prod[: self.e])))

    def _element_order(self, a: int) -> int:
        cur = a
        for k in range(1, self.order):
            if cur == 1:
                return k
            cur = self._mul_raw(cur, a)
        return 0

    def _find_primitive(self) -> int:
        x_class = self.p if self.e > 1 else (-self.modulus[0]) % self.p
        if self.order == 2:
            return 1
        if self._element_order(x_class) == self.order - 1:
            return x_class
        for a in range(2, self.order):
            if self._element_order(a) == self.order - 1:
                return a
        raise FieldError("no primitive element found")

    # -- scalar operations ---------------------------------------------------

    def _check(self, *indices: int) -> None:
        for a in indices:
            if not 0 <= a < self.order:
                raise FieldError(f"index {a} out of range for {self!r}")

    def add(self, a: int, b: int) -> int:
        self._check(a, b)
        return int(((self._digits[a] + self._digits[b]) % self.p) @ self._pows)

    def sub(self, a: int, b: int) -> int:
        self._check(a, b)
        return int(((self._digits[a] - self._digits[b]) % self.p) @ self._pows)

    def neg(self, a: int) -> int:
        self._check(a)
        return int(((-self._digits[a]) % self.p) @ self._pows)

    def mul(self, a: int, b: int) -> int:
        self._check(a, b)
        if a == 0 or b == 0:
            return 0
        return int(self._exp[(self._log[a] + self._log[b]) % (self.order - 1)])

    def inv(self, a: int) -> int:
        self._check(a)
        if a == 0:
            raise ZeroDivisionError("zero has no multiplicative inverse")
        return int(self._exp[(-self._log[a]) % (self.order - 1)])

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, k: int) -> int:
        self._check(a)
        if a == 0:
            if k == 0:
                return 1
            if k < 0:
                raise ZeroDivisionError("zero to a negative power")
            return 0
        return int(self._exp[(self._log[a] * k) % (self.order - 1)])

    # -- vectorized operations on index arrays -------------------------------

    def vadd(self, a, b):
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        return ((self._digits[a] + self._digits[b]) % self.p) @ self._pows

    def vsub(self, a, b):
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        return ((self._digits[a] - self._digits[b]) % self.p) @ self._pows

    def vneg(self, a):
        a = np.asarray(a, dtype=np.int64)
        return ((-self._digits[a]) % self.p) @ self._pows

    def vmul(self, a, b):
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        prod = self._exp[(self._log[a] + self._log[b]) % (self.order - 1)]
        return np.where((a == 0) | (b == 0), 0, prod)

    def vinv(self, a):
        a = np.asarray(a, dtype=np.int64)
        if np.any(a == 0):
            raise ZeroDivisionError("zero has no multiplicative inverse")
        return self._exp[(-self._log[a]) % (self.order - 1)]

    def vpow(self, a, k: int):
        a = np.asarray(a, dtype=np.int64)
        if k == 0:
            return np.ones_like(a)
        if k < 0:
            return self.vinv(self.vpow(a, -k))
        powered = self._exp[(self._log[a] * k) % (self.order - 1)]
        return np.where(a == 0, 0, powered)

    def vsum(self, a, axis: int = -1):
        """Field sum reducing the given axis of an index array."""
        a = np.asarray(a, dtype=np.int64)
        if a.shape[axis if axis >= 0 else a.ndim + axis] == 0:
            shape = list(a.shape)
            del shape[axis if axis >= 0 else a.ndim + axis]
            return np.zeros(shape, dtype=np.int64)
        digit_axis = axis if axis >= 0 else a.ndim + axis
        summed = self._digits[a].sum(axis=digit_axis) % self.p
        return summed @ self._pows

    def vscale(self, c: int, a):
        return self.vmul(np.int64(c), a)

    def vdot(self, a, b):
        return self.vsum(self.vmul(a, b), axis=-1)

    # -- element views ---------------------------------------------------------

    def felt(self, index: int) -> "Felt":
        self._check(index)
        return Felt(self, int(index))

    def element(self, coeffs: Sequence[int]) -> "Felt":
        if len(coeffs) != self.e:
            raise FieldError(f"expected {self.e} coefficients, got {len(coeffs)}")
        return Felt(self, int(sum((c % self.p) * self.p**i for i, c in enumerate(coeffs))))

    def coeffs(self, index: int) -> tuple[int, ...]:
        self._check(index)
        return tuple(int(c) for c in self._digits[index])

    def elements(self) -> Iterator["Felt"]:
        """All field elements in canonical order (zero first)."""
        for i in range(self.order):
            yield Felt(self, i)

    def zero(self) -> "Felt":
        return Felt(self, 0)

    def one(self) -> "Felt":
        return Felt(self, 1)

    def format_element(self, index: int) -> str:
        """Human-readable polynomial form, e.g. 'a+1' in GF(4)."""
        self._check(index)
        if self.e == 1:
            return str(index)
        terms = []
        for i in range(self.e - 1, -1, -1):
            c = int(self._digits[index][i])
            if c == 0:
                continue
            if i == 0:
                terms.append(str(c))
            else:
                var = "a" if i == 1 else f"a^{i}"
                terms.append(var if c == 1 else f"{c}{var}")
        return "+".join(terms) if terms else "0"

    # -- serialization -----------------------------------------------------------

    def to_json(self) -> str:
        return json.dumps(
            {
                "p": self.p,
                "e": self.e,
                "modulus": list(self.modulus),
                "primitive": list(self.coeffs(self.primitive)),
            }
        )

    @classmethod
    def from_json(cls, text: str) -> "Field":
        data = json.loads(text)
        f = cls(data["p"], data["e"], modulus=data["modulus"])
        if "primitive" in data:
            prim = f.element(data["primitive"]).index
            if f._element_order(prim) != f.order - 1:
                raise FieldError("declared primitive element does not have full order")
            if prim != f.primitive:
                f.primitive = prim
                acc = 1
                for k in range(f.order - 1):
                    f._exp[k] = acc
                    f._log[acc] = k
                    acc = f._mul_raw(acc, prim)
        return f

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Field)
            and self.p == other.p
            and self.e == other.e
            and self.modulus == other.modulus
        )

    def __hash__(self) -> int:
        return hash((self.p, self.e, self.modulus))

    def __repr__(self) -> str:
        return f"GF({self.p}^{self.e})" if self.e > 1 else f"GF({self.p})"


_FIELD_CACHE: dict[tuple[int, int], Field] = {}


def field(p: int, e: int = 1, modulus: Sequence[int] | None = None) -> Field:
    """Field constructor with caching of default-modulus instances."""
    if modulus is not None:
        return Field(p, e, modulus)
    key = (p, e)
    if key not in _FIELD_CACHE:
        _FIELD_CACHE[key] = Field(p, e)
    return _FIELD_CACHE[key]


@dataclass(frozen=True)
class Felt:
    """A single field element: owning field plus canonical index."""

    field: Field
    index: int

    def _coerce(self, other) -> "Felt":
        if not isinstance(other, Felt):
            raise FieldMismatchError(f"cannot combine {self!r} with {other!r}")
        if other.field != self.field:
            raise FieldMismatchError(f"field mismatch: {self.field!r} vs {other.field!r}")
        return other

    @property
    def coeffs(self) -> tuple[int, ...]:
        return self.field.coeffs(self.index)

    def __add__(self, other):
        other = self._coerce(other)
        return Felt(self.field, self.field.add(self.index, other.index))

    def __sub__(self, other):
        other = self._coerce(other)
        return Felt(self.field, self.field.sub(self.index, other.index))

    def __neg__(self):
        return Felt(self.field, self.field.neg(self.index))

    def __mul__(self, other):
        other = self._coerce(other)
        return Felt(self.field, self.field.mul(self.index, other.index))

    def __truediv__(self, other):
        other = self._coerce(other)
        return Felt(self.field, self.field.div(self.index, other.index))

    def __pow__(self, k: int):
        return Felt(self.field, self.field.pow(self.index, k))

    def inverse(self) -> "Felt":
        return Felt(self.field, self.field.inv(self.index))

    def __bool__(self) -> bool:
        return self.index != 0

    def __repr__(self) -> str:
        return self.field.format_element(self.index)


class QuadraticTower:
    """The tower GF(p) < GF(q) < GF(q^2) with q = p^s.

    Exposes the conjugation map a -> a^q on GF(q^2), the embedding of
    GF(q) into GF(q^2) (sending the x-class of the base field to the
    canonically smallest root of the base modulus), and O(1) subfield
    membership tests.
    """

    def __init__(self, q: int):
        p, s = factor_prime_power(q)
        self.q = q
        self.p = p
        self.s = s
        self.base = field(p, s)
        self.ext = field(p, 2 * s)

        idx = np.arange(self.ext.order, dtype=np.int64)
        self.frob_table = self.ext.vpow(idx, q)
        fixed = idx[self.frob_table == idx]
        if len(fixed) != q:
            raise FieldError(f"frobenius fixed set has size {len(fixed)}, expected {q}")

        root = None
        for z in (int(v) for v in fixed):
            acc = 0
            for c in reversed(self.base.modulus):
                acc = self.ext.add(self.ext.mul(acc, z), c % p)
            if acc == 0:
                root = z
                break
        if root is None:
            raise FieldError("base modulus has no root in the extension")
        self._root = root

        embed = np.zeros(q, dtype=np.int64)
        for a in range(q):
            acc = 0
            for c in reversed(self.base.coeffs(a)):
                acc = self.ext.add(self.ext.mul(acc, root), c)
            embed[a] = acc
        self.embed_table = embed
        self.subfield_indices = frozenset(int(v) for v in embed)
        if self.subfield_indices != {int(v) for v in fixed}:
            raise FieldError("embedded subfield does not match frobenius fixed set")

    def frobenius(self, a: Felt) -> Felt:
        """a^q on GF(q^2); an involution fixing exactly the embedded GF(q)."""
        if a.field != self.ext:
            raise FieldMismatchError(f"{a!r} is not in {self.ext!r}")
        return Felt(self.ext, int(self.frob_table[a.index]))

    def vfrobenius(self, arr):
        return self.frob_table[np.asarray(arr, dtype=np.int64)]

    def embed(self, a: Felt) -> Felt:
        if a.field != self.base:
            raise FieldMismatchError(f"{a!r} is not in {self.base!r}")
        return Felt(self.ext, int(self.embed_table[a.index]))

    def in_subfield(self, a: Felt | int) -> bool:
        index = a.index if isinstance(a, Felt) else int(a)
        return index in self.subfield_indices

    def __repr__(self) -> str:
        return f"Tower(GF({self.q}) < GF({self.q**2}))"


_TOWER_CACHE: dict[int, QuadraticTower] = {}


def quadratic_tower(q: int) -> QuadraticTower:
    if q not in _TOWER_CACHE:
        _TOWER_CACHE[q] = QuadraticTower(q)
    return _TOWER_CACHE[q]
