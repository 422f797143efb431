"""Exact arithmetic in the field tower F_q <= F_{q^m}.

q must be prime.  The extension F_{q^m} = F_q[z]/(modulus) is represented
by a :class:`FieldCtx`; its elements are residue-class polynomials
c_0 + c_1 z + ... + c_{m-1} z^{m-1} stored as the packed integer
sum(c_i * q**i).  For q = 2 the packed value is the usual bit-polynomial
and arithmetic runs on Python ints directly; for general prime q the
context falls back to digit-vector arithmetic.

The Frobenius map a -> a^(q^i) is applied through precomputed images of
the polynomial basis {1, z, ..., z^{m-1}}, so it costs m scalar
operations instead of a full exponentiation.

`FieldCtx.mult_count` counts full F_{q^m} multiplications (one per call,
independent of the internal representation); inversions go through an
extended Euclidean routine over F_q[z] and contribute no multiplications
to the counter.
"""

from __future__ import annotations

import json
import random
from typing import Iterable, Iterator, Optional, Sequence, Union


class ContextMismatchError(ValueError):
    """Raised when elements of two different field contexts are combined."""


def is_prime(n: int) -> bool:
    if n < 2:
        return False
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


# ---------------------------------------------------------------------------
# Dense polynomial helpers over F_q (digit lists, ascending, not normalized).
# Used for the modulus checks and for the general-q arithmetic paths.
# ---------------------------------------------------------------------------

def _poly_deg(p: Sequence[int]) -> int:
    for i in range(len(p) - 1, -1, -1):
        if p[i]:
            return i
    return -1


def _poly_mod(a: Sequence[int], b: Sequence[int], q: int) -> list[int]:
    """Remainder of a mod b over F_q; b must be nonzero."""
    r = list(a)
    db = _poly_deg(b)
    inv_lead = pow(b[db], -1, q)
    dr = _poly_deg(r)
    while dr >= db:
        c = (r[dr] * inv_lead) % q
        shift = dr - db
        for j in range(db + 1):
            if b[j]:
                r[shift + j] = (r[shift + j] - c * b[j]) % q
        dr = _poly_deg(r)
    return r


def _poly_mul(a: Sequence[int], b: Sequence[int], q: int) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                if bj:
                    out[i + j] = (out[i + j] + ai * bj) % q
    return out


def _gf2_mod(a: int, b: int) -> int:
    db = b.bit_length()
    da = a.bit_length()
    while da >= db:
        a ^= b << (da - db)
        da = a.bit_length()
    return a


def _is_irreducible(modulus: Sequence[int], q: int) -> bool:
    """Trial division against every monic polynomial of degree <= m/2."""
    m = _poly_deg(modulus)
    if m < 1:
        return False
    if q == 2:
        packed = sum(c << i for i, c in enumerate(modulus))
        if packed & 1 == 0:  # divisible by z
            return m == 1
        for deg in range(1, m // 2 + 1):
            for low in range(1 << deg):
                g = (1 << deg) | low
                if _gf2_mod(packed, g) == 0:
                    return False
        return True
    if modulus[0] == 0:
        return m == 1
    for deg in range(1, m // 2 + 1):
        for idx in range(q ** deg):
            g = []
            v = idx
            for _ in range(deg):
                g.append(v % q)
                v //= q
            g.append(1)
            if _poly_deg(_poly_mod(modulus, g, q)) < 0:
                return False
    return True


def irreducible_polynomial(q: int, m: int) -> tuple[int, ...]:
    """Smallest (by packed value) monic irreducible of degree m over F_q."""
    if not is_prime(q):
        raise ValueError(f"q = {q} is not prime")
    if m < 1:
        raise ValueError("extension degree must be >= 1")
    for idx in range(q ** m):
        digits = []
        v = idx
        for _ in range(m):
            digits.append(v % q)
            v //= q
        digits.append(1)
        if _is_irreducible(digits, q):
            return tuple(digits)
    raise AssertionError("no irreducible polynomial found")  # unreachable


class FieldCtx:
    """The field tower F_q subset F_{q^m} with a fixed modulus polynomial.

    Immutable after construction; safe to share.  All element-level
    operations are pure functions of element values.
    """

    def __init__(self, q: int, m: int, modulus: Optional[Sequence[int]] = None):
        if not is_prime(q):
            raise ValueError(f"q = {q} is not prime")
        if m < 1:
            raise ValueError("extension degree must be >= 1")
        if modulus is None:
            modulus = irreducible_polynomial(q, m)
        modulus = tuple(int(c) % q for c in modulus)
        if len(modulus) != m + 1:
            raise ValueError(f"modulus must have exactly {m + 1} coefficients")
        if modulus[m] != 1:
            raise ValueError("modulus must be monic")
        if not _is_irreducible(modulus, q):
            raise ValueError(f"modulus {list(modulus)} is reducible over F_{q}")
        self.q = q
        self.m = m
        self.modulus = modulus
        self.order = q ** m
        self.mult_count = 0
        self._mod_packed = sum(c << i for i, c in enumerate(modulus)) if q == 2 else None
        self._frob_tables: dict[int, tuple[int, ...]] = {}
        self._zero = FieldElement(self, 0)
        self._one = FieldElement(self, 1)

    # -- element constructors ------------------------------------------------

    @property
    def zero(self) -> "FieldElement":
        return self._zero

    @property
    def one(self) -> "FieldElement":
        return self._one

    def gen(self) -> "FieldElement":
        """The residue class of z (requires m >= 2 to be outside F_q)."""
        return FieldElement(self, self.q) if self.m > 1 else self._one

    def element(self, x: Union[int, str, Sequence[int], "FieldElement"]) -> "FieldElement":
        if isinstance(x, FieldElement):
            if x.ctx is not self:
                raise ContextMismatchError("element belongs to a different field context")
            return x
        if isinstance(x, str):
            return self.parse(x)
        if isinstance(x, int):
            if not 0 <= x < self.order:
                raise ValueError(f"packed value {x} out of range for this field")
            return FieldElement(self, x)
        return self.from_coords(x)

    def from_coords(self, coords: Sequence[int]) -> "FieldElement":
        if len(coords) != self.m:
            raise ValueError(f"expected {self.m} coordinates, got {len(coords)}")
        val = 0
        for c in reversed(coords):
            c = int(c)
            if not 0 <= c < self.q:
                raise ValueError(f"coordinate {c} out of range [0, {self.q})")
            val = val * self.q + c
        return FieldElement(self, val)

    def parse(self, text: str) -> "FieldElement":
        """Parse the canonical element form "c0,c1,...,c_{m-1}"."""
        parts = text.strip().split(",")
        if len(parts) != self.m:
            raise ValueError(f"expected {self.m} comma-separated digits, got {len(parts)}")
        return self.from_coords([int(p) for p in parts])

    def random_element(self, rng: Union[random.Random, int, None] = None) -> "FieldElement":
        if not isinstance(rng, random.Random):
            rng = random.Random(rng)
        return FieldElement(self, rng.randrange(self.order))

    def elements(self) -> Iterator["FieldElement"]:
        """All field elements in packed-value order (desk scale only)."""
        for v in range(self.order):
            yield FieldElement(self, v)

    # -- serialization --------------------------------------------------------

    def to_json(self) -> dict:
        return {"q": self.q, "m": self.m, "modulus": list(self.modulus)}

    @classmethod
    def from_json(cls, obj: Union[dict, str]) -> "FieldCtx":
        if isinstance(obj, str):
            obj = json.loads(obj)
        return cls(int(obj["q"]), int(obj["m"]), obj["modulus"])

    def __repr__(self) -> str:
        return f"FieldCtx(q={self.q}, m={self.m}, modulus={list(self.modulus)})"

    # -- packed-value arithmetic ----------------------------------------------

    def _digits(self, v: int) -> list[int]:
        out = []
        for _ in range(self.m):
            out.append(v % self.q)
            v //= self.q
        return out

    def _add(self, a: int, b: int) -> int:
        if self.q == 2:
            return a ^ b
        da, db = self._digits(a), self._digits(b)
        val = 0
        for x, y in zip(reversed(da), reversed(db)):
            val = val * self.q + (x + y) % self.q
        return val

    def _neg(self, a: int) -> int:
        if self.q == 2:
            return a
        da = self._digits(a)
        val = 0
        for x in reversed(da):
            val = val * self.q + (-x) % self.q
        return val

    def _sub(self, a: int, b: int) -> int:
        return self._add(a, self._neg(b)) if self.q != 2 else a ^ b

    def _scalar(self, c: int, a: int) -> int:
        """Multiply by c in F_q (coordinate-wise; not counted as a field mult)."""
        c %= self.q
        if self.q == 2:
            return a if c else 0
        if c == 0:
            return 0
        da = self._digits(a)
        val = 0
        for x in reversed(da):
            val = val * self.q + (c * x) % self.q
        return val

    def _mul(self, a: int, b: int) -> int:
        self.mult_count += 1
        if a == 0 or b == 0:
            return 0
        if self.q == 2:
            r = 0
            x = a
            while b:
                if b & 1:
                    r ^= x
                x <<= 1
                b >>= 1
            mod = self._mod_packed
            top = self.m + 1
            dr = r.bit_length()
            while dr >= top:
                r ^= mod << (dr - top)
                dr = r.bit_length()
            return r
        prod = _poly_mul(self._digits(a), self._digits(b), self.q)
        rem = _poly_mod(prod, self.modulus, self.q)
        val = 0
        for x in reversed(rem[: self.m] + [0] * (self.m - len(rem))):
            val = val * self.q + x
        return val

    def _inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of zero field element")
        if self.q == 2:
            # extended Euclid on bit-packed polynomials
            r0, r1 = self._mod_packed, a
            s0, s1 = 0, 1
            while r1:
                d = r0.bit_length() - r1.bit_length()
                if d < 0:
                    r0, r1, s0, s1 = r1, r0, s1, s0
                    continue
                r0 ^= r1 << d
                s0 ^= s1 << d
            # r0 == gcd == 1 since the modulus is irreducible
            top = self.m + 1
            dr = s0.bit_length()
            while dr >= top:
                s0 ^= self._mod_packed << (dr - top)
                dr = s0.bit_length()
            return s0
        r0, r1 = list(self.modulus), self._digits(a)
        s0, s1 = [0], [1]
        while _poly_deg(r1) >= 0:
            d0, d1 = _poly_deg(r0), _poly_deg(r1)
            if d0 < d1:
                r0, r1, s0, s1 = r1, r0, s1, s0
                continue
            c = (r0[d0] * pow(r1[d1], -1, self.q)) % self.q
            shift = d0 - d1
            for j in range(d1 + 1):
                r0[shift + j] = (r0[shift + j] - c * r1[j]) % self.q
            s1_shift = [0] * shift + list(s1)
            if len(s0) < len(s1_shift):
                s0 = s0 + [0] * (len(s1_shift) - len(s0))
            for j, cj in enumerate(s1_shift):
                s0[j] = (s0[j] - c * cj) % self.q
            r0, r1, s0, s1 = r1, r0, s1, s0
        lead = r0[_poly_deg(r0)]
        inv_lead = pow(lead, -1, self.q)
        res = _poly_mod([(inv_lead * c) % self.q for c in s0], self.modulus, self.q)
        val = 0
        for x in reversed(res[: self.m] + [0] * (self.m - len(res))):
            val = val * self.q + x
        return val

    def _pow(self, a: int, e: int) -> int:
        if e < 0:
            return self._pow(self._inv(a), -e)
        r = 1
        base = a
        while e:
            if e & 1:
                r = self._mul(r, base)
            base = self._mul(base, base)
            e >>= 1
        return r

    def _frob_table(self, i: int) -> tuple[int, ...]:
        """Images of the basis {1, z, ..., z^{m-1}} under a -> a^(q^i)."""
        tab = self._frob_tables.get(i)
        if tab is not None:
            return tab
        if i == 0:
            tab = tuple(self.q ** j for j in range(self.m))
        elif i == 1:
            zq = self._pow(self.q if self.m > 1 else 1, self.q)
            imgs = [1]
            for _ in range(self.m - 1):
                imgs.append(self._mul(imgs[-1], zq))
            tab = tuple(imgs)
        else:
            prev = self._frob_table(i - 1)
            tab = tuple(self._frob(v, 1) for v in prev)
        self._frob_tables[i] = tab
        return tab

    def _frob(self, a: int, i: int) -> int:
        i %= self.m
        if i == 0 or a == 0:
            return a
        tab = self._frob_table(i)
        if self.q == 2:
            r = 0
            j = 0
            while a:
                if a & 1:
                    r ^= tab[j]
                a >>= 1
                j += 1
            return r
        r = 0
        for j, c in enumerate(self._digits(a)):
            if c:
                r = self._add(r, self._scalar(c, tab[j]))
        return r


class FieldElement:
    """Immutable element of F_{q^m}; a value type tied to its FieldCtx."""

    __slots__ = ("ctx", "val")

    def __init__(self, ctx: FieldCtx, val: int):
        self.ctx = ctx
        self.val = val

    @property
    def coords(self) -> tuple[int, ...]:
        """Coordinates over F_q w.r.t. the basis {1, z, ..., z^{m-1}}."""
        return tuple(self.ctx._digits(self.val))

    def _check(self, other: "FieldElement") -> None:
        if not isinstance(other, FieldElement):
            raise TypeError(f"expected FieldElement, got {type(other).__name__}")
        if other.ctx is not self.ctx:
            raise ContextMismatchError("elements belong to different field contexts")

    def __add__(self, other: "FieldElement") -> "FieldElement":
        self._check(other)
        return FieldElement(self.ctx, self.ctx._add(self.val, other.val))

    def __sub__(self, other: "FieldElement") -> "FieldElement":
        self._check(other)
        return FieldElement(self.ctx, self.ctx._sub(self.val, other.val))

    def __neg__(self) -> "FieldElement":
        return FieldElement(self.ctx, self.ctx._neg(self.val))

    def __mul__(self, other):
        if isinstance(other, int):
            return FieldElement(self.ctx, self.ctx._scalar(other, self.val))
        self._check(other)
        return FieldElement(self.ctx, self.ctx._mul(self.val, other.val))

    def __rmul__(self, other):
        if isinstance(other, int):  # scalar from the base field F_q
            return FieldElement(self.ctx, self.ctx._scalar(other, self.val))
        return NotImplemented

    def __truediv__(self, other: "FieldElement") -> "FieldElement":
        self._check(other)
        return FieldElement(self.ctx, self.ctx._mul(self.val, self.ctx._inv(other.val)))

    def inv(self) -> "FieldElement":
        return FieldElement(self.ctx, self.ctx._inv(self.val))

    def __pow__(self, e: int) -> "FieldElement":
        return FieldElement(self.ctx, self.ctx._pow(self.val, e))

    def frob(self, i: int = 1) -> "FieldElement":
        """The Frobenius power a^(q^i); i is reduced mod m, so negative i
        applies the inverse automorphism."""
        return FieldElement(self.ctx, self.ctx._frob(self.val, i))

    def __bool__(self) -> bool:
        return self.val != 0

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, FieldElement)
            and other.ctx is self.ctx
            and other.val == self.val
        )

    def __hash__(self) -> int:
        return hash((id(self.ctx), self.val))

    def to_str(self) -> str:
        """Canonical text form "c0,c1,...,c_{m-1}"."""
        return ",".join(str(c) for c in self.coords)

    def __repr__(self) -> str:
        if self.val == 0:
            return "0"
        terms = []
        for i, c in enumerate(self.coords):
            if not c:
                continue
            if i == 0:
                terms.append(str(c))
            else:
                prefix = "" if c == 1 else str(c)
                terms.append(f"{prefix}z^{i}" if i > 1 else f"{prefix}z")
        return "+".join(terms)


def frobenius(a: FieldElement, i: int) -> FieldElement:
    return a.frob(i)


def expand(a: FieldElement) -> tuple[int, ...]:
    return a.coords


def rank_over_fq(elements: Iterable[FieldElement]) -> int:
    """Rank over F_q of the m x n matrix whose columns are the coordinate
    expansions of the given elements."""
    elements = list(elements)
    if not elements:
        return 0
    ctx = elements[0].ctx
    for e in elements:
        if e.ctx is not ctx:
            raise ContextMismatchError("elements belong to different field contexts")
    q = ctx.q
    rows = [list(row) for row in zip(*(e.coords for e in elements))]
    rank = 0
    ncols = len(elements)
    for col in range(ncols):
        pivot = None
        for r in range(rank, len(rows)):
            if rows[r][col]:
                pivot = r
                break
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        inv = pow(rows[rank][col], -1, q)
        rows[rank] = [(inv * x) % q for x in rows[rank]]
        for r in range(len(rows)):
            if r != rank and rows[r][col]:
                c = rows[r][col]
                rows[r] = [(x - c * y) % q for x, y in zip(rows[r], rows[rank])]
        rank += 1
        if rank == len(rows):
            break
    return rank
