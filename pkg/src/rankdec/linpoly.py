"""The non-commutative ring of linearized polynomials over F_{q^m}.

A linearized polynomial L(x) = sum_i l_i x^[i] (with x^[i] = x^(q^i))
induces an F_q-linear map on F_{q^m}.  Ring multiplication is the
symbolic product F (*) G = F(G(x)), whose coefficient formula is the
Frobenius-twisted convolution

    (F (*) G)_k = sum_{i+j=k} f_i * g_j^[i].

The ring has a right division algorithm, which drives the symbolic
Euclidean algorithm and everything built on it.
"""

from __future__ import annotations

import json
from typing import Iterable, Sequence, Union

from .field import ContextMismatchError, FieldCtx, FieldElement, rank_over_fq
from .linalg import MatrixFq

NEG_INF = float("-inf")


class LinPoly:
    """Immutable linearized polynomial; coeffs[i] multiplies x^[i]."""

    __slots__ = ("ctx", "coeffs")

    def __init__(self, ctx: FieldCtx, coeffs: Iterable[FieldElement] = ()):
        coeffs = list(coeffs)
        for c in coeffs:
            if c.ctx is not ctx:
                raise ContextMismatchError("coefficient from a different field context")
        while coeffs and not coeffs[-1]:
            coeffs.pop()
        self.ctx = ctx
        self.coeffs = tuple(coeffs)

    # -- constructors ---------------------------------------------------------

    @classmethod
    def zero(cls, ctx: FieldCtx) -> "LinPoly":
        return cls(ctx)

    @classmethod
    def one(cls, ctx: FieldCtx) -> "LinPoly":
        """The ring identity x^[0] = x."""
        return cls(ctx, [ctx.one])

    @classmethod
    def monomial(cls, ctx: FieldCtx, i: int, coeff: FieldElement = None) -> "LinPoly":
        if coeff is None:
            coeff = ctx.one
        return cls(ctx, [ctx.zero] * i + [coeff])

    # -- basic structure --------------------------------------------------------

    @property
    def q_degree(self) -> Union[int, float]:
        """Index of the highest nonzero coefficient; -inf for the zero poly."""
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    def coeff(self, i: int) -> FieldElement:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else self.ctx.zero

    def lead(self) -> FieldElement:
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, LinPoly)
            and other.ctx is self.ctx
            and other.coeffs == self.coeffs
        )

    def __hash__(self) -> int:
        return hash((id(self.ctx), self.coeffs))

    def _check(self, other: "LinPoly") -> None:
        if not isinstance(other, LinPoly):
            raise TypeError(f"expected LinPoly, got {type(other).__name__}")
        if other.ctx is not self.ctx:
            raise ContextMismatchError("polynomials belong to different field contexts")

    # -- additive structure ------------------------------------------------------

    def __add__(self, other: "LinPoly") -> "LinPoly":
        self._check(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return LinPoly(self.ctx, [self.coeff(i) + other.coeff(i) for i in range(n)])

    def __sub__(self, other: "LinPoly") -> "LinPoly":
        self._check(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return LinPoly(self.ctx, [self.coeff(i) - other.coeff(i) for i in range(n)])

    def __neg__(self) -> "LinPoly":
        return LinPoly(self.ctx, [-c for c in self.coeffs])

    def scale(self, c: FieldElement) -> "LinPoly":
        """Left multiplication by the constant polynomial c * x^[0]."""
        if c.ctx is not self.ctx:
            raise ContextMismatchError("scalar from a different field context")
        return LinPoly(self.ctx, [c * x for x in self.coeffs])

    # -- evaluation ----------------------------------------------------------------

    def __call__(self, a: FieldElement) -> FieldElement:
        return self.evaluate(a)

    def evaluate(self, a: FieldElement) -> FieldElement:
        """L(a) = sum_i l_i a^(q^i); an F_q-linear function of a."""
        if a.ctx is not self.ctx:
            raise ContextMismatchError("argument from a different field context")
        acc = self.ctx.zero
        for i, c in enumerate(self.coeffs):
            if c:
                acc = acc + c * a.frob(i)
        return acc

    # -- ring structure ---------------------------------------------------------------

    def sym_mul(self, other: "LinPoly") -> "LinPoly":
        """Symbolic product self (*) other = self(other(x)).

        Associative and distributive but in general not commutative;
        deg of the product is the sum of the degrees.
        """
        self._check(other)
        if not self or not other:
            return LinPoly.zero(self.ctx)
        out = [self.ctx.zero] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, f in enumerate(self.coeffs):
            if not f:
                continue
            for j, g in enumerate(other.coeffs):
                if g:
                    out[i + j] = out[i + j] + f * g.frob(i)
        return LinPoly(self.ctx, out)

    def right_divmod(self, divisor: "LinPoly") -> tuple["LinPoly", "LinPoly"]:
        """Quotient and remainder with self = Q (*) divisor + R,
        deg R < deg divisor.  Raises ZeroDivisionError on a zero divisor."""
        self._check(divisor)
        if not divisor:
            raise ZeroDivisionError("right division by the zero polynomial")
        db = divisor.q_degree
        lead_b = divisor.lead()
        rem = list(self.coeffs)
        dr = len(rem) - 1
        while rem and not rem[-1]:
            rem.pop()
        dr = len(rem) - 1
        if dr < db:
            return LinPoly.zero(self.ctx), LinPoly(self.ctx, rem)
        quot = [self.ctx.zero] * (dr - db + 1)
        while dr >= db:
            shift = dr - db
            # c * lead_b^[shift] = lead(rem)
            c = rem[dr] / lead_b.frob(shift)
            quot[shift] = quot[shift] + c
            # subtract (c x^[shift]) (*) divisor, whose k-th term is c * b_{k}^[shift]
            for j, b in enumerate(divisor.coeffs):
                if b:
                    rem[shift + j] = rem[shift + j] - c * b.frob(shift)
            while rem and not rem[-1]:
                rem.pop()
            dr = len(rem) - 1
        return LinPoly(self.ctx, quot), LinPoly(self.ctx, rem)

    def truncate(self, n: int) -> "LinPoly":
        """Reduction mod x^[n]: drop all coefficients of index >= n."""
        return LinPoly(self.ctx, self.coeffs[: max(n, 0)])

    def monic(self) -> "LinPoly":
        if not self:
            raise ValueError("zero polynomial cannot be made monic")
        return self.scale(self.lead().inv())

    # -- root space ------------------------------------------------------------------------

    def root_space(self) -> list[FieldElement]:
        """Basis of the F_q-subspace of roots in F_{q^m}.

        The roots of a linearized polynomial are closed under F_q-linear
        combinations; the dimension is at most the q-degree.
        """
        if not self:
            raise ValueError("the zero polynomial vanishes on all of F_{q^m}")
        ctx = self.ctx
        columns = [self.evaluate(ctx.element(ctx.q ** j)).coords for j in range(ctx.m)]
        mat = MatrixFq.from_columns(ctx.q, columns)
        return [ctx.from_coords(v) for v in mat.kernel_basis()]

    # -- serialization -------------------------------------------------------------------------

    def to_json(self) -> list[str]:
        return [c.to_str() for c in self.coeffs]

    @classmethod
    def from_json(cls, ctx: FieldCtx, obj: Union[str, Sequence[str]]) -> "LinPoly":
        if isinstance(obj, str):
            obj = json.loads(obj)
        return cls(ctx, [ctx.parse(s) for s in obj])

    def to_str(self) -> str:
        """Flat text form "l0,l1,...,lt" (each l_i is m digits)."""
        return ",".join(c.to_str() for c in self.coeffs)

    @classmethod
    def parse(cls, ctx: FieldCtx, text: str) -> "LinPoly":
        text = text.strip()
        if not text:
            return cls.zero(ctx)
        digits = text.split(",")
        if len(digits) % ctx.m:
            raise ValueError(f"digit count {len(digits)} is not a multiple of m={ctx.m}")
        coeffs = []
        for i in range(0, len(digits), ctx.m):
            coeffs.append(ctx.from_coords([int(d) for d in digits[i : i + ctx.m]]))
        return cls(ctx, coeffs)

    def __repr__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for i, c in enumerate(self.coeffs):
            if c:
                terms.append(f"({c!r})*x^[{i}]")
        return " + ".join(terms)


def min_subspace_poly(ctx: FieldCtx, elements: Sequence[FieldElement]) -> LinPoly:
    """Monic linearized polynomial of q-degree len(elements) whose root
    space is exactly the F_q-span of the (independent) input elements.

    Built iteratively: L_j = (x^[1] - L_{j-1}(E_j)^(q-1) x^[0]) (*) L_{j-1}.
    """
    elements = list(elements)
    if not elements:
        raise ValueError("need at least one element")
    if rank_over_fq(elements) != len(elements):
        raise ValueError("elements are not linearly independent over F_q")
    poly = LinPoly.one(ctx)
    for e in elements:
        gamma = poly.evaluate(e)
        # gamma != 0 because e is outside the current root space
        step = LinPoly(ctx, [-(gamma ** (ctx.q - 1)), ctx.one])
        poly = step.sym_mul(poly)
    return poly
