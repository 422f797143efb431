"""Symbolic extended Euclidean algorithm (SEEA) on linearized polynomials.

With R_{-1} = B and R_0 = A (deg B > deg A), each step computes

    R_{i-2} = Q_i (*) R_{i-1} + R_i,
    U_i = -Q_i (*) U_{i-1} + U_{i-2},    U_{-1} = 0, U_0 = x^[0],
    V_i = -Q_i (*) V_{i-1} + V_{i-2},    V_{-1} = x^[0], V_0 = 0,

so that R_i = U_i (*) A + V_i (*) B at every step and
deg U_i + deg R_{i-1} = deg B.  The last nonzero remainder is the right
symbolic gcd; it is returned monic.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .linpoly import LinPoly


@dataclass(frozen=True)
class SeeaStep:
    i: int
    q: LinPoly
    r: LinPoly
    u: LinPoly
    v: LinPoly


@dataclass(frozen=True)
class SeeaTrace:
    """Full transcript of a SEEA run (or of a degree-bounded prefix)."""

    b: LinPoly
    a: LinPoly
    steps: tuple[SeeaStep, ...]
    rsgcd: Optional[LinPoly]  # None for prefix traces

    def r(self, i: int) -> LinPoly:
        if i == -1:
            return self.b
        if i == 0:
            return self.a
        return self.steps[i - 1].r

    def u(self, i: int) -> LinPoly:
        if i == -1:
            return LinPoly.zero(self.b.ctx)
        if i == 0:
            return LinPoly.one(self.b.ctx)
        return self.steps[i - 1].u

    def v(self, i: int) -> LinPoly:
        if i == -1:
            return LinPoly.one(self.b.ctx)
        if i == 0:
            return LinPoly.zero(self.b.ctx)
        return self.steps[i - 1].v

    def __len__(self) -> int:
        return len(self.steps)

    def to_json(self) -> dict:
        def deg(p: LinPoly):
            return p.q_degree if p else None

        return {
            "b": self.b.to_json(),
            "a": self.a.to_json(),
            "rsgcd": self.rsgcd.to_json() if self.rsgcd is not None else None,
            "steps": [
                {
                    "i": s.i,
                    "Q": s.q.to_json(),
                    "R": s.r.to_json(),
                    "U": s.u.to_json(),
                    "V": s.v.to_json(),
                    "degR": deg(s.r),
                    "degU": deg(s.u),
                }
                for s in self.steps
            ],
        }


def _validate(b: LinPoly, a: LinPoly) -> None:
    if not b:
        raise ValueError("B must be nonzero")
    if a.ctx is not b.ctx:
        from .field import ContextMismatchError

        raise ContextMismatchError("inputs belong to different field contexts")
    if a and a.q_degree >= b.q_degree:
        raise ValueError("require deg B > deg A")


def seea(b: LinPoly, a: LinPoly) -> SeeaTrace:
    """Run the SEEA to completion and return the full trace."""
    _validate(b, a)
    if not a:
        return SeeaTrace(b, a, (), b.monic())
    ctx = b.ctx
    steps = []
    r_prev, r_cur = b, a
    u_prev, u_cur = LinPoly.zero(ctx), LinPoly.one(ctx)
    v_prev, v_cur = LinPoly.one(ctx), LinPoly.zero(ctx)
    i = 0
    while r_cur:
        i += 1
        q, r_next = r_prev.right_divmod(r_cur)
        u_next = u_prev - q.sym_mul(u_cur)
        v_next = v_prev - q.sym_mul(v_cur)
        steps.append(SeeaStep(i, q, r_next, u_next, v_next))
        r_prev, r_cur = r_cur, r_next
        u_prev, u_cur = u_cur, u_next
        v_prev, v_cur = v_cur, v_next
    return SeeaTrace(b, a, tuple(steps), r_prev.monic())


def seea_until_degree(b: LinPoly, a: LinPoly, bound: int) -> tuple[int, SeeaTrace]:
    """Run the SEEA until deg R_{i-1} >= bound > deg R_i and return
    (i, prefix trace).

    Remainder degrees strictly decrease from deg R_{-1} = deg B, so the
    straddle index is unique; it is 0 (an empty prefix) when deg A is
    already below the bound.
    """
    _validate(b, a)
    if bound > b.q_degree:
        raise ValueError("bound exceeds deg B; no straddle index exists")
    if a.q_degree < bound:
        return 0, SeeaTrace(b, a, (), None)
    ctx = b.ctx
    steps = []
    r_prev, r_cur = b, a
    u_prev, u_cur = LinPoly.zero(ctx), LinPoly.one(ctx)
    v_prev, v_cur = LinPoly.one(ctx), LinPoly.zero(ctx)
    i = 0
    while True:
        i += 1
        q, r_next = r_prev.right_divmod(r_cur)
        u_next = u_prev - q.sym_mul(u_cur)
        v_next = v_prev - q.sym_mul(v_cur)
        steps.append(SeeaStep(i, q, r_next, u_next, v_next))
        r_prev, r_cur = r_cur, r_next
        u_prev, u_cur = u_cur, u_next
        v_prev, v_cur = v_cur, v_next
        if r_cur.q_degree < bound:
            return i, SeeaTrace(b, a, tuple(steps), None)
