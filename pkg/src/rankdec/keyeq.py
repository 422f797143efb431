"""Key-equation solvers for Gabidulin codes.

The key equation relates the error span polynomial L, the syndrome
polynomial S, and an auxiliary polynomial W:

    W(x) = L(x) (*) S(x)  mod x^[d-1],     deg W < deg L.

`solve_unique` recovers the (scalar-class) unique solution when the
error rank is at most floor((d-1)/2), by running the SEEA on
(x^[d-1], S) until the remainder degree straddles that bound.

`solution_basis` handles a decoding radius tau beyond half distance:
it runs the SEEA to completion, fills the degree gaps of the cofactor
and remainder sequences by left-multiplying with x^[1], and selects the
pairs whose degrees fit tau.  Linear combinations of the selected pairs
give all solutions of the key equation with deg L <= tau, deg W < tau.

`oracle_solutions` solves the same problem by plain Gaussian elimination
over the syndrome matrix; it is the independent check for the basis.

Note on the basis size: the selected set has

    tau + 1 - (d - 1 - tau)  =  2*tau - d + 2

pairs whenever the syndrome matrix has full row rank (error rank at
least d-1-tau).  Writing tau = floor((d-1)/2) + tau0, this equals
2*tau0 + 1 for odd minimum distance d and 2*tau0 for even d.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Sequence

from .field import FieldCtx, FieldElement
from .linalg import MatrixFqm
from .linpoly import LinPoly
from .seea import seea_until_degree

logger = logging.getLogger(__name__)


class DecodingFailure(Exception):
    """The requested decoding step has no valid answer for this input."""


class ZeroSyndromeError(ValueError):
    """Raised by solution_basis on a zero syndrome; the received word is
    already a codeword and needs no key-equation solving."""


def solve_unique(s: LinPoly, d: int) -> tuple[LinPoly, LinPoly]:
    """Solve the key equation assuming error rank <= floor((d-1)/2).

    Returns (L, W) with L monic, W = L (*) S mod x^[d-1] and
    deg W < deg L.  A zero syndrome yields (x^[0], 0).  Raises
    DecodingFailure when the straddle pair violates the degree
    constraint or L's root space is smaller than its degree (improper
    span polynomial: the error is not correctable at this radius).
    """
    ctx = s.ctx
    if not s:
        return LinPoly.one(ctx), LinPoly.zero(ctx)
    if s.q_degree > d - 2:
        raise ValueError(f"syndrome degree {s.q_degree} exceeds d-2 = {d - 2}")
    bound = (d - 1) // 2
    b = LinPoly.monomial(ctx, d - 1)
    i, trace = seea_until_degree(b, s, bound)
    u, r = trace.u(i), trace.r(i)
    a = u.lead().inv()
    lam, omega = u.scale(a), r.scale(a)
    if not omega.q_degree < lam.q_degree:
        raise DecodingFailure("auxiliary polynomial degree not below span degree")
    if len(lam.root_space()) != lam.q_degree:
        raise DecodingFailure("improper error span polynomial (deficient root space)")
    return lam, omega


@dataclass
class KeyEqBasis:
    """Basis pairs (delta_i, p_i) spanning all key-equation solutions at
    radius tau, plus the full degree ladder they were selected from.

    delta[i] is monic; the pairs are ordered by increasing q-degree of
    delta, one polynomial per degree, ending at degree tau.  Every pair
    (including the gap fillers in the ladder) satisfies the membership
    identity p = delta (*) S mod x^[d-1].
    """

    tau: int
    tau0: int
    d: int
    delta: list[LinPoly]
    p: list[LinPoly]
    all_delta: list[LinPoly] = field(repr=False, default_factory=list)
    all_p: list[LinPoly] = field(repr=False, default_factory=list)
    rsgcd_degree: int = 0

    @property
    def size(self) -> int:
        return len(self.delta)

    def pairs(self) -> list[tuple[LinPoly, LinPoly]]:
        return list(zip(self.delta, self.p))

    def to_json(self) -> dict:
        return {
            "tau": self.tau,
            "tau0": self.tau0,
            "pairs": [
                {"delta": dl.to_json(), "p": pl.to_json()}
                for dl, pl in zip(self.delta, self.p)
            ],
        }


def _validate_radius(d: int, tau: int) -> None:
    half = (d - 1) // 2
    if not half < tau < d - 1:
        raise ValueError(
            f"tau must satisfy floor((d-1)/2) < tau < d-1 (d={d}, tau={tau})"
        )


def solution_basis(s: LinPoly, d: int, tau: int) -> KeyEqBasis:
    """Run the SEEA on (x^[d-1], S) and build the solution basis.

    The cofactor/remainder ladder gets one pair per q-degree 0..d-2:
    SEEA outputs land at the degree of their cofactor, and whenever the
    cofactor degree jumps by more than one, the previous pair is
    left-multiplied by x^[1] to fill each skipped degree.  The returned
    basis keeps the pairs with deg delta <= tau and deg p < tau,
    normalized so that each delta is monic.
    """
    _validate_radius(d, tau)
    ctx = s.ctx
    if not s:
        raise ZeroSyndromeError("zero syndrome: the word is already a codeword")
    if s.q_degree > d - 2:
        raise ValueError(f"syndrome degree {s.q_degree} exceeds d-2 = {d - 2}")

    x1 = LinPoly.monomial(ctx, 1)
    all_delta = [LinPoly.one(ctx)]
    all_p = [s]

    def fill_to(degree: int) -> None:
        while all_delta[-1].q_degree < degree:
            all_delta.append(x1.sym_mul(all_delta[-1]))
            all_p.append(x1.sym_mul(all_p[-1]).truncate(d - 1))

    r_prev, r_cur = LinPoly.monomial(ctx, d - 1), s
    u_prev, u_cur = LinPoly.zero(ctx), LinPoly.one(ctx)
    while r_cur:
        q, r_next = r_prev.right_divmod(r_cur)
        u_next = u_prev - q.sym_mul(u_cur)
        r_prev, r_cur = r_cur, r_next
        u_prev, u_cur = u_cur, u_next
        if r_cur:
            fill_to(u_cur.q_degree - 1)
            all_delta.append(u_cur)
            all_p.append(r_cur)
        elif u_cur.q_degree <= d - 2:
            # Positive-degree rsgcd (the syndrome is right-divisible by
            # x^[1], i.e. S_0 = 0): the final cofactor pairs with a zero
            # remainder and is itself a valid solution.  No pair with
            # remainder degree below the gcd degree exists in this case,
            # so the ladder ends in zero remainders.
            fill_to(u_cur.q_degree - 1)
            all_delta.append(u_cur)
            all_p.append(LinPoly.zero(ctx))
    rsgcd_degree = int(r_prev.q_degree)
    if rsgcd_degree > 0:
        logger.debug(
            "rsgcd of degree %d (syndrome valuation > 0); remainder ladder "
            "ends in zero polynomials", rsgcd_degree,
        )
    fill_to(d - 2)

    for j, dl in enumerate(all_delta):
        assert dl.q_degree == j, "ladder must hold one polynomial per degree"

    delta, p = [], []
    for j in range(min(tau, d - 2) + 1):
        if all_p[j].q_degree < tau:
            a = all_delta[j].lead().inv()
            delta.append(all_delta[j].scale(a))
            p.append(all_p[j].scale(a))
    return KeyEqBasis(
        tau=tau,
        tau0=tau - (d - 1) // 2,
        d=d,
        delta=delta,
        p=p,
        all_delta=all_delta,
        all_p=all_p,
        rsgcd_degree=rsgcd_degree,
    )


def combine(basis: KeyEqBasis, betas: Sequence[FieldElement]) -> tuple[LinPoly, LinPoly]:
    """Linear combination (L, W) = (sum b_i delta_i, sum b_i p_i).

    Every combination satisfies the key equation; deg L = tau exactly
    when the coefficient on the degree-tau element is nonzero.
    """
    if len(betas) != basis.size:
        raise ValueError(f"expected {basis.size} coefficients, got {len(betas)}")
    if basis.size == 0:
        raise ValueError("empty basis")
    ctx = basis.delta[0].ctx
    lam = LinPoly.zero(ctx)
    omega = LinPoly.zero(ctx)
    for b, dl, pl in zip(betas, basis.delta, basis.p):
        if b:
            lam = lam + dl.scale(b)
            omega = omega + pl.scale(b)
    return lam, omega


def satisfies_key_equation(lam: LinPoly, omega: LinPoly, s: LinPoly, d: int) -> bool:
    return lam.sym_mul(s).truncate(d - 1) == omega


def syndrome_matrix(s: LinPoly, d: int, tau: int) -> MatrixFqm:
    """The (d-tau-1) x (tau+1) matrix with entry (r, c) = S_{r+c}^[tau-c].

    Its right kernel, read as vectors (L_tau, ..., L_0), consists of the
    coefficient vectors of all span polynomials solving the key equation
    at radius tau.
    """
    _validate_radius(d, tau)
    ctx = s.ctx
    data = [
        [s.coeff(r + c).frob(tau - c) for c in range(tau + 1)]
        for r in range(d - tau - 1)
    ]
    return MatrixFqm(ctx, data)


def oracle_solutions(s: LinPoly, d: int, tau: int) -> list[LinPoly]:
    """Independent Gaussian-elimination solver: a basis of all span
    polynomials with deg <= tau solving the key equation at radius tau."""
    kernel = syndrome_matrix(s, d, tau).right_kernel_basis()
    return [LinPoly(s.ctx, list(reversed(vec))) for vec in kernel]


def coefficient_matrix(ctx: FieldCtx, polys: Sequence[LinPoly], width: int) -> MatrixFqm:
    """Stack the coefficient vectors (padded to the given width) as rows."""
    return MatrixFqm(ctx, [[p.coeff(i) for i in range(width)] for p in polys])


def span_equal(ctx: FieldCtx, polys_a: Sequence[LinPoly], polys_b: Sequence[LinPoly],
               width: int) -> bool:
    """Whether two polynomial families span the same F_{q^m}-subspace of
    coefficient vectors of the given width."""
    ra = coefficient_matrix(ctx, polys_a, width).rank()
    rb = coefficient_matrix(ctx, polys_b, width).rank()
    rab = coefficient_matrix(ctx, list(polys_a) + list(polys_b), width).rank()
    return ra == rb == rab
