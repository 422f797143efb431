"""Gabidulin (rank-metric) codes: construction, encoding, rank-error
channel, and syndrome computation.

An (n, k) code over F_{q^m} with n <= m is defined by its parity-check
matrix whose rows are Frobenius powers of an F_q-independent vector h:
H[i][j] = h_j^(q^i) for i = 0..n-k-1.  The minimum rank distance is
d = n - k + 1.
"""

from __future__ import annotations

import json
import random
from typing import Optional, Sequence, Union

from .field import FieldCtx, FieldElement, rank_over_fq
from .linalg import MatrixFq, MatrixFqm
from .linpoly import LinPoly

Word = tuple[FieldElement, ...]


def word_add(a: Sequence[FieldElement], b: Sequence[FieldElement]) -> Word:
    if len(a) != len(b):
        raise ValueError("word length mismatch")
    return tuple(x + y for x, y in zip(a, b))


def word_sub(a: Sequence[FieldElement], b: Sequence[FieldElement]) -> Word:
    if len(a) != len(b):
        raise ValueError("word length mismatch")
    return tuple(x - y for x, y in zip(a, b))


class GabidulinCode:
    """Immutable code object; all operations are pure given an RNG."""

    def __init__(self, ctx: FieldCtx, n: int, k: int,
                 h: Optional[Sequence[FieldElement]] = None):
        if not 1 <= k < n:
            raise ValueError("require 1 <= k < n")
        if n > ctx.m:
            raise ValueError(f"require n <= m (n={n}, m={ctx.m})")
        if h is None:
            z = ctx.gen()
            h = [z ** i for i in range(n)]
        h = tuple(ctx.element(x) for x in h)
        if len(h) != n:
            raise ValueError("h must have length n")
        if rank_over_fq(h) != n:
            raise ValueError("h must be linearly independent over F_q")
        self.ctx = ctx
        self.n = n
        self.k = k
        self.h = h
        self.d = n - k + 1
        self._parity: Optional[MatrixFqm] = None
        self._generator: Optional[MatrixFqm] = None

    @property
    def bmd_radius(self) -> int:
        """Unique-decoding radius floor((d-1)/2)."""
        return (self.d - 1) // 2

    def parity_check_matrix(self) -> MatrixFqm:
        if self._parity is None:
            self._parity = MatrixFqm(
                self.ctx,
                [[hj.frob(i) for hj in self.h] for i in range(self.n - self.k)],
            )
        return self._parity

    def generator_matrix(self) -> MatrixFqm:
        """Any basis of the right kernel of H, as rows; G H^T = 0."""
        if self._generator is None:
            kernel = self.parity_check_matrix().right_kernel_basis()
            assert len(kernel) == self.k
            self._generator = MatrixFqm(self.ctx, kernel)
        return self._generator

    def encode(self, message: Sequence[FieldElement]) -> Word:
        if len(message) != self.k:
            raise ValueError(f"message must have length k={self.k}")
        g = self.generator_matrix()
        out = [self.ctx.zero] * self.n
        for i, mi in enumerate(message):
            if mi:
                for j in range(self.n):
                    out[j] = out[j] + mi * g.data[i][j]
        return tuple(out)

    def syndrome(self, word: Sequence[FieldElement]) -> LinPoly:
        """S(x) = sum_i S_i x^[i] with S_i = sum_j r_j h_j^(q^i)."""
        if len(word) != self.n:
            raise ValueError(f"word must have length n={self.n}")
        coeffs = []
        for i in range(self.d - 1):
            acc = self.ctx.zero
            for rj, hj in zip(word, self.h):
                if rj:
                    acc = acc + rj * hj.frob(i)
            coeffs.append(acc)
        return LinPoly(self.ctx, coeffs)

    def random_message(self, rng: Union[random.Random, int, None] = None) -> Word:
        if not isinstance(rng, random.Random):
            rng = random.Random(rng)
        return tuple(self.ctx.random_element(rng) for _ in range(self.k))

    def random_error(self, t: int, rng: Union[random.Random, int, None] = None) -> Word:
        """Error vector e = E Y of rank exactly t: E has t F_q-independent
        entries from F_{q^m}, Y is a full-rank t x n matrix over F_q."""
        if t < 0 or t > min(self.ctx.m, self.n):
            raise ValueError(f"rank t must be in [0, min(m, n)] (got {t})")
        if not isinstance(rng, random.Random):
            rng = random.Random(rng)
        if t == 0:
            return tuple([self.ctx.zero] * self.n)
        while True:
            span = [self.ctx.random_element(rng) for _ in range(t)]
            if rank_over_fq(span) == t:
                break
        q = self.ctx.q
        while True:
            y = [[rng.randrange(q) for _ in range(self.n)] for _ in range(t)]
            if MatrixFq(q, y).rank() == t:
                break
        e = []
        for j in range(self.n):
            acc = self.ctx.zero
            for i in range(t):
                if y[i][j]:
                    acc = acc + y[i][j] * span[i]
            e.append(acc)
        assert rank_over_fq(e) == t
        return tuple(e)

    # -- serialization ---------------------------------------------------------

    def to_json(self) -> dict:
        return {
            "field": self.ctx.to_json(),
            "n": self.n,
            "k": self.k,
            "h": [x.to_str() for x in self.h],
        }

    @classmethod
    def from_json(cls, obj: Union[dict, str]) -> "GabidulinCode":
        if isinstance(obj, str):
            obj = json.loads(obj)
        ctx = FieldCtx.from_json(obj["field"])
        h = [ctx.parse(s) for s in obj["h"]] if obj.get("h") else None
        return cls(ctx, int(obj["n"]), int(obj["k"]), h)

    def __repr__(self) -> str:
        return (f"GabidulinCode(q={self.ctx.q}, m={self.ctx.m}, n={self.n}, "
                f"k={self.k}, d={self.d})")
