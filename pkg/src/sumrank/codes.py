"""Code constructors: Reed-Solomon, Gabidulin, sum-to-zero, and concatenation.

Every code carries an explicit generator matrix.  Sum-rank codewords are
vectorized block 1 row-major, then block 2 row-major, and so on; that
convention is fixed and shared with :mod:`sumrank.metrics`.

Designed distance (``d_design``) is the construction's guaranteed lower
bound; exact values come from the exhaustive oracle.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import (
    BlockLengthTooSmall,
    DegreeOutOfRange,
    DimensionMismatch,
    FieldMismatch,
    LengthExceedsField,
)
from .fields import (
    FieldCtx,
    FieldElem,
    field_from_order,
    frobenius_power,
    make_extension,
)
from .matspace import Mat
from .metrics import BlockProfile, SumRankVector


@dataclass(frozen=True)
class HammingLinearCode:
    """[n, k, d] linear code over any field, given by a generator matrix."""

    ctx: FieldCtx
    n: int
    k: int
    gen: Mat
    d_design: int | None = None

    def __post_init__(self):
        if self.gen.shape != (self.k, self.n):
            raise DimensionMismatch(f"generator shape {self.gen.shape} != ({self.k}, {self.n})")

    def encode(self, message) -> list[FieldElem]:
        """Encode a length-k message (FieldElems or indices) to a codeword."""
        msg = _message_row(self.ctx, message, self.k)
        cw = (msg @ self.gen).a[0]
        return [self.ctx.elem(int(x)) for x in cw]


@dataclass(frozen=True)
class SumRankLinearCode:
    """Linear sum-rank code over F_q with an explicit generator matrix.

    ``gen`` is k x ambient_dim over the base field; codeword coordinates
    follow the block-major, row-major vectorization convention.
    """

    base: FieldCtx
    profile: BlockProfile
    k: int
    gen: Mat
    d_design: int | None = None

    def __post_init__(self):
        if self.gen.shape != (self.k, self.profile.ambient_dim):
            raise DimensionMismatch(
                f"generator shape {self.gen.shape} != ({self.k}, {self.profile.ambient_dim})"
            )

    def encode(self, message) -> SumRankVector:
        msg = _message_row(self.base, message, self.k)
        flat = (msg @ self.gen).a[0]
        return SumRankVector.from_flat(self.profile, self.base, flat)


def _message_row(ctx: FieldCtx, message, k: int) -> Mat:
    vals = []
    for e in message:
        if isinstance(e, FieldElem):
            if e.ctx != ctx:
                raise FieldMismatch("message element in the wrong field")
            vals.append(e.idx)
        else:
            vals.append(int(e))
    if len(vals) != k:
        raise DimensionMismatch(f"message length {len(vals)} != dimension {k}")
    return Mat(ctx, [vals])


def _coords_over(top: FieldCtx, base: FieldCtx, idx: int) -> list[int]:
    """Coordinates of an element of ``top`` over ``base``; identity if equal."""
    if top == base:
        return [idx]
    if top.kind != "ext" or top.base != base:
        raise FieldMismatch(
            f"{top.descriptor()} is not an extension of {base.descriptor()}"
        )
    return list(top.coords(idx))


def reed_solomon(ctx: FieldCtx, n: int, k: int) -> HammingLinearCode:
    """Reed-Solomon evaluation code of length n and dimension k.

    Polynomials of degree < k are evaluated at the first n elements of the
    canonical enumeration (including 0), giving an MDS code with minimum
    distance exactly n - k + 1.
    """
    if n > ctx.order:
        raise LengthExceedsField(f"length {n} > field order {ctx.order}")
    if not 1 <= k <= n:
        raise DimensionMismatch(f"need 1 <= k <= n, got k={k}, n={n}")
    pts = list(range(n))
    rows = [[1] * n]
    for _ in range(1, k):
        rows.append([ctx.mul(r, p) for r, p in zip(rows[-1], pts)])
    return HammingLinearCode(ctx, n, k, Mat(ctx, rows), d_design=n - k + 1)


def gabidulin(q_ctx: FieldCtx, n: int, deg: int) -> SumRankLinearCode:
    """Gabidulin MRD code of n x n matrices over ``q_ctx``.

    Codewords are the matrices, in the polynomial basis of the degree-n
    extension, of the linearized maps v -> sum_i a_i v^(q^i) with i up to
    ``deg``.  Dimension is n(deg+1) over F_q, minimum rank distance exactly
    n - deg.
    """
    if not 0 <= deg <= n - 1:
        raise DegreeOutOfRange(f"need 0 <= deg <= n-1, got deg={deg}, n={n}")
    q = q_ctx.order
    F = make_extension(q_ctx, n)
    basis = [F.elem(F.from_coords([0] * j + [1])) if n > 1 else F.one for j in range(n)]
    rows = []
    for i in range(deg + 1):
        frob = [frobenius_power(b, i, q) for b in basis]
        for a in basis:
            # Column j of the map's matrix holds the coordinates of a * b_j^(q^i).
            cols = [_coords_over(F, q_ctx, (a * fb).idx) for fb in frob]
            M = np.array(cols, dtype=np.int64).T
            rows.append(M.ravel())
    gen = Mat(q_ctx, np.stack(rows))
    return SumRankLinearCode(
        q_ctx, BlockProfile.uniform(n, n, 1), n * (deg + 1), gen, d_design=n - deg
    )


def sum_zero_code(q_ctx: FieldCtx, m: int, t: int) -> SumRankLinearCode:
    """Blocks of m x m matrices summing to zero; minimum sum-rank distance 2.

    Generator rows place each elementary matrix E in block i and -E in the
    last block, for i = 1..t-1; dimension is m^2 (t-1).
    """
    if m < 1:
        raise ValueError(f"matrix size must be positive, got {m}")
    if t < 2:
        raise BlockLengthTooSmall(f"need at least 2 blocks, got {t}")
    amb = m * m * t
    neg_one = q_ctx.neg(1)
    rows = []
    for i in range(t - 1):
        for e in range(m * m):
            row = np.zeros(amb, dtype=np.int64)
            row[i * m * m + e] = 1
            row[(t - 1) * m * m + e] = neg_one
            rows.append(row)
    gen = Mat(q_ctx, np.stack(rows))
    return SumRankLinearCode(
        q_ctx, BlockProfile.uniform(m, m, t), m * m * (t - 1), gen, d_design=2
    )


def concatenate(outer: HammingLinearCode, inner: SumRankLinearCode) -> SumRankLinearCode:
    """Concatenated sum-rank code: outer Hamming code over F_{q^k2}, inner
    sum-rank code of F_q-dimension k2.

    Each outer codeword symbol c is replaced by the inner encoding of its
    coordinate vector over F_q.  Dimension multiplies (k1 * k2) and the
    designed sum-rank distance is the product d1 * d2 (a lower bound).
    """
    base = inner.base
    k2 = inner.k
    big = outer.ctx
    if k2 == 1:
        if big != base:
            raise FieldMismatch(
                "inner dimension 1 requires the outer alphabet to be the inner base field"
            )
    elif big.kind != "ext" or big.base != base or big.degree != k2:
        raise FieldMismatch(
            f"outer alphabet {big.descriptor()} is not the degree-{k2} "
            f"extension of {base.descriptor()}"
        )
    G_out = outer.gen.a
    G_in = inner.gen.a
    inner_amb = inner.profile.ambient_dim
    rows = []
    for u in range(outer.k):
        for b in range(k2):
            beta = big.from_coords([0] * b + [1]) if k2 > 1 else 1
            # Outer message beta * e_u encodes to beta * (row u of G_out).
            symbols = big.vmul(np.int64(beta), G_out[u])
            row = np.empty(outer.n * inner_amb, dtype=np.int64)
            for j, c in enumerate(symbols):
                vec = np.array(_coords_over(big, base, c), dtype=np.int64)
                row[j * inner_amb : (j + 1) * inner_amb] = (vec @ G_in) % base.order \
                    if base.kind == "prime" else _ext_vecmat(base, vec, G_in)
            rows.append(row)
    gen = Mat(base, np.stack(rows))
    d_design = (
        outer.d_design * inner.d_design
        if outer.d_design is not None and inner.d_design is not None
        else None
    )
    profile = BlockProfile(inner.profile.blocks * outer.n)
    return SumRankLinearCode(base, profile, outer.k * k2, gen, d_design=d_design)


def _ext_vecmat(ctx: FieldCtx, vec: np.ndarray, G: np.ndarray) -> np.ndarray:
    out = np.zeros(G.shape[1], dtype=np.int64)
    for j in range(vec.size):
        out = ctx.vadd(out, ctx.vmul(np.int64(vec[j]), G[j]))
    return out


def explicit_family(q: int, n: int, m: int, d: int, d1: int) -> SumRankLinearCode:
    """Concatenation of a Reed-Solomon outer code with a Gabidulin inner code.

    The inner code is the m x m Gabidulin code with rank distance d
    (dimension k2 = m(m-d+1)); the outer code is the [n, n-d1+1, d1]
    Reed-Solomon code over the degree-k2 extension.  The result has block
    length n, dimension (n-d1+1) * k2, and designed sum-rank distance d1 * d.
    """
    if not 0 < d <= m:
        raise DegreeOutOfRange(f"need 0 < d <= m, got d={d}, m={m}")
    if not 1 <= d1 <= n:
        raise ValueError(f"need 1 <= d1 <= n, got d1={d1}")
    base = field_from_order(q)
    inner = gabidulin(base, m, m - d)
    big = make_extension(base, inner.k)
    outer = reed_solomon(big, n, n - d1 + 1)
    return concatenate(outer, inner)
