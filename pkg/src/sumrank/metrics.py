"""Hamming, rank, and sum-rank weights/distances plus exhaustive oracles.

The exhaustive minimum-distance oracle enumerates all nonzero messages of a
linear code, encodes them in chunks with vectorized field arithmetic, and
takes the minimum weight.  It refuses (``TooLarge``) rather than truncate: a
partial minimum is meaningless.
"""

from __future__ import annotations

import itertools
import math
import warnings
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from .errors import ProfileMismatch, TooLarge, ZeroCode
from .fields import FieldCtx, FieldElem
from .matspace import Mat

DEFAULT_CAP_BITS = 24
_CHUNK = 1 << 15


@dataclass(frozen=True)
class BlockProfile:
    """Shapes (n_i, m_i) of the matrix blocks of a sum-rank codeword."""

    blocks: tuple[tuple[int, int], ...]

    def __post_init__(self):
        for n, m in self.blocks:
            if n < 1 or m < 1:
                raise ValueError(f"block shape ({n}, {m}) is not positive")
            if n > m:
                # The usual convention is n_i <= m_i; nothing here needs it.
                warnings.warn(f"block shape ({n}, {m}) has n > m", stacklevel=3)

    @classmethod
    def uniform(cls, n: int, m: int, t: int) -> "BlockProfile":
        return cls(((n, m),) * t)

    @property
    def t(self) -> int:
        return len(self.blocks)

    @property
    def total_rows(self) -> int:
        return sum(n for n, _ in self.blocks)

    @property
    def ambient_dim(self) -> int:
        return sum(n * m for n, m in self.blocks)

    def max_weight(self) -> int:
        return sum(min(n, m) for n, m in self.blocks)


@dataclass(frozen=True)
class SumRankVector:
    """A tuple of matrix blocks matching a BlockProfile, over one field."""

    profile: BlockProfile
    blocks: tuple[Mat, ...]

    def __post_init__(self):
        if len(self.blocks) != self.profile.t:
            raise ProfileMismatch(
                f"{len(self.blocks)} blocks for a {self.profile.t}-block profile"
            )
        for b, (n, m) in zip(self.blocks, self.profile.blocks):
            if b.shape != (n, m):
                raise ProfileMismatch(f"block shape {b.shape} != ({n}, {m})")

    @property
    def ctx(self) -> FieldCtx:
        return self.blocks[0].ctx

    @classmethod
    def from_flat(cls, profile: BlockProfile, ctx: FieldCtx, flat) -> "SumRankVector":
        """Unflatten a length-ambient_dim vector, block by block, row-major."""
        flat = np.asarray(flat, dtype=np.int64).ravel()
        if flat.size != profile.ambient_dim:
            raise ProfileMismatch(
                f"flat length {flat.size} != ambient dim {profile.ambient_dim}"
            )
        blocks, off = [], 0
        for n, m in profile.blocks:
            blocks.append(Mat(ctx, flat[off : off + n * m].reshape(n, m)))
            off += n * m
        return cls(profile, tuple(blocks))

    def flatten(self) -> np.ndarray:
        return np.concatenate([b.a.ravel() for b in self.blocks])

    def __sub__(self, other: "SumRankVector") -> "SumRankVector":
        if self.profile != other.profile:
            raise ProfileMismatch("profiles differ")
        return SumRankVector(
            self.profile, tuple(a - b for a, b in zip(self.blocks, other.blocks))
        )


def sum_rank_weight(x: SumRankVector) -> int:
    """Sum of the ranks of the blocks."""
    return sum(b.rank() for b in x.blocks)


def sum_rank_distance(x: SumRankVector, y: SumRankVector) -> int:
    """Sum-rank weight of the blockwise difference."""
    return sum_rank_weight(x - y)


def hamming_weight(v) -> int:
    """Number of nonzero coordinates of a sequence of field elements."""
    return sum(1 for e in v if e)


def hamming_distance(v, w) -> int:
    v, w = list(v), list(w)
    if len(v) != len(w):
        raise ValueError(f"length mismatch: {len(v)} vs {len(w)}")
    return sum(1 for a, b in zip(v, w) if a != b)


# -- exhaustive minimum distance ------------------------------------------


def _message_chunk(q: int, k: int, idx: np.ndarray) -> np.ndarray:
    """Mixed-radix digits of message indices; coordinate 0 least significant."""
    powers = q ** np.arange(k, dtype=np.int64)
    return (idx[:, None] // powers[None, :]) % q


def _encode_chunk(ctx: FieldCtx, G: np.ndarray, msgs: np.ndarray) -> np.ndarray:
    if ctx.kind == "prime":
        return (msgs @ G) % ctx.order
    k, amb = G.shape
    out = np.zeros((msgs.shape[0], amb), dtype=np.int64)
    for j in range(k):
        out = ctx.vadd(out, ctx.vmul(msgs[:, j : j + 1], G[j : j + 1, :]))
    return out


def _rank_small_exact(ctx: FieldCtx, M: np.ndarray) -> int:
    """Rank of one small matrix given as an int index array."""
    return Mat(ctx, M).rank()


def _block_rank_chunk(ctx: FieldCtx, B: np.ndarray) -> np.ndarray:
    """Vectorized ranks of a (count, n, m) stack of blocks.

    Rank 0/1/2 is decided by nonzeroness and 2x2 minors; blocks that could
    have rank >= 3 fall back to per-matrix elimination (only tiny codes hit
    that path).
    """
    count, n, m = B.shape
    r = B.any(axis=(1, 2)).astype(np.int64)
    if min(n, m) < 2:
        return r
    has2 = np.zeros(count, dtype=bool)
    for i, j in itertools.combinations(range(n), 2):
        for a, b in itertools.combinations(range(m), 2):
            det = ctx.vsub(
                ctx.vmul(B[:, i, a], B[:, j, b]), ctx.vmul(B[:, i, b], B[:, j, a])
            )
            has2 |= det != 0
            if has2.all():
                break
        else:
            continue
        break
    r += has2.astype(np.int64)
    if min(n, m) >= 3:
        for i in np.nonzero(has2)[0]:
            r[i] = _rank_small_exact(ctx, B[i])
    return r


def _weights_chunk(code, cw: np.ndarray) -> np.ndarray:
    """Weights (in the code's metric) of a chunk of encoded codewords."""
    profile = getattr(code, "profile", None)
    if profile is None:
        return np.count_nonzero(cw != 0, axis=1)
    ctx = code.base
    w = np.zeros(cw.shape[0], dtype=np.int64)
    off = 0
    for n, m in profile.blocks:
        block = cw[:, off : off + n * m].reshape(-1, n, m)
        w += _block_rank_chunk(ctx, block)
        off += n * m
    return w


def min_distance_exhaustive(code, cap_bits: int = DEFAULT_CAP_BITS, threads: int = 1) -> int:
    """Exact minimum distance of a linear code by full enumeration.

    Works for both Hamming codes (anything with ``ctx``/``gen``) and sum-rank
    codes (anything with ``base``/``profile``/``gen``); by linearity the
    minimum distance is the minimum weight of a nonzero codeword.

    Args:
        code: a HammingLinearCode or SumRankLinearCode.
        cap_bits: refuse if k * log2(q) exceeds this (default 24).
        threads: chunk the enumeration over this many workers; the minimum is
            an order-independent reduction, so the result matches serial runs.

    Raises:
        ZeroCode: for dimension 0.
        TooLarge: if the enumeration would exceed the cap.
    """
    k = code.k
    if k == 0:
        raise ZeroCode("minimum distance of the zero code is undefined")
    ctx = getattr(code, "base", None) or code.ctx
    q = ctx.order
    needed = k * math.log2(q)
    if needed > cap_bits:
        raise TooLarge(needed, cap_bits)
    total = q**k
    G = code.gen.a

    def chunk_min(lo: int, hi: int) -> int:
        best = None
        for start in range(lo, hi, _CHUNK):
            idx = np.arange(start, min(start + _CHUNK, hi), dtype=np.int64)
            msgs = _message_chunk(q, k, idx)
            w = _weights_chunk(code, _encode_chunk(ctx, G, msgs))
            m = int(w.min())
            best = m if best is None else min(best, m)
        return best

    if threads <= 1:
        return chunk_min(1, total)
    bounds = np.linspace(1, total, threads + 1, dtype=np.int64)
    with ThreadPoolExecutor(max_workers=threads) as pool:
        parts = pool.map(chunk_min, bounds[:-1], bounds[1:])
    return min(p for p in parts if p is not None)


def codeword_weights(code, cap_bits: int = DEFAULT_CAP_BITS) -> np.ndarray:
    """Weights of every codeword (including zero), for small codes.

    Mainly a test aid; subject to the same cap as the distance oracle.
    """
    k = code.k
    ctx = getattr(code, "base", None) or code.ctx
    q = ctx.order
    needed = k * math.log2(q)
    if needed > cap_bits:
        raise TooLarge(needed, cap_bits)
    idx = np.arange(q**k, dtype=np.int64)
    msgs = _message_chunk(q, k, idx)
    return _weights_chunk(code, _encode_chunk(ctx, code.gen.a, msgs))
