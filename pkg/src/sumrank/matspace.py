"""Dense matrices over a FieldCtx with exact rank/RREF/row-space operations.

Entries are stored as a read-only numpy int64 array of canonical element
indices.  Row operations go through the field's vectorized arithmetic, so
elimination over prime fields is plain modular numpy; extension fields use
lookup tables.  Degenerate 0 x n and n x 0 matrices are legal and have rank 0.
"""

from __future__ import annotations

import numpy as np

from .errors import FieldMismatch, ShapeMismatch
from .fields import FieldCtx, FieldElem, elem_from_str, elem_to_str

# Within matrix text, extension-field coefficient vectors use ':' so that ','
# can keep separating entries.
_COEFF_SEP = ":"


class Mat:
    """Immutable dense matrix over a finite field."""

    __slots__ = ("ctx", "a")

    def __init__(self, ctx: FieldCtx, entries):
        a = np.array(entries, dtype=np.int64)
        if a.ndim != 2:
            raise ShapeMismatch(f"matrix entries must be 2-D, got shape {a.shape}")
        if a.size and (a.min() < 0 or a.max() >= ctx.order):
            raise ValueError("entry index out of field range")
        a.flags.writeable = False
        self.ctx = ctx
        self.a = a

    # -- constructors -----------------------------------------------------

    @classmethod
    def zeros(cls, ctx: FieldCtx, rows: int, cols: int) -> "Mat":
        return cls(ctx, np.zeros((rows, cols), dtype=np.int64))

    @classmethod
    def identity(cls, ctx: FieldCtx, n: int) -> "Mat":
        return cls(ctx, np.eye(n, dtype=np.int64))

    @classmethod
    def from_elems(cls, ctx: FieldCtx, rows) -> "Mat":
        """Build from nested sequences of FieldElem (or raw indices)."""
        idx = [[e.idx if isinstance(e, FieldElem) else int(e) for e in row] for row in rows]
        return cls(ctx, idx)

    # -- basic protocol ---------------------------------------------------

    @property
    def rows(self) -> int:
        return self.a.shape[0]

    @property
    def cols(self) -> int:
        return self.a.shape[1]

    @property
    def shape(self) -> tuple[int, int]:
        return self.a.shape

    def __getitem__(self, rc) -> FieldElem:
        r, c = rc
        return self.ctx.elem(self.a[r, c])

    def __eq__(self, other):
        return (
            isinstance(other, Mat)
            and self.ctx == other.ctx
            and self.a.shape == other.a.shape
            and bool(np.array_equal(self.a, other.a))
        )

    def __hash__(self):
        return hash((self.ctx, self.a.shape, self.a.tobytes()))

    def __repr__(self):
        return f"Mat({self.ctx.descriptor()}, {self.rows}x{self.cols})"

    def _check_field(self, other: "Mat"):
        if self.ctx != other.ctx:
            raise FieldMismatch(
                f"{self.ctx.descriptor()} vs {other.ctx.descriptor()}"
            )

    # -- arithmetic -------------------------------------------------------

    def __add__(self, other: "Mat") -> "Mat":
        self._check_field(other)
        if self.shape != other.shape:
            raise ShapeMismatch(f"{self.shape} + {other.shape}")
        return Mat(self.ctx, self.ctx.vadd(self.a, other.a))

    def __sub__(self, other: "Mat") -> "Mat":
        self._check_field(other)
        if self.shape != other.shape:
            raise ShapeMismatch(f"{self.shape} - {other.shape}")
        return Mat(self.ctx, self.ctx.vsub(self.a, other.a))

    def __neg__(self) -> "Mat":
        return Mat(self.ctx, self.ctx.vneg(self.a))

    def __matmul__(self, other: "Mat") -> "Mat":
        self._check_field(other)
        if self.cols != other.rows:
            raise ShapeMismatch(f"{self.shape} @ {other.shape}")
        ctx = self.ctx
        if ctx.kind == "prime":
            return Mat(ctx, (self.a @ other.a) % ctx.order)
        out = np.zeros((self.rows, other.cols), dtype=np.int64)
        for k in range(self.cols):
            out = ctx.vadd(out, ctx.vmul(self.a[:, k : k + 1], other.a[k : k + 1, :]))
        return Mat(ctx, out)

    mul = __matmul__

    def scalar_mul(self, c) -> "Mat":
        ci = c.idx if isinstance(c, FieldElem) else int(c)
        return Mat(self.ctx, self.ctx.vmul(np.int64(ci), self.a))

    def transpose(self) -> "Mat":
        return Mat(self.ctx, self.a.T.copy())

    # -- elimination ------------------------------------------------------

    def rref(self) -> tuple["Mat", tuple[int, ...]]:
        """Reduced row echelon form.

        Returns:
            (R, pivots): R row-equivalent to self and fully reduced; pivots is
            the strictly increasing tuple of pivot column indices, so
            ``len(pivots)`` is the rank.
        """
        ctx = self.ctx
        R = self.a.copy()
        m, n = R.shape
        pivots = []
        r = 0
        for c in range(n):
            if r == m:
                break
            nz = np.nonzero(R[r:, c])[0]
            if nz.size == 0:
                continue
            pr = r + int(nz[0])
            if pr != r:
                R[[r, pr]] = R[[pr, r]]
            inv = ctx.inv(int(R[r, c]))
            R[r] = ctx.vmul(np.int64(inv), R[r])
            mask = R[:, c] != 0
            mask[r] = False
            if mask.any():
                factors = R[mask, c]
                R[mask] = ctx.vsub(R[mask], ctx.vmul(factors[:, None], R[r][None, :]))
            pivots.append(c)
            r += 1
        return Mat(ctx, R), tuple(pivots)

    def rank(self) -> int:
        """Exact rank via Gaussian elimination."""
        return len(self.rref()[1])

    def row_space_basis(self) -> "Mat":
        """Nonzero rows of the RREF; canonical for the row space."""
        R, pivots = self.rref()
        return Mat(self.ctx, R.a[: len(pivots)].copy())

    def kernel_basis(self) -> "Mat":
        """Basis of the right null space, one vector per row."""
        ctx = self.ctx
        R, pivots = self.rref()
        free = [c for c in range(self.cols) if c not in pivots]
        rows = []
        for f in free:
            v = np.zeros(self.cols, dtype=np.int64)
            v[f] = 1
            for i, p in enumerate(pivots):
                v[p] = ctx.neg(int(R.a[i, f]))
            rows.append(v)
        if not rows:
            return Mat.zeros(ctx, 0, self.cols)
        return Mat(ctx, np.stack(rows))

    # -- text format ------------------------------------------------------

    def to_text(self) -> str:
        """Rows separated by ';', entries by ','.

        Extension-field entries render their coefficient vectors with ':'
        between coefficients (the element serialization itself uses commas,
        which would collide with the entry separator).
        """
        def ent(idx):
            s = elem_to_str(self.ctx.elem(int(idx)))
            return s.replace(",", _COEFF_SEP)

        return ";".join(",".join(ent(x) for x in row) for row in self.a)

    @classmethod
    def from_text(cls, ctx: FieldCtx, text: str) -> "Mat":
        rows = []
        for row in text.strip().split(";"):
            rows.append(
                [
                    elem_from_str(ctx, e.strip().replace(_COEFF_SEP, ",")).idx
                    for e in row.split(",")
                ]
            )
        return cls(ctx, rows)
