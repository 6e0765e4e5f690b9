"""Dense exact linear algebra over a finite field.

Matrices are 2-D int64 numpy arrays of element encodings, paired with the
:class:`~galois_grm.ff.FiniteField` they live over. Row operations are
vectorised through the field's table arithmetic.
"""

from __future__ import annotations

from typing import Iterable, Sequence

import numpy as np

from .errors import FieldMismatchError, MalformedInputError
from .ff import FiniteField


def as_matrix(field: FiniteField, rows, ncols: int | None = None) -> np.ndarray:
    """Validate and convert a row sequence into an int64 matrix."""
    if isinstance(rows, np.ndarray):
        mat = rows.astype(np.int64, copy=True)
        if mat.ndim == 1 and mat.size == 0:
            mat = mat.reshape(0, ncols or 0)
        if mat.ndim != 2:
            raise MalformedInputError("matrix must be two-dimensional")
    else:
        rows = [list(map(int, r)) for r in rows]
        lengths = {len(r) for r in rows}
        if len(lengths) > 1:
            raise MalformedInputError(f"inconsistent row lengths {sorted(lengths)}")
        if not rows:
            mat = np.zeros((0, ncols or 0), dtype=np.int64)
        else:
            mat = np.array(rows, dtype=np.int64).reshape(len(rows), lengths.pop())
    if ncols is not None and mat.shape[1] != ncols:
        raise MalformedInputError(f"expected {ncols} columns, got {mat.shape[1]}")
    if mat.size and (mat.min() < 0 or mat.max() >= field.order):
        raise MalformedInputError(f"entries must be encodings in [0, {field.order})")
    return mat


def _rref_inplace(field: FiniteField, R: np.ndarray) -> tuple[int, list[int]]:
    nrows, ncols = R.shape
    pivots: list[int] = []
    r = 0
    for col in range(ncols):
        if r == nrows:
            break
        nz = np.flatnonzero(R[r:, col])
        if nz.size == 0:
            continue
        piv = r + int(nz[0])
        if piv != r:
            R[[r, piv]] = R[[piv, r]]
        lead = int(R[r, col])
        if lead != 1:
            R[r] = field.vmul(R[r], field.inv(lead))
        factors = R[:, col].copy()
        factors[r] = 0
        hit = np.flatnonzero(factors)
        if hit.size:
            R[hit] = field.vsub(R[hit], field.vmul(factors[hit, None], R[r][None, :]))
        pivots.append(col)
        r += 1
    return r, pivots


def rref(field: FiniteField, rows, ncols: int | None = None) -> tuple[np.ndarray, int, list[int]]:
    """Reduced row-echelon form, rank and pivot columns.

    The returned matrix has the input's shape; zero rows sink to the bottom.
    """
    R = as_matrix(field, rows, ncols)
    rank, pivots = _rref_inplace(field, R)
    return R, rank, pivots


def rank(field: FiniteField, rows, ncols: int | None = None) -> int:
    return rref(field, rows, ncols)[1]


class Subspace:
    """A subspace of F_q^n held as its canonical RREF basis.

    Two instances are equal exactly when their basis matrices coincide.
    """

    __slots__ = ("field", "basis", "ambient_dim")

    def __init__(self, field: FiniteField, basis: np.ndarray, ambient_dim: int):
        basis = np.asarray(basis, dtype=np.int64).reshape(-1, ambient_dim)
        basis.setflags(write=False)
        self.field = field
        self.basis = basis
        self.ambient_dim = ambient_dim

    @property
    def dim(self) -> int:
        return self.basis.shape[0]

    def pivots(self) -> list[int]:
        return [int(np.flatnonzero(row)[0]) for row in self.basis]

    def reduce(self, v) -> np.ndarray:
        """Residue of v after elimination against the basis rows."""
        v = np.array(v, dtype=np.int64).reshape(-1)
        if v.shape[0] != self.ambient_dim:
            raise MalformedInputError(
                f"vector of length {v.shape[0]} in ambient dimension {self.ambient_dim}")
        f = self.field
        for row, col in zip(self.basis, self.pivots()):
            c = int(v[col])
            if c:
                v = f.vsub(v, f.vmul(row, c))
        return v

    def contains(self, v) -> bool:
        return not np.any(self.reduce(v))

    __contains__ = contains

    def issubspace(self, other: "Subspace") -> bool:
        """True if self is contained in other."""
        self._compatible(other)
        return all(other.contains(row) for row in self.basis)

    def _compatible(self, other: "Subspace") -> None:
        if self.field != other.field or self.ambient_dim != other.ambient_dim:
            raise FieldMismatchError("subspaces live in different ambient spaces")

    def __eq__(self, other):
        if not isinstance(other, Subspace):
            return NotImplemented
        return (self.field == other.field and self.ambient_dim == other.ambient_dim
                and self.basis.shape == other.basis.shape
                and bool(np.array_equal(self.basis, other.basis)))

    __hash__ = None

    def __repr__(self):
        return f"Subspace(dim={self.dim}, ambient_dim={self.ambient_dim}, q={self.field.order})"

    def sum(self, other: "Subspace") -> "Subspace":
        self._compatible(other)
        return subspace_from_spanning(self.field, np.vstack([self.basis, other.basis]), self.ambient_dim)


def subspace_from_spanning(field: FiniteField, vectors, ambient_dim: int | None = None) -> Subspace:
    """Canonical basis of the span of ``vectors``; an empty input spans {0}."""
    if not isinstance(vectors, np.ndarray):
        vectors = list(vectors)
        if not vectors and ambient_dim is None:
            raise MalformedInputError("ambient_dim is required for an empty spanning set")
    R, r, _ = rref(field, vectors, ambient_dim)
    return Subspace(field, R[:r], R.shape[1])


def zero_subspace(field: FiniteField, ambient_dim: int) -> Subspace:
    return Subspace(field, np.zeros((0, ambient_dim), dtype=np.int64), ambient_dim)


def full_space(field: FiniteField, ambient_dim: int) -> Subspace:
    return Subspace(field, np.eye(ambient_dim, dtype=np.int64), ambient_dim)


def subspace_contains(s: Subspace, v: Sequence[int]) -> bool:
    return s.contains(v)


def nullspace(field: FiniteField, rows, ncols: int | None = None) -> Subspace:
    """{v : M v = 0} as a canonical subspace."""
    R, r, pivots = rref(field, rows, ncols)
    c = R.shape[1]
    free = [j for j in range(c) if j not in set(pivots)]
    vecs = np.zeros((len(free), c), dtype=np.int64)
    for k, j in enumerate(free):
        vecs[k, j] = 1
        for i, pc in enumerate(pivots):
            vecs[k, pc] = field.neg(int(R[i, j]))
    return subspace_from_spanning(field, vecs, c)


def stack_reduce(field: FiniteField, blocks: Iterable[np.ndarray], ncols: int) -> np.ndarray:
    """RREF of a tall stacked matrix, reducing block by block to bound memory."""
    acc = np.zeros((0, ncols), dtype=np.int64)
    for block in blocks:
        R = np.vstack([acc, np.asarray(block, dtype=np.int64)])
        r, _ = _rref_inplace(field, R)
        acc = R[:r]
    return acc
