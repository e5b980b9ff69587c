"""Prime-field scalars and exact dense linear algebra.

All matrices live over a single prime field GF(p) with p below
``PRIME_LIMIT``; entries are canonical residues in [0, p) held in int64
arrays, so products of an entry with a pivot stay well inside the int64
range during elimination, and matrix products of the sizes used here cannot
overflow.  Every rank, kernel, and subspace operation is exact — there are
no tolerances anywhere in this package.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .core import rref_mod

# Primes must stay below 2**20 so p**2 times any matrix dimension used here
# fits comfortably in int64 during accumulation.
PRIME_LIMIT = 1 << 20


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


def validate_prime(p: int) -> int:
    if not isinstance(p, int):
        raise TypeError("modulus must be an integer")
    if not 2 < p < PRIME_LIMIT:
        raise ValueError(f"modulus must lie strictly between 2 and {PRIME_LIMIT}")
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    return p


@dataclass(frozen=True)
class FieldScalar:
    """A residue in GF(p)."""

    value: int
    p: int

    def __post_init__(self):
        object.__setattr__(self, "value", self.value % self.p)

    def _check(self, other):
        if isinstance(other, FieldScalar):
            if other.p != self.p:
                raise ValueError("mixed moduli")
            return other.value
        return int(other)

    def __add__(self, other):
        return FieldScalar(self.value + self._check(other), self.p)

    __radd__ = __add__

    def __sub__(self, other):
        return FieldScalar(self.value - self._check(other), self.p)

    def __rsub__(self, other):
        return FieldScalar(self._check(other) - self.value, self.p)

    def __mul__(self, other):
        return FieldScalar(self.value * self._check(other), self.p)

    __rmul__ = __mul__

    def __neg__(self):
        return FieldScalar(-self.value, self.p)

    def inverse(self) -> "FieldScalar":
        if self.value == 0:
            raise ZeroDivisionError("0 has no inverse")
        return FieldScalar(pow(self.value, self.p - 2, self.p), self.p)

    def __truediv__(self, other):
        o = FieldScalar(self._check(other), self.p)
        return self * o.inverse()

    def __pow__(self, e: int):
        return FieldScalar(pow(self.value, e, self.p), self.p)

    def __bool__(self):
        return self.value != 0

    def __int__(self):
        return self.value


def _as_array(data, p: int) -> np.ndarray:
    a = np.ascontiguousarray(np.asarray(data, dtype=np.int64) % p)
    if a.ndim == 1:
        a = a.reshape(1, -1)
    if a.ndim != 2:
        raise ValueError("matrix data must be 2-dimensional")
    return a


def matmul_mod(a: np.ndarray, b: np.ndarray, p: int) -> np.ndarray:
    """(a @ b) mod p on raw int64 arrays with entries in [0, p)."""
    if a.shape[1] == 0 or b.shape[1] == 0 or a.shape[0] == 0:
        return np.zeros((a.shape[0], b.shape[1]), dtype=np.int64)
    return (a @ b) % p


class ExactMatrix:
    """Immutable dense matrix over GF(p).

    Construction normalizes all entries into [0, p); the backing array is
    marked read-only.  All operations return new matrices.
    """

    __slots__ = ("a", "p")

    def __init__(self, data, p: int):
        a = _as_array(data, p)
        a.setflags(write=False)
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "p", p)

    def __setattr__(self, *_):
        raise AttributeError("ExactMatrix is immutable")

    # -- constructors ------------------------------------------------------
    @classmethod
    def zeros(cls, rows: int, cols: int, p: int) -> "ExactMatrix":
        return cls(np.zeros((rows, cols), dtype=np.int64), p)

    @classmethod
    def identity(cls, n: int, p: int) -> "ExactMatrix":
        return cls(np.eye(n, dtype=np.int64), p)

    # -- shape -------------------------------------------------------------
    @property
    def rows(self) -> int:
        return self.a.shape[0]

    @property
    def cols(self) -> int:
        return self.a.shape[1]

    @property
    def shape(self):
        return self.a.shape

    def __eq__(self, other):
        return (
            isinstance(other, ExactMatrix)
            and self.p == other.p
            and self.a.shape == other.a.shape
            and bool(np.array_equal(self.a, other.a))
        )

    def __repr__(self):
        return f"ExactMatrix({self.rows}x{self.cols} mod {self.p})"

    # -- arithmetic --------------------------------------------------------
    def __matmul__(self, other: "ExactMatrix") -> "ExactMatrix":
        if self.p != other.p:
            raise ValueError("mixed moduli")
        if self.cols != other.rows:
            raise ValueError("shape mismatch in matrix product")
        return ExactMatrix(matmul_mod(self.a, other.a, self.p), self.p)

    def transpose(self) -> "ExactMatrix":
        return ExactMatrix(self.a.T.copy(), self.p)

    def stack(self, other: "ExactMatrix") -> "ExactMatrix":
        """Vertical concatenation."""
        if self.p != other.p:
            raise ValueError("mixed moduli")
        if self.cols != other.cols:
            raise ValueError("column count mismatch")
        return ExactMatrix(np.vstack([self.a, other.a]), self.p)

    # -- reductions --------------------------------------------------------
    def rref(self):
        """Reduced row-echelon form: returns (matrix, pivot column list)."""
        work = self.a.copy()
        pivots = rref_mod(work, self.p)
        return ExactMatrix(work, self.p), list(pivots)

    def rank(self) -> int:
        work = self.a.copy()
        return len(rref_mod(work, self.p))

    def row_space(self) -> "ExactMatrix":
        """Canonical basis of the row space (nonzero rows of the RREF)."""
        red, pivots = self.rref()
        return ExactMatrix(red.a[: len(pivots)].copy(), self.p)

    def kernel_basis(self) -> "ExactMatrix":
        """Columns form a basis of the right kernel: self @ K = 0."""
        work = self.a.copy()
        pivots = rref_mod(work, self.p)
        n = self.cols
        free = [c for c in range(n) if c not in set(pivots)]
        k = np.zeros((n, len(free)), dtype=np.int64)
        for idx, f in enumerate(free):
            k[f, idx] = 1
            for row, pc in enumerate(pivots):
                k[pc, idx] = (-int(work[row, f])) % self.p
        return ExactMatrix(k, self.p)


def rank(m: ExactMatrix) -> int:
    return m.rank()


def kernel_basis(m: ExactMatrix) -> ExactMatrix:
    return m.kernel_basis()


def subspace_ops(a: ExactMatrix, b, which: str):
    """Operations on subspaces spanned by the rows of ``a`` and ``b``.

    ``sum`` and ``intersection`` return canonical row-basis matrices;
    ``membership`` tests whether the single vector ``b`` lies in the row
    space of ``a``; ``quotient-dim`` returns dim((A+B)/B) = dim(A+B) - dim B.
    """
    if which == "membership":
        v = b if isinstance(b, ExactMatrix) else ExactMatrix(b, a.p)
        if v.rows != 1:
            raise ValueError("membership expects a single vector")
        if v.cols != a.cols:
            raise ValueError("ambient dimension mismatch")
        return a.stack(v).rank() == a.rank()

    if not isinstance(b, ExactMatrix):
        b = ExactMatrix(b, a.p)
    if a.cols != b.cols:
        raise ValueError("ambient dimension mismatch")
    if a.p != b.p:
        raise ValueError("mixed moduli")

    if which == "sum":
        return a.stack(b).row_space()
    if which == "quotient-dim":
        return a.stack(b).rank() - b.rank()
    if which == "intersection":
        n = a.cols
        p = a.p
        left = np.vstack([a.a, b.a])
        right = np.vstack([a.a, np.zeros_like(b.a)])
        block = np.hstack([left, right]).copy()
        rref_mod(block, p)
        zero_left = ~block[:, :n].any(axis=1)
        inter = block[zero_left][:, n:]
        inter = inter[inter.any(axis=1)]
        return ExactMatrix(inter, p).row_space()
    raise ValueError(f"unknown subspace operation {which!r}")
