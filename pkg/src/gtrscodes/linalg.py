"""Dense exact linear algebra over a GaloisField.

Matrices are immutable values (entries are field-element ints).  Zero-row
matrices are allowed so that dimension-0 duals and empty kernels stay
first-class values.
"""

from __future__ import annotations

from typing import Sequence

from .field import FieldError, GaloisField


class LinalgError(ValueError):
    pass


class Matrix:
    def __init__(self, field: GaloisField, data: Sequence[Sequence[int]],
                 cols: int | None = None):
        rows = [tuple(field.check(x) for x in r) for r in data]
        if rows:
            cols = len(rows[0])
            if any(len(r) != cols for r in rows):
                raise LinalgError("ragged rows")
        elif cols is None:
            raise LinalgError("zero-row matrix needs an explicit column count")
        if cols < 0:
            raise LinalgError("negative dimension")
        self.field = field
        self.data = tuple(rows)
        self.rows = len(rows)
        self.cols = cols
        self._rref = None

    # -- constructors ---------------------------------------------------------

    @classmethod
    def identity(cls, field: GaloisField, n: int) -> "Matrix":
        return cls(field, [[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, field: GaloisField, r: int, c: int) -> "Matrix":
        return cls(field, [[0] * c for _ in range(r)], cols=c)

    @classmethod
    def reversal(cls, field: GaloisField, k: int) -> "Matrix":
        if k < 1:
            raise LinalgError("reversal needs k >= 1")
        return cls(field, [[1 if i + j == k - 1 else 0 for j in range(k)]
                           for i in range(k)])

    @classmethod
    def diagonal(cls, field: GaloisField, v: Sequence[int]) -> "Matrix":
        v = list(v)
        return cls(field, [[v[i] if i == j else 0 for j in range(len(v))]
                           for i in range(len(v))])

    @classmethod
    def vandermonde(cls, field: GaloisField, alpha: Sequence[int], nrows: int) -> "Matrix":
        alpha = [field.check(a) for a in alpha]
        if len(set(alpha)) != len(alpha):
            raise LinalgError("repeated evaluation point")
        data = []
        row = [1] * len(alpha)
        for _ in range(nrows):
            data.append(list(row))
            row = [field.mul(r, a) for r, a in zip(row, alpha)]
        return cls(field, data, cols=len(alpha))

    # -- basic ops --------------------------------------------------------------

    def _same_field(self, other: "Matrix"):
        if self.field != other.field:
            raise LinalgError("field mismatch")

    def mul(self, other: "Matrix") -> "Matrix":
        self._same_field(other)
        if self.cols != other.rows:
            raise LinalgError("dimension mismatch")
        f = self.field
        mul, add = f.mul, f.add
        bt = list(zip(*other.data)) if other.data else [()] * other.cols
        out = []
        for row in self.data:
            orow = []
            for col in bt:
                acc = 0
                for a, b in zip(row, col):
                    if a and b:
                        acc = add(acc, mul(a, b))
                orow.append(acc)
            out.append(orow)
        return Matrix(f, out, cols=other.cols)

    def __matmul__(self, other):
        return self.mul(other)

    def transpose(self) -> "Matrix":
        if self.rows == 0:
            return Matrix(self.field, [[] for _ in range(self.cols)], cols=0)
        return Matrix(self.field, list(zip(*self.data)), cols=self.rows)

    def conj_transpose(self) -> "Matrix":
        frob = self.field.frobenius
        conj = [[frob(x) for x in row] for row in self.data]
        return Matrix(self.field, list(zip(*conj)) if conj else [], cols=self.rows)

    def scale_rows(self, c: int) -> "Matrix":
        mul = self.field.mul
        return Matrix(self.field, [[mul(c, x) for x in row] for row in self.data],
                      cols=self.cols)

    def hstack(self, other: "Matrix") -> "Matrix":
        self._same_field(other)
        if self.rows != other.rows:
            raise LinalgError("row count mismatch")
        return Matrix(self.field, [list(a) + list(b) for a, b in zip(self.data, other.data)],
                      cols=self.cols + other.cols)

    def is_zero(self) -> bool:
        return all(x == 0 for row in self.data for x in row)

    def __eq__(self, other):
        return (isinstance(other, Matrix) and self.field == other.field
                and self.cols == other.cols and self.data == other.data)

    def __hash__(self):
        return hash((self.field, self.cols, self.data))

    def __repr__(self):
        return f"Matrix({self.rows}x{self.cols} over GF({self.field.order}))"

    # -- elimination -------------------------------------------------------------

    def rref(self) -> tuple["Matrix", int, tuple[int, ...]]:
        """Reduced row echelon form, rank and pivot columns."""
        if self._rref is None:
            f = self.field
            mul, add, inv, neg = f.mul, f.add, f.inv, f.neg
            a = [list(r) for r in self.data]
            pivots = []
            r = 0
            for c in range(self.cols):
                if r == len(a):
                    break
                pr = next((i for i in range(r, len(a)) if a[i][c]), None)
                if pr is None:
                    continue
                a[r], a[pr] = a[pr], a[r]
                s = inv(a[r][c])
                a[r] = [mul(s, x) for x in a[r]]
                prow = a[r]
                for i in range(len(a)):
                    if i != r and a[i][c]:
                        t = neg(a[i][c])
                        a[i] = [add(x, mul(t, y)) for x, y in zip(a[i], prow)]
                pivots.append(c)
                r += 1
            self._rref = (Matrix(f, a, cols=self.cols), r, tuple(pivots))
        return self._rref

    def rank(self) -> int:
        return self.rref()[1]

    def row_space_key(self) -> tuple:
        """The nonzero rows of the RREF: a canonical key for the row space."""
        red, rank, _ = self.rref()
        return tuple(red.data[:rank])

    def kernel_basis(self) -> "Matrix":
        """Full-rank K with self @ K.T = 0 and rank(K) = cols - rank(self)."""
        f = self.field
        red, rank, pivots = self.rref()
        free = [c for c in range(self.cols) if c not in pivots]
        basis = []
        for fc in free:
            vec = [0] * self.cols
            vec[fc] = 1
            for i, pc in enumerate(pivots):
                vec[pc] = f.neg(red.data[i][fc])
            basis.append(vec)
        return Matrix(f, basis, cols=self.cols)


def frobenius_image(mat: Matrix) -> Matrix:
    frob = mat.field.frobenius
    return Matrix(mat.field, [[frob(x) for x in row] for row in mat.data],
                  cols=mat.cols)


def is_multiplicative_subgroup(field: GaloisField, alpha: Sequence[int]) -> bool:
    """True iff the entries of alpha are distinct and form a multiplicative
    subgroup of the field's unit group."""
    pts = list(alpha)
    s = set(pts)
    if len(s) != len(pts) or 0 in s or 1 not in s:
        return False
    return all(field.mul(x, y) in s for x in s for y in s)


def inverse_vandermonde_identity_check(field: GaloisField, alpha: Sequence[int]) -> bool:
    """Check V^T (J V diag(alpha / n)) = I for a full multiplicative-subgroup
    Vandermonde; n must be invertible in the field."""
    n = len(alpha)
    if not is_multiplicative_subgroup(field, alpha):
        raise LinalgError("alpha must form a multiplicative subgroup")
    if n % field.p == 0:
        raise LinalgError("group order divisible by the characteristic")
    inv_n = field.inv(field.scalar(n))
    v = Matrix.vandermonde(field, alpha, n)
    j = Matrix.reversal(field, n)
    d = Matrix.diagonal(field, [field.mul(a, inv_n) for a in alpha])
    cand = j.mul(v).mul(d)
    return v.transpose().mul(cand) == Matrix.identity(field, n)
