"""Generic linear codes: duals under both inner products, exact minimum
distance by exhaustive enumeration, and MDS/AMDS/NMDS classification."""

from __future__ import annotations

from .field import FieldError, GaloisField
from .linalg import LinalgError, Matrix, frobenius_image

DEFAULT_DISTANCE_CAP = 1 << 24


class CodeError(ValueError):
    pass


class DistanceCapExceeded(CodeError):
    pass


class LinearCode:
    """An [n, k] code given by a full-rank k x n generator matrix.

    k = 0 is represented by a zero-row generator so duality stays total.
    """

    def __init__(self, field: GaloisField, gen: Matrix):
        if gen.field != field:
            raise CodeError("generator field mismatch")
        if gen.cols < 1:
            raise CodeError("length must be positive")
        if gen.rank() != gen.rows:
            raise CodeError("generator matrix is rank deficient")
        self.field = field
        self.gen = gen
        self.n = gen.cols
        self.k = gen.rows

    @classmethod
    def trivial(cls, field: GaloisField, n: int) -> "LinearCode":
        return cls(field, Matrix(field, [], cols=n))

    def __repr__(self):
        return f"LinearCode([{self.n},{self.k}] over GF({self.field.order}))"

    # -- duality -----------------------------------------------------------------

    def dual_euclidean(self) -> "LinearCode":
        if self.k == 0:
            return LinearCode(self.field, Matrix.identity(self.field, self.n))
        return LinearCode(self.field, self.gen.kernel_basis())

    def dual_hermitian(self) -> "LinearCode":
        self.field._require_square()
        if self.k == 0:
            return LinearCode(self.field, Matrix.identity(self.field, self.n))
        return LinearCode(self.field, frobenius_image(self.gen).kernel_basis())

    def is_hermitian_self_dual(self) -> bool:
        self.field._require_square()
        if self.n != 2 * self.k:
            return False
        return self.gen.mul(self.gen.conj_transpose()).is_zero()

    # -- equality of row spaces -----------------------------------------------------

    def equals(self, other: "LinearCode") -> bool:
        if self.field != other.field:
            raise CodeError("field mismatch")
        if self.n != other.n:
            raise CodeError("length mismatch")
        return self.gen.row_space_key() == other.gen.row_space_key()

    def __eq__(self, other):
        return isinstance(other, LinearCode) and self.equals(other)

    def __hash__(self):
        return hash((self.field, self.n, self.gen.row_space_key()))

    # -- distance / classification ----------------------------------------------------

    def min_distance(self, cap: int = DEFAULT_DISTANCE_CAP) -> int:
        """Exact minimum Hamming weight over all nonzero codewords.

        Enumeration is over projective messages (first nonzero message symbol
        normalized to 1): every nonzero codeword is a nonzero scalar multiple
        of an enumerated one and Hamming weight is scale invariant, so the
        minimum is exact.  The work is vectorized in fixed-size chunks and the
        result is independent of chunking.
        """
        if self.k == 0:
            raise CodeError("minimum distance of the zero code is undefined")
        q = self.field.order
        if q ** self.k > cap:
            raise DistanceCapExceeded(
                f"q^k = {q}^{self.k} exceeds enumeration cap {cap}")
        import numpy as np

        exp2, log, addt = self.field.np_tables()
        g = np.array(self.gen.data, dtype=np.int32)
        n1 = q - 1
        best = self.n

        def mul_vec(scalars, grow):
            # scalars: (N,), grow: (n,) -> (N, n) products
            out = exp2[(log[scalars][:, None] + log[grow][None, :]) % n1]
            mask = (scalars == 0)[:, None] | (grow == 0)[None, :]
            return np.where(mask, 0, out)

        chunk = 1 << 16
        for lead in range(self.k):
            nfree = self.k - lead - 1
            total = q ** nfree
            start = 0
            while start < total:
                idx = np.arange(start, min(start + chunk, total), dtype=np.int64)
                cw = np.broadcast_to(g[lead], (len(idx), self.n)).copy()
                for j in range(nfree):
                    row = lead + 1 + j
                    sym = (idx // (q ** (nfree - 1 - j))) % q
                    cw = addt[cw, mul_vec(sym.astype(np.int32), g[row])]
                w = int((cw != 0).sum(axis=1).min())
                best = min(best, w)
                if best == 1:
                    return 1
                start += chunk
        return best

    def classify(self, cap: int = DEFAULT_DISTANCE_CAP) -> str:
        """MDS / AMDS / NMDS / other.  The dual distance is only computed in
        the d = n - k case, the only one where NMDS is possible."""
        d = self.min_distance(cap)
        if d == self.n - self.k + 1:
            return "MDS"
        if d == self.n - self.k:
            dual_d = self.dual_euclidean().min_distance(cap)
            return "NMDS" if dual_d == self.k else "AMDS"
        return "other"

    # -- serialization ---------------------------------------------------------------

    def to_dict(self) -> dict:
        f = self.field
        return {
            "field": f.to_dict(),
            "n": self.n,
            "k": self.k,
            "generator": [[f.coeffs(x) for x in row] for row in self.gen.data],
        }

    @classmethod
    def from_dict(cls, d: dict, field: GaloisField | None = None) -> "LinearCode":
        f = field or GaloisField.from_dict(d["field"])
        rows = [[f.from_coeffs(c) for c in row] for row in d["generator"]]
        return cls(f, Matrix(f, rows, cols=d["n"]))


def codes_equal(a: LinearCode, b: LinearCode) -> bool:
    return a.equals(b)
