"""Exact dense linear algebra over GF(p).

Matrices are small (share systems are at most 64 x 64), so everything
here is plain Gauss-Jordan elimination on Python ints. Entries are
canonical residues in [0, p).
"""

from .errors import DimensionMismatchError, ModulusMismatchError, NotSquareError, SingularMatrixError
from .field import PrimeModulus, inv_mod


class ModMatrix:
    """A row-major matrix of canonical residues mod a shared prime."""

    __slots__ = ("entries", "rows", "cols", "modulus")

    def __init__(self, rows, modulus: PrimeModulus):
        data = [list(r) for r in rows]
        if not data or not data[0]:
            raise DimensionMismatchError("matrix needs at least one row and one column")
        cols = len(data[0])
        if any(len(r) != cols for r in data):
            raise DimensionMismatchError("ragged rows")
        p = modulus.p
        self.entries = tuple(v % p for r in data for v in r)
        self.rows = len(data)
        self.cols = cols
        self.modulus = modulus

    @classmethod
    def identity(cls, n: int, modulus: PrimeModulus) -> "ModMatrix":
        return cls([[int(i == j) for j in range(n)] for i in range(n)], modulus)

    def row(self, i: int) -> tuple:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def to_rows(self) -> list:
        """Fresh mutable row lists, safe to eliminate in place."""
        return [list(self.row(i)) for i in range(self.rows)]

    def append_row(self, values) -> "ModMatrix":
        return ModMatrix(self.to_rows() + [list(values)], self.modulus)

    def __eq__(self, other) -> bool:
        if isinstance(other, ModMatrix):
            return (self.entries, self.rows, self.cols, self.modulus) == (
                other.entries, other.rows, other.cols, other.modulus)
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.entries, self.rows, self.cols, self.modulus))

    def __repr__(self) -> str:
        body = "; ".join(" ".join(map(str, self.row(i))) for i in range(self.rows))
        return f"ModMatrix[{body}] mod {self.modulus.p}"


class ModVector:
    """A vector of canonical residues mod a shared prime."""

    __slots__ = ("entries", "modulus")

    def __init__(self, values, modulus: PrimeModulus):
        p = modulus.p
        self.entries = tuple(v % p for v in values)
        self.modulus = modulus

    def __len__(self) -> int:
        return len(self.entries)

    def __eq__(self, other) -> bool:
        if isinstance(other, ModVector):
            return self.entries == other.entries and self.modulus == other.modulus
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.entries, self.modulus))

    def __repr__(self) -> str:
        return f"ModVector{self.entries} mod {self.modulus.p}"


def _gauss_jordan(rows: list, p: int, pivot_cols: int = None) -> tuple:
    """Reduce rows in place to reduced row echelon form.

    Pivots are the first nonzero entry found in each column, and only
    the first pivot_cols columns are eligible (all columns by default);
    an augmented system restricts pivoting to its coefficient block so
    the right-hand side cannot masquerade as a pivot. Returns
    (rank, pivot_product) where pivot_product folds in the row-swap
    sign; for a full-rank square input it equals the determinant.
    """
    nrows = len(rows)
    ncols = len(rows[0]) if pivot_cols is None else pivot_cols
    det = 1
    rk = 0
    for c in range(ncols):
        if rk == nrows:
            break
        piv = None
        for i in range(rk, nrows):
            if rows[i][c]:
                piv = i
                break
        if piv is None:
            continue
        if piv != rk:
            rows[rk], rows[piv] = rows[piv], rows[rk]
            det = (p - det) % p
        pivval = rows[rk][c]
        det = det * pivval % p
        inv = inv_mod(pivval, p)
        prow = [v * inv % p for v in rows[rk]]
        rows[rk] = prow
        for i in range(nrows):
            f = rows[i][c]
            if i != rk and f:
                rows[i] = [(v - f * w) % p for v, w in zip(rows[i], prow)]
        rk += 1
    return rk, det


def _common_modulus(a, b) -> PrimeModulus:
    if a.modulus != b.modulus:
        raise ModulusMismatchError(f"mixed moduli {a.modulus.p} and {b.modulus.p}")
    return a.modulus


def determinant(m: ModMatrix) -> int:
    """Determinant mod p.

    Raises:
        NotSquareError: if the matrix is not square.
    """
    if m.rows != m.cols:
        raise NotSquareError(f"determinant of a {m.rows}x{m.cols} matrix")
    rows = m.to_rows()
    rk, det = _gauss_jordan(rows, m.modulus.p)
    return det if rk == m.rows else 0


def rank(m: ModMatrix) -> int:
    rows = m.to_rows()
    rk, _ = _gauss_jordan(rows, m.modulus.p)
    return rk


def solve(a: ModMatrix, b: ModVector) -> ModVector:
    """Unique solution x of A x = b (mod p).

    Raises:
        DimensionMismatchError: if A is not square or b has the wrong length.
        SingularMatrixError: if det(A) = 0, so no unique solution exists.
    """
    modulus = _common_modulus(a, b)
    if a.rows != a.cols:
        raise DimensionMismatchError(f"coefficient matrix is {a.rows}x{a.cols}, not square")
    if len(b) != a.rows:
        raise DimensionMismatchError(f"b has length {len(b)}, expected {a.rows}")
    rows = a.to_rows()
    for r, bv in zip(rows, b.entries):
        r.append(bv)
    rk, _ = _gauss_jordan(rows, modulus.p, pivot_cols=a.cols)
    if rk < a.rows:
        raise SingularMatrixError("matrix is singular mod p")
    # full rank means the left block reduced to the identity
    return ModVector([r[-1] for r in rows], modulus)


def in_rowspace(v: ModVector, m: ModMatrix) -> bool:
    """Whether v is a linear combination of the rows of m."""
    _common_modulus(v, m)
    if len(v) != m.cols:
        raise DimensionMismatchError(f"vector length {len(v)} vs {m.cols} columns")
    return rank(m) == rank(m.append_row(v.entries))


def matmul(a: ModMatrix, b: ModMatrix) -> ModMatrix:
    modulus = _common_modulus(a, b)
    if a.cols != b.rows:
        raise DimensionMismatchError(f"{a.rows}x{a.cols} times {b.rows}x{b.cols}")
    p = modulus.p
    bcols = [[b.entries[i * b.cols + j] for i in range(b.rows)] for j in range(b.cols)]
    out = [[sum(x * y for x, y in zip(a.row(i), col)) % p for col in bcols]
           for i in range(a.rows)]
    return ModMatrix(out, modulus)


def mat_vec(a: ModMatrix, x: ModVector) -> ModVector:
    modulus = _common_modulus(a, x)
    if len(x) != a.cols:
        raise DimensionMismatchError(f"vector length {len(x)} vs {a.cols} columns")
    p = modulus.p
    return ModVector([sum(u * w for u, w in zip(a.row(i), x.entries)) % p
                      for i in range(a.rows)], modulus)
