"""Exact arithmetic kernel: integer lattices and sparse multivariate polynomials.

Everything here is exact.  Rationals are ``fractions.Fraction``, integers are
Python ints, and the lattice routines are elementary row/column reductions
over Z (Hermite-style elimination; Smith form only where invariant factors
are wanted).  Dimensions in this library stay below ten, so the classical
O(n^3) algorithms with exact pivoting are the right tool.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Dict, Iterable, Mapping, Sequence, Tuple

from .errors import NotFullRank

IntVector = Tuple[int, ...]
Exponent = Tuple[int, ...]


# ---------------------------------------------------------------------------
# Integer lattices
# ---------------------------------------------------------------------------


def _as_int_rows(vectors: Iterable[Sequence[int]]) -> list[list[int]]:
    rows = []
    for v in vectors:
        row = []
        for x in v:
            if isinstance(x, Fraction):
                if x.denominator != 1:
                    raise ValueError(f"lattice vectors must be integral, got {x}")
                x = x.numerator
            row.append(int(x))
        rows.append(row)
    return rows


def hermite_row_reduce(vectors: Iterable[Sequence[int]], width: int) -> list[list[int]]:
    """Row-reduce integer vectors to an upper-echelon form by unimodular ops.

    Returns the nonzero rows with positive pivots, pivot columns strictly
    increasing.  The rows generate the same lattice as the input.
    """
    mat = [r for r in _as_int_rows(vectors) if any(r)]
    for row in mat:
        if len(row) != width:
            raise ValueError("vector width mismatch")
    out: list[list[int]] = []
    top = 0
    for col in range(width):
        # Gather rows still active with a nonzero entry in this column and
        # run the Euclidean algorithm down the column.
        while True:
            candidates = [i for i in range(top, len(mat)) if mat[i][col] != 0]
            if not candidates:
                break
            i0 = min(candidates, key=lambda i: abs(mat[i][col]))
            mat[top], mat[i0] = mat[i0], mat[top]
            pivot = mat[top][col]
            done = True
            for i in range(top + 1, len(mat)):
                if mat[i][col] != 0:
                    q = mat[i][col] // pivot
                    mat[i] = [a - q * b for a, b in zip(mat[i], mat[top])]
                    if mat[i][col] != 0:
                        done = False
            if done:
                break
        if top < len(mat) and mat[top][col] != 0:
            if mat[top][col] < 0:
                mat[top] = [-a for a in mat[top]]
            out.append(mat[top])
            top += 1
    return out


def lattice_index(generators: Iterable[Sequence[int]], ambient_dim: int) -> int:
    """Index in Z^ambient_dim of the sublattice spanned by the generators.

    Raises NotFullRank when the generators do not span the ambient space.
    """
    echelon = hermite_row_reduce(generators, ambient_dim)
    if len(echelon) < ambient_dim:
        raise NotFullRank(
            f"generators span rank {len(echelon)} < ambient dimension {ambient_dim}"
        )
    index = 1
    for i, row in enumerate(echelon):
        index *= row[i]
    return index


def integer_kernel(rows: Iterable[Sequence[int]], n_cols: int) -> list[IntVector]:
    """Basis of {x in Z^n_cols : A x = 0} for the integer matrix A.

    Column reduction with a tracked unimodular transform: the returned basis
    is automatically saturated (the kernel of an integer matrix is a direct
    summand of Z^n), so every integral kernel vector is an integer
    combination of the basis.
    """
    mat = _as_int_rows(rows)
    for row in mat:
        if len(row) != n_cols:
            raise ValueError("row width mismatch")
    # Work on columns of A; V records the column operations.
    cols = [[mat[r][c] for r in range(len(mat))] for c in range(n_cols)]
    trans = [[1 if i == j else 0 for i in range(n_cols)] for j in range(n_cols)]
    active = list(range(n_cols))
    for r in range(len(mat)):
        while True:
            candidates = [c for c in active if cols[c][r] != 0]
            if not candidates:
                pivot_col = None
                break
            c0 = min(candidates, key=lambda c: abs(cols[c][r]))
            done = True
            for c in candidates:
                if c == c0:
                    continue
                q = cols[c][r] // cols[c0][r]
                cols[c] = [a - q * b for a, b in zip(cols[c], cols[c0])]
                trans[c] = [a - q * b for a, b in zip(trans[c], trans[c0])]
                if cols[c][r] != 0:
                    done = False
            if done:
                pivot_col = c0
                break
        if pivot_col is not None:
            active.remove(pivot_col)
    return [tuple(trans[c]) for c in sorted(active)]


def solve_linear(
    matrix: Sequence[Sequence[Fraction]], rhs: Sequence[Fraction]
) -> Tuple[str, Tuple[Fraction, ...] | None]:
    """Exact Gaussian elimination for A x = rhs over the rationals.

    Returns ("unique", solution), ("inconsistent", None), or
    ("underdetermined", None).
    """
    rows = [[Fraction(x) for x in row] + [Fraction(b)] for row, b in zip(matrix, rhs)]
    if len(rows) != len(matrix) or len(rows) != len(rhs):
        raise ValueError("matrix/rhs size mismatch")
    n_cols = len(matrix[0]) if matrix else 0
    pivot_of_col: dict[int, int] = {}
    top = 0
    for col in range(n_cols):
        pivot_row = next((i for i in range(top, len(rows)) if rows[i][col] != 0), None)
        if pivot_row is None:
            continue
        rows[top], rows[pivot_row] = rows[pivot_row], rows[top]
        pivot = rows[top][col]
        rows[top] = [x / pivot for x in rows[top]]
        for i in range(len(rows)):
            if i != top and rows[i][col] != 0:
                factor = rows[i][col]
                rows[i] = [a - factor * b for a, b in zip(rows[i], rows[top])]
        pivot_of_col[col] = top
        top += 1
    for i in range(top, len(rows)):
        if rows[i][-1] != 0:
            return "inconsistent", None
    if len(pivot_of_col) < n_cols:
        return "underdetermined", None
    solution = [Fraction(0)] * n_cols
    for col, row in pivot_of_col.items():
        solution[col] = rows[row][-1]
    return "unique", tuple(solution)


def in_rational_span(vectors: Sequence[Sequence], target: Sequence) -> bool:
    """Whether target lies in the rational span of the given vectors."""
    vecs = [v for v in vectors]
    width = len(target)
    if not vecs:
        return all(Fraction(x) == 0 for x in target)
    matrix = [[Fraction(v[i]) for v in vecs] for i in range(width)]
    status, _ = solve_linear(matrix, [Fraction(x) for x in target])
    if status == "inconsistent":
        return False
    return True


def smith_invariant_factors(rows: Iterable[Sequence[int]]) -> list[int]:
    """Nonzero invariant factors d_1 | d_2 | ... of an integer matrix."""
    mat = _as_int_rows(rows)
    if not mat:
        return []
    m, n = len(mat), len(mat[0])
    factors: list[int] = []
    t = 0
    while t < min(m, n):
        # Find a nonzero entry in the working submatrix.
        pos = [(i, j) for i in range(t, m) for j in range(t, n) if mat[i][j] != 0]
        if not pos:
            break
        i0, j0 = min(pos, key=lambda p: abs(mat[p[0]][p[1]]))
        mat[t], mat[i0] = mat[i0], mat[t]
        for row in mat:
            row[t], row[j0] = row[j0], row[t]
        # Clear row and column t; restart whenever a remainder survives.
        clean = True
        for i in range(t + 1, m):
            if mat[i][t] != 0:
                q = mat[i][t] // mat[t][t]
                mat[i] = [a - q * b for a, b in zip(mat[i], mat[t])]
                if mat[i][t] != 0:
                    clean = False
        for j in range(t + 1, n):
            if mat[t][j] != 0:
                q = mat[t][j] // mat[t][t]
                for row in mat:
                    row[j] -= q * row[t]
                if mat[t][j] != 0:
                    clean = False
        if not clean:
            continue
        # Enforce divisibility of the remaining block by the pivot.
        pivot = abs(mat[t][t])
        offender = None
        for i in range(t + 1, m):
            for j in range(t + 1, n):
                if mat[i][j] % pivot != 0:
                    offender = i
                    break
            if offender is not None:
                break
        if offender is not None:
            mat[t] = [a + b for a, b in zip(mat[t], mat[offender])]
            continue
        factors.append(pivot)
        t += 1
    return factors


# ---------------------------------------------------------------------------
# Sparse multivariate polynomials
# ---------------------------------------------------------------------------


def _coerce_coeff(c) -> Fraction:
    if isinstance(c, Fraction):
        return c
    if isinstance(c, int):
        return Fraction(c)
    raise TypeError(f"coefficient must be int or Fraction, got {type(c).__name__}")


class MultiPoly:
    """Multivariate polynomial with Fraction coefficients.

    Terms are stored sparsely as {exponent tuple: coefficient} with one
    exponent slot per variable; zero coefficients are never kept.
    """

    __slots__ = ("n_vars", "terms")

    def __init__(self, n_vars: int, terms: Mapping[Exponent, Fraction] | None = None):
        self.n_vars = n_vars
        clean: Dict[Exponent, Fraction] = {}
        for exp, coeff in (terms or {}).items():
            exp = tuple(int(e) for e in exp)
            if len(exp) != n_vars or any(e < 0 for e in exp):
                raise ValueError(f"bad exponent {exp} for {n_vars} variables")
            coeff = _coerce_coeff(coeff)
            if coeff != 0:
                clean[exp] = clean.get(exp, Fraction(0)) + coeff
                if clean[exp] == 0:
                    del clean[exp]
        self.terms = clean

    # -- constructors -------------------------------------------------------

    @classmethod
    def zero(cls, n_vars: int) -> "MultiPoly":
        return cls(n_vars)

    @classmethod
    def constant(cls, n_vars: int, c) -> "MultiPoly":
        return cls(n_vars, {(0,) * n_vars: _coerce_coeff(c)})

    @classmethod
    def variable(cls, n_vars: int, i: int) -> "MultiPoly":
        exp = [0] * n_vars
        exp[i] = 1
        return cls(n_vars, {tuple(exp): Fraction(1)})

    @classmethod
    def linear(cls, n_vars: int, coeffs: Mapping[int, int], constant=0) -> "MultiPoly":
        """Sum of coeff * t_i over the mapping, plus a constant term."""
        terms: Dict[Exponent, Fraction] = {}
        for i, c in coeffs.items():
            exp = [0] * n_vars
            exp[i] = 1
            terms[tuple(exp)] = terms.get(tuple(exp), Fraction(0)) + _coerce_coeff(c)
        terms[(0,) * n_vars] = _coerce_coeff(constant)
        return cls(n_vars, terms)

    # -- ring operations ----------------------------------------------------

    def _check_compatible(self, other: "MultiPoly") -> None:
        if self.n_vars != other.n_vars:
            raise ValueError("variable count mismatch")

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = MultiPoly.constant(self.n_vars, other)
        self._check_compatible(other)
        terms = dict(self.terms)
        for exp, c in other.terms.items():
            terms[exp] = terms.get(exp, Fraction(0)) + c
        return MultiPoly(self.n_vars, terms)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly(self.n_vars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = MultiPoly.constant(self.n_vars, other)
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            c = _coerce_coeff(other)
            return MultiPoly(self.n_vars, {e: c * v for e, v in self.terms.items()})
        self._check_compatible(other)
        terms: Dict[Exponent, Fraction] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                exp = tuple(a + b for a, b in zip(e1, e2))
                terms[exp] = terms.get(exp, Fraction(0)) + c1 * c2
        return MultiPoly(self.n_vars, terms)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power")
        result = MultiPoly.constant(self.n_vars, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = MultiPoly.constant(self.n_vars, other)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self.n_vars == other.n_vars and self.terms == other.terms

    def __hash__(self):
        return hash((self.n_vars, frozenset(self.terms.items())))

    # -- queries ------------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        return max((sum(e) for e in self.terms), default=-1)

    def evaluate(self, point: Sequence) -> Fraction:
        if len(point) != self.n_vars:
            raise ValueError("point length mismatch")
        pt = [_coerce_coeff(x) if not isinstance(x, Fraction) else x for x in point]
        total = Fraction(0)
        for exp, coeff in self.terms.items():
            val = coeff
            for x, e in zip(pt, exp):
                if e:
                    val *= x**e
            total += val
        return total

    def __repr__(self):
        if not self.terms:
            return "0"
        bits = []
        for exp in sorted(self.terms, key=lambda e: (-sum(e), e)):
            c = self.terms[exp]
            mon = "*".join(
                f"t{i}" + (f"^{e}" if e > 1 else "")
                for i, e in enumerate(exp)
                if e
            )
            if mon:
                bits.append(f"{c}*{mon}" if c != 1 else mon)
            else:
                bits.append(str(c))
        return " + ".join(bits)


def poly_eval(p: MultiPoly, point: Sequence) -> Fraction:
    """Exact evaluation of a MultiPoly at a rational point."""
    return p.evaluate(point)
