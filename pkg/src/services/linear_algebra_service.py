from fractions import Fraction
from typing import List, Sequence, Tuple

from src.models.errors import InconsistentSystemError
from src.models.exact_matrix import ExactMatrix, to_fraction
from src.services.trace import trace


class LinearSolution:
    """One particular solution plus a basis of the homogeneous solutions"""

    def __init__(self, particular: ExactMatrix, kernel: List[ExactMatrix]):
        self.particular = particular
        self.kernel = kernel

    def to_dict(self):
        return {
            'particular': self.particular.to_dict()['entries'],
            'kernel_dimension': len(self.kernel),
            'kernel': [k.to_dict()['entries'] for k in self.kernel],
        }


class LinearAlgebraService:
    def _bareiss_echelon(self, rows: List[List[Fraction]]) -> Tuple[List[List[Fraction]], List[int]]:
        """
        Fraction-free forward elimination.

        Pivoting takes the first nonzero entry in column order. The update
        row_i <- (pivot * row_i - a * row_r) / previous_pivot keeps entries
        integral for integral input; the division is exact over Fraction either way.

        Returns:
            (echelon rows, pivot column per nonzero row)
        """
        rows = [list(r) for r in rows]
        n_rows = len(rows)
        n_cols = len(rows[0]) if rows else 0
        pivots = []
        previous = Fraction(1)
        piv_r = 0
        for piv_c in range(n_cols):
            if piv_r >= n_rows:
                break
            for i_row in range(piv_r, n_rows):
                if rows[i_row][piv_c] != 0:
                    break
            else:
                continue
            if i_row != piv_r:
                rows[piv_r], rows[i_row] = rows[i_row], rows[piv_r]
            pivot = rows[piv_r][piv_c]
            for r in range(piv_r + 1, n_rows):
                a = rows[r][piv_c]
                if a == 0:
                    if pivot != previous:
                        rows[r] = [pivot * e / previous for e in rows[r]]
                    continue
                rows[r] = [(pivot * rows[r][c] - a * rows[piv_r][c]) / previous for c in range(n_cols)]
            previous = pivot
            pivots.append(piv_c)
            piv_r += 1
        return rows, pivots

    def rref(self, m: ExactMatrix) -> Tuple[List[List[Fraction]], List[int]]:
        """Reduced row echelon form and pivot columns"""
        if m.rows == 0 or m.cols == 0:
            return [list(r) for r in m.to_rows()], []
        rows, pivots = self._bareiss_echelon(m.to_rows())
        for r, c in enumerate(pivots):
            lead = rows[r][c]
            rows[r] = [e / lead for e in rows[r]]
        for r in range(len(pivots) - 1, -1, -1):
            c = pivots[r]
            for above in range(r):
                factor = rows[above][c]
                if factor != 0:
                    rows[above] = [x - factor * y for x, y in zip(rows[above], rows[r])]
        return rows, pivots

    def rank_and_kernel(self, m: ExactMatrix) -> Tuple[int, List[ExactMatrix]]:
        """
        Rank and a reduced-echelon kernel basis.

        Each kernel vector has a 1 in one free column, zeros in the other free
        columns, and the negated RREF entries in the pivot columns.
        """
        rows, pivots = self.rref(m)
        pivot_set = set(pivots)
        kernel = []
        for free in range(m.cols):
            if free in pivot_set:
                continue
            v = [Fraction(0)] * m.cols
            v[free] = Fraction(1)
            for r, c in enumerate(pivots):
                v[c] = -rows[r][free]
            kernel.append(ExactMatrix.column(v))
        return len(pivots), kernel

    def rank(self, m: ExactMatrix) -> int:
        if m.rows == 0 or m.cols == 0:
            return 0
        _, pivots = self._bareiss_echelon(m.to_rows())
        return len(pivots)

    def nullity(self, m: ExactMatrix) -> int:
        return m.cols - self.rank(m)

    def solve_linear(self, a: ExactMatrix, b: Sequence) -> LinearSolution:
        """
        Solve A x = b exactly.

        Args:
            a: coefficient matrix
            b: right-hand side, a column ExactMatrix or a sequence of scalars

        Returns:
            LinearSolution with free variables set to zero in the particular solution

        Raises:
            InconsistentSystemError: b is not in the column span of A
        """
        values = b.column_values() if isinstance(b, ExactMatrix) else [to_fraction(x) for x in b]
        if len(values) != a.rows:
            raise ValueError(f"right-hand side has {len(values)} entries, matrix has {a.rows} rows")
        augmented = ExactMatrix.from_rows([a.row(i) + [values[i]] for i in range(a.rows)], a.cols + 1)
        rows, pivots = self.rref(augmented)
        if a.cols in pivots:
            trace('LINALG', f"inconsistent system {a.rows}x{a.cols}")
            raise InconsistentSystemError("right-hand side is not in the column span")
        x = [Fraction(0)] * a.cols
        for r, c in enumerate(pivots):
            x[c] = rows[r][a.cols]
        _, kernel = self.rank_and_kernel(a)
        return LinearSolution(ExactMatrix.column(x), kernel)

    def kernel_contains(self, basis: List[ExactMatrix], vectors: List[ExactMatrix]) -> bool:
        """True when every vector lies in the span of basis"""
        if not vectors:
            return True
        size = vectors[0].rows
        base_rank = self.rank(self._columns(basis, size))
        return self.rank(self._columns(basis + vectors, size)) == base_rank

    def span_dimension(self, vectors: List[ExactMatrix], size: int) -> int:
        return self.rank(self._columns(vectors, size))

    def same_span(self, first: List[ExactMatrix], second: List[ExactMatrix], size: int) -> bool:
        r1 = self.rank(self._columns(first, size))
        r2 = self.rank(self._columns(second, size))
        both = self.rank(self._columns(first + second, size))
        return r1 == r2 == both

    def _columns(self, vectors: List[ExactMatrix], size: int) -> ExactMatrix:
        if not vectors:
            return ExactMatrix(size, 0)
        return ExactMatrix.from_rows([[v[i, 0] for v in vectors] for i in range(size)], len(vectors))


# Global instance
linear_algebra_service = LinearAlgebraService()
