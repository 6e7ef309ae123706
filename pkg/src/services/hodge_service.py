from fractions import Fraction
from functools import lru_cache
from typing import Dict, Iterator, List, Tuple, Union

from sympy import Poly, div, symbols

from src.models.errors import (
    CensusMismatchError, GSVMismatchError, OutOfRangeError, UnsupportedAtomError, VerificationError,
)
from src.models.exact_matrix import ExactMatrix
from src.models.fano_models import GradedDims
from src.models.hodge_models import (
    ATOM_PRODUCTS, ATOM_SHAPES, HodgeAtom, HodgeAtomExpr, HodgeDiamond, HodgePiece, Parity,
)
from src.models.schubert_models import WeightedGCPoly
from src.services.fano_ring_service import fano_ring_service
from src.services.linear_algebra_service import linear_algebra_service
from src.services.trace import trace

t = symbols('t')

# invariant counts of the orthogonal / symplectic group on each atom
EXPECTED_HDG = {
    HodgeAtom.H: 0,
    HodgeAtom.H_H: 1,
    HodgeAtom.SYM2: 1,
    HodgeAtom.H_SYM2: 0,
    HodgeAtom.SYM2_SYM2: 2,
}

Matching = Tuple[Tuple[int, int], ...]


def _poly(dims: GradedDims) -> Poly:
    return Poly(sum((v * t ** d for d, v in dims.dims.items()), 0), t)


def _dims(poly: Poly) -> GradedDims:
    values = {}
    for (k,), coeff in poly.as_dict().items():
        if not coeff.is_integer:
            raise VerificationError(f"non-integral Betti number {coeff} in degree {k}")
        values[k] = int(coeff)
    return GradedDims(values)


def _shifts(lo: int, hi: int) -> Poly:
    """sum_{i=lo}^{hi} t^{2i}"""
    return Poly(sum((t ** (2 * i) for i in range(lo, hi + 1)), 0), t)


def _coefficients(poly: Poly) -> List[int]:
    return [int(c) for c in reversed(poly.all_coeffs())] if not poly.is_zero else []


class HodgeService:
    """Hodge numbers of hypersurfaces and the Hodge class census of F and F x F"""

    def hypersurface_hodge(self, d: int, n: int) -> List[int]:
        """
        Primitive middle Hodge numbers h^{p,n-p}_prim, p = 0..n, of a smooth
        degree-d hypersurface in P^{n+1}.

        h^{p,n-p}_prim is the coefficient of t^{(n-p+1)d-(n+2)} in
        (1 + t + ... + t^{d-2})^{n+2}.
        """
        if d < 2 or n < 1:
            raise OutOfRangeError(f"need d >= 2 and n >= 1, got d={d}, n={n}")
        return list(_hypersurface_hodge(d, n))

    def hypersurface_diamond(self, d: int, n: int) -> HodgeDiamond:
        primitive = self.hypersurface_hodge(d, n)
        table = {(p, n - p): value for p, value in enumerate(primitive)}
        for p in range(n + 1):
            table[(p, p)] = table.get((p, p), 0) + 1
        return HodgeDiamond(n, table)

    def cubic_middle_betti(self, n: int) -> int:
        return sum(self.hypersurface_hodge(3, n))

    def cubic_poincare(self, n: int) -> GradedDims:
        dims = {2 * i: 1 for i in range(n + 1)}
        dims[n] = dims.get(n, 0) + self.cubic_middle_betti(n)
        return GradedDims(dims)

    def super_symmetric_square(self, dims: GradedDims) -> GradedDims:
        """
        Poincare polynomial of the symmetric square with graded signs:
        (P(t)^2 + sum_d (-1)^d b_d t^{2d}) / 2.
        """
        p = _poly(dims)
        signed = Poly(sum(((-1) ** d * v * t ** (2 * d) for d, v in dims.dims.items()), 0), t)
        return _dims((p ** 2 + signed).exquo_ground(2))

    def atom_dimension(self, atom: HodgeAtom, b: int, parity: Parity) -> int:
        if atom == HodgeAtom.TATE:
            return 1
        if atom == HodgeAtom.H:
            return b
        if atom == HodgeAtom.SYM2:
            return b * (b + 1) // 2 if parity == Parity.EVEN else b * (b - 1) // 2
        raise UnsupportedAtomError(f"{atom.value} is not a summand of H*(F)")

    def gs_fano_decomposition(self, n: int) -> HodgeAtomExpr:
        """
        H*(F) = Sym^2 H (+) sum_{i=0}^{n-2} H(-i) (+) sum_i Q(-i)^{a_i},
        a_i = r_i except a_{n-2} = r_{n-2} - 1; H sits in degree n-2.
        """
        if n < 3:
            raise OutOfRangeError(f"Fano variety of lines needs n >= 3, got {n}")
        pieces = [HodgePiece(HodgeAtom.SYM2, 2 * n - 4)]
        pieces += [HodgePiece(HodgeAtom.H, n - 2 + 2 * i, twist=i) for i in range(n - 1)]
        for i in range(2 * n - 3):
            a_i = fano_ring_service.r_formula(i, n) - (1 if i == n - 2 else 0)
            pieces.append(HodgePiece(HodgeAtom.TATE, 2 * i, a_i, twist=i))
        return HodgeAtomExpr(Parity.of(n), pieces)

    def gs_fano_poincare(self, n: int) -> GradedDims:
        expr = self.gs_fano_decomposition(n)
        b = self.cubic_middle_betti(n)
        dims: Dict[int, int] = {}
        for piece in expr.pieces:
            dims[piece.degree] = (dims.get(piece.degree, 0)
                                  + piece.multiplicity * self.atom_dimension(piece.atom, b, expr.parity))
        return GradedDims(dims)

    def verify_gsv_identity(self, n: int) -> Dict:
        """
        Compare both sides of the motive identity for X^{[2]} as Poincare polynomials:
            sum_{i=0}^{n} P(X) t^{2i} + P(F)(t^6 + 2t^4 + t^2)
            = P(X^{(2)}) + sum_{i=1}^{n-1} P(X) t^{2i} + P(F)(t^6 + t^4 + t^2)

        P(F) is also solved out of the identity and compared with gs_fano_poincare.

        Raises:
            GSVMismatchError: either comparison fails
        """
        trace('HODGE', f"GSV identity for n={n}")
        p_x = _poly(self.cubic_poincare(n))
        p_f = _poly(self.gs_fano_poincare(n))
        p_sym = _poly(self.super_symmetric_square(self.cubic_poincare(n)))
        lhs = p_x * _shifts(0, n) + p_f * Poly(t ** 6 + 2 * t ** 4 + t ** 2, t)
        rhs = p_sym + p_x * _shifts(1, n - 1) + p_f * Poly(t ** 6 + t ** 4 + t ** 2, t)
        difference = lhs - rhs
        if not difference.is_zero:
            raise GSVMismatchError(f"GSV identity fails for n={n}", _coefficients(difference))

        solved, remainder = div(p_sym - p_x * Poly(1 + t ** (2 * n), t), Poly(t ** 4, t))
        if not remainder.is_zero or solved != p_f:
            raise GSVMismatchError(f"P(F) solved from the identity differs for n={n}",
                                   _coefficients(solved - p_f))
        solved_dims = _dims(solved)
        return {
            'n': n,
            'lhs': _coefficients(lhs),
            'rhs': _coefficients(rhs),
            'poincare_F': solved_dims.as_list(),
            'euler_characteristic_F': solved_dims.euler_characteristic(),
            'palindromic': solved_dims.is_palindromic(4 * n - 8),
            'holds': True,
        }

    def hdg_atom(self, atom: Union[HodgeAtom, str], parity: Parity) -> int:
        try:
            atom = HodgeAtom(atom)
        except ValueError:
            raise UnsupportedAtomError(f"unsupported atom {atom!r}")
        if atom == HodgeAtom.TATE:
            return 1
        return _invariant_count(atom, Parity(parity))

    def hdg_atom_table(self, parity: Parity) -> Dict[HodgeAtom, int]:
        """
        Count invariants of O(H) (even parity) or Sp(H) (odd parity) on each atom
        by spanning the perfect matchings of the tensor slots and applying the
        atom's symmetrizers.

        Raises:
            CensusMismatchError: a count differs from the known table
        """
        parity = Parity(parity)
        table = {atom: _invariant_count(atom, parity) for atom in ATOM_SHAPES}
        for atom, expected in EXPECTED_HDG.items():
            if table[atom] != expected:
                raise CensusMismatchError(
                    f"hdg({atom.value}) = {table[atom]} for {parity.value} parity, expected {expected}")
        return table

    def hdg_count_F(self, k: int, n: int) -> int:
        """Hodge classes in H^{2k}(F) for very general X; equals r_k"""
        if k < 0 or k > 2 * n - 4:
            raise OutOfRangeError(f"degree {k} outside 0..{2 * n - 4}")
        b = self.cubic_middle_betti(n)
        if b < 4:
            raise CensusMismatchError(f"dim H = {b} is too small for independent matchings")
        expr = self.gs_fano_decomposition(n)
        count = sum(p.multiplicity * self.hdg_atom(p.atom, expr.parity) for p in expr.in_degree(2 * k))
        expected = fano_ring_service.r_formula(k, n)
        if count != expected:
            raise CensusMismatchError(f"hdg(H^{2 * k}(F)) = {count} but r_{k} = {expected} for n={n}")
        return count

    def hdg_count_FxF(self, k: int, n: int) -> int:
        """
        Hodge classes in H^{2k}(F x F), expanded through the Kunneth formula into
        atoms and compared with the linear-generator bound of R^k(F x F).

        Raises:
            CensusMismatchError: expansion and bound disagree
        """
        if k < 0 or k > 4 * n - 8:
            raise OutOfRangeError(f"degree {k} outside 0..{4 * n - 8}")
        b = self.cubic_middle_betti(n)
        if b < 4:
            raise CensusMismatchError(f"dim H = {b} is too small for independent matchings")
        expr = self.gs_fano_decomposition(n)
        count = 0
        for first in expr.pieces:
            for second in expr.in_degree(2 * k - first.degree):
                if first.atom == HodgeAtom.TATE:
                    atom = second.atom
                elif second.atom == HodgeAtom.TATE:
                    atom = first.atom
                else:
                    atom = ATOM_PRODUCTS[(first.atom, second.atom)]
                count += first.multiplicity * second.multiplicity * self.hdg_atom(atom, expr.parity)
        bound = fano_ring_service.dimRFxF_bound(k, n)
        if count != bound:
            raise CensusMismatchError(f"hdg(H^{2 * k}(FxF)) = {count} but the bound is {bound} for n={n}")
        return count

    def census(self, n: int) -> Dict:
        return {
            'n': n,
            'b': self.cubic_middle_betti(n),
            'F': [self.hdg_count_F(k, n) for k in range(2 * n - 3)],
            'FxF': [self.hdg_count_FxF(k, n) for k in range(4 * n - 7)],
        }

    def kuechle_c7_diamond(self) -> HodgeDiamond:
        """Blow-up of a cubic fourfold along a Veronese surface"""
        cubic = self.hypersurface_diamond(3, 4)
        table = dict(cubic.table)
        for p in range(3):
            table[(p + 1, p + 1)] = table.get((p + 1, p + 1), 0) + 1
        diamond = HodgeDiamond(4, table)
        expected = {(1, 1): 2, (2, 2): 22, (3, 3): 2, (3, 1): 1, (1, 3): 1}
        for (p, q), value in expected.items():
            if diamond.h(p, q) != value:
                raise CensusMismatchError(f"h^{{{p},{q}}} = {diamond.h(p, q)}, expected {value}")
        if diamond.euler_characteristic() != cubic.euler_characteristic() + 3:
            raise CensusMismatchError("blow-up along P^2 must add 3 to the Euler characteristic")
        return diamond

    def fano_h_n_minus_2_decomposition(self, n: int) -> Dict:
        """dim H^{n-2}(F) = b + floor((n+2)/4) for even n, b for odd n"""
        b = self.cubic_middle_betti(n)
        tate = (n + 2) // 4 if n % 2 == 0 else 0
        actual = self.gs_fano_poincare(n)[n - 2]
        generators = []
        if n % 2 == 0:
            generators = [str(WeightedGCPoly.monomial(n // 2 + 1 - 2 * i, i - 1)) for i in range(1, tate + 1)]
        return {
            'n': n,
            'b': b,
            'tate': tate,
            'tate_generators': generators,
            'expected': b + tate,
            'betti_n_minus_2': actual,
            'holds': actual == b + tate,
        }


@lru_cache(maxsize=None)
def _hypersurface_hodge(d: int, n: int) -> Tuple[int, ...]:
    base = Poly(sum((t ** i for i in range(d - 1)), 0), t) ** (n + 2)
    out = []
    for p in range(n + 1):
        k = (n - p + 1) * d - (n + 2)
        out.append(int(base.coeff_monomial(t ** k)) if k >= 0 else 0)
    return tuple(out)


def _matchings(slots: Tuple[int, ...]) -> Iterator[Matching]:
    if not slots:
        yield ()
        return
    first, rest = slots[0], slots[1:]
    for i, partner in enumerate(rest):
        for tail in _matchings(rest[:i] + rest[i + 1:]):
            yield tuple(sorted(((first, partner),) + tail))


def _swap(matching: Matching, s: int, u: int, epsilon: int) -> Tuple[Matching, int]:
    """Transpose slots s and u; each pair that flips picks up the form's symmetry"""
    perm = {s: u, u: s}
    sign = 1
    pairs = []
    for x, y in matching:
        x, y = perm.get(x, x), perm.get(y, y)
        if x > y:
            x, y = y, x
            sign *= epsilon
        pairs.append((x, y))
    return tuple(sorted(pairs)), sign


@lru_cache(maxsize=None)
def _invariant_count(atom: HodgeAtom, parity: Parity) -> int:
    if atom not in ATOM_SHAPES:
        raise UnsupportedAtomError(f"no invariant count for {atom.value}")
    slots, groups = ATOM_SHAPES[atom]
    basis = sorted(set(_matchings(tuple(range(slots)))))
    if not basis:
        return 0
    # form symmetry and the sign of the square both follow the weight parity
    epsilon = 1 if parity == Parity.EVEN else -1
    tau = epsilon
    index = {m: i for i, m in enumerate(basis)}
    rows = []
    for matching in basis:
        vector: Dict[Matching, Fraction] = {matching: Fraction(1)}
        for s, u in groups:
            image: Dict[Matching, Fraction] = {}
            for m, coeff in vector.items():
                image[m] = image.get(m, Fraction(0)) + coeff / 2
                swapped, sign = _swap(m, s, u, epsilon)
                image[swapped] = image.get(swapped, Fraction(0)) + tau * sign * coeff / 2
            vector = image
        row = [Fraction(0)] * len(basis)
        for m, coeff in vector.items():
            row[index[m]] += coeff
        rows.append(row)
    trace('HODGE', f"{atom.value} ({parity.value}): {len(basis)} matchings")
    return linear_algebra_service.rank(ExactMatrix.from_rows(rows, len(basis)))


# Global instance
hodge_service = HodgeService()
