from fractions import Fraction
from functools import lru_cache
from math import comb
from typing import Dict, List

from src.config import Config
from src.models.errors import AmbiguousRelationError, NoRelationError, OutOfRangeError, VerificationError
from src.models.exact_matrix import ExactMatrix, format_fraction
from src.models.fano_models import FanoContext, GradedDims, SocleRelation
from src.models.schubert_models import WeightedGCPoly
from src.services.linear_algebra_service import linear_algebra_service
from src.services.schubert_service import schubert_service
from src.services.trace import trace

FANO_CLASS = WeightedGCPoly({(2, 1): 18, (0, 2): 9})


class FanoRingService:
    """Tautological ring R*(F) = <g, c> realized by apolarity against deg_F"""

    def context(self, n: int) -> FanoContext:
        if n < 3:
            raise OutOfRangeError(f"Fano varieties of lines are handled for n >= 3, got {n}")
        return _context(n)

    def degree_F(self, a: int, b: int, ctx: FanoContext) -> Fraction:
        """deg_G(g^a c^b [F]); zero unless a + 2b = 2n - 4"""
        if a < 0 or b < 0 or a + 2 * b != ctx.dim:
            return Fraction(0)
        return _degree_F(a, b, ctx.n)

    def degree_of(self, poly: WeightedGCPoly, ctx: FanoContext) -> Fraction:
        return sum((coeff * self.degree_F(a, b, ctx) for (a, b), coeff in poly.coeffs.items()), Fraction(0))

    def pairing_matrix(self, ctx: FanoContext, i: int) -> ExactMatrix:
        """Rows: monomials of degree i. Columns: monomials of degree 2n-4-i."""
        rows = WeightedGCPoly.monomials_of_degree(i)
        cols = WeightedGCPoly.monomials_of_degree(ctx.dim - i)
        return ExactMatrix.from_rows(
            [[self.degree_F(r[0] + c[0], r[1] + c[1], ctx) for c in cols] for r in rows],
            len(cols),
        )

    def taut_hilbert_function(self, ctx: FanoContext) -> GradedDims:
        """Ranks of the degree pairings: the Hilbert function of the apolar algebra"""
        trace('FANO', f"Hilbert function for n={ctx.n}")
        return GradedDims.from_list([
            linear_algebra_service.rank(self.pairing_matrix(ctx, i))
            for i in range(ctx.dim + 1)
        ])

    def annihilator_relation(self, ctx: FanoContext, i: int) -> List[WeightedGCPoly]:
        """Basis of the degree-i part of the kernel of the pairing"""
        monomials = WeightedGCPoly.monomials_of_degree(i)
        _, kernel = linear_algebra_service.rank_and_kernel(self.pairing_matrix(ctx, i).transpose())
        relations = []
        for vec in kernel:
            values = vec.column_values()
            lead = next(v for v in values if v != 0)
            relations.append(WeightedGCPoly({mono: v / lead for mono, v in zip(monomials, values)}))
        return relations

    def r_formula(self, i: int, n: int) -> int:
        """
        Expected dim R^i(F):
        floor((i+2)/2) for i <= n-2, floor((2n-2-i)/2) otherwise.
        """
        if i < 0 or i > 2 * n - 4:
            raise OutOfRangeError(f"degree {i} outside 0..{2 * n - 4}")
        if i <= n - 2:
            return (i + 2) // 2
        return (2 * n - 2 - i) // 2

    def r_vector(self, n: int) -> List[int]:
        return [self.r_formula(i, n) for i in range(2 * n - 3)]

    def solve_socle_relation(self, n: int) -> SocleRelation:
        """
        Find P of weighted degree n-1 with P(g, c) * [F] = 0 in CH^{n+3}(Gr(2, n+2)).

        Raises:
            OutOfRangeError: n < 5 or n > SOCLE_N_MAX
            NoRelationError: no nonzero solution
            AmbiguousRelationError: solution space of dimension >= 2
        """
        if n < 5:
            raise OutOfRangeError(f"the degree n-1 relation is solved for n >= 5, got {n}")
        if n > Config.SOCLE_N_MAX:
            raise OutOfRangeError(f"n={n} exceeds MCK_SOCLE_N_MAX={Config.SOCLE_N_MAX}")
        ctx = self.context(n)
        trace('FANO', f"solving socle relation for n={n}")
        monomials = WeightedGCPoly.monomials_of_degree(n - 1)
        partitions = schubert_service.basis(ctx.m, n + 3)
        images = [
            schubert_service.act(WeightedGCPoly.monomial(*mono), ctx.fano_class)
            for mono in monomials
        ]
        system = ExactMatrix.from_rows(
            [[image.coefficient(p.a, p.b) for image in images] for p in partitions],
            len(monomials),
        )
        _, kernel = linear_algebra_service.rank_and_kernel(system)
        if not kernel:
            raise NoRelationError(f"no relation in degree {n - 1} for n={n}")
        if len(kernel) > 1:
            raise AmbiguousRelationError(
                f"relation space in degree {n - 1} has dimension {len(kernel)} for n={n}", len(kernel))
        values = kernel[0].column_values()
        leading = values[0]
        if leading == 0:
            raise VerificationError(f"relation for n={n} is divisible by c")
        P = WeightedGCPoly({mono: v / leading for mono, v in zip(monomials, values)})
        if not schubert_service.act(P, ctx.fano_class).is_zero():
            raise VerificationError(f"P * [F] does not vanish for n={n}")
        table = self.recurrence_tables(n)
        return SocleRelation(n, P, table['p'], table['a'])

    def recurrence_a(self, j: int, n: int) -> int:
        """Closed form a_j = (-1)^j C(n+1-j, j-1)"""
        return (-1) ** j * comb(n + 1 - j, j - 1)

    def recurrence_tables(self, n: int, a_values: List[Fraction] = None) -> Dict[str, List[Fraction]]:
        """
        Run 2 p_1 = a_2, 2 p_j + p_{j-1} = a_{j+1} for j = 2..m, m = floor((n-1)/2).

        a_values holds a_2 .. a_{m+2}; the closed form is used when omitted.
        """
        m = (n - 1) // 2
        if a_values is None:
            a_values = [Fraction(self.recurrence_a(j, n)) for j in range(2, m + 3)]
        a = {j: a_values[j - 2] for j in range(2, m + 3)}
        p = {1: a[2] / 2}
        for j in range(2, m + 1):
            p[j] = (a[j + 1] - p[j - 1]) / 2
        return {'a': [a[j] for j in range(2, m + 3)], 'p': [p[j] for j in range(1, m + 1)]}

    def expanded_coefficients(self, n: int) -> Dict[int, Fraction]:
        """Coefficients of x^{n+3-2j} y^j in (x^2 - y) R_{n+1} - x R_{n+2}"""
        r1, r2 = schubert_service.presentation_relations(n)
        x, y = WeightedGCPoly.g(), WeightedGCPoly.c()
        rhs = (x * x - y) * r1 - x * r2
        return {j: rhs.coefficient(n + 3 - 2 * j, j) for j in range((n + 3) // 2 + 1)}

    def recurrence_check(self, n: int) -> Dict:
        """Reproduce the coefficient system showing P is not divisible by c"""
        if n < 5:
            raise OutOfRangeError(f"recurrence check needs n >= 5, got {n}")
        m = (n - 1) // 2
        closed = self.recurrence_tables(n)
        p, a = closed['p'], closed['a']
        p1_expected = Fraction(n - 1, 2)
        p2_expected = -Fraction(n * n - 4 * n + 5, 4)
        integral_a = all(v.denominator == 1 for v in a)
        non_integral = all(v.denominator != 1 for v in p[1:])
        contradiction = p[m - 1] != a[m]

        expanded = self.expanded_coefficients(n)
        expanded_a = [expanded[j] for j in range(2, m + 3)]
        alt = self.recurrence_tables(n, expanded_a)
        low_terms_vanish = expanded[0] == 0 and expanded[1] == 0
        expanded_formula = all(
            expanded[j] == (-1) ** j * comb(n + 1 - j, j - 2) for j in range(2, m + 3))
        alt_non_integral = all(v.denominator != 1 for v in alt['p'][1:])
        alt_contradiction = alt['p'][m - 1] != alt['a'][m]

        holds = (integral_a and p[0] == p1_expected and p[1] == p2_expected
                 and non_integral and contradiction)
        return {
            'n': n,
            'm': m,
            'a': [format_fraction(v) for v in a],
            'p': [format_fraction(v) for v in p],
            'a_integral': integral_a,
            'p1_matches': p[0] == p1_expected,
            'p2_matches': p[1] == p2_expected,
            'p_non_integral_from_2': non_integral,
            'last_line_contradiction': contradiction,
            'expanded': {
                'a': [format_fraction(v) for v in expanded_a],
                'p': [format_fraction(v) for v in alt['p']],
                'low_terms_vanish': low_terms_vanish,
                'matches_binomial_j_minus_2': expanded_formula,
                'matches_closed_form': expanded_a == a,
                'p_non_integral_from_2': alt_non_integral,
                'last_line_contradiction': alt_contradiction,
            },
            'holds': holds and low_terms_vanish and alt_non_integral and alt_contradiction,
        }

    def convolution(self, k: int, n: int) -> int:
        top = 2 * n - 4
        return sum(self.r_formula(i, n) * self.r_formula(k - i, n)
                   for i in range(max(0, k - top), min(k, top) + 1))

    def dimRFxF_bound(self, k: int, n: int) -> int:
        """
        Upper bound for dim R^k(F x F) from the linear generators
        R*(F) (x) R*(F) + I * (span of g^i (x) g^j, i, j <= n-2) + Q I^2.
        """
        if k < 0 or k > 4 * n - 8:
            raise OutOfRangeError(f"degree {k} outside 0..{4 * n - 8}")
        conv = self.convolution(k, n)
        if k < n - 2:
            return conv
        if k < 2 * n - 4:
            return conv + (k - (n - 2) + 1)
        if k == 2 * n - 4:
            return conv + (n - 1) + 1
        if k <= 3 * n - 6:
            return conv + (3 * n - 6 - k + 1)
        # reflected range 3n-6 < k <= 4n-8
        return conv

    def degree_table(self, ctx: FanoContext) -> List[Dict]:
        return [
            {'monomial': str(WeightedGCPoly.monomial(a, b)), 'degree': format_fraction(self.degree_F(a, b, ctx))}
            for a, b in WeightedGCPoly.monomials_of_degree(ctx.dim)
        ]


@lru_cache(maxsize=None)
def _context(n: int) -> FanoContext:
    return FanoContext(n, schubert_service.evaluate(FANO_CLASS, n + 2))


@lru_cache(maxsize=None)
def _degree_F(a: int, b: int, n: int) -> Fraction:
    ctx = _context(n)
    product = schubert_service.act(WeightedGCPoly.monomial(a, b), ctx.fano_class)
    return schubert_service.degree_G(product)


# Global instance
fano_ring_service = FanoRingService()
