from fractions import Fraction
from functools import lru_cache
from math import comb
from typing import Dict, List, Tuple

from src.models.errors import OutOfRangeError
from src.models.exact_matrix import ExactMatrix
from src.models.schubert_models import SchubertElement, TwoRowPartition, WeightedGCPoly
from src.services.linear_algebra_service import linear_algebra_service
from src.services.trace import trace

SPECIAL_CLASSES = ('g', 'c')


class SchubertService:
    """Chow ring of Gr(2, m) in the Schubert basis"""

    def basis(self, m: int, codegree: int) -> List[TwoRowPartition]:
        """Partitions (a, b) in the (m-2)x2 box with a + b = codegree"""
        top = m - 2
        return [TwoRowPartition(a, codegree - a)
                for a in range(min(top, codegree), -1, -1)
                if codegree - a <= a]

    def pieri_multiply(self, e: SchubertElement, special: str) -> SchubertElement:
        """
        Multiply by g = sigma_{1,0} or c = sigma_{1,1}.

        g adds one box in all valid ways; c sends sigma_{a,b} to
        sigma_{a+1,b+1} and drops the term when a+1 > m-2.
        """
        if special not in SPECIAL_CLASSES:
            raise ValueError(f"special class must be one of {SPECIAL_CLASSES}, got {special!r}")
        top = e.ambient_m - 2
        out: Dict[TwoRowPartition, Fraction] = {}
        for part, coeff in e.terms.items():
            if special == 'g':
                targets = []
                if part.a + 1 <= top:
                    targets.append(TwoRowPartition(part.a + 1, part.b))
                if part.b + 1 <= part.a:
                    targets.append(TwoRowPartition(part.a, part.b + 1))
            else:
                targets = [TwoRowPartition(part.a + 1, part.b + 1)] if part.a + 1 <= top else []
            for target in targets:
                out[target] = out.get(target, Fraction(0)) + coeff
        return SchubertElement(e.ambient_m, out)

    def gc_monomial_to_schubert(self, a: int, b: int, m: int) -> SchubertElement:
        """Class of g^a c^b in CH^{a+2b}(Gr(2, m))"""
        if a < 0 or b < 0:
            raise ValueError("exponents must be non-negative")
        return SchubertElement(m, dict(_monomial_terms(a, b, m)))

    def degree_G(self, e: SchubertElement) -> Fraction:
        """Coefficient of the point class sigma_{m-2,m-2}"""
        top = e.ambient_m - 2
        return e.coefficient(top, top)

    def evaluate(self, poly: WeightedGCPoly, m: int) -> SchubertElement:
        result = SchubertElement(m)
        for (a, b), coeff in poly.coeffs.items():
            result = result + self.gc_monomial_to_schubert(a, b, m).scale(coeff)
        return result

    def act(self, poly: WeightedGCPoly, e: SchubertElement) -> SchubertElement:
        """poly(g, c) * e through iterated Pieri steps"""
        result = SchubertElement(e.ambient_m)
        for (a, b), coeff in poly.coeffs.items():
            term = e
            for _ in range(b):
                term = self.pieri_multiply(term, 'c')
            for _ in range(a):
                term = self.pieri_multiply(term, 'g')
            result = result + term.scale(coeff)
        return result

    def special_class_as_gc(self, k: int) -> WeightedGCPoly:
        """sigma_{k,0} as a polynomial: s_0 = 1, s_1 = g, s_k = g s_{k-1} - c s_{k-2}"""
        return _special_poly(k)

    def schubert_class_as_gc(self, a: int, b: int, m: int = None) -> WeightedGCPoly:
        """Giambelli for two rows: sigma_{a,b} = c^b * sigma_{a-b,0}"""
        part = TwoRowPartition(a, b)
        if m is not None and not part.fits(m):
            raise OutOfRangeError(f"{part} does not fit in Gr(2,{m})")
        return WeightedGCPoly.c() ** b * self.special_class_as_gc(a - b)

    def multiply(self, e1: SchubertElement, e2: SchubertElement) -> SchubertElement:
        if e1.ambient_m != e2.ambient_m:
            raise ValueError("factors live on different Grassmannians")
        result = SchubertElement(e1.ambient_m)
        for part, coeff in e1.terms.items():
            poly = self.schubert_class_as_gc(part.a, part.b, e1.ambient_m)
            result = result + self.act(poly, e2).scale(coeff)
        return result

    def presentation_relations(self, n: int) -> Tuple[WeightedGCPoly, WeightedGCPoly]:
        """
        R_{n+1} and R_{n+2} generating the ideal of relations of CH*(Gr(2, n+2)).

        R_{n+1} = sum_k (-1)^k C(n+1-k, k) g^{n+1-2k} c^k and likewise for n+2.
        """
        if n < 1:
            raise OutOfRangeError(f"presentation needs n >= 1, got {n}")
        return _relation(n + 1), _relation(n + 2)

    def verify_presentation(self, n: int) -> Dict:
        """
        Check that R_{n+1}, R_{n+2} vanish and cut out exactly CH*(Gr(2, n+2)).

        Per codegree d, the quotient of the monomials by the ideal generated by
        the two relations must have the dimension of the Schubert basis.
        """
        m = n + 2
        trace('SCHUBERT', f"verifying presentation for Gr(2,{m})")
        r1, r2 = self.presentation_relations(n)
        vanish_1 = self.evaluate(r1, m).is_zero()
        vanish_2 = self.evaluate(r2, m).is_zero()
        per_degree = []
        dims_ok = True
        for d in range(0, 2 * n + 1):
            monomials = WeightedGCPoly.monomials_of_degree(d)
            index = {mono: i for i, mono in enumerate(monomials)}
            generators = []
            for rel in (r1, r2):
                shift = d - rel.degrees()[0]
                for mono in WeightedGCPoly.monomials_of_degree(shift):
                    product = rel * WeightedGCPoly.monomial(*mono)
                    vec = [Fraction(0)] * len(monomials)
                    for key, coeff in product.coeffs.items():
                        vec[index[key]] += coeff
                    generators.append(vec)
            ideal_rank = linear_algebra_service.rank(
                ExactMatrix.from_rows(generators, len(monomials))) if generators else 0
            quotient = len(monomials) - ideal_rank
            schubert_count = len(self.basis(m, d))
            per_degree.append({
                'codegree': d,
                'monomials': len(monomials),
                'ideal_rank': ideal_rank,
                'quotient_dimension': quotient,
                'schubert_count': schubert_count,
            })
            dims_ok = dims_ok and quotient == schubert_count
        return {
            'n': n,
            'ambient': f"Gr(2,{m})",
            'relations': [str(r1), str(r2)],
            'relations_vanish': vanish_1 and vanish_2,
            'dimensions_match': dims_ok,
            'codegree_dimensions': [row['quotient_dimension'] for row in per_degree],
            'per_degree': per_degree,
            'holds': vanish_1 and vanish_2 and dims_ok,
        }

    def catalan(self, k: int) -> int:
        return comb(2 * k, k) // (k + 1)


@lru_cache(maxsize=None)
def _monomial_terms(a: int, b: int, m: int) -> Tuple[Tuple[TwoRowPartition, Fraction], ...]:
    if a == 0 and b == 0:
        return ((TwoRowPartition(0, 0), Fraction(1)),)
    if b > 0:
        previous = SchubertElement(m, dict(_monomial_terms(a, b - 1, m)))
        step = schubert_service.pieri_multiply(previous, 'c')
    else:
        previous = SchubertElement(m, dict(_monomial_terms(a - 1, b, m)))
        step = schubert_service.pieri_multiply(previous, 'g')
    return tuple(step.terms.items())


@lru_cache(maxsize=None)
def _special_poly(k: int) -> WeightedGCPoly:
    if k < 0:
        raise ValueError("negative special class")
    if k == 0:
        return WeightedGCPoly.one()
    if k == 1:
        return WeightedGCPoly.g()
    return WeightedGCPoly.g() * _special_poly(k - 1) - WeightedGCPoly.c() * _special_poly(k - 2)


def _relation(k: int) -> WeightedGCPoly:
    return WeightedGCPoly({
        (k - 2 * j, j): (-1) ** j * comb(k - j, j)
        for j in range(k // 2 + 1)
    })


# Global instance
schubert_service = SchubertService()
