"""
Value types for Schubert calculus on Gr(2, m) and for polynomials in the
tautological classes g (degree 1) and c (degree 2).
"""
from fractions import Fraction
from typing import Dict, Iterable, List, Tuple

from sympy import QQ, Poly, Rational, symbols

from src.models.exact_matrix import format_fraction, to_fraction


class TwoRowPartition:
    """Schubert class sigma_{a,b} with m-2 >= a >= b >= 0"""

    __slots__ = ('a', 'b')

    def __init__(self, a: int, b: int):
        if a < b or b < 0:
            raise ValueError(f"({a},{b}) is not a two-row partition")
        self.a = a
        self.b = b

    @property
    def codegree(self) -> int:
        return self.a + self.b

    def fits(self, m: int) -> bool:
        return self.a <= m - 2

    def complement(self, m: int) -> 'TwoRowPartition':
        return TwoRowPartition(m - 2 - self.b, m - 2 - self.a)

    def _key(self):
        return (self.a, self.b)

    def __eq__(self, other):
        return isinstance(other, TwoRowPartition) and self._key() == other._key()

    def __lt__(self, other):
        # higher codegree last, larger first row first within a codegree
        return (self.codegree, -self.a) < (other.codegree, -other.a)

    def __hash__(self):
        return hash(self._key())

    def __repr__(self):
        return f"s{self.a},{self.b}"

    def to_dict(self):
        return {'a': self.a, 'b': self.b}


class SchubertElement:
    """A Q-linear combination of Schubert classes on Gr(2, ambient_m)"""

    def __init__(self, ambient_m: int, terms: Dict[TwoRowPartition, Fraction] = None):
        if ambient_m < 2:
            raise ValueError("ambient Grassmannian needs m >= 2")
        self.ambient_m = ambient_m
        self.terms: Dict[TwoRowPartition, Fraction] = {}
        for part, coeff in (terms or {}).items():
            coeff = to_fraction(coeff)
            if coeff == 0:
                continue
            if not part.fits(ambient_m):
                raise ValueError(f"{part} does not fit in the {ambient_m - 2}x2 box")
            self.terms[part] = coeff

    @classmethod
    def unit(cls, m: int) -> 'SchubertElement':
        return cls(m, {TwoRowPartition(0, 0): 1})

    @classmethod
    def point(cls, m: int) -> 'SchubertElement':
        return cls(m, {TwoRowPartition(m - 2, m - 2): 1})

    @classmethod
    def single(cls, a: int, b: int, m: int) -> 'SchubertElement':
        return cls(m, {TwoRowPartition(a, b): 1})

    def coefficient(self, a: int, b: int) -> Fraction:
        return self.terms.get(TwoRowPartition(a, b), Fraction(0))

    def is_zero(self) -> bool:
        return not self.terms

    def _check(self, other: 'SchubertElement'):
        if self.ambient_m != other.ambient_m:
            raise ValueError(f"Gr(2,{self.ambient_m}) and Gr(2,{other.ambient_m}) elements do not mix")

    def __add__(self, other: 'SchubertElement') -> 'SchubertElement':
        self._check(other)
        terms = dict(self.terms)
        for part, coeff in other.terms.items():
            terms[part] = terms.get(part, Fraction(0)) + coeff
        return SchubertElement(self.ambient_m, terms)

    def __neg__(self) -> 'SchubertElement':
        return SchubertElement(self.ambient_m, {p: -c for p, c in self.terms.items()})

    def __sub__(self, other: 'SchubertElement') -> 'SchubertElement':
        return self + (-other)

    def scale(self, factor) -> 'SchubertElement':
        factor = to_fraction(factor)
        return SchubertElement(self.ambient_m, {p: factor * c for p, c in self.terms.items()})

    def __eq__(self, other):
        return (isinstance(other, SchubertElement)
                and self.ambient_m == other.ambient_m and self.terms == other.terms)

    def __hash__(self):
        return hash((self.ambient_m, frozenset(self.terms.items())))

    def __str__(self):
        if not self.terms:
            return "0"
        pieces = []
        for part in sorted(self.terms):
            coeff = self.terms[part]
            label = f"s[{part.a},{part.b}]"
            if coeff == 1:
                pieces.append(label)
            elif coeff == -1:
                pieces.append(f"-{label}")
            else:
                pieces.append(f"{format_fraction(coeff)}*{label}")
        return " + ".join(pieces).replace("+ -", "- ")

    __repr__ = __str__

    def to_dict(self):
        return {
            'ambient_m': self.ambient_m,
            'terms': [
                {'a': p.a, 'b': p.b, 'coefficient': format_fraction(self.terms[p])}
                for p in sorted(self.terms)
            ],
        }


Monomial = Tuple[int, int]

GENERATORS = symbols('g c')


def _rational(value) -> Rational:
    value = to_fraction(value)
    return Rational(value.numerator, value.denominator)


class WeightedGCPoly:
    """
    Polynomial in g (weight 1) and c (weight 2) over QQ, held as a sympy Poly.
    coeffs mirrors the nonzero terms as {(a, b): Fraction}.
    """

    def __init__(self, coeffs: Dict[Monomial, Fraction] = None):
        terms = {}
        for (i, j), coeff in (coeffs or {}).items():
            if i < 0 or j < 0:
                raise ValueError("exponents must be non-negative")
            terms[(i, j)] = _rational(coeff)
        if terms:
            poly = Poly.from_dict(terms, *GENERATORS, domain=QQ)
        else:
            poly = Poly(0, *GENERATORS, domain=QQ)
        self._set(poly)

    @classmethod
    def from_poly(cls, poly: Poly) -> 'WeightedGCPoly':
        out = cls.__new__(cls)
        out._set(poly)
        return out

    def _set(self, poly: Poly):
        self.poly = poly
        self.coeffs: Dict[Monomial, Fraction] = {
            mono: Fraction(int(value.p), int(value.q))
            for mono, value in poly.terms() if value != 0
        }

    @classmethod
    def monomial(cls, a: int, b: int, coeff=1) -> 'WeightedGCPoly':
        return cls({(a, b): coeff})

    @classmethod
    def g(cls) -> 'WeightedGCPoly':
        return cls.monomial(1, 0)

    @classmethod
    def c(cls) -> 'WeightedGCPoly':
        return cls.monomial(0, 1)

    @classmethod
    def one(cls) -> 'WeightedGCPoly':
        return cls.monomial(0, 0)

    @staticmethod
    def weight(mono: Monomial) -> int:
        return mono[0] + 2 * mono[1]

    @staticmethod
    def monomials_of_degree(d: int) -> List[Monomial]:
        """g^(d-2j) c^j for j = 0 .. d//2, highest g-power first"""
        if d < 0:
            return []
        return [(d - 2 * j, j) for j in range(d // 2 + 1)]

    def coefficient(self, a: int, b: int) -> Fraction:
        return self.coeffs.get((a, b), Fraction(0))

    def degrees(self) -> List[int]:
        return sorted({self.weight(m) for m in self.coeffs})

    def is_zero(self) -> bool:
        return self.poly.is_zero

    def homogeneous_part(self, d: int) -> 'WeightedGCPoly':
        return WeightedGCPoly({m: c for m, c in self.coeffs.items() if self.weight(m) == d})

    def items(self) -> Iterable[Tuple[Monomial, Fraction]]:
        return sorted(self.coeffs.items(), key=lambda kv: (self.weight(kv[0]), -kv[0][0]))

    def as_expr(self):
        return self.poly.as_expr()

    def __add__(self, other: 'WeightedGCPoly') -> 'WeightedGCPoly':
        return WeightedGCPoly.from_poly(self.poly + other.poly)

    def __neg__(self) -> 'WeightedGCPoly':
        return WeightedGCPoly.from_poly(-self.poly)

    def __sub__(self, other: 'WeightedGCPoly') -> 'WeightedGCPoly':
        return WeightedGCPoly.from_poly(self.poly - other.poly)

    def __mul__(self, other) -> 'WeightedGCPoly':
        if not isinstance(other, WeightedGCPoly):
            return WeightedGCPoly.from_poly(self.poly.mul_ground(_rational(other)))
        return WeightedGCPoly.from_poly(self.poly * other.poly)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> 'WeightedGCPoly':
        if k < 0:
            raise ValueError("negative power")
        return WeightedGCPoly.from_poly(self.poly ** k)

    def __eq__(self, other):
        return isinstance(other, WeightedGCPoly) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(frozenset(self.coeffs.items()))

    def __str__(self):
        if not self.coeffs:
            return "0"
        pieces = []
        for (a, b), coeff in sorted(self.coeffs.items(), key=lambda kv: (-self.weight(kv[0]), -kv[0][0])):
            factors = []
            if a:
                factors.append("g" if a == 1 else f"g^{a}")
            if b:
                factors.append("c" if b == 1 else f"c^{b}")
            body = "*".join(factors)
            if not body:
                pieces.append(format_fraction(coeff))
            elif coeff == 1:
                pieces.append(body)
            elif coeff == -1:
                pieces.append(f"-{body}")
            else:
                pieces.append(f"{format_fraction(coeff)}*{body}")
        return " + ".join(pieces).replace("+ -", "- ")

    __repr__ = __str__

    def to_dict(self):
        return {
            'polynomial': str(self),
            'coefficients': [
                {'g': a, 'c': b, 'coefficient': format_fraction(coeff)}
                for (a, b), coeff in self.items()
            ],
        }
