"""
Value types for the tautological ring of the Fano variety of lines F on a
cubic n-fold, embedded in G = Gr(2, n+2).
"""
from fractions import Fraction
from typing import Dict, List

from src.models.errors import OutOfRangeError
from src.models.exact_matrix import format_fraction
from src.models.schubert_models import SchubertElement, WeightedGCPoly


class FanoContext:
    """F inside Gr(2, n+2) with [F] = 18 g^2 c + 9 c^2"""

    def __init__(self, n: int, fano_class: SchubertElement):
        if n < 3:
            raise OutOfRangeError(f"Fano variety of lines needs n >= 3, got {n}")
        self.n = n
        self.m = n + 2
        self.fano_class = fano_class

    @property
    def dim(self) -> int:
        return 2 * self.n - 4

    def to_dict(self):
        return {
            'n': self.n,
            'm': self.m,
            'dim_F': self.dim,
            'fano_class': str(self.fano_class),
        }


class GradedDims:
    """Finitely supported non-negative integer vector indexed by degree"""

    def __init__(self, dims: Dict[int, int] = None):
        self.dims: Dict[int, int] = {}
        for degree, value in (dims or {}).items():
            if value < 0:
                raise ValueError(f"negative dimension {value} in degree {degree}")
            if value:
                self.dims[degree] = value

    @classmethod
    def from_list(cls, values: List[int]) -> 'GradedDims':
        return cls({i: v for i, v in enumerate(values)})

    def __getitem__(self, degree: int) -> int:
        return self.dims.get(degree, 0)

    @property
    def top(self) -> int:
        return max(self.dims) if self.dims else 0

    def as_list(self, length: int = None) -> List[int]:
        length = self.top + 1 if length is None else length
        return [self[i] for i in range(length)]

    def total(self) -> int:
        return sum(self.dims.values())

    def euler_characteristic(self) -> int:
        return sum((-1) ** d * v for d, v in self.dims.items())

    def is_palindromic(self, top: int = None) -> bool:
        top = self.top if top is None else top
        return all(self[i] == self[top - i] for i in range(top + 1))

    def __eq__(self, other):
        return isinstance(other, GradedDims) and self.dims == other.dims

    def __hash__(self):
        return hash(frozenset(self.dims.items()))

    def __repr__(self):
        return f"GradedDims({self.as_list()})"

    def to_dict(self):
        return {'dims': self.as_list()}


class SocleRelation:
    """
    The relation P(g, c) * [F] = 0 in weighted degree n-1, normalized so the
    coefficient of g^{n-1} is 1, with the coefficient tables of the
    non-divisibility argument.
    """

    def __init__(self, n: int, P: WeightedGCPoly,
                 recurrence_p: List[Fraction] = None,
                 recurrence_a: List[Fraction] = None):
        self.n = n
        self.P = P
        self.recurrence_p = recurrence_p or []
        self.recurrence_a = recurrence_a or []

    @property
    def leading_coefficient(self) -> Fraction:
        return self.P.coefficient(self.n - 1, 0)

    def to_dict(self):
        return {
            'n': self.n,
            'P': self.P.to_dict(),
            'leading_coefficient': format_fraction(self.leading_coefficient),
            'recurrence_p': [format_fraction(p) for p in self.recurrence_p],
            'recurrence_a': [format_fraction(a) for a in self.recurrence_a],
        }
