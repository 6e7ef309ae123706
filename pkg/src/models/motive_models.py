"""
Cohomology model of a cubic n-fold X and correspondences on X^k in Kunneth form.

Basis of H*(X): h^0 .. h^n (indices 0..n, degree 2i) followed by the primitive
classes e_1 .. e_b (indices n+1 .. n+b, degree n).
"""
from fractions import Fraction
from typing import Dict, List, Sequence, Tuple

from src.models.errors import ModelMismatchError, OutOfRangeError
from src.models.exact_matrix import ExactMatrix, format_fraction, to_fraction

Key = Tuple[int, ...]


def koszul_sign(degrees: Sequence[int]) -> int:
    """(-1)^(sum_{p<q} d_p d_q): the sign of fully reversing a tensor of the given degrees"""
    odd = sum(1 for d in degrees if d % 2)
    return -1 if (odd * (odd - 1) // 2) % 2 else 1


class CohModel:
    """
    H*(X) with int h^n = 3 and a standard primitive form: the identity for even
    n, the symplectic matrix [[0, I], [-I, 0]] for odd n.
    """

    def __init__(self, n: int, b: int):
        if n < 1:
            raise OutOfRangeError(f"model needs n >= 1, got {n}")
        if n % 2 and b % 2:
            raise ValueError(f"alternating form needs even rank, got b={b}")
        self.n = n
        self.b = b
        self.size = n + 1 + b
        self._partner: Dict[int, Tuple[int, Fraction]] = {}
        for a in range(n + 1):
            self._partner[a] = (n - a, Fraction(3))
        half = b // 2
        for alpha in range(b):
            if n % 2 == 0:
                self._partner[n + 1 + alpha] = (n + 1 + alpha, Fraction(1))
            elif alpha < half:
                self._partner[n + 1 + alpha] = (n + 1 + alpha + half, Fraction(1))
            else:
                self._partner[n + 1 + alpha] = (n + 1 + alpha - half, Fraction(-1))

    @property
    def parity(self) -> str:
        return 'even' if self.n % 2 == 0 else 'odd'

    def is_primitive(self, i: int) -> bool:
        return i > self.n

    def degree(self, i: int) -> int:
        return self.n if self.is_primitive(i) else 2 * i

    def label(self, i: int) -> str:
        if self.is_primitive(i):
            return f"e{i - self.n}"
        return "1" if i == 0 else ("h" if i == 1 else f"h^{i}")

    def prim_form(self) -> ExactMatrix:
        rows = [[0] * self.b for _ in range(self.b)]
        for alpha in range(self.b):
            k, value = self._partner[self.n + 1 + alpha]
            rows[alpha][k - self.n - 1] = value
        return ExactMatrix.from_rows(rows, self.b)

    def integral(self, i: int) -> Fraction:
        return Fraction(3) if i == self.n else Fraction(0)

    def partner(self, i: int) -> Tuple[int, Fraction]:
        """The only k with g_ik = int e_i e_k nonzero, and that value"""
        return self._partner[i]

    def pairing(self, i: int, k: int) -> Fraction:
        partner, value = self._partner[i]
        return value if partner == k else Fraction(0)

    def pairing_matrix(self) -> ExactMatrix:
        return ExactMatrix.from_rows(
            [[self.pairing(i, k) for k in range(self.size)] for i in range(self.size)], self.size)

    def inverse_pairing(self, k: int, i: int) -> Fraction:
        """(g^{-1})_{ki}"""
        partner, value = self._partner[i]
        return 1 / value if partner == k else Fraction(0)

    def dual(self, i: int) -> Tuple[int, Fraction]:
        """e_i^v = coeff * e_k with int e_i e_i^v = 1"""
        k, value = self._partner[i]
        return k, 1 / value

    def cup(self, i: int, j: int) -> Dict[int, Fraction]:
        if not self.is_primitive(i) and not self.is_primitive(j):
            return {i + j: Fraction(1)} if i + j <= self.n else {}
        if self.is_primitive(i) and self.is_primitive(j):
            value = self.pairing(i, j)
            return {self.n: value / 3} if value else {}
        if i == 0 or j == 0:
            return {max(i, j): Fraction(1)}
        return {}

    def __eq__(self, other):
        return isinstance(other, CohModel) and (self.n, self.b) == (other.n, other.b)

    def __hash__(self):
        return hash((self.n, self.b))

    def to_dict(self):
        return {
            'n': self.n,
            'b': self.b,
            'size': self.size,
            'parity': self.parity,
            'prim_form': 'identity' if self.n % 2 == 0 else 'symplectic',
        }


class CorrClass:
    """Q-linear combination of basis tensors e_{i1} x ... x e_{ik} in H*(X^k)"""

    def __init__(self, model: CohModel, arity: int, terms: Dict[Key, Fraction] = None, label: str = ''):
        if arity < 1:
            raise ValueError("arity must be positive")
        self.model = model
        self.arity = arity
        self.label = label
        self.terms: Dict[Key, Fraction] = {}
        for key, coeff in (terms or {}).items():
            if len(key) != arity:
                raise ValueError(f"tensor {key} does not have arity {arity}")
            coeff = to_fraction(coeff)
            if coeff:
                self.terms[key] = coeff

    def _check(self, other: 'CorrClass'):
        if self.model != other.model or self.arity != other.arity:
            raise ModelMismatchError(
                f"cannot combine arity {self.arity} over n={self.model.n} "
                f"with arity {other.arity} over n={other.model.n}")

    def is_zero(self) -> bool:
        return not self.terms

    def degree_of(self, key: Key) -> int:
        return sum(self.model.degree(i) for i in key)

    def degrees(self) -> List[int]:
        return sorted({self.degree_of(key) for key in self.terms})

    @property
    def codimension(self):
        degrees = self.degrees()
        if len(degrees) != 1 or degrees[0] % 2:
            return None
        return degrees[0] // 2

    def relabel(self, label: str) -> 'CorrClass':
        return CorrClass(self.model, self.arity, self.terms, label)

    def __add__(self, other: 'CorrClass') -> 'CorrClass':
        self._check(other)
        terms = dict(self.terms)
        for key, coeff in other.terms.items():
            terms[key] = terms.get(key, Fraction(0)) + coeff
        return CorrClass(self.model, self.arity, terms, _join(self.label, '+', other.label))

    def __neg__(self) -> 'CorrClass':
        return CorrClass(self.model, self.arity, {k: -c for k, c in self.terms.items()},
                         f"-({self.label})" if self.label else '')

    def __sub__(self, other: 'CorrClass') -> 'CorrClass':
        self._check(other)
        return (self + (-other)).relabel(_join(self.label, '-', other.label))

    def __mul__(self, factor) -> 'CorrClass':
        factor = to_fraction(factor)
        label = f"{format_fraction(factor)}*{self.label}" if self.label else ''
        return CorrClass(self.model, self.arity, {k: factor * c for k, c in self.terms.items()}, label)

    __rmul__ = __mul__

    def __eq__(self, other):
        return (isinstance(other, CorrClass) and self.model == other.model
                and self.arity == other.arity and self.terms == other.terms)

    def __hash__(self):
        return hash((self.model, self.arity, frozenset(self.terms.items())))

    def __repr__(self):
        return f"CorrClass({self.label or 'unnamed'}, arity={self.arity}, {len(self.terms)} terms)"

    def tensor_string(self, limit: int = None) -> str:
        keys = sorted(self.terms)
        if limit is not None:
            keys = keys[:limit]
        pieces = [f"{format_fraction(self.terms[k])}*" + "x".join(self.model.label(i) for i in k) for k in keys]
        return " + ".join(pieces).replace("+ -", "- ") or "0"

    def to_dict(self):
        return {
            'arity': self.arity,
            'label': self.label,
            'codimension': self.codimension,
            'terms': len(self.terms),
            'tensor': self.tensor_string(limit=12),
        }


class ProjectorSet:
    """Chow-Kunneth projectors pi^0 .. pi^{2n}"""

    def __init__(self, n: int, projectors: List[CorrClass]):
        if len(projectors) != 2 * n + 1:
            raise ValueError(f"expected {2 * n + 1} projectors, got {len(projectors)}")
        if any(p.arity != 2 for p in projectors):
            raise ModelMismatchError("projectors are self-correspondences")
        self.n = n
        self.projectors = projectors

    @property
    def model(self) -> CohModel:
        return self.projectors[0].model

    def __getitem__(self, i: int) -> CorrClass:
        return self.projectors[i]

    def __iter__(self):
        return iter(self.projectors)

    def to_dict(self):
        return {
            'n': self.n,
            'projectors': [
                {'index': i, 'label': p.label or '0', 'terms': len(p.terms)}
                for i, p in enumerate(self.projectors)
            ],
        }


def _join(left: str, op: str, right: str) -> str:
    if not left or not right:
        return ''
    return f"{left} {op} {right}"
