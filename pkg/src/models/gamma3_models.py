"""
Formal cycles on Y^k for a curve or surface Y, built from partial diagonals
decorated with monomials in a few named classes.

A term is a set partition of the factors {0..k-1}; each block B stands for the
diagonal Y -> Y^B and carries a monomial pushed forward along it. Singleton
blocks are pullbacks p_i^*, a block with empty monomial is the plain diagonal.
"""
from typing import Dict, Iterable, List, Tuple

from sympy import Integer, Symbol, expand, sympify

Block = Tuple[int, ...]
Monomial = Tuple[str, ...]
TermKey = Tuple[Tuple[Block, Monomial], ...]

KINDS = ('curve', 'surface')


def make_key(pairs: Iterable[Tuple[Iterable[int], Iterable[str]]]) -> TermKey:
    return tuple(sorted((tuple(sorted(block)), tuple(sorted(mono))) for block, mono in pairs))


class Gamma3Context:
    """
    Y a curve of genus g or a surface with topological Euler characteristic chi.

    Classes: z (a point, degree 1), c_top (top Chern class of T_Y), K (canonical
    divisor, curves) and two formal divisors D, Dp (surfaces).
    """

    def __init__(self, kind: str):
        if kind not in KINDS:
            raise ValueError(f"kind must be one of {KINDS}, got {kind!r}")
        self.kind = kind
        self.dim = 1 if kind == 'curve' else 2
        self.g = Symbol('g')
        self.chi = 2 - 2 * self.g if kind == 'curve' else Symbol('chi')
        self.divisors: Tuple[str, ...] = ('K',) if kind == 'curve' else ('D', 'Dp')
        self.codims = {'z': self.dim, 'c_top': self.dim}
        self.codims.update({d: 1 for d in self.divisors})

    def codim(self, mono: Monomial) -> int:
        return sum(self.codims[s] for s in mono)

    def integral(self, mono: Monomial):
        """Degree of a monomial of codimension dim"""
        if self.codim(mono) != self.dim:
            return Integer(0)
        if mono == ('z',):
            return Integer(1)
        if mono == ('c_top',):
            return self.chi
        if mono == ('K',):
            return 2 * self.g - 2
        return Symbol(f"deg({'.'.join(mono)})")

    def to_dict(self):
        return {
            'kind': self.kind,
            'dim': self.dim,
            'chi': str(self.chi),
            'divisors': list(self.divisors),
        }


class Cycle:
    """Formal combination of terms on Y^arity with sympy coefficients"""

    def __init__(self, arity: int, terms: Dict[TermKey, object] = None):
        self.arity = arity
        self.terms: Dict[TermKey, object] = {}
        for key, coeff in (terms or {}).items():
            covered = sorted(i for block, _ in key for i in block)
            if covered != list(range(arity)):
                raise ValueError(f"{key} is not a partition of {arity} factors")
            coeff = expand(sympify(coeff))
            if coeff != 0:
                self.terms[key] = coeff

    @classmethod
    def single(cls, arity: int, pairs, coeff=1) -> 'Cycle':
        return cls(arity, {make_key(pairs): coeff})

    def is_zero(self) -> bool:
        return not self.terms

    def _check(self, other: 'Cycle'):
        if self.arity != other.arity:
            raise ValueError(f"cycles on Y^{self.arity} and Y^{other.arity} do not mix")

    def __add__(self, other: 'Cycle') -> 'Cycle':
        self._check(other)
        terms = dict(self.terms)
        for key, coeff in other.terms.items():
            terms[key] = terms.get(key, 0) + coeff
        return Cycle(self.arity, terms)

    def __neg__(self) -> 'Cycle':
        return Cycle(self.arity, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other: 'Cycle') -> 'Cycle':
        return self + (-other)

    def __mul__(self, factor) -> 'Cycle':
        return Cycle(self.arity, {k: factor * c for k, c in self.terms.items()})

    __rmul__ = __mul__

    def __eq__(self, other):
        return isinstance(other, Cycle) and (self - other).is_zero()

    def __hash__(self):
        return hash((self.arity, frozenset(self.terms)))

    def __str__(self):
        if not self.terms:
            return "0"
        pieces = []
        for key in sorted(self.terms):
            coeff = self.terms[key]
            body = term_string(key)
            pieces.append(body if coeff == 1 else f"({coeff})*{body}")
        return " + ".join(pieces)

    __repr__ = __str__

    def to_dict(self):
        return {
            'arity': self.arity,
            'terms': [{'term': term_string(k), 'coefficient': str(self.terms[k])} for k in sorted(self.terms)],
        }


def term_string(key: TermKey) -> str:
    factors: List[str] = []
    for block, mono in key:
        names = "".join(str(i + 1) for i in block)
        decoration = "*".join(mono)
        if len(block) == 1:
            if decoration:
                factors.append(f"p{names}*{decoration}")
            continue
        atom = 'Delta' if len(block) == 2 else 'delta'
        factors.append(f"{atom}_{names}" + (f"({decoration})" if decoration else ""))
    return ".".join(factors) or "1"


class DerivedIdentity:
    """lhs = rhs obtained by rewriting, with the steps that produced it"""

    def __init__(self, name: str, lhs: Cycle, rhs: Cycle, holds: bool, trace: List[str]):
        self.name = name
        self.lhs = lhs
        self.rhs = rhs
        self.holds = bool(holds)
        self.trace = trace

    def to_dict(self):
        return {
            'name': self.name,
            'identity': f"{self.lhs} = {self.rhs}",
            'holds': self.holds,
            'trace': self.trace,
        }
