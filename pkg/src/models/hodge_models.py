"""
Hodge diamonds and the atom bookkeeping used to count Hodge classes.
"""
from enum import Enum
from typing import Dict, List, Tuple

from src.models.fano_models import GradedDims


class HodgeDiamond:
    def __init__(self, dim: int, table: Dict[Tuple[int, int], int] = None):
        self.dim = dim
        self.table: Dict[Tuple[int, int], int] = {}
        for (p, q), value in (table or {}).items():
            if value < 0:
                raise ValueError(f"h^{{{p},{q}}} = {value} is negative")
            if value:
                self.table[(p, q)] = value

    def h(self, p: int, q: int) -> int:
        return self.table.get((p, q), 0)

    def is_symmetric(self) -> bool:
        return all(
            value == self.h(q, p) == self.h(self.dim - p, self.dim - q)
            for (p, q), value in self.table.items()
        )

    def betti(self) -> GradedDims:
        dims: Dict[int, int] = {}
        for (p, q), value in self.table.items():
            dims[p + q] = dims.get(p + q, 0) + value
        return GradedDims(dims)

    def euler_characteristic(self) -> int:
        return self.betti().euler_characteristic()

    def row(self, k: int) -> List[int]:
        """h^{k,0}, h^{k-1,1}, ..., h^{0,k} with entries outside the diamond dropped"""
        return [self.h(p, k - p) for p in range(k, -1, -1)
                if 0 <= p <= self.dim and 0 <= k - p <= self.dim]

    def rows(self) -> List[List[int]]:
        return [self.row(k) for k in range(2 * self.dim + 1)]

    def to_dict(self):
        return {
            'dim': self.dim,
            'rows': self.rows(),
            'betti': self.betti().as_list(2 * self.dim + 1),
            'euler_characteristic': self.euler_characteristic(),
        }


class Parity(str, Enum):
    EVEN = 'even'
    ODD = 'odd'

    @classmethod
    def of(cls, n: int) -> 'Parity':
        return cls.EVEN if n % 2 == 0 else cls.ODD


class HodgeAtom(str, Enum):
    """Tensor constructions on the primitive structure H = H_X"""

    TATE = 'Q'
    H = 'H'
    SYM2 = 'Sym2H'
    H_H = 'H(x)H'
    H_SYM2 = 'H(x)Sym2H'
    SYM2_SYM2 = 'Sym2H(x)Sym2H'


# slots and symmetrized slot pairs for each atom built from H
ATOM_SHAPES = {
    HodgeAtom.H: (1, ()),
    HodgeAtom.H_H: (2, ()),
    HodgeAtom.SYM2: (2, ((0, 1),)),
    HodgeAtom.H_SYM2: (3, ((1, 2),)),
    HodgeAtom.SYM2_SYM2: (4, ((0, 1), (2, 3))),
}

# tensor product of two pieces of H*(F)
ATOM_PRODUCTS = {
    (HodgeAtom.H, HodgeAtom.H): HodgeAtom.H_H,
    (HodgeAtom.H, HodgeAtom.SYM2): HodgeAtom.H_SYM2,
    (HodgeAtom.SYM2, HodgeAtom.H): HodgeAtom.H_SYM2,
    (HodgeAtom.SYM2, HodgeAtom.SYM2): HodgeAtom.SYM2_SYM2,
}


class HodgePiece:
    """One summand of a decomposition: atom placed in a cohomological degree"""

    def __init__(self, atom: HodgeAtom, degree: int, multiplicity: int = 1, twist: int = 0):
        self.atom = atom
        self.degree = degree
        self.multiplicity = multiplicity
        self.twist = twist

    def to_dict(self):
        return {
            'atom': self.atom.value,
            'degree': self.degree,
            'multiplicity': self.multiplicity,
            'twist': self.twist,
        }


class HodgeAtomExpr:
    """Formal sum of atoms with multiplicities, for a fixed weight parity of H"""

    def __init__(self, parity: Parity, pieces: List[HodgePiece] = None):
        self.parity = parity
        self.pieces = [p for p in (pieces or []) if p.multiplicity]
        for piece in self.pieces:
            if piece.multiplicity < 0:
                raise ValueError("multiplicities must be non-negative")

    def in_degree(self, degree: int) -> List[HodgePiece]:
        return [p for p in self.pieces if p.degree == degree]

    def to_dict(self):
        return {
            'parity': self.parity.value,
            'pieces': [p.to_dict() for p in self.pieces],
        }
