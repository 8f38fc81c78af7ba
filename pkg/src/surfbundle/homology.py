"""First homology of the mapping torus M(F, f).

The Wang sequence gives H1(M) = coker(I - f_#) + Z. The quotient
H1(F) / ker(I - f_#) has the same free rank, but only the cokernel carries
the torsion, so that is what is computed here.
"""
from __future__ import annotations

from dataclasses import dataclass

from .linalg import IntMatrix, rational_rank, smith_normal_form
from .mapping_class import MappingClass, require_symplectic


@dataclass(frozen=True)
class BundleHomology:
    betti_one: int
    torsion: tuple[int, ...]

    @property
    def free_rank(self) -> int:
        return self.betti_one

    def to_json(self) -> dict:
        return {"betti_one": self.betti_one, "torsion": list(self.torsion)}

    def __str__(self) -> str:
        parts = []
        if self.betti_one:
            parts.append("Z" if self.betti_one == 1 else f"Z^{self.betti_one}")
        parts += [f"Z/{d}" for d in self.torsion]
        return " + ".join(parts) or "0"


def _i_minus(f: MappingClass) -> IntMatrix:
    return IntMatrix.identity(f.surface.rank) - f.matrix


def betti_one(f: MappingClass) -> int:
    require_symplectic(f)
    return 1 + f.surface.rank - rational_rank(_i_minus(f))


def integral_h1(f: MappingClass) -> BundleHomology:
    require_symplectic(f)
    snf = smith_normal_form(_i_minus(f))
    zeros = f.surface.rank - len(snf.diagonal)
    return BundleHomology(1 + zeros, tuple(d for d in snf.diagonal if d > 1))
