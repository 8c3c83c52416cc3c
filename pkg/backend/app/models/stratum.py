"""
KR stratum records and their numerical invariants
"""
from dataclasses import dataclass
from functools import cached_property
from typing import Dict, FrozenSet, Tuple

from app.models.alcove import ExtendedAlcove
from app.models.group import ExtAffineElement, ReducedWord

IndexPair = Tuple[int, int]

@dataclass(frozen=True)
class InvariantTable:
    """r_ij for g <= i <= 2g together with the derived sigma, sigma' and d"""
    g: int
    r: Dict[IndexPair, int]
    sigma: Dict[IndexPair, int]
    sigma_prime: Dict[IndexPair, int]
    d: Dict[IndexPair, int]

    def flatten(self) -> Dict[str, int]:
        """Flat, deterministic key -> value map used in reports"""
        flat: Dict[str, int] = {}
        for prefix, table in (("r", self.r), ("sigma", self.sigma),
                              ("sigma_prime", self.sigma_prime), ("d", self.d)):
            for (a, b), value in sorted(table.items()):
                flat[f"{prefix}_{a}_{b}"] = value
        return flat

    def numerical_characterization(self) -> Dict[str, Dict[IndexPair, int]]:
        return {"sigma": dict(self.sigma), "sigma_prime": dict(self.sigma_prime), "d": dict(self.d)}

    def key(self) -> Tuple[Tuple[IndexPair, int], ...]:
        return tuple(sorted(self.r.items()))

@dataclass(frozen=True)
class StratumRecord:
    """One KR stratum, keyed by its permissible alcove.

    Everything except the alcove is derived on first access so that a full
    enumeration only pays for what a caller reads.
    """
    alcove: ExtendedAlcove

    @property
    def g(self) -> int:
        return self.alcove.ctx.r

    @cached_property
    def element(self) -> ExtAffineElement:
        from app.services.alcove_model import element_of
        return element_of(self.alcove)

    @cached_property
    def word(self) -> ReducedWord:
        from app.services.weyl_core import reduced_word
        return reduced_word(self.element)

    @cached_property
    def dim(self) -> int:
        from app.services.weyl_core import length
        return length(self.element)

    @cached_property
    def p_rank(self) -> int:
        from app.services.admissible_enum import p_rank
        return p_rank(self.element)

    @cached_property
    def superspecial_at(self) -> FrozenSet[int]:
        from app.services.stratum_invariants import superspecial_indices
        return superspecial_indices(self.element)

    @cached_property
    def r_table(self) -> InvariantTable:
        from app.services.stratum_invariants import r_table
        return r_table(self.alcove)

    @property
    def is_supersingular(self) -> bool:
        return bool(self.superspecial_at)
