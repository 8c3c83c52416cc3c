"""
Domain value types for KRStrata
"""
from app.models.group import GroupKind, GroupContext, ExtAffineElement, ReducedWord
from app.models.alcove import ExtendedAlcove
from app.models.stratum import InvariantTable, StratumRecord
from app.models.coxeter import QPolynomial, TwistedCoxeterDiagram, FiniteCoxeterGroup
from app.models.hermitian import FqSquared, HermitianSpace

__all__ = [
    "GroupKind",
    "GroupContext",
    "ExtAffineElement",
    "ReducedWord",
    "ExtendedAlcove",
    "InvariantTable",
    "StratumRecord",
    "QPolynomial",
    "TwistedCoxeterDiagram",
    "FiniteCoxeterGroup",
    "FqSquared",
    "HermitianSpace",
]
