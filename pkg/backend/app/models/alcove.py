"""
Extended alcove value type
"""
from dataclasses import dataclass
from typing import Tuple

from app.core.exceptions import AlcoveError
from app.models.group import GroupContext

@dataclass(frozen=True, order=True)
class ExtendedAlcove:
    """Tuple (x_0, ..., x_{n-1}) of integer vectors; the KR model of an Iwahori orbit.

    Ordering is lexicographic on the concatenated coordinates, which is the
    order enumerations are emitted in.
    """
    x: Tuple[Tuple[int, ...], ...]
    ctx: GroupContext

    def __post_init__(self):
        n = self.ctx.rank
        if len(self.x) != n or any(len(v) != n for v in self.x):
            raise AlcoveError(f"an alcove for {self.ctx} needs {n} vectors of length {n}")

    @property
    def n(self) -> int:
        return self.ctx.rank

    def vertex(self, i: int) -> Tuple[int, ...]:
        """x_i for any integer i, with x_{i+kn} = x_i - k"""
        k, i0 = divmod(i, self.n)
        return tuple(c - k for c in self.x[i0])

    def flat(self) -> Tuple[int, ...]:
        return tuple(c for v in self.x for c in v)
