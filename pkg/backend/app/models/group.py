"""
Extended affine Weyl group value types
"""
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from typing import Optional, Sequence, Tuple

from app.core.exceptions import KRStrataError

class GroupKind(str, Enum):
    """Root datum families the engine knows about"""
    GENERAL_LINEAR = "GL"
    SYMPLECTIC_SIMILITUDE = "GSp"

@dataclass(frozen=True)
class GroupContext:
    """GL_n (type A~_{n-1}) or GSp_{2g} (type C~_g) realized on Z^n"""
    kind: GroupKind
    rank: int
    r: int

    def __post_init__(self):
        if self.rank < 1:
            raise KRStrataError(f"rank must be positive, got {self.rank}")
        if not 0 <= self.r <= self.rank:
            raise KRStrataError(f"mu must have between 0 and {self.rank} ones, got {self.r}")
        if self.kind == GroupKind.SYMPLECTIC_SIMILITUDE and self.rank != 2 * self.r:
            raise KRStrataError("symplectic context needs rank 2g and r = g")

    @staticmethod
    @lru_cache(maxsize=None)
    def symplectic(g: int) -> "GroupContext":
        return GroupContext(GroupKind.SYMPLECTIC_SIMILITUDE, 2 * g, g)

    @staticmethod
    @lru_cache(maxsize=None)
    def general_linear(n: int, r: int = 1) -> "GroupContext":
        return GroupContext(GroupKind.GENERAL_LINEAR, n, r)

    @property
    def is_symplectic(self) -> bool:
        return self.kind == GroupKind.SYMPLECTIC_SIMILITUDE

    @property
    def genus(self) -> Optional[int]:
        return self.r if self.is_symplectic else None

    @property
    def simple_reflection_count(self) -> int:
        return self.r + 1 if self.is_symplectic else self.rank

    @property
    def theta(self) -> Optional[Tuple[int, ...]]:
        """The involution j -> n+1-j, one-line notation (symplectic only)"""
        if not self.is_symplectic:
            return None
        n = self.rank
        return tuple(n + 1 - j for j in range(1, n + 1))

    @property
    def mu(self) -> Tuple[int, ...]:
        return (1,) * self.r + (0,) * (self.rank - self.r)

    def __str__(self) -> str:
        if self.is_symplectic:
            return f"GSp_{self.rank}"
        return f"GL_{self.rank}(r={self.r})"

@dataclass(frozen=True)
class ExtAffineElement:
    """t^nu w, acting on Z^n by v -> w.v + nu with (w.v)(k) = v(w^-1(k))"""
    ctx: GroupContext
    nu: Tuple[int, ...]
    w: Tuple[int, ...]

    def __post_init__(self):
        n = self.ctx.rank
        if len(self.nu) != n or len(self.w) != n:
            raise KRStrataError(f"element data must have length {n}")
        if sorted(self.w) != list(range(1, n + 1)):
            raise KRStrataError(f"{self.w} is not a permutation of 1..{n}")
        if self.ctx.is_symplectic:
            for j in range(1, n + 1):
                if self.w[n - j] != n + 1 - self.w[j - 1]:
                    raise KRStrataError(f"finite part {self.w} does not commute with theta")
            c = self.nu[0] + self.nu[n - 1]
            if any(self.nu[j] + self.nu[n - 1 - j] != c for j in range(self.ctx.r)):
                raise KRStrataError(f"translation {self.nu} is not a symplectic similitude cocharacter")

    @property
    def w_inverse(self) -> Tuple[int, ...]:
        inv = [0] * len(self.w)
        for a, b in enumerate(self.w, start=1):
            inv[b - 1] = a
        return tuple(inv)

    def act(self, v: Sequence[int]) -> Tuple[int, ...]:
        """Apply the element to an integer vector"""
        # (w.v)(w(a)) = v(a)
        out = [0] * len(v)
        for a, b in enumerate(self.w, start=1):
            out[b - 1] = v[a - 1]
        return tuple(o + t for o, t in zip(out, self.nu))

    def __str__(self) -> str:
        return f"t^{list(self.nu)} {list(self.w)}"

@dataclass(frozen=True)
class ReducedWord:
    """letters (reading order) times a length-zero element"""
    letters: Tuple[int, ...]
    omega_part: ExtAffineElement

    def __len__(self) -> int:
        return len(self.letters)

    def __str__(self) -> str:
        return " ".join(str(i) for i in self.letters)
