"""
Finite field F_{q^2} and Hermitian space value types
"""
from dataclasses import dataclass
from typing import Sequence, Tuple

import numpy as np

@dataclass(frozen=True, eq=False)
class FqSquared:
    """F_{q^2} = F_q[a]/(a^2 + c1 a + c0); element u + v a is encoded as u + v q"""
    q: int
    modulus: Tuple[int, int]
    add: np.ndarray
    mul: np.ndarray
    neg: np.ndarray
    inv: np.ndarray
    conj: np.ndarray

    @property
    def size(self) -> int:
        return self.q * self.q

@dataclass(frozen=True, eq=False)
class HermitianSpace:
    """F_{q^2}^g with phi(a, b) = sum_i a_i conj(b_{g+1-i})"""
    field: FqSquared
    g: int

    def form(self, a: Sequence[int], b: Sequence[int]) -> int:
        f = self.field
        total = 0
        for i in range(self.g):
            total = f.add[total, f.mul[a[i], f.conj[b[self.g - 1 - i]]]]
        return int(total)

    def form_batch(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        """phi row by row for two (k, g) arrays of encoded vectors"""
        f = self.field
        total = np.zeros(a.shape[0], dtype=np.int64)
        for i in range(self.g):
            total = f.add[total, f.mul[a[:, i], f.conj[b[:, self.g - 1 - i]]]]
        return total
