"""
Brute-force Hermitian geometry over F_{q^2} for small g and q
"""
import logging
from functools import lru_cache
from itertools import combinations, product
from typing import Dict, List, Set, Tuple

import numpy as np
import sympy

from app.core.config import settings
from app.core.exceptions import ArithmeticInputError, BudgetExceededError, KRStrataError
from app.models.hermitian import FqSquared, HermitianSpace

logger = logging.getLogger(__name__)

Subspace = Tuple[Tuple[int, ...], ...]


def _check_budget(g: int, q: int, max_rank: int) -> None:
    if not sympy.isprime(q):
        raise ArithmeticInputError(f"only prime q is supported, got {q}")
    if q > settings.HERMITIAN_MAX_Q:
        raise BudgetExceededError(f"q = {q} exceeds HERMITIAN_MAX_Q = {settings.HERMITIAN_MAX_Q}")
    if not 1 <= g <= max_rank:
        raise BudgetExceededError(f"g = {g} outside the oracle budget 1..{max_rank}")


def _irreducible_quadratic(q: int) -> Tuple[int, int]:
    """(c1, c0) with x^2 + c1 x + c0 rootless over F_q"""
    for c1, c0 in product(range(q), repeat=2):
        if all((x * x + c1 * x + c0) % q for x in range(q)):
            return c1, c0
    raise ArithmeticInputError(f"no irreducible quadratic over F_{q}")


@lru_cache(maxsize=None)
def build_fq_squared(q: int) -> FqSquared:
    """Addition, multiplication, inverse and Frobenius tables of F_{q^2}"""
    if not sympy.isprime(q):
        raise ArithmeticInputError(f"only prime q is supported, got {q}")
    c1, c0 = _irreducible_quadratic(q)
    idx = np.arange(q * q)
    u, v = idx % q, idx // q
    U1, U2 = np.meshgrid(u, u, indexing="ij")
    V1, V2 = np.meshgrid(v, v, indexing="ij")

    add = (U1 + U2) % q + ((V1 + V2) % q) * q
    # a^2 = -c1 a - c0
    prod_u = (U1 * U2 - c0 * V1 * V2) % q
    prod_v = (U1 * V2 + V1 * U2 - c1 * V1 * V2) % q
    mul = prod_u + prod_v * q
    neg = (-u) % q + ((-v) % q) * q

    inv = np.zeros(q * q, dtype=np.int64)
    inv[1:] = np.argmax(mul[1:] == 1, axis=1)

    conj = idx.copy()
    for _ in range(q - 1):
        conj = mul[conj, idx]

    field = FqSquared(q, (c1, c0), add, mul, neg, inv, conj)
    if not np.array_equal(conj[conj], idx) or set(np.flatnonzero(conj == idx)) != set(range(q)):
        raise KRStrataError(f"Frobenius of F_{q * q} is not an involution fixing F_{q}")
    logger.debug(f"built F_{q * q} with modulus x^2 + {c1}x + {c0}")
    return field


def hermitian_space(g: int, q: int) -> HermitianSpace:
    return HermitianSpace(build_fq_squared(q), g)


def _all_vectors(size: int, g: int) -> np.ndarray:
    return np.indices((size,) * g).reshape(g, -1).T


def _normalized(vectors: np.ndarray) -> np.ndarray:
    """Rows whose first non-zero entry is 1 (one per projective point)"""
    nonzero = vectors != 0
    first = np.argmax(nonzero, axis=1)
    leading = vectors[np.arange(len(vectors)), first]
    return vectors[nonzero.any(axis=1) & (leading == 1)]


def isotropic_point_count(g: int, q: int) -> int:
    """Isotropic lines of phi in F_{q^2}^g"""
    _check_budget(g, q, settings.HERMITIAN_MAX_RANK)
    space = hermitian_space(g, q)
    points = _normalized(_all_vectors(space.field.size, g))
    count = int(np.count_nonzero(space.form_batch(points, points) == 0))
    logger.info(f"g={g}, q={q}: {count} isotropic points among {len(points)}")
    return count


def _rref_matrices(size: int, g: int, k: int) -> np.ndarray:
    """Every k x g reduced row echelon matrix over a field of `size` elements"""
    blocks = []
    for pivots in combinations(range(g), k):
        free = [(i, j) for i, p in enumerate(pivots) for j in range(p + 1, g) if j not in pivots]
        values = np.array(list(product(range(size), repeat=len(free))), dtype=np.int64)
        block = np.zeros((len(values), k, g), dtype=np.int64)
        for i, p in enumerate(pivots):
            block[:, i, p] = 1
        for column, (i, j) in enumerate(free):
            block[:, i, j] = values[:, column]
        blocks.append(block)
    return np.concatenate(blocks)


def totally_isotropic_subspaces(g: int, q: int, k: int) -> List[Subspace]:
    """k-dimensional V with V inside its own orthogonal, as canonical RREF row tuples"""
    _check_budget(g, q, settings.HERMITIAN_MAX_RANK)
    if not 1 <= k <= g:
        raise BudgetExceededError(f"subspace dimension must lie in 1..{g}, got {k}")
    space = hermitian_space(g, q)
    candidates = _rref_matrices(space.field.size, g, k)
    keep = np.ones(len(candidates), dtype=bool)
    # phi(b, a) = conj(phi(a, b)), so a <= b suffices
    for a in range(k):
        for b in range(a, k):
            keep &= space.form_batch(candidates[:, a, :], candidates[:, b, :]) == 0
    found = [tuple(tuple(int(c) for c in row) for row in m) for m in candidates[keep]]
    logger.debug(f"g={g}, q={q}: {len(found)} totally isotropic {k}-spaces")
    return found


def _span(field: FqSquared, rows: Subspace) -> Set[Tuple[int, ...]]:
    basis = np.array(rows, dtype=np.int64)
    coeffs = _all_vectors(field.size, len(rows))
    total = np.zeros((len(coeffs), basis.shape[1]), dtype=np.int64)
    for i in range(len(rows)):
        total = field.add[total, field.mul[coeffs[:, i][:, None], basis[i][None, :]]]
    return {tuple(int(c) for c in vec) for vec in total}


def isotropic_flag_count(g: int, q: int) -> int:
    """Chains V_1 < ... < V_{g//2} of totally isotropic subspaces, dim V_i = i.

    V_{g-i} = V_i^perp completes the chain and is not enumerated.
    """
    _check_budget(g, q, settings.HERMITIAN_MAX_FLAG_RANK)
    top = g // 2
    if top == 0:
        return 1
    field = build_fq_squared(q)
    counts: Dict[Subspace, int] = {V: 1 for V in totally_isotropic_subspaces(g, q, 1)}
    for k in range(2, top + 1):
        following: Dict[Subspace, int] = {}
        for V in totally_isotropic_subspaces(g, q, k):
            span = _span(field, V)
            following[V] = sum(c for W, c in counts.items() if all(row in span for row in W))
        counts = following
    total = sum(counts.values())
    logger.info(f"g={g}, q={q}: {total} maximal isotropic flags")
    return total


def sesquilinearity_holds(space: HermitianSpace, samples: int = 200, seed: int = 0) -> bool:
    """Check linearity in the first slot, conjugate symmetry and semilinearity in the second"""
    f = space.field
    rng = np.random.default_rng(seed)
    a, b, c = (rng.integers(0, f.size, size=(samples, space.g)) for _ in range(3))
    lam = rng.integers(0, f.size, size=samples)

    def scale(s: np.ndarray, x: np.ndarray) -> np.ndarray:
        return f.mul[s[:, None], x]

    lhs = space.form_batch(f.add[scale(lam, a), b], c)
    rhs = f.add[f.mul[lam, space.form_batch(a, c)], space.form_batch(b, c)]
    linear = np.array_equal(lhs, rhs)
    symmetric = np.array_equal(space.form_batch(c, a), f.conj[space.form_batch(a, c)])
    semilinear = np.array_equal(
        space.form_batch(a, scale(lam, c)), f.mul[f.conj[lam], space.form_batch(a, c)]
    )
    return bool(linear and symmetric and semilinear)
