"""
Arithmetic in the extended affine Weyl groups of GL_n and GSp_2g
"""
import logging
from collections import deque
from functools import lru_cache
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Set, Tuple

from app.core.exceptions import ContextMismatchError, IndexOutOfRangeError
from app.models.group import ExtAffineElement, GroupContext, ReducedWord

logger = logging.getLogger(__name__)


def permute(w: Sequence[int], v: Sequence[int]) -> Tuple[int, ...]:
    """(w.v)(k) = v(w^-1(k)) for a one-line permutation w"""
    out = [0] * len(v)
    for a, b in enumerate(w, start=1):
        out[b - 1] = v[a - 1]
    return tuple(out)


def _from_transpositions(n: int, pairs: Iterable[Tuple[int, int]]) -> Tuple[int, ...]:
    w = list(range(1, n + 1))
    for a, b in pairs:
        w[a - 1], w[b - 1] = w[b - 1], w[a - 1]
    return tuple(w)


def _check_same(a: ExtAffineElement, b: ExtAffineElement) -> None:
    if a.ctx != b.ctx:
        raise ContextMismatchError(f"cannot combine elements of {a.ctx} and {b.ctx}")


def identity(ctx: GroupContext) -> ExtAffineElement:
    n = ctx.rank
    return ExtAffineElement(ctx, (0,) * n, tuple(range(1, n + 1)))


def translation(ctx: GroupContext, nu: Sequence[int]) -> ExtAffineElement:
    return ExtAffineElement(ctx, tuple(nu), tuple(range(1, ctx.rank + 1)))


def compose(a: ExtAffineElement, b: ExtAffineElement) -> ExtAffineElement:
    """Group law: (t^nu_a w_a)(t^nu_b w_b) = t^(nu_a + w_a.nu_b) w_a w_b"""
    _check_same(a, b)
    shifted = permute(a.w, b.nu)
    nu = tuple(x + y for x, y in zip(a.nu, shifted))
    w = tuple(a.w[k - 1] for k in b.w)
    return ExtAffineElement(a.ctx, nu, w)


def inverse(x: ExtAffineElement) -> ExtAffineElement:
    w_inv = x.w_inverse
    nu = tuple(-c for c in permute(w_inv, x.nu))
    return ExtAffineElement(x.ctx, nu, w_inv)


@lru_cache(maxsize=None)
def simple_reflection(ctx: GroupContext, i: int) -> ExtAffineElement:
    """s_i; s_0 is the affine reflection t^(-1,0,...,0,1) (1,n)"""
    n = ctx.rank
    last = ctx.r if ctx.is_symplectic else n - 1
    if n < 2 or not 0 <= i <= last:
        raise IndexOutOfRangeError(f"s_{i} is not a simple reflection of {ctx}")

    if i == 0:
        nu = (-1,) + (0,) * (n - 2) + (1,)
        return ExtAffineElement(ctx, nu, _from_transpositions(n, [(1, n)]))

    pairs = [(i, i + 1)]
    if ctx.is_symplectic and i < ctx.r:
        pairs.append((n + 1 - i, n - i))
    return ExtAffineElement(ctx, (0,) * n, _from_transpositions(n, pairs))


def simple_reflections(ctx: GroupContext) -> List[ExtAffineElement]:
    return [simple_reflection(ctx, i) for i in range(ctx.simple_reflection_count)]


@lru_cache(maxsize=None)
def tau(ctx: GroupContext) -> ExtAffineElement:
    """The length-zero generator of Omega with t^mu in W_a tau"""
    if not ctx.is_symplectic:
        raise ContextMismatchError("tau is only defined for the symplectic context")
    g = ctx.r
    nu = (0,) * g + (1,) * g
    w = _from_transpositions(2 * g, [(j, j + g) for j in range(1, g + 1)])
    return ExtAffineElement(ctx, nu, w)


def omega_class(x: ExtAffineElement) -> int:
    """k with x in W_a tau^k (similitude factor for GSp, sum of nu for GL)"""
    if x.ctx.is_symplectic:
        return x.nu[0] + x.nu[-1]
    return sum(x.nu)


@lru_cache(maxsize=None)
def _negative_root_pairs(ctx: GroupContext) -> Tuple[Tuple[int, int], ...]:
    """(a, b), a > b, standing for the negative roots e_a - e_b.

    In the symplectic case e_a - e_b and e_{theta b} - e_{theta a} are the
    same root of type C_g, so one representative per orbit is kept.
    """
    n = ctx.rank
    pairs: Set[Tuple[int, int]] = set()
    for a in range(2, n + 1):
        for b in range(1, a):
            if ctx.is_symplectic:
                pairs.add(min((a, b), (n + 1 - b, n + 1 - a)))
            else:
                pairs.add((a, b))
    return tuple(sorted(pairs))


def length(x: ExtAffineElement) -> int:
    """Iwahori-Matsumoto length of x = w t^lambda.

    Sum over negative roots alpha of |<alpha, lambda> + 1| when w(alpha) > 0
    and |<alpha, lambda>| otherwise.
    """
    lam = [x.nu[b - 1] for b in x.w]
    total = 0
    for a, b in _negative_root_pairs(x.ctx):
        pairing = lam[a - 1] - lam[b - 1]
        if x.w[a - 1] < x.w[b - 1]:
            total += abs(pairing + 1)
        else:
            total += abs(pairing)
    return total


def is_left_descent(x: ExtAffineElement, i: int) -> bool:
    """True iff l(s_i x) < l(x).

    The wall of s_i separates the base alcove from x's alcove; compared on the
    barycenter sums n*nu_a + w^-1(a).
    """
    n = x.ctx.rank
    w_inv = x.w_inverse
    if i == 0:
        gap = x.nu[0] - x.nu[n - 1]
        return gap < -1 or (gap == -1 and w_inv[0] < w_inv[n - 1])
    if not 0 < i < x.ctx.simple_reflection_count:
        raise IndexOutOfRangeError(f"s_{i} is not a simple reflection of {x.ctx}")
    a, b = x.nu[i - 1], x.nu[i]
    return a > b or (a == b and w_inv[i - 1] > w_inv[i])


def left_descents(x: ExtAffineElement) -> List[int]:
    return [i for i in range(x.ctx.simple_reflection_count) if is_left_descent(x, i)]


def _first_descent(x: ExtAffineElement) -> int:
    for i in range(x.ctx.simple_reflection_count):
        if is_left_descent(x, i):
            return i
    return -1


def reduced_word(x: ExtAffineElement) -> ReducedWord:
    """Greedy left-descent stripping; what remains has length zero"""
    letters: List[int] = []
    current = x
    while True:
        i = _first_descent(current)
        if i < 0:
            break
        letters.append(i)
        current = compose(simple_reflection(x.ctx, i), current)
    return ReducedWord(tuple(letters), current)


def evaluate_word(ctx: GroupContext, letters: Sequence[int], omega: Optional[ExtAffineElement] = None) -> ExtAffineElement:
    """s_{l_1} s_{l_2} ... s_{l_k} omega"""
    result = omega if omega is not None else identity(ctx)
    for i in reversed(letters):
        result = compose(simple_reflection(ctx, i), result)
    return result


def evaluate(word: ReducedWord) -> ExtAffineElement:
    return evaluate_word(word.omega_part.ctx, word.letters, word.omega_part)


def support(x: ExtAffineElement) -> FrozenSet[int]:
    """Simple reflections occurring in a reduced word of the W_a part"""
    return frozenset(reduced_word(x).letters)


def conjugate_by_tau(x: ExtAffineElement) -> ExtAffineElement:
    t = tau(x.ctx)
    return compose(compose(t, x), inverse(t))


@lru_cache(maxsize=1 << 18)
def _bruhat_leq(a: ExtAffineElement, b: ExtAffineElement) -> bool:
    if a == b:
        return True
    if length(a) >= length(b):
        return False
    i = _first_descent(b)
    s = simple_reflection(b.ctx, i)
    sb = compose(s, b)
    # lifting property: for s b < b, a <= b iff min(a, s a) <= s b
    if is_left_descent(a, i):
        return _bruhat_leq(compose(s, a), sb)
    return _bruhat_leq(a, sb)


def bruhat_leq(a: ExtAffineElement, b: ExtAffineElement) -> bool:
    """Extended Bruhat order: equal Omega parts and comparable W_a parts"""
    _check_same(a, b)
    if omega_class(a) != omega_class(b):
        return False
    return _bruhat_leq(a, b)


def subword_products(word: ReducedWord) -> Set[ExtAffineElement]:
    """Every product of a subword of `word`, times its Omega part.

    For a reduced word this is the Bruhat lower interval of the element.
    """
    ctx = word.omega_part.ctx
    products: Set[ExtAffineElement] = {identity(ctx)}
    for i in word.letters:
        s = simple_reflection(ctx, i)
        products |= {compose(p, s) for p in products}
    return {compose(p, word.omega_part) for p in products}


def parabolic_elements(ctx: GroupContext, generators: Iterable[int]) -> Dict[ExtAffineElement, int]:
    """BFS over the subgroup generated by the given simple reflections.

    Returns element -> length; only meant for finite parabolics.
    """
    gens = [simple_reflection(ctx, i) for i in sorted(set(generators))]
    start = identity(ctx)
    seen: Dict[ExtAffineElement, int] = {start: 0}
    queue = deque([start])
    while queue:
        x = queue.popleft()
        for s in gens:
            y = compose(x, s)
            if y not in seen:
                seen[y] = seen[x] + 1
                queue.append(y)
    return seen


def words_up_to(ctx: GroupContext, max_length: int) -> Dict[ExtAffineElement, int]:
    """All elements of W_a with word length <= max_length, by BFS"""
    gens = simple_reflections(ctx)
    start = identity(ctx)
    seen: Dict[ExtAffineElement, int] = {start: 0}
    frontier = [start]
    for depth in range(1, max_length + 1):
        next_frontier = []
        for x in frontier:
            for s in gens:
                y = compose(x, s)
                if y not in seen:
                    seen[y] = depth
                    next_frontier.append(y)
        frontier = next_frontier
    logger.debug(f"BFS in {ctx} reached {len(seen)} elements up to length {max_length}")
    return seen
