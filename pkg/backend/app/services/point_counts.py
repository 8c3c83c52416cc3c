"""
Exact point counts: twisted flag varieties, Deligne-Lusztig varieties and mass formulas
"""
import logging
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from math import comb, gcd
from typing import Dict, FrozenSet, Hashable, Iterable, List, Optional, Tuple

import sympy

from app.core.exceptions import (
    ArithmeticInputError, IndexOutOfRangeError, IntegralityError,
    InvalidAutomorphismError, NotSuperspecialError,
)
from app.models.coxeter import FiniteCoxeterGroup, QPolynomial, TwistedCoxeterDiagram, q
from app.models.group import ExtAffineElement, GroupContext
from app.services import weyl_core

logger = logging.getLogger(__name__)

ExactRational = Fraction

# Diagrams and groups

def frobenius(g: int) -> Dict[int, int]:
    """i -> g - i on the nodes 0..g of the C~_g diagram"""
    return {i: g - i for i in range(g + 1)}


def affine_c_diagram(g: int) -> TwistedCoxeterDiagram:
    """Extended Dynkin diagram of type C~_g with the Frobenius i -> g - i"""
    edges = {}
    for i in range(g):
        if g == 1:
            m = 0
        elif i in (0, g - 1):
            m = 4
        else:
            m = 3
        edges[frozenset((i, i + 1))] = m
    return TwistedCoxeterDiagram(tuple(range(g + 1)), edges, frobenius(g))


def cyclic_diagram(r: int, s: int) -> TwistedCoxeterDiagram:
    """Cycle of r+s nodes with Frobenius rotation by r (unramified unitary group of signature (r, s))"""
    n = r + s
    if n < 2:
        raise IndexOutOfRangeError("a cyclic diagram needs at least two nodes")
    label = 0 if n == 2 else 3
    edges = {frozenset((i, (i + 1) % n)): label for i in range(n)}
    return TwistedCoxeterDiagram(tuple(range(n)), edges, {i: (i + r) % n for i in range(n)})


def type_a_diagram(n: int, twisted: bool = False) -> TwistedCoxeterDiagram:
    """A_{n-1} on nodes 1..n-1, optionally with the flip i -> n - i"""
    nodes = tuple(range(1, n))
    edges = {frozenset((i, i + 1)): 3 for i in range(1, n - 1)}
    sigma = {i: (n - i if twisted else i) for i in nodes}
    return TwistedCoxeterDiagram(nodes, edges, sigma)


def _compose_permutations(a: Tuple[int, ...], b: Tuple[int, ...]) -> Tuple[int, ...]:
    return tuple(a[k - 1] for k in b)


def symmetric_group(n: int) -> FiniteCoxeterGroup:
    """S_n on one-line permutations, s_i = (i, i+1)"""
    ident = tuple(range(1, n + 1))
    generators = {}
    for i in range(1, n):
        w = list(ident)
        w[i - 1], w[i] = w[i], w[i - 1]
        generators[i] = tuple(w)
    return FiniteCoxeterGroup(generators, _compose_permutations, ident, f"S_{n}")


def flip(n: int) -> Dict[int, int]:
    """s_i <-> s_{n-i} on S_n"""
    return {i: n - i for i in range(1, n)}


def parabolic_subgroup(g: int, K: Iterable[int]) -> FiniteCoxeterGroup:
    """The standard parabolic of W_a(C~_g) generated by s_k, k in K (K proper)"""
    keep = sorted(set(K))
    if len(keep) > g or any(not 0 <= k <= g for k in keep):
        raise IndexOutOfRangeError(f"K must be a proper subset of 0..{g}, got {keep}")
    ctx = GroupContext.symplectic(g)
    generators = {k: weyl_core.simple_reflection(ctx, k) for k in keep}
    return FiniteCoxeterGroup(
        generators, weyl_core.compose, weyl_core.identity(ctx),
        f"W_{{{','.join(str(k) for k in keep)}}}",
    )

# Flag polynomials

def _check_automorphism(W: FiniteCoxeterGroup, sigma: Dict[int, int]) -> None:
    if sorted(sigma) != list(W.labels) or sorted(sigma.values()) != list(W.labels):
        raise InvalidAutomorphismError(f"{sigma} does not permute the generators of {W.name}")
    # diagram() re-checks that Coxeter labels are preserved
    W.diagram(sigma)


def _sigma_images(W: FiniteCoxeterGroup, sigma: Dict[int, int]) -> Dict[Hashable, Hashable]:
    """sigma(w) for every w, following the BFS words"""
    images: Dict[Hashable, Hashable] = {}
    for w, (_, word) in W.elements.items():
        images[w] = W.evaluate(sigma[label] for label in word)
    return images


def twisted_flag_polynomial(W: FiniteCoxeterGroup, sigma: Optional[Dict[int, int]] = None) -> QPolynomial:
    """Sum of q^l(w) over the sigma-fixed w in W"""
    sigma = sigma if sigma is not None else {k: k for k in W.labels}
    _check_automorphism(W, sigma)
    images = _sigma_images(W, sigma)
    top = max((length for length, _ in W.elements.values()), default=0)
    coeffs = [0] * (top + 1)
    for w, (length, _) in W.elements.items():
        if images[w] == w:
            coeffs[length] += 1
    return QPolynomial(tuple(coeffs))


def poincare_polynomial(W: FiniteCoxeterGroup) -> QPolynomial:
    return twisted_flag_polynomial(W)


def unitary_flag_count(g: int, q_value: int) -> int:
    """prod_{i=1}^g (1 - (-q)^i) / (1 - (-1)^i q); every factor divides exactly"""
    if q_value < 2:
        raise ArithmeticInputError(f"q must be at least 2, got {q_value}")
    total = 1
    for i in range(1, g + 1):
        num, den = 1 - (-q_value) ** i, 1 - (-1) ** i * q_value
        if num % den:
            raise IntegralityError(f"factor {i} of the unitary flag count is not integral")
        total *= num // den
    return total


def unitary_flag_polynomial(g: int) -> QPolynomial:
    expr = sympy.Integer(1)
    for i in range(1, g + 1):
        expr *= (1 - (-q) ** i) / (1 - (-1) ** i * q)
    expr = sympy.cancel(sympy.together(expr))
    if not expr.is_polynomial(q):
        raise IntegralityError(f"unitary flag count for g={g} is not a polynomial")
    return QPolynomial.from_sympy(expr)

# Frobenius-stable subsets and Deligne-Lusztig varieties

def frobenius_stable_subsets(diagram: TwistedCoxeterDiagram) -> List[FrozenSet[int]]:
    """All non-empty sigma-stable node subsets, by size then lexicographically"""
    found = []
    nodes = diagram.nodes
    for size in range(1, len(nodes) + 1):
        for subset in combinations(nodes, size):
            if {diagram.automorphism[v] for v in subset} == set(subset):
                found.append(frozenset(subset))
    return found


def minimal_stable_parabolic(w: ExtAffineElement, g: int) -> FrozenSet[int]:
    """J = {0..g} minus the sigma-closure K of support(w).

    W_J (generated by s_j for j not in J) is then the smallest sigma-stable
    standard parabolic containing w.
    """
    word = weyl_core.reduced_word(w)
    if word.omega_part != weyl_core.identity(w.ctx):
        raise IndexOutOfRangeError("w must lie in the affine Weyl group W_a")
    K = affine_c_diagram(g).orbit_closure(word.letters)
    J = frozenset(range(g + 1)) - K
    if not J:
        raise NotSuperspecialError(f"support of {w} is not contained in any proper sigma-stable parabolic")
    return J


def dl_variety_stats(w: Hashable, W: FiniteCoxeterGroup, sigma: Dict[int, int], q_value: int) -> Tuple[int, int]:
    """(dimension, number of irreducible components) of X(w) in the flag variety of (W, sigma)"""
    if w not in W.elements:
        raise IndexOutOfRangeError(f"{w} is not an element of {W.name}")
    length, word = W.elements[w]
    closure = W.diagram(sigma).orbit_closure(word)
    full = twisted_flag_polynomial(W, sigma)
    sub = twisted_flag_polynomial(W.parabolic(closure), {k: sigma[k] for k in closure})
    num, den = full.evaluate(q_value), sub.evaluate(q_value)
    if num % den:
        raise IntegralityError(f"#(G/P)(F_{q_value}) = {num}/{den} is not an integer")
    return length, num // den


def stratum_dl_stats(x: ExtAffineElement, q_value: int) -> Tuple[int, int]:
    """dl_variety_stats for a superspecial stratum x = w tau inside W_{i,g-i}"""
    from app.services.stratum_invariants import parabolic_generators, superspecial_indices

    g = x.ctx.r
    indices = sorted(superspecial_indices(x))
    if not indices:
        raise NotSuperspecialError(f"{x} is not superspecial")
    K = parabolic_generators(g, indices[0])
    w = weyl_core.compose(x, weyl_core.inverse(weyl_core.tau(x.ctx)))
    sigma = {k: g - k for k in K}
    return dl_variety_stats(w, parabolic_subgroup(g, K), sigma, q_value)

# Bernoulli numbers and the mass formula

@lru_cache(maxsize=None)
def bernoulli_even(k: int) -> Fraction:
    """B_{2k} from the binomial recurrence, odd indices skipped"""
    if k < 0:
        raise ArithmeticInputError("k must be >= 0")
    values = [Fraction(1)]
    for m in range(1, k + 1):
        n = 2 * m
        s = sum(Fraction(comb(n + 1, 2 * j)) * values[j] for j in range(m))
        s += Fraction(n + 1) * Fraction(-1, 2)
        values.append(-s / (n + 1))
    return values[k]


def zeta_negative_odd(i: int) -> ExactRational:
    """zeta(1 - 2i) = -B_{2i} / (2i)"""
    if i < 1:
        raise ArithmeticInputError(f"i must be >= 1, got {i}")
    return -bernoulli_even(i) / (2 * i)


def _as_integer(value: Fraction, what: str) -> int:
    if value.denominator != 1:
        raise IntegralityError(f"{what} = {value} is not an integer")
    return value.numerator


def sp_order_mod_N(g: int, N: int) -> int:
    """#Sp_2g(Z/N) = N^{g(2g+1)} prod_{p | N} prod_i (1 - p^{-2i})"""
    if N < 3:
        raise ArithmeticInputError(f"level N must be at least 3, got {N}")
    value = Fraction(N) ** (g * (2 * g + 1))
    for p in sympy.primefactors(N):
        for i in range(1, g + 1):
            value *= 1 - Fraction(1, p ** (2 * i))
    return _as_integer(value, f"#Sp_{2 * g}(Z/{N})")


def _check_arithmetic_inputs(p: int, N: int) -> None:
    if not sympy.isprime(p):
        raise ArithmeticInputError(f"p must be prime, got {p}")
    if N < 3:
        raise ArithmeticInputError(f"level N must be at least 3, got {N}")
    if gcd(p, N) != 1:
        raise ArithmeticInputError(f"p = {p} must not divide N = {N}")


def lambda_mass(g: int, p: int, N: int) -> ExactRational:
    """#Lambda_{g,1,N} = #Sp_2g(Z/N) (-1)^{g(g+1)/2} / 2^g prod_i zeta(1-2i)(p^i + (-1)^i)"""
    _check_arithmetic_inputs(p, N)
    value = Fraction(sp_order_mod_N(g, N)) * Fraction((-1) ** (g * (g + 1) // 2), 2 ** g)
    for i in range(1, g + 1):
        value *= zeta_negative_odd(i) * (p ** i + (-1) ** i)
    _as_integer(value, f"mass for g={g}, p={p}, N={N}")
    if value <= 0:
        raise IntegralityError(f"mass for g={g}, p={p}, N={N} is not positive: {value}")
    return value


def a_tau_count(g: int, p: int, N: int) -> int:
    """Points of the minimal KR stratum: mass times the unitary flag count at p"""
    return _as_integer(lambda_mass(g, p, N) * unitary_flag_count(g, p), "#A_tau")


@lru_cache(maxsize=None)
def _stable_parabolic_flag(g: int, K: Tuple[int, ...]) -> QPolynomial:
    return twisted_flag_polynomial(parabolic_subgroup(g, K), {k: g - k for k in K})


def kr_connected_components(w: ExtAffineElement, g: int, p: int, N: int) -> int:
    """Connected components of the superspecial stratum A_{w tau}.

    mass * unitary_flag_count(g, p) / (twisted flag count of W_J at p), with
    W_J the minimal sigma-stable standard parabolic containing w.
    """
    J = minimal_stable_parabolic(w, g)
    K = sorted(set(range(g + 1)) - J)
    flag = _stable_parabolic_flag(g, tuple(K)).evaluate(p)
    total = lambda_mass(g, p, N) * unitary_flag_count(g, p) / flag
    logger.debug(f"components for K={K}: flag factor {flag}, count {total}")
    return _as_integer(total, f"component count of A_(w tau) for K={K}")


def superspecial_component_report(g: int, p: int, N: int) -> List[Dict]:
    """kr_connected_components for every superspecial stratum w tau, by length then word"""
    from app.services.stratum_invariants import parabolic_generators, superspecial_indices

    ctx = GroupContext.symplectic(g)
    t = weyl_core.tau(ctx)
    seen = set()
    for i in range(g // 2 + 1):
        seen.update(weyl_core.parabolic_elements(ctx, parabolic_generators(g, i)))
    entries = []
    for w in seen:
        x = weyl_core.compose(w, t)
        word = weyl_core.reduced_word(x)
        entries.append({
            "word": list(word.letters),
            "length": len(word),
            "superspecial_at": sorted(superspecial_indices(x)),
            "component_count": kr_connected_components(w, g, p, N),
        })
    entries.sort(key=lambda e: (e["length"], e["word"]))
    return entries
