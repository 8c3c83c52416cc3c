"""
Exact polynomials, twisted Coxeter diagrams and finite Coxeter groups
"""
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Callable, Dict, FrozenSet, Hashable, Iterable, Tuple

import sympy

from app.core.exceptions import IntegralityError, InvalidAutomorphismError

q = sympy.Symbol("q")

@dataclass(frozen=True)
class QPolynomial:
    """Integer polynomial in q; coefficients[k] is the coefficient of q^k"""
    coefficients: Tuple[int, ...]

    def __post_init__(self):
        coeffs = list(self.coefficients)
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        object.__setattr__(self, "coefficients", tuple(int(c) for c in coeffs))

    @classmethod
    def from_sympy(cls, expr) -> "QPolynomial":
        poly = sympy.Poly(sympy.expand(expr), q, domain=sympy.ZZ)
        return cls(tuple(reversed(poly.all_coeffs())))

    def as_sympy(self) -> sympy.Poly:
        return sympy.Poly(list(reversed(self.coefficients)) or [0], q, domain=sympy.ZZ)

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def evaluate(self, value: int) -> int:
        total = 0
        for c in reversed(self.coefficients):
            total = total * value + c
        return total

    def __add__(self, other: "QPolynomial") -> "QPolynomial":
        return QPolynomial.from_sympy(self.as_sympy().as_expr() + other.as_sympy().as_expr())

    def __mul__(self, other: "QPolynomial") -> "QPolynomial":
        return QPolynomial.from_sympy((self.as_sympy() * other.as_sympy()).as_expr())

    def exact_div(self, other: "QPolynomial") -> "QPolynomial":
        quotient, remainder = sympy.div(self.as_sympy(), other.as_sympy(), domain=sympy.ZZ)
        if not remainder.is_zero:
            raise IntegralityError(f"{other} does not divide {self}")
        return QPolynomial.from_sympy(quotient.as_expr())

    def __str__(self) -> str:
        return str(self.as_sympy().as_expr())

@dataclass(frozen=True)
class TwistedCoxeterDiagram:
    """Coxeter diagram with a diagram automorphism sigma.

    `edges` maps unordered node pairs to Coxeter labels m >= 3 (0 for infinity);
    absent pairs commute.
    """
    nodes: Tuple[int, ...]
    edges: Dict[FrozenSet[int], int]
    automorphism: Dict[int, int]

    def __post_init__(self):
        if sorted(self.automorphism) != sorted(self.nodes) or \
                sorted(self.automorphism.values()) != sorted(self.nodes):
            raise InvalidAutomorphismError("automorphism must permute the nodes")
        for pair, m in self.edges.items():
            image = frozenset(self.automorphism[v] for v in pair)
            if self.edges.get(image) != m:
                raise InvalidAutomorphismError(f"automorphism does not preserve edge {sorted(pair)}")

    def label(self, a: int, b: int) -> int:
        if a == b:
            return 1
        return self.edges.get(frozenset((a, b)), 2)

    def orbit_closure(self, subset: Iterable[int]) -> FrozenSet[int]:
        """Smallest sigma-stable subset containing `subset`"""
        closed = set(subset)
        frontier = list(closed)
        while frontier:
            image = self.automorphism[frontier.pop()]
            if image not in closed:
                closed.add(image)
                frontier.append(image)
        return frozenset(closed)

@dataclass(frozen=True, eq=False)
class FiniteCoxeterGroup:
    """A finite Coxeter group given by generator elements and a multiplication"""
    generators: Dict[int, Hashable]
    multiply: Callable[[Hashable, Hashable], Hashable]
    identity: Hashable
    name: str = field(default="W")

    @property
    def labels(self) -> Tuple[int, ...]:
        return tuple(sorted(self.generators))

    @cached_property
    def elements(self) -> Dict[Hashable, Tuple[int, Tuple[int, ...]]]:
        """element -> (length, reduced word) by breadth-first search"""
        seen = {self.identity: (0, ())}
        queue = deque([self.identity])
        while queue:
            x = queue.popleft()
            length, word = seen[x]
            for label in self.labels:
                y = self.multiply(x, self.generators[label])
                if y not in seen:
                    seen[y] = (length + 1, word + (label,))
                    queue.append(y)
        return seen

    def order(self) -> int:
        return len(self.elements)

    def evaluate(self, word: Iterable[int]) -> Hashable:
        x = self.identity
        for label in word:
            x = self.multiply(x, self.generators[label])
        return x

    def coxeter_label(self, a: int, b: int) -> int:
        """Order of s_a s_b"""
        st = self.multiply(self.generators[a], self.generators[b])
        x, m = st, 1
        while x != self.identity:
            x = self.multiply(x, st)
            m += 1
        return m

    def diagram(self, sigma: Dict[int, int]) -> TwistedCoxeterDiagram:
        edges = {}
        labels = self.labels
        for i, a in enumerate(labels):
            for b in labels[i + 1:]:
                m = self.coxeter_label(a, b)
                if m > 2:
                    edges[frozenset((a, b))] = m
        return TwistedCoxeterDiagram(labels, edges, dict(sigma))

    def parabolic(self, labels: Iterable[int]) -> "FiniteCoxeterGroup":
        keep = sorted(set(labels))
        return FiniteCoxeterGroup(
            {k: self.generators[k] for k in keep}, self.multiply, self.identity,
            f"{self.name}_{{{','.join(str(k) for k in keep)}}}",
        )
