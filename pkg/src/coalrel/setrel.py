"""Relations on finite sets, checked by enumeration, and their linearisation."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Hashable, Iterable

from .coalg import Coalgebra, grouplike_coalgebra
from .exactlinalg import RatMatrix
from .rel import EQUIVALENCE, NEITHER, ORDER, Relation, relation_from_subspace
from .validation import MalformedError


@dataclass(frozen=True)
class FinSetRelation:
    """A subset ``pairs`` of ``elements x elements``.

    Labels are stored as strings; ``pairs`` is kept sorted by element order.
    """

    elements: tuple[str, ...]
    pairs: tuple[tuple[str, str], ...]

    def __post_init__(self):
        elements = tuple(str(x) for x in self.elements)
        if len(set(elements)) != len(elements):
            raise MalformedError("duplicate elements")
        pos = {x: i for i, x in enumerate(elements)}
        pairs = set()
        for a, b in self.pairs:
            a, b = str(a), str(b)
            if a not in pos or b not in pos:
                raise MalformedError(f"pair ({a},{b}) uses an unknown element")
            pairs.add((a, b))
        object.__setattr__(self, "elements", elements)
        object.__setattr__(self, "pairs", tuple(sorted(pairs, key=lambda p: (pos[p[0]], pos[p[1]]))))

    @classmethod
    def of(cls, elements: Iterable[Hashable], pairs: Iterable[tuple]) -> FinSetRelation:
        return cls(tuple(elements), tuple(pairs))

    def __contains__(self, pair) -> bool:
        return (str(pair[0]), str(pair[1])) in set(self.pairs)


@dataclass(frozen=True)
class SetClassification:
    reflexive: bool
    symmetric: bool
    transitive: bool
    antisymmetric: bool

    @property
    def flags(self) -> dict[str, bool]:
        return {
            "reflexive": self.reflexive,
            "symmetric": self.symmetric,
            "transitive": self.transitive,
            "antisymmetric": self.antisymmetric,
        }

    @property
    def verdict(self) -> str:
        if self.reflexive and self.symmetric and self.transitive:
            return EQUIVALENCE
        if self.reflexive and self.antisymmetric and self.transitive:
            return ORDER
        return NEITHER


def oracle_check(s: FinSetRelation) -> SetClassification:
    pairs = set(s.pairs)
    reflexive = all((x, x) in pairs for x in s.elements)
    symmetric = all((b, a) in pairs for a, b in pairs)
    transitive = all((a, d) in pairs for a, b in pairs for c, d in pairs if b == c)
    antisymmetric = all(a == b for a, b in pairs if (b, a) in pairs)
    return SetClassification(reflexive, symmetric, transitive, antisymmetric)


def equivalence_closure(s: FinSetRelation) -> FinSetRelation:
    """Smallest equivalence relation containing ``s``, by iterated composition."""
    pairs = set(s.pairs) | {(x, x) for x in s.elements}
    pairs |= {(b, a) for a, b in pairs}
    while True:
        composed = {(a, d) for a, b in pairs for c, d in pairs if b == c}
        if composed <= pairs:
            break
        pairs |= composed
    return FinSetRelation(s.elements, tuple(pairs))


def quotient_set(s: FinSetRelation) -> list[tuple[str, ...]]:
    """Classes of the equivalence closure, ordered by their first element."""
    closure = set(equivalence_closure(s).pairs)
    classes: list[tuple[str, ...]] = []
    seen: set = set()
    for x in s.elements:
        if x in seen:
            continue
        cls = tuple(y for y in s.elements if (x, y) in closure)
        seen.update(cls)
        classes.append(cls)
    return classes


def linearise(s: FinSetRelation) -> tuple[Coalgebra, Relation]:
    """Grouplike coalgebra on the elements and the span of ``x*y`` for pairs in ``s``.

    The relation basis follows ``s.pairs`` and is named ``x_y``.
    """
    c = grouplike_coalgebra(s.elements)
    n = c.dim
    pos = {x: i for i, x in enumerate(s.elements)}
    one = Fraction(1)
    data = [{} for _ in range(n * n)]
    for k, (a, b) in enumerate(s.pairs):
        data[pos[a] * n + pos[b]][k] = one
    basis = RatMatrix(n * n, len(s.pairs), data)
    names = [f"{a}_{b}" for a, b in s.pairs]
    if len(set(names)) != len(names):
        names = None
    return c, relation_from_subspace(c, basis, names)
