"""Query evaluation and the families of minimal satisfying tuple-sets.

A support set is a minimal subset of the instance that already satisfies
some disjunct of the query. These families are the combinatorial substrate
for everything else in the package: their endogenous projections are the
hyperedges every cause computation hits against.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .model import GroundTuple, Instance
from .query import UCQ, Constant, Disjunct, QueryAtom, Variable

_Index = dict[str, list[GroundTuple]]


@dataclass(frozen=True)
class SupportFamily:
    """An antichain of tuple-sets over a base universe.

    `vacuous` marks the degenerate case where the query is satisfied by
    exogenous tuples alone: the query is true no matter which endogenous
    tuples are removed, so there are no causes. This is distinct from an
    empty family, which means the query is false.
    """

    base: frozenset[GroundTuple]
    sets: tuple[frozenset[GroundTuple], ...]
    vacuous: bool = False

    def __iter__(self) -> Iterator[frozenset[GroundTuple]]:
        return iter(self.sets)

    def __len__(self) -> int:
        return len(self.sets)


def set_key(s: frozenset) -> tuple:
    """Canonical sort key for a set: the tuple of its sorted members."""
    return tuple(sorted(s))


def minimal_sets(sets) -> list[frozenset]:
    """The subset-minimal members of a collection, deduplicated."""
    kept: list[frozenset] = []
    for s in sorted(sets, key=len):
        if not any(k <= s for k in kept):
            kept.append(s)
    return kept


def _index(tuples: frozenset[GroundTuple]) -> _Index:
    by_rel: _Index = {}
    for t in sorted(tuples):
        by_rel.setdefault(t.relation, []).append(t)
    return by_rel


def _ordered_atoms(disjunct: Disjunct, index: _Index) -> list[QueryAtom]:
    # Ascending extension size is a join-ordering heuristic only; any order
    # yields the same homomorphisms.
    order = sorted(
        range(len(disjunct.atoms)),
        key=lambda i: (len(index.get(disjunct.atoms[i].relation, ())), i),
    )
    return [disjunct.atoms[i] for i in order]


def _bind(atom: QueryAtom, fact: GroundTuple, binding: dict[Variable, str]) -> dict | None:
    if fact.relation != atom.relation or len(fact.args) != len(atom.terms):
        return None
    extended = binding
    for term, value in zip(atom.terms, fact.args):
        if isinstance(term, Constant):
            if term.symbol != value:
                return None
        else:
            bound = extended.get(term)
            if bound is None:
                if extended is binding:
                    extended = dict(binding)
                extended[term] = value
            elif bound != value:
                return None
    return extended


def _search(atoms, index, pos, binding, used, images, stop_early) -> bool:
    if pos == len(atoms):
        images.add(frozenset(used))
        return True
    for fact in index.get(atoms[pos].relation, ()):
        extended = _bind(atoms[pos], fact, binding)
        if extended is None:
            continue
        used.append(fact)
        found = _search(atoms, index, pos + 1, extended, used, images, stop_early)
        used.pop()
        if found and stop_early:
            return True
    return False


def _disjunct_images(disjunct: Disjunct, index: _Index) -> set[frozenset[GroundTuple]]:
    images: set[frozenset[GroundTuple]] = set()
    _search(_ordered_atoms(disjunct, index), index, 0, {}, [], images, stop_early=False)
    return images


def _disjunct_holds(disjunct: Disjunct, index: _Index) -> bool:
    return _search(_ordered_atoms(disjunct, index), index, 0, {}, [], set(), stop_early=True)


def evaluate(q: UCQ, instance: Instance) -> bool:
    """True iff some disjunct has a homomorphism into the full instance."""
    index = _index(instance.tuples)
    return any(_disjunct_holds(d, index) for d in q.disjuncts)


def support_family(q: UCQ, instance: Instance) -> SupportFamily:
    """All minimal subsets of the instance satisfying some disjunct.

    Enumerates every homomorphism per disjunct, takes the image tuple-sets,
    and discards any image that strictly contains another.
    """
    index = _index(instance.tuples)
    images: set[frozenset[GroundTuple]] = set()
    for d in q.disjuncts:
        images |= _disjunct_images(d, index)
    sets = sorted(minimal_sets(images), key=set_key)
    return SupportFamily(base=instance.tuples, sets=tuple(sets))


def endogenous_support(q: UCQ, instance: Instance) -> SupportFamily:
    """The minimal endogenous projections of the support sets.

    If some support set lies entirely in the exogenous part, the query is
    true independently of the endogenous tuples and the vacuous marker is
    returned: there are no causes in that case.
    """
    full = support_family(q, instance)
    projections = {s & instance.endo for s in full.sets}
    if any(not p for p in projections):
        return SupportFamily(base=instance.endo, sets=(), vacuous=True)
    sets = sorted(minimal_sets(projections), key=set_key)
    return SupportFamily(base=instance.endo, sets=tuple(sets))
