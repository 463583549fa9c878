"""Repairs with respect to denial constraints, difference sets, and repair decisions.

A subset repair keeps a maximal consistent subset of the instance; a
cardinality repair keeps a maximum one. Both are computed from the minimal
hitting sets of the violation supports rather than by subset search.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional

from .errors import CausekitError
from .hitset import Hypergraph, min_hs_size_containing, minimal_hitting_sets
from .model import GroundTuple, Instance
from .query import DenialConstraint, dcs_to_ucq
from .support import evaluate, set_key, support_family

SEMANTICS = ("s", "c")


@dataclass(frozen=True)
class Repair:
    """A consistent sub-instance: the kept tuples, the removed ones, and the
    minimality semantics they were computed under ("s" or "c")."""

    kept: frozenset[GroundTuple]
    removed: frozenset[GroundTuple]
    semantics: str


def check_semantics(semantics: str) -> str:
    s = semantics.lower()
    if s not in SEMANTICS:
        raise CausekitError(f"unknown repair semantics {semantics!r}; use 's' or 'c'")
    return s


def repairs(
    instance: Instance,
    constraints: list[DenialConstraint],
    semantics: str = "s",
    *,
    max_results: Optional[int] = None,
) -> list[Repair]:
    """All subset repairs (or the cardinality repairs) of the instance.

    The instance is treated as all-endogenous: every tuple is deletable.
    A consistent instance repairs to itself. Removal sets are exactly the
    minimal hitting sets of the violation supports.
    """
    semantics = check_semantics(semantics)
    removals = _removal_sets(instance, constraints, max_results)
    if semantics == "c":
        least = min(len(r) for r in removals)
        removals = [r for r in removals if len(r) == least]
    everything = instance.tuples
    return [
        Repair(kept=everything - r, removed=r, semantics=semantics)
        for r in sorted(removals, key=set_key)
    ]


def _removal_sets(instance, constraints, max_results=None) -> list[frozenset[GroundTuple]]:
    view = instance.all_endogenous()
    family = support_family(dcs_to_ucq(constraints), view)
    hypergraph = Hypergraph.build(view.endo, family.sets)
    return minimal_hitting_sets(hypergraph, max_results=max_results)


def difference_sets(
    instance: Instance,
    constraint: DenialConstraint,
    t: GroundTuple,
    semantics: str = "s",
) -> list[frozenset[GroundTuple]]:
    """The removal sets of repairs that drop t using endogenous tuples only.

    Nonempty exactly when t is an actual cause for the constraint's
    violation view (for "s"), resp. a most responsible one (for "c").
    """
    semantics = check_semantics(semantics)
    if t not in instance.endo:
        raise CausekitError(f"tuple {t} is not an endogenous tuple of the instance")
    removals = _removal_sets(instance, [constraint])
    if semantics == "c":
        least = min((len(r) for r in removals), default=0)
        removals = [r for r in removals if len(r) == least]
    chosen = [r for r in removals if t in r and r <= instance.endo]
    return sorted(chosen, key=set_key)


def is_s_repair(
    instance: Instance,
    constraints: list[DenialConstraint],
    kept: Iterable[GroundTuple],
) -> bool:
    """Polynomial subset-repair check: the candidate satisfies every
    constraint and adding back any removed tuple breaks one."""
    candidate = frozenset(kept)
    everything = instance.tuples
    if not candidate <= everything:
        raise CausekitError("candidate repair is not a subset of the instance")
    view = dcs_to_ucq(constraints)
    if evaluate(view, Instance(candidate, frozenset())):
        return False
    return all(
        evaluate(view, Instance(candidate | {t}, frozenset()))
        for t in everything - candidate
    )


def repair_size_at_least(
    instance: Instance,
    constraint: DenialConstraint,
    t: GroundTuple,
    m: int,
) -> bool:
    """Decide whether some subset repair of size at least m excludes t.

    Computed without enumerating repairs: t must be an actual cause for the
    violation view and the smallest removal set through t must leave at
    least m tuples.
    """
    everything = instance.tuples
    if t not in everything:
        raise CausekitError(f"tuple {t} is not in the instance")
    n = len(everything)
    if m < 0 or m > n:
        raise CausekitError(f"size bound {m} outside [0, {n}]")
    view = instance.all_endogenous()
    family = support_family(dcs_to_ucq([constraint]), view)
    hypergraph = Hypergraph.build(view.endo, family.sets)
    smallest = min_hs_size_containing(hypergraph, t)
    if smallest is None:
        return False
    return n - smallest >= m
