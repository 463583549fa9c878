"""Causes, contingency sets, responsibilities, and their decision problems.

A tuple is an actual cause for a query answer when some set of endogenous
tuples (its contingency set) can be removed so that removing the tuple
itself then flips the query to false. Responsibility grades causes by their
smallest contingency sets and is computed here without enumerating them.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional

from .errors import CausekitError
from .hitset import (
    Hypergraph,
    exists_hs_within,
    min_hs_size,
    min_hs_size_containing,
    minimal_hitting_sets,
)
from .model import GroundTuple, Instance
from .query import UCQ, Disjunct, QueryAtom, Variable
from .support import endogenous_support, evaluate, set_key


def hitting_framework(instance: Instance, q: UCQ) -> Optional[Hypergraph]:
    """The hypergraph whose hitting sets drive every cause computation:
    vertices are the endogenous tuples, edges the minimal endogenous
    support sets. None when the query holds on exogenous tuples alone."""
    family = endogenous_support(q, instance)
    if family.vacuous:
        return None
    return Hypergraph.build(instance.endo, family.sets)


def actual_causes(instance: Instance, q: UCQ) -> frozenset[GroundTuple]:
    """All endogenous tuples occurring in some minimal endogenous support set.

    Empty when the query is false or holds without endogenous help.
    """
    family = endogenous_support(q, instance)
    if family.vacuous:
        return frozenset()
    causes: set[GroundTuple] = set()
    for s in family.sets:
        causes |= s
    return frozenset(causes)


def minimal_contingencies(
    instance: Instance,
    q: UCQ,
    t: GroundTuple,
    *,
    max_results: Optional[int] = None,
) -> list[frozenset[GroundTuple]]:
    """All minimal contingency sets for t: remove one, and t becomes
    counterfactual. Derived from the minimal hitting sets containing t.

    May be exponentially large; responsibility never needs it.
    """
    _require_endogenous(instance, t)
    framework = hitting_framework(instance, q)
    if framework is None:
        return []
    sets = minimal_hitting_sets(framework, max_results=max_results)
    return sorted((h - {t} for h in sets if t in h), key=set_key)


def responsibility(instance: Instance, q: UCQ, t: GroundTuple) -> Fraction:
    """1/k where k is the size of the smallest minimal hitting set through
    t; 0 when t is not a cause. Exact rational, never a float."""
    _require_endogenous(instance, t)
    framework = hitting_framework(instance, q)
    if framework is None:
        return Fraction(0)
    k = min_hs_size_containing(framework, t)
    return Fraction(0) if k is None else Fraction(1, k)


def most_responsible(instance: Instance, q: UCQ) -> frozenset[GroundTuple]:
    """All causes attaining the maximum positive responsibility; empty iff
    there are no causes.

    A cause is most responsible exactly when some minimal hitting set of
    the overall minimum size passes through it, so one bounded decision per
    candidate suffices.
    """
    framework = hitting_framework(instance, q)
    if framework is None or not framework.edges:
        return frozenset()
    best = min_hs_size(framework)
    candidates = {t for e in framework.edges for t in e}
    return frozenset(
        t for t in candidates if exists_hs_within(framework, best, forced=t)
    )


def decide_rpd(instance: Instance, q: UCQ, t: GroundTuple, v: Fraction) -> bool:
    """Decide whether t's responsibility strictly exceeds v.

    v must be 0 or 1/k. For v = 1/k the answer is found by depth-bounded
    branching for a minimal hitting set through t of size at most k-1;
    responsibility itself is never computed. Requires the query to be true
    in the instance.
    """
    _require_endogenous(instance, t)
    v = Fraction(v)
    if v != 0 and v.numerator != 1:
        raise CausekitError(f"threshold must be 0 or 1/k, got {v}")
    if not evaluate(q, instance):
        raise CausekitError("the query is false in the instance; nothing to explain")
    framework = hitting_framework(instance, q)
    is_cause = framework is not None and any(t in e for e in framework.edges)
    if v == 0:
        return is_cause
    if not is_cause:
        return False
    return exists_hs_within(framework, v.denominator - 1, forced=t)


def decide_mrcd(instance: Instance, q: UCQ, t: GroundTuple) -> bool:
    """Decide whether t is a cause of maximal responsibility."""
    _require_endogenous(instance, t)
    framework = hitting_framework(instance, q)
    if framework is None or not framework.edges:
        return False
    return exists_hs_within(framework, min_hs_size(framework), forced=t)


@dataclass(frozen=True)
class CauseReport:
    """Per-tuple verdict: causehood, exact responsibility, and (on request)
    the minimal contingency sets."""

    tuple: GroundTuple
    is_cause: bool
    responsibility: Fraction
    contingencies: Optional[tuple[frozenset[GroundTuple], ...]] = None


def cause_report(
    instance: Instance,
    q: UCQ,
    t: GroundTuple,
    *,
    with_contingencies: bool = False,
    max_results: Optional[int] = None,
) -> CauseReport:
    rho = responsibility(instance, q, t)
    contingencies = None
    if with_contingencies:
        contingencies = tuple(minimal_contingencies(instance, q, t, max_results=max_results))
    return CauseReport(t, rho > 0, rho, contingencies)


def encode_graph(
    vertices: Iterable[str],
    edges: Iterable[tuple[str, str]],
    v: str,
) -> tuple[Instance, Disjunct, GroundTuple]:
    """Encode a graph so that the responsibility of one tuple reads off the
    minimum vertex cover through a chosen vertex.

    Vertices become `ver` facts; each undirected edge becomes n copies of an
    `edges` fact under distinct labels 1..n|E| (n = vertex count), assigned
    in canonical edge order. Returns the all-endogenous instance, the query
    asking for two covered endpoints of some edge, and the tuple ver(v);
    the responsibility of ver(v) is 1 / (smallest minimal vertex cover
    through v).
    """
    vs = sorted(set(vertices))
    if v not in vs:
        raise CausekitError(f"vertex {v!r} not in the graph")
    normalized = []
    for a, b in edges:
        if a == b:
            raise CausekitError(f"self-loop at {a!r} is not supported")
        if a not in vs or b not in vs:
            raise CausekitError(f"edge ({a!r},{b!r}) mentions unknown vertices")
        normalized.append((a, b) if a < b else (b, a))
    edge_list = sorted(set(normalized))
    n = len(vs)
    facts = {GroundTuple("ver", (u,)) for u in vs}
    label = 0
    for a, b in edge_list:
        for _ in range(n):
            label += 1
            facts.add(GroundTuple("edges", (a, b, str(label))))
    instance = Instance(frozenset(facts), frozenset())
    x, y, e = Variable("V1"), Variable("V2"), Variable("E")
    disjunct = Disjunct(
        (
            QueryAtom("ver", (x,)),
            QueryAtom("ver", (y,)),
            QueryAtom("edges", (x, y, e)),
        )
    )
    return instance, disjunct, GroundTuple("ver", (v,))


def _require_endogenous(instance: Instance, t: GroundTuple) -> None:
    if t not in instance.endo:
        raise CausekitError(f"tuple {t} is not an endogenous tuple of the instance")
