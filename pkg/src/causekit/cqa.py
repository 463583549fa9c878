"""Consistent answers for ground conjunctions via the cause connection.

A ground conjunction holds in every subset repair exactly when none of its
atoms is an actual cause for the violation view; under cardinality repairs,
when none is a most responsible cause. Only projection-free, fully ground
queries are supported.
"""

from __future__ import annotations

from dataclasses import dataclass

from .causal import actual_causes, most_responsible
from .errors import CausekitError
from .model import GroundTuple, Instance
from .query import DenialConstraint, dcs_to_ucq
from .repair import check_semantics


@dataclass(frozen=True)
class GroundConjunction:
    """A conjunction of ground facts; the instantiation of a projection-free query."""

    atoms: tuple[GroundTuple, ...]

    def __post_init__(self) -> None:
        if not self.atoms:
            raise CausekitError("a ground conjunction needs at least one atom")


def consistent_answer(
    instance: Instance,
    constraints: list[DenialConstraint],
    g: GroundConjunction,
    semantics: str = "s",
) -> bool:
    """True iff the conjunction holds in every repair of the chosen semantics.

    The instance is treated as all-endogenous. Atoms absent from the
    instance simply make the answer false.
    """
    semantics = check_semantics(semantics)
    view = instance.all_endogenous()
    violation = dcs_to_ucq(constraints)
    if semantics == "s":
        excluded = actual_causes(view, violation)
    else:
        excluded = most_responsible(view, violation)
    facts = view.endo
    return all(a in facts and a not in excluded for a in g.atoms)
