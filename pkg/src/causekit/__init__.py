"""Causes, responsibilities, repairs, diagnoses, and consistent answers for
boolean conjunctive queries over relational instances."""

from .causal import (
    CauseReport,
    actual_causes,
    cause_report,
    decide_mrcd,
    decide_rpd,
    encode_graph,
    hitting_framework,
    minimal_contingencies,
    most_responsible,
    responsibility,
)
from .cqa import GroundConjunction, consistent_answer
from .diagnosis import (
    Diagnosis,
    DiagnosisProblem,
    conflict_sets,
    diagnoses,
    repairs_from_diagnoses,
)
from .diagnosis import build as build_diagnosis
from .errors import CausekitError, ParseError, ResourceLimitError
from .hitset import (
    Hypergraph,
    exists_hs_within,
    extend_for_vertex,
    min_hs_size,
    min_hs_size_containing,
    minimal_hitting_sets,
)
from .model import (
    GroundTuple,
    Instance,
    canonical_sort,
    parse_fact,
    parse_instance,
    serialize_instance,
)
from .query import (
    UCQ,
    Constant,
    DenialConstraint,
    Disjunct,
    QueryAtom,
    Variable,
    bcq_to_dc,
    dc_to_bcq,
    dcs_to_ucq,
    parse_program,
)
from .repair import Repair, difference_sets, is_s_repair, repair_size_at_least, repairs
from .support import SupportFamily, endogenous_support, evaluate, support_family

__all__ = [
    "CauseReport",
    "CausekitError",
    "Constant",
    "DenialConstraint",
    "Diagnosis",
    "DiagnosisProblem",
    "Disjunct",
    "GroundConjunction",
    "GroundTuple",
    "Hypergraph",
    "Instance",
    "ParseError",
    "QueryAtom",
    "Repair",
    "ResourceLimitError",
    "SupportFamily",
    "UCQ",
    "Variable",
    "actual_causes",
    "bcq_to_dc",
    "build_diagnosis",
    "canonical_sort",
    "cause_report",
    "conflict_sets",
    "consistent_answer",
    "dc_to_bcq",
    "dcs_to_ucq",
    "decide_mrcd",
    "decide_rpd",
    "diagnoses",
    "difference_sets",
    "encode_graph",
    "endogenous_support",
    "evaluate",
    "exists_hs_within",
    "extend_for_vertex",
    "hitting_framework",
    "is_s_repair",
    "min_hs_size",
    "min_hs_size_containing",
    "minimal_contingencies",
    "minimal_hitting_sets",
    "most_responsible",
    "parse_fact",
    "parse_instance",
    "parse_program",
    "repair_size_at_least",
    "repairs",
    "repairs_from_diagnoses",
    "responsibility",
    "serialize_instance",
    "support_family",
]
