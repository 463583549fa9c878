"""Command-line front end: file loading, report formatting, exit codes.

Exit status: 0 on success, 1 on domain errors (parse failures, unknown
tuples, resource limits), 2 on usage errors. JSON output is byte-stable
across runs for identical inputs; every collection is canonically sorted
and responsibilities are rendered as "numerator/denominator" strings.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import Sequence

from . import causal, cqa, diagnosis, oracle, repair
from .errors import CausekitError, ResourceLimitError
from .model import GroundTuple, Instance, canonical_sort, parse_fact, parse_instance, serialize_instance
from .query import (
    UCQ,
    DenialConstraint,
    Disjunct,
    bcq_to_dc,
    dc_to_bcq,
    dcs_to_ucq,
    format_program,
    parse_program,
)


def main(argv: Sequence[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        lines, payload = args.handler(args)
    except ResourceLimitError as exc:
        print(f"error: resource limit exceeded: {exc}", file=sys.stderr)
        return 1
    except (CausekitError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    if getattr(args, "json", False):
        print(json.dumps(payload, separators=(",", ":")))
    else:
        for line in lines:
            print(line)
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="causekit",
        description="Causes, responsibilities, repairs, diagnoses, and consistent answers "
        "for boolean conjunctive queries over relational instances.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def cmd(name, handler, help_, *, instance=True, query=True):
        p = sub.add_parser(name, help=help_)
        if instance:
            p.add_argument("--instance", required=True, metavar="FILE")
        if query:
            p.add_argument("--query", required=True, metavar="FILE")
        p.add_argument("--json", action="store_true", help="emit a JSON report")
        p.set_defaults(handler=handler)
        return p

    cmd("causes", _cmd_causes, "list the actual causes for the query answer")

    p = cmd("responsibility", _cmd_responsibility, "responsibility of one tuple")
    p.add_argument("--tuple", required=True, metavar="T")

    p = cmd("contingency", _cmd_contingency, "minimal contingency sets of one tuple")
    p.add_argument("--tuple", required=True, metavar="T")
    p.add_argument("--limit", type=int, metavar="N", help="abort beyond N result sets")

    cmd("mrc", _cmd_mrc, "most responsible causes")

    p = cmd("repairs", _cmd_repairs, "repairs with respect to the constraints")
    p.add_argument("--semantics", choices=("s", "c"), default="s")
    p.add_argument("--limit", type=int, metavar="N", help="abort beyond N repairs")

    p = cmd("repair-check", _cmd_repair_check, "check a candidate subset repair")
    p.add_argument("--candidate", required=True, metavar="FILE")

    p = cmd("repair-size", _cmd_repair_size, "is there a repair of size >= M excluding T?")
    p.add_argument("--tuple", required=True, metavar="T")
    p.add_argument("--min", required=True, type=int, metavar="M", dest="minimum")

    p = cmd("cqa", _cmd_cqa, "consistent answer for a ground conjunction")
    p.add_argument("--semantics", choices=("s", "c"), default="s")
    p.add_argument("--atoms", required=True, metavar="FILE")

    p = cmd("diagnose", _cmd_diagnose, "minimal diagnoses for the observed query")
    p.add_argument("--tuple", metavar="T")
    p.add_argument("--minimality", choices=("s", "c"), default="s")

    cmd("emit-theory", _cmd_emit_theory, "print the diagnosis system description")

    p = cmd("encode-graph", _cmd_encode_graph, "encode a vertex-cover question as an instance",
            instance=False, query=False)
    p.add_argument("--graph", required=True, metavar="FILE")
    p.add_argument("--vertex", required=True, metavar="V")

    o = sub.add_parser("oracle", help="brute-force reference computations")
    osub = o.add_subparsers(dest="mode", required=True)

    def oracle_cmd(name, handler, *, tuple_flag=False, semantics=False):
        p = osub.add_parser(name)
        p.add_argument("--instance", required=True, metavar="FILE")
        p.add_argument("--query", required=True, metavar="FILE")
        p.add_argument("--json", action="store_true")
        p.add_argument("--cap", type=int, default=oracle.DEFAULT_CAP, metavar="N")
        if tuple_flag:
            p.add_argument("--tuple", required=True, metavar="T")
        if semantics:
            p.add_argument("--semantics", choices=("s", "c"), default="s")
        p.set_defaults(handler=handler)
        return p

    oracle_cmd("causes", _cmd_oracle_causes)
    oracle_cmd("responsibility", _cmd_oracle_responsibility, tuple_flag=True)
    oracle_cmd("contingencies", _cmd_oracle_contingencies, tuple_flag=True)
    oracle_cmd("repairs", _cmd_oracle_repairs, semantics=True)
    oracle_cmd("min-hs", _cmd_oracle_min_hs, tuple_flag=True)

    return parser


# --- input loading -----------------------------------------------------------


def _read(path: str) -> str:
    with open(path, encoding="utf-8") as handle:
        return handle.read()


def _load_instance(args) -> Instance:
    return parse_instance(_read(args.instance))


def _load_program(args) -> UCQ | list[DenialConstraint]:
    return parse_program(_read(args.query))


def _as_ucq(program) -> UCQ:
    if isinstance(program, UCQ):
        return program
    return dcs_to_ucq(program)


def _as_dcs(program) -> list[DenialConstraint]:
    if isinstance(program, UCQ):
        return [bcq_to_dc(d) for d in program.disjuncts]
    return program


def _as_single_dc(program) -> DenialConstraint:
    dcs = _as_dcs(program)
    if len(dcs) != 1:
        raise CausekitError(f"expected exactly one constraint, found {len(dcs)}")
    return dcs[0]


def _as_single_bcq(program) -> Disjunct:
    if isinstance(program, UCQ):
        if len(program.disjuncts) != 1:
            raise CausekitError(
                f"expected a single conjunctive query, found {len(program.disjuncts)} disjuncts"
            )
        return program.disjuncts[0]
    return dc_to_bcq(_as_single_dc(program))


def _load_tuple(args) -> GroundTuple:
    return parse_fact(args.tuple)


# --- rendering ---------------------------------------------------------------


def _fraction_str(value: Fraction) -> str:
    return f"{value.numerator}/{value.denominator}"


def _tuple_list(tuples) -> list[str]:
    return [str(t) for t in canonical_sort(tuples)]


def _set_text(tuples) -> str:
    return "{" + ", ".join(_tuple_list(tuples)) + "}"


# --- handlers ----------------------------------------------------------------


def _cmd_causes(args):
    instance = _load_instance(args)
    q = _as_ucq(_load_program(args))
    found = _tuple_list(causal.actual_causes(instance, q))
    return found, {"causes": found}


def _cmd_responsibility(args):
    instance = _load_instance(args)
    q = _as_ucq(_load_program(args))
    t = _load_tuple(args)
    rho = causal.responsibility(instance, q, t)
    return [str(rho)], {"tuple": str(t), "responsibility": _fraction_str(rho)}


def _cmd_contingency(args):
    instance = _load_instance(args)
    q = _as_ucq(_load_program(args))
    t = _load_tuple(args)
    sets = causal.minimal_contingencies(instance, q, t, max_results=args.limit)
    return [_set_text(s) for s in sets], {
        "tuple": str(t),
        "contingencies": [_tuple_list(s) for s in sets],
    }


def _cmd_mrc(args):
    instance = _load_instance(args)
    q = _as_ucq(_load_program(args))
    top = causal.most_responsible(instance, q)
    rho = Fraction(0)
    if top:
        rho = causal.responsibility(instance, q, next(iter(top)))
    return _tuple_list(top), {
        "most_responsible": _tuple_list(top),
        "responsibility": _fraction_str(rho),
    }


def _cmd_repairs(args):
    instance = _load_instance(args)
    dcs = _as_dcs(_load_program(args))
    found = repair.repairs(instance, dcs, args.semantics, max_results=args.limit)
    lines = [f"removed: {_set_text(r.removed)} kept: {_set_text(r.kept)}" for r in found]
    return lines, {
        "semantics": args.semantics,
        "repairs": [
            {"kept": _tuple_list(r.kept), "removed": _tuple_list(r.removed)} for r in found
        ],
    }


def _cmd_repair_check(args):
    instance = _load_instance(args)
    dcs = _as_dcs(_load_program(args))
    candidate = parse_instance(_read(args.candidate)).tuples
    verdict = repair.is_s_repair(instance, dcs, candidate)
    return [str(verdict).lower()], {
        "candidate": _tuple_list(candidate),
        "is_s_repair": verdict,
    }


def _cmd_repair_size(args):
    instance = _load_instance(args)
    dc = _as_single_dc(_load_program(args))
    t = _load_tuple(args)
    verdict = repair.repair_size_at_least(instance, dc, t, args.minimum)
    return [str(verdict).lower()], {
        "tuple": str(t),
        "min": args.minimum,
        "satisfied": verdict,
    }


def _cmd_cqa(args):
    instance = _load_instance(args)
    dcs = _as_dcs(_load_program(args))
    atoms = canonical_sort(parse_instance(_read(args.atoms)).tuples)
    if not atoms:
        raise CausekitError("the atoms file contains no facts")
    verdict = cqa.consistent_answer(
        instance, dcs, cqa.GroundConjunction(tuple(atoms)), args.semantics
    )
    return [str(verdict).lower()], {
        "semantics": args.semantics,
        "atoms": [str(a) for a in atoms],
        "consistent": verdict,
    }


def _cmd_diagnose(args):
    instance = _load_instance(args)
    q = _as_single_bcq(_load_program(args))
    problem = diagnosis.build(instance, q)
    t = parse_fact(args.tuple) if args.tuple else None
    found = diagnosis.diagnoses(problem, t, args.minimality)
    payload = {
        "minimality": args.minimality,
        "diagnoses": [_tuple_list(d.delta) for d in found],
    }
    if t is not None:
        payload = {"tuple": str(t), **payload}
    return [_set_text(d.delta) for d in found], payload


def _cmd_emit_theory(args):
    instance = _load_instance(args)
    q = _as_single_bcq(_load_program(args))
    problem = diagnosis.build(instance, q)
    return problem.sd_text.splitlines(), {"theory": problem.sd_text}


def _cmd_encode_graph(args):
    vertices, edges = _parse_graph(_read(args.graph))
    instance, disjunct, t = causal.encode_graph(vertices, edges, args.vertex)
    instance_text = serialize_instance(instance)
    query_text = format_program(UCQ((disjunct,)))
    lines = instance_text.splitlines() + [""] + query_text.splitlines() + ["", str(t)]
    return lines, {
        "instance": instance_text,
        "query": query_text,
        "tuple": str(t),
    }


def _parse_graph(text: str) -> tuple[list[str], list[tuple[str, str]]]:
    """One edge per line as `u v`; a lone label is an isolated vertex."""
    vertices: list[str] = []
    edges: list[tuple[str, str]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("%", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) == 1:
            vertices.append(parts[0])
        elif len(parts) == 2:
            vertices.extend(parts)
            edges.append((parts[0], parts[1]))
        else:
            raise CausekitError(f"graph file line {lineno}: expected 'u v' or a lone vertex")
    return vertices, edges


def _cmd_oracle_causes(args):
    instance = _load_instance(args)
    q = _as_ucq(_load_program(args))
    found = _tuple_list(oracle.causes(instance, q, cap=args.cap))
    return found, {"causes": found}


def _cmd_oracle_responsibility(args):
    instance = _load_instance(args)
    q = _as_ucq(_load_program(args))
    t = _load_tuple(args)
    rho = oracle.responsibility(instance, q, t, cap=args.cap)
    return [str(rho)], {"tuple": str(t), "responsibility": _fraction_str(rho)}


def _cmd_oracle_contingencies(args):
    instance = _load_instance(args)
    q = _as_ucq(_load_program(args))
    t = _load_tuple(args)
    sets = oracle.contingencies(instance, q, t, cap=args.cap)
    return [_set_text(s) for s in sets], {
        "tuple": str(t),
        "contingencies": [_tuple_list(s) for s in sets],
    }


def _cmd_oracle_repairs(args):
    instance = _load_instance(args)
    dcs = _as_dcs(_load_program(args))
    kept_sets = oracle.repairs(instance, dcs, args.semantics, cap=args.cap)
    everything = instance.tuples
    lines = [
        f"removed: {_set_text(everything - kept)} kept: {_set_text(kept)}"
        for kept in kept_sets
    ]
    return lines, {
        "semantics": args.semantics,
        "repairs": [
            {"kept": _tuple_list(kept), "removed": _tuple_list(everything - kept)}
            for kept in kept_sets
        ],
    }


def _cmd_oracle_min_hs(args):
    instance = _load_instance(args)
    q = _as_ucq(_load_program(args))
    t = _load_tuple(args)
    framework = causal.hitting_framework(instance, q)
    if framework is None:
        raise CausekitError("the query holds on exogenous tuples alone; no hitting sets")
    size = oracle.min_hs(
        framework.vertices, framework.edges, forced=t, essential=True, cap=args.cap
    )
    return [str(size)], {"tuple": str(t), "min_hs_size": size}


if __name__ == "__main__":
    sys.exit(main())
