"""Ground tuples, partitioned instances, canonical ordering, and the instance file format.

An instance is a finite set of ground facts split into an endogenous part
(tuples admissible as causes) and an exogenous part (fixed background
tuples). Instances are immutable after construction and safe to share.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Iterable, Mapping

from ._scan import TokenStream, is_constant_word, tokenize, unquote
from .errors import CausekitError, ParseError

_PLAIN_CONSTANT = re.compile(r"[a-z0-9][A-Za-z0-9_]*\Z")


def format_constant(symbol: str) -> str:
    """Render a constant, quoting it when it does not match the bare grammar."""
    if _PLAIN_CONSTANT.match(symbol):
        return symbol
    escaped = symbol.replace("\\", "\\\\").replace('"', '\\"')
    return f'"{escaped}"'


@dataclass(frozen=True, order=True)
class GroundTuple:
    """A ground fact: relation name plus a tuple of constant symbols.

    Ordering is the canonical one used for all serialized output:
    lexicographic by relation name, then by arguments left to right.
    """

    relation: str
    args: tuple[str, ...]

    def __str__(self) -> str:
        return f"{self.relation}({','.join(format_constant(a) for a in self.args)})"

    def __repr__(self) -> str:
        return str(self)


def canonical_sort(tuples: Iterable[GroundTuple]) -> list[GroundTuple]:
    """Sort tuples into the canonical order used by every serialized collection."""
    return sorted(tuples)


@dataclass(frozen=True)
class Instance:
    """A database instance partitioned into endogenous and exogenous tuples.

    `spelling` maps a lower-cased relation name to the spelling first seen in
    the input; it only affects serialization and takes no part in equality.
    """

    endo: frozenset[GroundTuple]
    exo: frozenset[GroundTuple]
    spelling: Mapping[str, str] = field(default_factory=dict, compare=False, repr=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "endo", frozenset(self.endo))
        object.__setattr__(self, "exo", frozenset(self.exo))
        overlap = self.endo & self.exo
        if overlap:
            facts = ", ".join(str(t) for t in canonical_sort(overlap))
            raise CausekitError(f"fact in both partitions: {facts}")
        arities: dict[str, int] = {}
        for t in self.endo | self.exo:
            seen = arities.setdefault(t.relation, len(t.args))
            if seen != len(t.args):
                raise CausekitError(
                    f"arity conflict for relation '{t.relation}': {seen} vs {len(t.args)}"
                )

    @property
    def tuples(self) -> frozenset[GroundTuple]:
        return self.endo | self.exo

    def arities(self) -> dict[str, int]:
        return {t.relation: len(t.args) for t in self.tuples}

    def constants(self) -> set[str]:
        return {a for t in self.tuples for a in t.args}

    def all_endogenous(self) -> "Instance":
        """The same facts with every tuple treated as endogenous."""
        return Instance(self.endo | self.exo, frozenset(), self.spelling)

    def __len__(self) -> int:
        return len(self.endo) + len(self.exo)


def parse_instance(text: str) -> Instance:
    """Parse instance text: facts `rel(c1,...,ck).` under optional
    `[endogenous]` / `[exogenous]` section headers.

    Facts before any header are endogenous. Duplicates within a section are
    collapsed silently; the same fact in both sections is an error, as is an
    arity conflict for a relation.
    """
    stream = TokenStream(tokenize(text))
    section_endo = True
    endo: set[GroundTuple] = set()
    exo: set[GroundTuple] = set()
    arities: dict[str, int] = {}
    spelling: dict[str, str] = {}
    while not stream.at_end():
        tok = stream.peek()
        if tok.text == "[":
            stream.advance()
            name = stream.peek()
            if name.text not in ("endogenous", "exogenous"):
                raise stream.error("expected section name 'endogenous' or 'exogenous'")
            stream.advance()
            stream.expect("]")
            section_endo = name.text == "endogenous"
            continue
        fact, where = _parse_fact(stream, arities, spelling)
        stream.expect(".", "'.' after fact")
        target, other = (endo, exo) if section_endo else (exo, endo)
        if fact in other:
            raise ParseError(f"fact {fact} appears in both partitions", where.line, where.column)
        target.add(fact)
    return Instance(frozenset(endo), frozenset(exo), spelling)


def parse_fact(text: str) -> GroundTuple:
    """Parse a single fact, as used for tuples on the command line.

    The trailing period is optional.
    """
    stream = TokenStream(tokenize(text))
    fact, _ = _parse_fact(stream, {}, {})
    if stream.peek().text == ".":
        stream.advance()
    if not stream.at_end():
        raise stream.error("unexpected input after fact")
    return fact


def _parse_fact(stream: TokenStream, arities: dict[str, int], spelling: dict[str, str]):
    tok = stream.peek()
    if tok.kind != "word" or not tok.text[0].isalpha():
        found = "end of input" if tok.kind == "end" else repr(tok.text)
        raise stream.error(f"expected a relation name, found {found}")
    stream.advance()
    relation = tok.text.lower()
    spelling.setdefault(relation, tok.text)
    stream.expect("(", "'(' after relation name")
    args = [_parse_constant(stream)]
    while stream.peek().text == ",":
        stream.advance()
        args.append(_parse_constant(stream))
    stream.expect(")")
    seen = arities.setdefault(relation, len(args))
    if seen != len(args):
        raise ParseError(
            f"arity conflict for relation '{relation}': {seen} vs {len(args)}",
            tok.line,
            tok.column,
        )
    return GroundTuple(relation, tuple(args)), tok


def _parse_constant(stream: TokenStream) -> str:
    tok = stream.peek()
    if tok.kind == "quoted":
        stream.advance()
        return unquote(tok.text)
    if tok.kind == "word" and is_constant_word(tok.text):
        stream.advance()
        return tok.text
    raise stream.error("expected a constant (lower-case/digit word or quoted string)")


def serialize_instance(instance: Instance) -> str:
    """Render an instance in the file format; parsing the result round-trips.

    Relation names use the spelling first seen when the instance was parsed.
    """
    lines: list[str] = []

    def emit(tuples: frozenset[GroundTuple]) -> None:
        for t in canonical_sort(tuples):
            rel = instance.spelling.get(t.relation, t.relation)
            lines.append(f"{rel}({','.join(format_constant(a) for a in t.args)}).")

    if instance.exo:
        if instance.endo:
            lines.append("[endogenous]")
            emit(instance.endo)
        lines.append("[exogenous]")
        emit(instance.exo)
    else:
        emit(instance.endo)
    return "\n".join(lines) + ("\n" if lines else "")
