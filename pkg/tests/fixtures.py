"""Shared test fixtures: small worked instances and queries."""

from causekit import parse_fact, parse_instance, parse_program

# A six-tuple instance with one counterfactual cause for the two-hop query.
CHAIN_DB = "s(a4). s(a2). s(a3). r(a4,a3). r(a2,a1). r(a3,a3)."
CHAIN_Q = "q :- s(X), r(X,Y), s(Y)."

# Two denial constraints sharing the p relation; one tuple violates both.
PQR_DB = "p(a). p(e). q(a,b). r(a,c)."
PQR_DCS = ":- p(X), q(X,Y).  :- p(X), r(X,Y)."
PQR_UCQ = "q :- p(X), q(X,Y).  q :- p(X), r(X,Y)."
# The same facts with the violating witnesses exogenous.
PQR_SPLIT_DB = "[endogenous] p(a). r(a,c). [exogenous] p(e). q(a,b)."

# A three-tuple instance whose only support mixes both partitions.
TRIO_SPLIT_DB = "[endogenous] s(a4). s(a3). [exogenous] r(a4,a3)."
TRIO_DB = "s(a4). s(a3). r(a4,a3)."

# One constraint chaining p into r; one tuple stays out of every violation.
PR_DB = "p(a,b). r(b,c). r(a,d)."
PR_DC = ":- p(X,Y), r(Y,Z)."

# A self-join query whose supports overlap on one tuple.
SELFJOIN_DB = "p(a). p(c). r(a,c). r(a,a)."
SELFJOIN_Q = "q :- p(X), r(X,Y), p(Y)."

# Matching family: eight disjoint two-tuple supports.
M8_DB = " ".join(f"a({i}). b({i})." for i in range(1, 9))
M8_Q = "q :- a(X), b(X)."


def f(text):
    return parse_fact(text)


def fs(*texts):
    return frozenset(parse_fact(t) for t in texts)


def inst(text):
    return parse_instance(text)


def ucq(text):
    return parse_program(text)


def dcs(text):
    return parse_program(text)
