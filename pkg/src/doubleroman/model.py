"""Solver-agnostic ILP/MIP models with exact rational data, plus LP-format text I/O.

Coefficients are stored as fractions.Fraction; the only denominators the
model builders produce are 1 and 2, so every number round-trips exactly
through the text format.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction

BINARY = "binary"
CONTINUOUS = "continuous"

GE = ">="
LE = "<="
EQ = "="

_NAME_RE = re.compile(r"[A-Za-z_][A-Za-z0-9_]*\Z")


class LpParseError(ValueError):
    """Malformed LP text; carries the offending 1-based line number."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


@dataclass(frozen=True)
class Variable:
    id: int
    name: str
    lower: Fraction | None
    upper: Fraction | None
    integrality: str

    def __post_init__(self):
        if not _NAME_RE.match(self.name):
            raise ValueError(f"invalid variable name {self.name!r}")
        if self.integrality not in (BINARY, CONTINUOUS):
            raise ValueError(f"unknown integrality {self.integrality!r}")
        if self.integrality == BINARY and (self.lower != 0 or self.upper != 1):
            raise ValueError("binary variables must have bounds [0, 1]")
        if self.lower is not None and self.upper is not None and self.lower > self.upper:
            raise ValueError(f"variable {self.name}: lower bound exceeds upper bound")


@dataclass(frozen=True)
class LinearConstraint:
    name: str
    terms: tuple[tuple[int, Fraction], ...]
    sense: str
    rhs: Fraction

    def __post_init__(self):
        if self.sense not in (GE, LE, EQ):
            raise ValueError(f"unknown sense {self.sense!r}")
        seen = set()
        for vid, coef in self.terms:
            if vid in seen:
                raise ValueError(f"constraint {self.name}: duplicate variable id {vid}")
            seen.add(vid)
            if coef == 0:
                raise ValueError(f"constraint {self.name}: zero coefficient")


@dataclass(frozen=True)
class IlpModel:
    variables: tuple[Variable, ...]
    constraints: tuple[LinearConstraint, ...]
    objective: tuple[tuple[int, Fraction], ...]
    metadata: dict = field(default_factory=dict, compare=False)

    def __post_init__(self):
        ids = {v.id for v in self.variables}
        if len(ids) != len(self.variables):
            raise ValueError("duplicate variable ids")
        names = {v.name for v in self.variables}
        if len(names) != len(self.variables):
            raise ValueError("duplicate variable names")
        for vid, _ in self.objective:
            if vid not in ids:
                raise ValueError(f"objective references unknown variable id {vid}")
        for con in self.constraints:
            for vid, _ in con.terms:
                if vid not in ids:
                    raise ValueError(
                        f"constraint {con.name} references unknown variable id {vid}"
                    )

    def num_binary(self) -> int:
        return sum(1 for v in self.variables if v.integrality == BINARY)

    def num_continuous(self) -> int:
        return sum(1 for v in self.variables if v.integrality == CONTINUOUS)

    def variable_by_name(self, name: str) -> Variable:
        for v in self.variables:
            if v.name == name:
                return v
        raise KeyError(name)

    def structure_equal(self, other: "IlpModel") -> bool:
        """Term-for-term equality of variables, constraints and objective."""
        return (
            self.variables == other.variables
            and self.constraints == other.constraints
            and self.objective == other.objective
        )


def _format_rational(x: Fraction) -> str:
    if x.denominator == 1:
        return str(x.numerator)
    den = x.denominator
    twos = fives = 0
    while den % 2 == 0:
        den //= 2
        twos += 1
    while den % 5 == 0:
        den //= 5
        fives += 1
    if den != 1:
        raise ValueError(f"rational {x} has no exact decimal form")
    k = max(twos, fives)
    digits = x.numerator * 10**k // x.denominator
    sign = "-" if digits < 0 else ""
    s = str(abs(digits)).rjust(k + 1, "0")
    return f"{sign}{s[:-k]}.{s[-k:]}".rstrip("0")


def _format_terms(terms, names) -> str:
    parts = []
    for idx, (vid, coef) in enumerate(terms):
        mag = abs(coef)
        body = names[vid] if mag == 1 else f"{_format_rational(mag)} {names[vid]}"
        if idx == 0:
            parts.append(f"- {body}" if coef < 0 else body)
        else:
            parts.append(f"- {body}" if coef < 0 else f"+ {body}")
    return " ".join(parts)


def export_lp(model: IlpModel) -> str:
    """Serialize to the minimal LP dialect (Minimize/Subject To/Bounds/Binary/End)."""
    names = {v.id: v.name for v in model.variables}
    lines = ["Minimize", f" obj: {_format_terms(model.objective, names)}", "Subject To"]
    for con in model.constraints:
        lines.append(
            f" {con.name}: {_format_terms(con.terms, names)} {con.sense} {_format_rational(con.rhs)}"
        )
    continuous = [v for v in model.variables if v.integrality == CONTINUOUS]
    if continuous:
        lines.append("Bounds")
        for v in continuous:
            if v.lower is not None and v.upper is not None:
                lines.append(
                    f" {_format_rational(v.lower)} <= {v.name} <= {_format_rational(v.upper)}"
                )
            elif v.lower is not None:
                lines.append(f" {v.name} >= {_format_rational(v.lower)}")
            elif v.upper is not None:
                lines.append(f" {v.name} <= {_format_rational(v.upper)}")
            else:
                lines.append(f" {v.name} free")
    binaries = [v for v in model.variables if v.integrality == BINARY]
    if binaries:
        lines.append("Binary")
        for v in binaries:
            lines.append(f" {v.name}")
    lines.append("End")
    return "\n".join(lines) + "\n"


_TOKEN_RE = re.compile(r"(<=|>=|=|[+-])|(\d+(?:\.\d+)?)|([A-Za-z_][A-Za-z0-9_]*)|(\S)")


def _tokenize(text: str, lineno: int):
    tokens = []
    for m in _TOKEN_RE.finditer(text):
        op, num, name, junk = m.groups()
        if junk is not None:
            raise LpParseError(f"unexpected character {junk!r}", lineno)
        if op is not None:
            tokens.append(("op", op))
        elif num is not None:
            tokens.append(("num", Fraction(num)))
        else:
            tokens.append(("name", name))
    return tokens


def _parse_terms(tokens, lineno, stop_at_sense=False):
    """Parse '[+|-] [coef] var ...'; returns (terms, rest-of-tokens)."""
    terms = []
    i = 0
    sign = Fraction(1)
    pending_num = None
    have_sign = False
    while i < len(tokens):
        kind, value = tokens[i]
        if kind == "op" and value in (GE, LE, EQ):
            break
        if kind == "op":
            if have_sign or pending_num is not None:
                raise LpParseError("misplaced sign", lineno)
            sign = Fraction(-1) if value == "-" else Fraction(1)
            have_sign = True
        elif kind == "num":
            if pending_num is not None:
                raise LpParseError("two consecutive numbers", lineno)
            pending_num = value
        else:
            coef = sign * (pending_num if pending_num is not None else Fraction(1))
            terms.append((value, coef))
            sign = Fraction(1)
            pending_num = None
            have_sign = False
        i += 1
    if pending_num is not None or have_sign:
        raise LpParseError("dangling coefficient", lineno)
    if stop_at_sense:
        return terms, tokens[i:]
    if i != len(tokens):
        raise LpParseError("unexpected trailing tokens", lineno)
    return terms, []


def import_lp(text: str) -> IlpModel:
    """Parse the LP dialect back to a model.

    Variables not listed under Bounds or Binary stay continuous and free;
    import_lp(export_lp(m)) is term-for-term identical to m for every model
    this package builds.
    """
    var_ids: dict[str, int] = {}
    var_order: list[str] = []

    def vid_of(name: str) -> int:
        if name not in var_ids:
            var_ids[name] = len(var_order)
            var_order.append(name)
        return var_ids[name]

    objective: list[tuple[int, Fraction]] = []
    constraints: list[LinearConstraint] = []
    bounds: dict[str, tuple[Fraction | None, Fraction | None]] = {}
    binaries: set[str] = set()
    seen_constraint_names: set[str] = set()

    section = None
    saw_end = False
    saw_objective = False

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        if saw_end:
            raise LpParseError("content after End", lineno)
        if line in ("Minimize", "Subject To", "Bounds", "Binary", "Generals", "End"):
            section = line
            if line == "End":
                saw_end = True
            continue
        if section is None:
            raise LpParseError("expected a section keyword", lineno)
        if section == "Minimize":
            if ":" not in line:
                raise LpParseError("objective must look like 'obj: <terms>'", lineno)
            if saw_objective:
                raise LpParseError("duplicate objective line", lineno)
            saw_objective = True
            _, expr = line.split(":", 1)
            terms, _ = _parse_terms(_tokenize(expr, lineno), lineno)
            objective = [(vid_of(name), coef) for name, coef in terms]
        elif section == "Subject To":
            if ":" not in line:
                raise LpParseError("constraint must look like 'name: <terms> <sense> <rhs>'", lineno)
            cname, expr = line.split(":", 1)
            cname = cname.strip()
            if not _NAME_RE.match(cname):
                raise LpParseError(f"invalid constraint name {cname!r}", lineno)
            if cname in seen_constraint_names:
                raise LpParseError(f"duplicate constraint name {cname!r}", lineno)
            seen_constraint_names.add(cname)
            tokens = _tokenize(expr, lineno)
            terms, rest = _parse_terms(tokens, lineno, stop_at_sense=True)
            if not rest or rest[0][0] != "op":
                raise LpParseError("missing constraint sense", lineno)
            sense = rest[0][1]
            rhs_tokens = rest[1:]
            neg = False
            if len(rhs_tokens) == 2 and rhs_tokens[0] == ("op", "-"):
                neg = True
                rhs_tokens = rhs_tokens[1:]
            if len(rhs_tokens) != 1 or rhs_tokens[0][0] != "num":
                raise LpParseError("right-hand side must be a number", lineno)
            rhs = -rhs_tokens[0][1] if neg else rhs_tokens[0][1]
            constraints.append(
                LinearConstraint(
                    name=cname,
                    terms=tuple((vid_of(name), coef) for name, coef in terms),
                    sense=sense,
                    rhs=rhs,
                )
            )
        elif section == "Bounds":
            tokens = _tokenize(line, lineno)
            lo: Fraction | None = None
            hi: Fraction | None = None
            name = None
            if (
                len(tokens) == 5
                and tokens[0][0] == "num"
                and tokens[1] == ("op", LE)
                and tokens[2][0] == "name"
                and tokens[3] == ("op", LE)
                and tokens[4][0] == "num"
            ):
                lo, name, hi = tokens[0][1], tokens[2][1], tokens[4][1]
            elif len(tokens) == 3 and tokens[0][0] == "name" and tokens[2][0] == "num":
                name = tokens[0][1]
                if tokens[1] == ("op", GE):
                    lo = tokens[2][1]
                elif tokens[1] == ("op", LE):
                    hi = tokens[2][1]
                else:
                    raise LpParseError("malformed bound", lineno)
            elif len(tokens) == 2 and tokens[0][0] == "name" and tokens[1] == ("name", "free"):
                name = tokens[0][1]
            else:
                raise LpParseError("malformed bound", lineno)
            if name not in var_ids:
                raise LpParseError(f"bound for unknown variable {name!r}", lineno)
            if name in bounds:
                raise LpParseError(f"duplicate bound for {name!r}", lineno)
            bounds[name] = (lo, hi)
        elif section in ("Binary", "Generals"):
            tokens = _tokenize(line, lineno)
            for kind, name in tokens:
                if kind != "name":
                    raise LpParseError("expected variable names", lineno)
                if name not in var_ids:
                    raise LpParseError(f"unknown variable {name!r}", lineno)
                if section == "Binary":
                    binaries.add(name)

    if not saw_end:
        raise LpParseError("missing End")
    if not saw_objective:
        raise LpParseError("missing objective")

    variables = []
    for name in var_order:
        if name in binaries:
            if name in bounds:
                raise LpParseError(f"variable {name!r} is both bounded and binary")
            variables.append(
                Variable(var_ids[name], name, Fraction(0), Fraction(1), BINARY)
            )
        elif name in bounds:
            lo, hi = bounds[name]
            variables.append(Variable(var_ids[name], name, lo, hi, CONTINUOUS))
        else:
            variables.append(Variable(var_ids[name], name, None, None, CONTINUOUS))

    return IlpModel(
        variables=tuple(variables),
        constraints=tuple(constraints),
        objective=tuple(objective),
        metadata={},
    )
