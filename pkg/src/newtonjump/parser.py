"""Germ text -> Support.

Only the zero/nonzero status of coefficients survives parsing; the support
is all the downstream geometry needs.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

from .errors import GermSyntaxError, InvalidInputError

VARIABLES = {2: ("x", "y"), 3: ("x", "y", "z")}

ExponentVector = tuple  # tuple[int, ...] of length 2 or 3

_TOKEN = re.compile(
    r"""
    (?P<ws>\s+)
  | (?P<num>\d+(?:\.\d*)?|\.\d+)
  | (?P<name>[A-Za-z_][A-Za-z_0-9]*)
  | (?P<pow>\*\*|\^)
  | (?P<op>[-+*/])
    """,
    re.VERBOSE,
)


@dataclass(frozen=True)
class Support:
    """Exponents of the monomials of a germ with nonzero coefficient."""

    dimension: int
    points: frozenset

    def __post_init__(self):
        if self.dimension not in VARIABLES:
            raise InvalidInputError(f"dimension must be 2 or 3, got {self.dimension}")
        pts = frozenset(tuple(int(c) for c in p) for p in self.points)
        if not pts:
            raise InvalidInputError("support is empty")
        for p in pts:
            if len(p) != self.dimension:
                raise InvalidInputError(f"point {p} has wrong length for dimension {self.dimension}")
            if any(c < 0 for c in p):
                raise InvalidInputError(f"point {p} has a negative coordinate")
            if not any(p):
                raise InvalidInputError("support contains the origin (constant term)")
        object.__setattr__(self, "points", pts)

    @classmethod
    def of(cls, *points):
        return cls(len(points[0]), frozenset(points))

    def sorted_points(self):
        return sorted(self.points)

    def with_point(self, point):
        return Support(self.dimension, self.points | {tuple(point)})

    def __len__(self):
        return len(self.points)

    def __iter__(self):
        return iter(self.sorted_points())


def _tokenize(text):
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            raise GermSyntaxError(f"unexpected character {text[pos]!r}", pos)
        kind = m.lastgroup
        if kind == "name" and set(m.group()) <= set("xyz"):
            # juxtaposed variables: "xy^2" is x * y^2
            tokens.extend(("name", ch, pos + i) for i, ch in enumerate(m.group()))
        elif kind != "ws":
            tokens.append((kind, m.group(), pos))
        pos = m.end()
    tokens.append(("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text, dimension):
        self.text = text
        self.tokens = _tokenize(text)
        self.i = 0
        self.variables = VARIABLES[dimension]
        self.dimension = dimension

    def peek(self):
        return self.tokens[self.i]

    def take(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect_number(self, what):
        kind, value, pos = self.take()
        if kind != "num":
            raise GermSyntaxError(f"expected {what}, found {value or 'end of input'!r}", pos)
        return value, pos

    def germ(self):
        terms = []
        sign = 1
        kind, value, pos = self.peek()
        if kind == "op" and value in "+-":
            self.take()
            sign = -1 if value == "-" else 1
        terms.append(self.term(sign))
        while True:
            kind, value, pos = self.peek()
            if kind == "end":
                return terms
            if kind == "op" and value in "+-":
                self.take()
                terms.append(self.term(-1 if value == "-" else 1))
            else:
                raise GermSyntaxError(f"expected '+' or '-', found {value!r}", pos)

    def term(self, sign):
        coeff_box = [Fraction(sign)]
        exps = [0] * self.dimension
        start = self.peek()[2]
        self.factor(exps, coeff_box)
        while True:
            kind, value, pos = self.peek()
            if kind == "op" and value == "*":
                self.take()
                self.factor(exps, coeff_box)
            elif kind in ("num", "name"):
                self.factor(exps, coeff_box)
            else:
                break
        return coeff_box[0], tuple(exps), start

    def factor(self, exps, coeff_box):
        kind, value, pos = self.take()
        if kind == "num":
            num = Fraction(value)
            if self.peek()[:2] == ("op", "/"):
                self.take()
                den_text, den_pos = self.expect_number("a denominator")
                den = Fraction(den_text)
                if den == 0:
                    raise GermSyntaxError("division by zero", den_pos)
                num /= den
            coeff_box[0] *= num
        elif kind == "name":
            if value not in self.variables:
                raise GermSyntaxError(
                    f"unknown variable {value!r}; allowed: {', '.join(self.variables)}", pos
                )
            exponent = 1
            if self.peek()[0] == "pow":
                self.take()
                nk, nv, npos = self.peek()
                if nk == "op" and nv == "-":
                    raise GermSyntaxError("negative exponent", npos)
                text, epos = self.expect_number("an exponent")
                if not text.isdigit():
                    raise GermSyntaxError(f"exponent must be a nonnegative integer, got {text!r}", epos)
                exponent = int(text)
            exps[self.variables.index(value)] += exponent
        else:
            raise GermSyntaxError(f"expected a number or variable, found {value or 'end of input'!r}", pos)


def parse_germ(text, dimension=3):
    """Parse ``text`` such as ``"x^11 + y^6 + 3*x*y^3*z^2"`` into its Support.

    Repeated monomials are merged; if their coefficients cancel to zero the
    input is rejected instead of silently dropping the point.
    """
    if dimension not in VARIABLES:
        raise InvalidInputError(f"dimension must be 2 or 3, got {dimension}")
    terms = _Parser(text, dimension).germ()
    totals = {}
    first_pos = {}
    for coeff, exps, pos in terms:
        if coeff == 0:
            raise GermSyntaxError("term with zero coefficient", pos)
        if not any(exps):
            raise GermSyntaxError("constant term; a germ must vanish at the origin", pos)
        totals[exps] = totals.get(exps, 0) + coeff
        first_pos.setdefault(exps, pos)
    for exps, total in totals.items():
        if total == 0:
            raise GermSyntaxError(
                f"coefficients of repeated monomial {format_monomial(exps)} cancel", first_pos[exps]
            )
    return Support(dimension, frozenset(totals))


def format_monomial(exps):
    factors = []
    for var, e in zip(VARIABLES[len(exps)], exps):
        if e == 1:
            factors.append(var)
        elif e > 1:
            factors.append(f"{var}^{e}")
    return "*".join(factors)


def render_support(support):
    """Canonical text: terms in lexicographic exponent order, unit coefficients."""
    return " + ".join(format_monomial(p) for p in support.sorted_points())


def is_convenient(support):
    """True iff every coordinate axis carries a support point."""
    return all(axis_intercept(support.points, k) is not None for k in range(support.dimension))


def axis_intercept(points, axis):
    best = None
    for p in points:
        if all(c == 0 for i, c in enumerate(p) if i != axis):
            if best is None or p[axis] < best:
                best = p[axis]
    return best
