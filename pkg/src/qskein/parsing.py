"""Parsers for the text formats the command line accepts: scalar and
column-polynomial expressions, partition literals, braid words, and chord
matchings.  All errors carry the offending position in the input."""

from fractions import Fraction

from .chords import ChordDiagram
from .diagram_ring import CPoly, gen
from .partitions import Partition
from .scalars import Scalar


class ParseError(ValueError):
    """Syntax error with a 0-based position into the parsed text."""

    def __init__(self, message: str, text: str, pos: int):
        super().__init__("%s at position %d" % (message, pos))
        self.reason = message
        self.text = text
        self.pos = pos

    def annotated(self) -> str:
        """Multi-line rendering with a caret under the offending position."""
        return "%s at position %d\n  %s\n  %s" % (self.reason, self.pos, self.text, " " * self.pos + "^")


class _Scanner:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def error(self, message: str, pos: int | None = None):
        raise ParseError(message, self.text, self.pos if pos is None else pos)

    def skip_space(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip_space()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def take(self) -> str:
        c = self.peek()
        self.pos += 1
        return c

    def expect(self, ch: str):
        if self.peek() != ch:
            self.error("expected '%s'" % ch)
        self.pos += 1

    def at_end(self) -> bool:
        return self.peek() == ""

    def integer(self) -> int:
        self.skip_space()
        start = self.pos
        if self.pos < len(self.text) and self.text[self.pos] in "+-":
            self.pos += 1
        digits = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if self.pos == digits:
            self.error("expected an integer", start)
        return int(self.text[start:self.pos])

    def name(self) -> str:
        self.skip_space()
        start = self.pos
        while self.pos < len(self.text) and (self.text[self.pos].isalnum() or self.text[self.pos] == "_"):
            self.pos += 1
        if self.pos == start:
            self.error("expected a name")
        return self.text[start:self.pos]


# ---------------------------------------------------------------------------
# scalar / column-polynomial expressions
#
# expr   := ['-'] term (('+' | '-') term)*
# term   := factor (('*' | '/') factor)*
# factor := atom ['^' integer]
# atom   := integer | 'x' | 'v' | 's' | 'c'<digits> | '(' expr ')'
#
# Values are carried as column polynomials; purely scalar subexpressions stay
# invertible, so fractions like (s - s^-1)/(v - v^-1) parse fine.


def _atom(sc: _Scanner) -> CPoly:
    c = sc.peek()
    if c == "(":
        sc.take()
        value = _expr(sc)
        sc.expect(")")
        return value
    if c.isdigit():
        return CPoly.one().scale(sc.integer())
    if c.isalpha():
        start = sc.pos
        word = sc.name()
        if word in ("x", "v", "s"):
            exps = {"x": (1, 0, 0), "v": (0, 1, 0), "s": (0, 0, 1)}[word]
            return CPoly.one().scale(Scalar.monomial(*exps))
        if word[0] == "c" and word[1:].isdigit():
            return gen(int(word[1:]))
        sc.error("unknown name '%s'" % word, start)
    sc.error("expected a value")


def _scalar_part(sc: _Scanner, value: CPoly, pos: int) -> Scalar:
    if set(value.terms) - {()}:
        raise ParseError("this operation needs a scalar, not column generators", sc.text, pos)
    return value.coeff(())


def _factor(sc: _Scanner) -> CPoly:
    start = sc.pos
    value = _atom(sc)
    if sc.peek() == "^":
        sc.take()
        n = sc.integer()
        if n < 0:
            return CPoly.one().scale(_scalar_part(sc, value, start) ** n)
        return value ** n
    return value


def _term(sc: _Scanner) -> CPoly:
    value = _factor(sc)
    while True:
        c = sc.peek()
        if c == "*":
            sc.take()
            value = value * _factor(sc)
        elif c == "/":
            sc.take()
            start = sc.pos
            value = value.scale(Scalar.one() / _scalar_part(sc, _factor(sc), start))
        else:
            return value


def _expr(sc: _Scanner) -> CPoly:
    if sc.peek() == "-":
        sc.take()
        value = -_term(sc)
    else:
        value = _term(sc)
    while True:
        c = sc.peek()
        if c == "+":
            sc.take()
            value = value + _term(sc)
        elif c == "-":
            sc.take()
            value = value - _term(sc)
        else:
            return value


def parse_cpoly(text: str) -> CPoly:
    """Parse an expression in the column generators, e.g. "c1^2 - 2*c2".

    >>> str(parse_cpoly("c1^2 - 2*c2"))
    'c1^2 - 2*c2'
    """
    sc = _Scanner(text)
    value = _expr(sc)
    if not sc.at_end():
        sc.error("unexpected trailing input")
    return value


def parse_scalar(text: str) -> Scalar:
    """Parse a scalar expression in x, v, s.

    >>> str(parse_scalar("s + s^-1"))
    's + s^-1'
    """
    sc = _Scanner(text)
    value = _expr(sc)
    if not sc.at_end():
        sc.error("unexpected trailing input")
    return _scalar_part(sc, value, 0)


def parse_partition(text: str) -> Partition:
    """Parse a partition literal: "(4,2,1)", "4,2,1", or "(0)" for empty.

    >>> parse_partition("(4,2,1)").parts
    (4, 2, 1)
    """
    sc = _Scanner(text)
    closing = False
    if sc.peek() == "(":
        sc.take()
        closing = True
    parts = []
    if sc.peek() not in (")", ""):
        while True:
            start = sc.pos
            n = sc.integer()
            if n < 0:
                sc.error("parts must be nonnegative", start)
            if parts and n > parts[-1]:
                sc.error("parts must not increase", start)
            parts.append(n)
            if sc.peek() == ",":
                sc.take()
                continue
            break
    if closing:
        sc.expect(")")
    if not sc.at_end():
        sc.error("unexpected trailing input")
    return Partition(tuple(p for p in parts if p > 0))


def parse_braid_word(text: str, strands: int | None = None) -> tuple[int, ...]:
    """Parse a braid word: whitespace-separated signed nonzero integers.

    Returns the letters; strand-count validation happens when given.

    >>> parse_braid_word("1 2 -1")
    (1, 2, -1)
    """
    sc = _Scanner(text)
    letters = []
    while not sc.at_end():
        start = sc.pos
        j = sc.integer()
        if j == 0:
            sc.error("crossing indices are nonzero", start)
        if strands is not None and abs(j) >= strands:
            sc.error("crossing index %d needs at least %d strands" % (j, abs(j) + 1), start)
        letters.append(j)
    return tuple(letters)


def parse_matching(text: str) -> ChordDiagram:
    """Parse a chord matching literal like "1-3,2-4" (1-based endpoints).

    >>> str(parse_matching("2-4,1-3"))
    '1-3,2-4'
    """
    sc = _Scanner(text)
    pairs = []
    seen = {}
    while True:
        start = sc.pos
        a = sc.integer()
        sc.expect("-")
        b_start = sc.pos
        b = sc.integer()
        for endpoint, where in ((a, start), (b, b_start)):
            if endpoint < 1:
                sc.error("endpoints are numbered from 1", where)
            if endpoint in seen:
                sc.error("endpoint %d matched twice" % endpoint, where)
            seen[endpoint] = where
        pairs.append((a - 1, b - 1))
        if sc.peek() == ",":
            sc.take()
            continue
        break
    if not sc.at_end():
        sc.error("unexpected trailing input")
    expected = set(range(1, 2 * len(pairs) + 1))
    missing = sorted(expected - set(seen))
    if missing:
        sc.error("endpoint %d is unmatched" % missing[0], len(sc.text))
    extra = sorted(set(seen) - expected)
    if extra:
        sc.error("endpoint %d is out of range for %d chords" % (extra[0], len(pairs)), seen[extra[0]])
    return ChordDiagram(pairs)
