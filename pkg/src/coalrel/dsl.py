"""Text format for coalgebras, relations and finite set relations.

Example::

    coalgebra C {
      basis x y z
      delta x = x*x
      delta y = x*y + y*z
      delta z = z*z
      eps x = 1
      eps y = 0
      eps z = 1
    }

    relation R on C {
      span x*x, z*z, x*y + y*z, y*x, z*x
    }

    set X { elements 1 2 3 ; pairs (1,2) (2,3) }

``*`` stands for the tensor product.  Statements end at a newline or ``;``;
a ``span`` list may continue on the next line after a comma.  Coefficients
are rational literals written before a term (``-1/2 x*y``).  A relation is
given either by a ``span`` of vectors in C*C (optionally preceded by a
``basis`` line naming them) or explicitly by ``basis`` plus ``left``,
``right`` and ``embed`` lines for every basis element.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Union

from .coalg import Coalgebra, format_vector, tensor_names
from .comod import Bicomodule, NotSubBicomodule, induce_from_subspace
from .exactlinalg import RatMatrix
from .rel import Relation
from .setrel import FinSetRelation
from .validation import MalformedError

_TOKEN_RE = re.compile(r"(?P<ws>[ \t\r]+)|(?P<comment>#[^\n]*)|(?P<nl>\n)|(?P<word>[A-Za-z0-9_]+)|(?P<sym>[*+\-/,;(){}=])")


class ParseError(ValueError):
    def __init__(self, message: str, line: int, column: int, expected: tuple[str, ...] = ()):
        self.line = line
        self.column = column
        self.expected = tuple(sorted(expected))
        self.message = message
        text = f"line {line}, column {column}: {message}"
        if self.expected:
            text += f" (expected {', '.join(self.expected)})"
        super().__init__(text)


@dataclass(frozen=True)
class Token:
    kind: str  # word, sym, nl, eof
    text: str
    line: int
    column: int

    def describe(self) -> str:
        if self.kind == "nl":
            return "end of line"
        if self.kind == "eof":
            return "end of input"
        return repr(self.text)


def tokenize(source: str) -> list[Token]:
    tokens = []
    line, line_start, pos = 1, 0, 0
    while pos < len(source):
        m = _TOKEN_RE.match(source, pos)
        if m is None:
            raise ParseError(f"unexpected character {source[pos]!r}", line, pos - line_start + 1)
        kind = m.lastgroup
        col = pos - line_start + 1
        if kind == "nl":
            tokens.append(Token("nl", "\n", line, col))
            line += 1
            line_start = m.end()
        elif kind in ("word", "sym"):
            tokens.append(Token(kind, m.group(), line, col))
        pos = m.end()
    if not tokens or tokens[-1].kind != "nl":
        tokens.append(Token("nl", "\n", line, pos - line_start + 1))
    tokens.append(Token("eof", "", line + 1, 1))
    return tokens


Value = Union[Coalgebra, Relation, FinSetRelation]


@dataclass
class Declaration:
    kind: str  # "coalgebra", "relation" or "set"
    name: str
    value: Value
    over: str | None = None


@dataclass
class Document:
    declarations: list[Declaration] = field(default_factory=list)

    def __getitem__(self, name: str) -> Value:
        for d in self.declarations:
            if d.name == name:
                return d.value
        raise KeyError(name)

    def of_kind(self, kind: str) -> list[Declaration]:
        return [d for d in self.declarations if d.kind == kind]


class _Parser:
    def __init__(self, source: str):
        self.tokens = tokenize(source)
        self.i = 0
        self.doc = Document()

    # -- token helpers ------------------------------------------------------

    @property
    def tok(self) -> Token:
        return self.tokens[self.i]

    def peek(self, k: int = 1) -> Token:
        return self.tokens[min(self.i + k, len(self.tokens) - 1)]

    def advance(self) -> Token:
        t = self.tok
        self.i += 1
        return t

    def fail(self, expected: tuple[str, ...], message: str | None = None, tok: Token | None = None):
        tok = tok or self.tok
        raise ParseError(message or f"unexpected {tok.describe()}", tok.line, tok.column, expected)

    def is_sym(self, s: str) -> bool:
        return self.tok.kind == "sym" and self.tok.text == s

    def expect_sym(self, s: str) -> Token:
        if not self.is_sym(s):
            self.fail((repr(s),))
        return self.advance()

    def expect_word(self, what: str = "name") -> Token:
        if self.tok.kind != "word":
            self.fail((what,))
        return self.advance()

    def expect_keyword(self, kw: str) -> Token:
        if self.tok.kind != "word" or self.tok.text != kw:
            self.fail((repr(kw),))
        return self.advance()

    def at_separator(self) -> bool:
        return self.tok.kind == "nl" or self.is_sym(";")

    def end_statement(self) -> None:
        if self.at_separator():
            self.advance()
        elif not self.is_sym("}"):
            self.fail(("end of line", "';'"))

    def skip_separators(self) -> None:
        while self.at_separator():
            self.advance()

    def skip_newlines(self) -> None:
        while self.tok.kind == "nl":
            self.advance()

    # -- literals -----------------------------------------------------------

    def rational(self) -> Fraction:
        sign = 1
        if self.is_sym("-") or self.is_sym("+"):
            sign = -1 if self.advance().text == "-" else 1
        if self.tok.kind != "word" or not self.tok.text.isdigit():
            self.fail(("rational",))
        num = int(self.advance().text)
        den = 1
        if self.is_sym("/"):
            self.advance()
            if self.tok.kind != "word" or not self.tok.text.isdigit() or int(self.tok.text) == 0:
                self.fail(("positive integer",))
            den = int(self.advance().text)
        return sign * Fraction(num, den)

    def name_in(self, names: dict[str, int], what: str) -> int:
        tok = self.expect_word(what)
        if tok.text not in names:
            self.fail((), f"unknown {what} {tok.text!r}", tok)
        return names[tok.text]

    def tensorexpr(self, left: list[str], right: list[str]) -> dict[int, Fraction]:
        lpos = {x: i for i, x in enumerate(left)}
        rpos = {x: i for i, x in enumerate(right)}
        width = len(right)
        if self.tok.kind == "word" and self.tok.text == "0" and not self._starts_name_pair():
            self.advance()
            return {}
        vec: dict[int, Fraction] = {}
        sign = 1
        while True:
            coef = Fraction(sign)
            if self.is_sym("-") or self.is_sym("+"):
                if self.advance().text == "-":
                    coef = -coef
            if self.tok.kind == "word" and self.tok.text.isdigit() and not self._starts_name_pair():
                coef *= self.rational()
            if self.tok.kind != "word":
                self.fail(("coefficient", "name"))
            a = self.name_in(lpos, "name")
            self.expect_sym("*")
            b = self.name_in(rpos, "name")
            idx = a * width + b
            vec[idx] = vec.get(idx, Fraction(0)) + coef
            if self.is_sym("+") or self.is_sym("-"):
                sign = -1 if self.advance().text == "-" else 1
                continue
            break
        return {k: v for k, v in vec.items() if v}

    def _starts_name_pair(self) -> bool:
        nxt = self.peek()
        return nxt.kind == "sym" and nxt.text == "*"

    # -- blocks -------------------------------------------------------------

    def parse(self) -> Document:
        self.skip_separators()
        while self.tok.kind != "eof":
            kw = self.tok
            if kw.kind == "word" and kw.text == "coalgebra":
                self.coalgebra()
            elif kw.kind == "word" and kw.text == "relation":
                self.relation()
            elif kw.kind == "word" and kw.text == "set":
                self.setrel()
            else:
                self.fail(("'coalgebra'", "'relation'", "'set'"))
            self.skip_separators()
        return self.doc

    def declare_name(self) -> Token:
        tok = self.expect_word("block name")
        if any(d.name == tok.text for d in self.doc.declarations):
            self.fail((), f"name {tok.text!r} already declared", tok)
        return tok

    def open_block(self) -> None:
        self.skip_newlines()
        self.expect_sym("{")

    def words_until_separator(self) -> list[Token]:
        out = []
        while self.tok.kind == "word":
            out.append(self.advance())
        return out

    def basis_line(self) -> list[str]:
        kw = self.advance()
        names = [t.text for t in self.words_until_separator()]
        if len(set(names)) != len(names):
            self.fail((), "duplicate basis name", kw)
        self.end_statement()
        return names

    def coalgebra(self) -> None:
        self.advance()
        name = self.declare_name()
        self.open_block()
        basis: list[str] | None = None
        deltas: dict[int, dict] = {}
        epss: dict[int, Fraction] = {}
        while True:
            self.skip_separators()
            if self.is_sym("}"):
                close = self.advance()
                break
            kw = self.tok
            if kw.kind == "word" and kw.text == "basis" and basis is None:
                basis = self.basis_line()
                if not basis:
                    self.fail(("name",), "empty basis", kw)
                continue
            if basis is None:
                self.fail(("'basis'",))
            pos = {x: i for i, x in enumerate(basis)}
            if kw.kind == "word" and kw.text == "delta":
                self.advance()
                target = self.tok
                j = self.name_in(pos, "basis element")
                if j in deltas:
                    self.fail((), f"second delta line for {basis[j]!r}", target)
                self.expect_sym("=")
                deltas[j] = self.tensorexpr(basis, basis)
                self.end_statement()
            elif kw.kind == "word" and kw.text == "eps":
                self.advance()
                target = self.tok
                j = self.name_in(pos, "basis element")
                if j in epss:
                    self.fail((), f"second eps line for {basis[j]!r}", target)
                self.expect_sym("=")
                epss[j] = self.rational()
                self.end_statement()
            else:
                self.fail(("'delta'", "'eps'", "'}'"))
        if basis is None:
            self.fail(("'basis'",), "coalgebra has no basis", close)
        for j, x in enumerate(basis):
            if j not in deltas:
                self.fail((), f"missing delta line for {x!r}", close)
            if j not in epss:
                self.fail((), f"missing eps line for {x!r}", close)
        n = len(basis)
        delta = RatMatrix(n, n * n, [deltas[j] for j in range(n)]).T
        eps = RatMatrix(1, n, [epss])
        self.doc.declarations.append(Declaration("coalgebra", name.text, Coalgebra(tuple(basis), delta, eps)))

    def relation(self) -> None:
        self.advance()
        name = self.declare_name()
        self.expect_keyword("on")
        ctok = self.expect_word("coalgebra name")
        decl = next((d for d in self.doc.declarations if d.name == ctok.text), None)
        if decl is None or decl.kind != "coalgebra":
            self.fail((), f"{ctok.text!r} is not a previously declared coalgebra", ctok)
        c: Coalgebra = decl.value
        cn = list(c.basis_names)
        self.open_block()
        basis: list[str] | None = None
        span: list[dict] | None = None
        span_tok: Token | None = None
        lines: dict[str, dict[int, dict]] = {"left": {}, "right": {}, "embed": {}}
        while True:
            self.skip_separators()
            if self.is_sym("}"):
                close = self.advance()
                break
            kw = self.tok
            explicit_started = any(lines.values())
            if kw.kind == "word" and kw.text == "basis" and basis is None and span is None and not explicit_started:
                basis = self.basis_line()
            elif kw.kind == "word" and kw.text == "span" and span is None and not explicit_started:
                span_tok = self.advance()
                span = []
                if not self.at_separator() and not self.is_sym("}"):
                    while True:
                        span.append(self.tensorexpr(cn, cn))
                        if self.is_sym(","):
                            self.advance()
                            self.skip_newlines()
                            continue
                        break
                self.end_statement()
            elif kw.kind == "word" and kw.text in lines and span is None:
                if basis is None:
                    self.fail(("'basis'",))
                pos = {x: i for i, x in enumerate(basis)}
                self.advance()
                target = self.tok
                j = self.name_in(pos, "relation basis element")
                if j in lines[kw.text]:
                    self.fail((), f"second {kw.text} line for {basis[j]!r}", target)
                self.expect_sym("=")
                if kw.text == "left":
                    vec = self.tensorexpr(cn, basis)
                elif kw.text == "right":
                    vec = self.tensorexpr(basis, cn)
                else:
                    vec = self.tensorexpr(cn, cn)
                lines[kw.text][j] = vec
                self.end_statement()
            else:
                expected = ("'}'",) if span is not None else ("'basis'", "'span'", "'left'", "'right'", "'embed'", "'}'")
                self.fail(expected)
        n = c.dim
        if span is not None:
            m = len(span)
            if basis is not None and len(basis) != m:
                self.fail((), f"basis names {len(basis)} elements but span has {m}", span_tok)
            names = basis if basis is not None else [f"r{i}" for i in range(m)]
            vectors = RatMatrix(m, n * n, span).T if m else RatMatrix.zeros(n * n, 0)
            try:
                b, incl = induce_from_subspace(c, vectors, names)
            except (NotSubBicomodule, MalformedError) as exc:
                self.fail((), f"relation {name.text!r}: {exc}", span_tok)
            rel = Relation(b, incl)
        else:
            if basis is None:
                self.fail(("'basis'", "'span'"), "relation has neither span nor basis", close)
            m = len(basis)
            for key in ("left", "right", "embed"):
                for j, x in enumerate(basis):
                    if j not in lines[key]:
                        self.fail((), f"missing {key} line for {x!r}", close)
            left = RatMatrix(m, n * m, [lines["left"][j] for j in range(m)]).T
            right = RatMatrix(m, m * n, [lines["right"][j] for j in range(m)]).T
            r = RatMatrix(m, n * n, [lines["embed"][j] for j in range(m)]).T
            rel = Relation(Bicomodule(c, left, right, tuple(basis)), r)
        self.doc.declarations.append(Declaration("relation", name.text, rel, over=ctok.text))

    def setrel(self) -> None:
        self.advance()
        name = self.declare_name()
        self.open_block()
        elements: list[str] | None = None
        pairs: list[tuple[str, str]] = []
        while True:
            self.skip_separators()
            if self.is_sym("}"):
                close = self.advance()
                break
            kw = self.tok
            if kw.kind == "word" and kw.text == "elements" and elements is None:
                elements = self.basis_line()
            elif kw.kind == "word" and kw.text == "pairs" and elements is not None:
                self.advance()
                known = {x: x for x in elements}
                while self.is_sym("("):
                    self.advance()
                    a = self.tok
                    self.name_in(known, "element")
                    self.expect_sym(",")
                    b = self.tok
                    self.name_in(known, "element")
                    self.expect_sym(")")
                    pairs.append((a.text, b.text))
                self.end_statement()
            else:
                self.fail(("'pairs'", "'}'") if elements is not None else ("'elements'",))
        if elements is None:
            self.fail(("'elements'",), "set has no elements line", close)
        self.doc.declarations.append(Declaration("set", name.text, FinSetRelation(tuple(elements), tuple(pairs))))


def parse(source: str) -> Document:
    """Parse a document; raises :class:`ParseError` with a source position."""
    return _Parser(source).parse()


# -- emitting -------------------------------------------------------------------


def _emit_coalgebra(name: str, c: Coalgebra) -> list[str]:
    pairs = tensor_names(c.basis_names, c.basis_names)
    out = [f"coalgebra {name} {{", "  basis " + " ".join(c.basis_names)]
    for j, x in enumerate(c.basis_names):
        out.append(f"  delta {x} = {format_vector(c.delta.column_dict(j), pairs)}")
    for j, x in enumerate(c.basis_names):
        out.append(f"  eps {x} = {c.eps[0, j]}")
    out.append("}")
    return out


def _span_form(rel: Relation) -> bool:
    if not rel.is_injective:
        return False
    try:
        b, _ = induce_from_subspace(rel.coalgebra, rel.r, rel.bicomodule.basis_names)
    except NotSubBicomodule:
        return False
    return b == rel.bicomodule


def _emit_relation(name: str, over: str, rel: Relation) -> list[str]:
    c, b = rel.coalgebra, rel.bicomodule
    cn, rn = c.basis_names, b.basis_names
    out = [f"relation {name} on {over} {{"]
    if _span_form(rel):
        if list(rn) != [f"r{i}" for i in range(b.dim)]:
            out.append("  basis " + " ".join(rn))
        pairs = tensor_names(cn, cn)
        vecs = [format_vector(rel.r.column_dict(j), pairs) for j in range(b.dim)]
        out.append(("  span " + ", ".join(vecs)).rstrip())
    else:
        out.append("  basis " + " ".join(rn))
        for key, mat, names in (
            ("left", b.left, tensor_names(cn, rn)),
            ("right", b.right, tensor_names(rn, cn)),
            ("embed", rel.r, tensor_names(cn, cn)),
        ):
            for j, x in enumerate(rn):
                out.append(f"  {key} {x} = {format_vector(mat.column_dict(j), names)}")
    out.append("}")
    return out


def _emit_set(name: str, s: FinSetRelation) -> list[str]:
    pairs = " ".join(f"({a},{b})" for a, b in s.pairs)
    return [
        f"set {name} {{",
        "  elements " + " ".join(s.elements),
        ("  pairs " + pairs).rstrip(),
        "}",
    ]


def emit(doc: Document) -> str:
    blocks = []
    for d in doc.declarations:
        if d.kind == "coalgebra":
            blocks.append(_emit_coalgebra(d.name, d.value))
        elif d.kind == "relation":
            blocks.append(_emit_relation(d.name, d.over, d.value))
        else:
            blocks.append(_emit_set(d.name, d.value))
    return "\n\n".join("\n".join(b) for b in blocks) + "\n"
