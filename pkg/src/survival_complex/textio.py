"""Text formats: ideal documents, socle lists, JSON/text reports, DOT, facet lists.

Ideal document grammar::

    file     := "vars" ":" varlist NL "ideal" ":" genlist
    varlist  := ident ("," ident)*
    genlist  := monomial ("," monomial)*
    monomial := factor ("*" factor)*
    factor   := ident ("^" posint)?

Whitespace around tokens is ignored, ``#`` comments run to end of line,
and the generator list may wrap across lines.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass

from .complex import SurvivalComplex, zero_divisor_graph
from .errors import SurvivalError
from .monomial import Monomial, MonomialIdeal, VarContext, minimalize

_TOKEN = re.compile(
    r"(?P<ident>[A-Za-z_][A-Za-z0-9_]*)"
    r"|(?P<int>[0-9]+)"
    r"|(?P<punct>[:,*^])"
    r"|(?P<nl>\n)"
    r"|(?P<ws>[ \t\r]+)"
    r"|(?P<comment>#[^\n]*)"
)


class ParseError(SurvivalError):
    def __init__(self, message, line, col):
        super().__init__(f"line {line}, column {col}: {message}")
        self.line = line
        self.col = col


@dataclass(frozen=True)
class _Tok:
    kind: str
    text: str
    line: int
    col: int


def _tokenize(text):
    toks = []
    pos, line, line_start = 0, 1, 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise ParseError(f"unexpected character {text[pos]!r}", line, pos - line_start + 1)
        kind = m.lastgroup
        if kind == "nl":
            toks.append(_Tok("nl", "\n", line, pos - line_start + 1))
            line += 1
            line_start = m.end()
        elif kind not in ("ws", "comment"):
            toks.append(_Tok(kind, m.group(), line, pos - line_start + 1))
        pos = m.end()
    end_col = len(text) - line_start + 1
    toks.append(_Tok("eof", "", line, end_col))
    return toks


class _Parser:
    def __init__(self, text):
        self.toks = _tokenize(text)
        self.i = 0

    @property
    def tok(self):
        return self.toks[self.i]

    def fail(self, msg, tok=None):
        tok = tok or self.tok
        raise ParseError(msg, tok.line, tok.col)

    def skip_nl(self):
        while self.tok.kind == "nl":
            self.i += 1

    def expect(self, kind, text=None):
        t = self.tok
        if t.kind != kind or (text is not None and t.text != text):
            want = repr(text) if text else kind
            got = repr(t.text) if t.kind != "eof" else "end of input"
            self.fail(f"expected {want}, found {got}")
        self.i += 1
        return t

    def accept(self, kind, text=None):
        t = self.tok
        if t.kind == kind and (text is None or t.text == text):
            self.i += 1
            return t
        return None

    def monomial(self):
        """Parse one monomial into [(name, exponent, token), ...]."""
        factors = []
        while True:
            name = self.expect("ident")
            exp = 1
            if self.accept("punct", "^"):
                t = self.expect("int")
                exp = int(t.text)
                if exp < 1:
                    self.fail("exponent must be a positive integer", t)
            factors.append((name.text, exp, name))
            if not self.accept("punct", "*"):
                return factors

    def monomial_list(self):
        """Comma-separated monomials; line breaks allowed anywhere between tokens."""
        out = []
        self.skip_nl()
        start = self.tok
        out.append((start, self.monomial()))
        while True:
            self.skip_nl()
            if not self.accept("punct", ","):
                return out
            self.skip_nl()
            start = self.tok
            out.append((start, self.monomial()))


def _to_monomial(ctx, factors, parser):
    exps = [0] * len(ctx)
    for name, e, tok in factors:
        if name not in ctx.names:
            parser.fail(f"unknown variable {name!r}", tok)
        exps[ctx.index(name)] += e
    return Monomial(ctx, tuple(exps))


@dataclass(frozen=True)
class IdealDocument:
    source: str
    context: VarContext
    generators: tuple[Monomial, ...]

    def ideal(self) -> MonomialIdeal:
        return minimalize(self.generators, self.context)


def parse_ideal(text: str) -> IdealDocument:
    p = _Parser(text)
    p.skip_nl()
    p.expect("ident", "vars")
    p.expect("punct", ":")
    names = [p.expect("ident")]
    while p.accept("punct", ","):
        names.append(p.expect("ident"))
    seen = set()
    for t in names:
        if t.text in seen:
            p.fail(f"duplicate variable {t.text!r}", t)
        seen.add(t.text)
    ctx = VarContext(tuple(t.text for t in names))
    if p.tok.kind != "nl":
        p.fail("expected end of line after the variable list")
    p.skip_nl()
    p.expect("ident", "ideal")
    p.expect("punct", ":")
    gens = []
    for start, factors in p.monomial_list():
        m = _to_monomial(ctx, factors, p)
        if m.degree == 1:
            p.fail(f"degree-1 generator {m} is not allowed", start)
        gens.append(m)
    p.skip_nl()
    if p.tok.kind != "eof":
        p.fail(f"unexpected {p.tok.text!r} after the generator list")
    return IdealDocument(text, ctx, tuple(gens))


def parse_socle_spec(text: str):
    """Parse ``"x^2*y^2, y*z"``; variables are ordered by first appearance."""
    from .builder import SocleSpec

    p = _Parser(text)
    items = p.monomial_list()
    p.skip_nl()
    if p.tok.kind != "eof":
        p.fail(f"unexpected {p.tok.text!r} after the monomial list")
    names: list[str] = []
    for _, factors in items:
        for name, _, _ in factors:
            if name not in names:
                names.append(name)
    ctx = VarContext(tuple(names))
    return SocleSpec(ctx, tuple(_to_monomial(ctx, f, p) for _, f in items))


def format_ideal_lines(context: VarContext, gens) -> str:
    return f"vars: {', '.join(context.names)}\nideal: {', '.join(map(str, gens))}\n"


def format_ideal(ideal: MonomialIdeal) -> str:
    """Canonical document for an ideal (minimal generators, canonical order)."""
    return format_ideal_lines(ideal.context, ideal.gens)


def serialize_document(doc: IdealDocument) -> str:
    return format_ideal_lines(doc.context, doc.generators)


def format_facets(facet_list, vertex_order) -> str:
    """One facet per line, members space-separated in canonical vertex order."""
    rank = {v: i for i, v in enumerate(vertex_order)}
    return "".join(" ".join(str(v) for v in sorted(f, key=rank.__getitem__)) + "\n" for f in facet_list)


def emit_report(report, fmt: str = "json") -> bytes:
    from .analysis import report_dict

    data = report_dict(report)
    if fmt == "json":
        return (json.dumps(data, indent=2) + "\n").encode()
    if fmt != "text":
        raise ValueError(f"unknown report format {fmt!r}")
    yn = {True: "yes", False: "no"}
    lines = [
        f"variables: {', '.join(data['variables'])}",
        f"minimal generators: {', '.join(data['minimal_generators'])}",
        f"vertices: {data['vertex_count']}",
        f"edges: {data['edge_count']}",
        f"truly isolated: {', '.join(data['truly_isolated'])}",
        f"quasi-isolated: {', '.join(data['quasi_isolated']) or '-'}",
        f"socle dimension: {data['socle_dimension']}",
        f"gorenstein: {yn[data['is_gorenstein']]}",
        f"pure power: {yn[data['is_pure_power']]}",
        f"complete intersection: {yn[data['is_complete_intersection']]}",
        f"components: {len(data['components'])}",
    ]
    for comp in data["components"]:
        lines.append(f"  {comp['kind']}: {', '.join(comp['vertices'])}")
    lines.append(f"fibre factors: {len(data['fibre_factors'])}")
    for fac in data["fibre_factors"]:
        lines.append(f"  k[{', '.join(fac['variables'])}]/({', '.join(fac['minimal_generators'])})")
    return ("\n".join(lines) + "\n").encode()


def emit_dot(c: SurvivalComplex, which: str = "skeleton") -> bytes:
    if which == "skeleton":
        graph = c.skeleton()
    elif which == "zero_divisor":
        graph = zero_divisor_graph(c)
    else:
        raise ValueError(f"unknown graph {which!r}")
    out = [f"graph {which} {{"]
    out += [f'  "{v}";' for v in graph.vertices]
    out += [f'  "{p}" -- "{q}";' for p, q in graph.edges]
    out.append("}")
    return ("\n".join(out) + "\n").encode()
