"""Plain-text format for algebras and cocycle matrices.

Algebra documents::

    algebra A5_06 dim 5
    e1*e1 = e2
    e1*e3 = -2 e5 + 1/2 e6    # comment

Unlisted products are zero.  A header may end with ``mod P`` for an
algebra over GF(P).  Cocycle documents hold one or more square blocks::

    cocycle theta dim 4
    0 0 1 0
    0 0 0 0
    0 0 0 0
    1 0 0 0
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Iterator

from .algebra import Algebra
from .cohomology import BilinearForm
from .errors import ParseError
from .fields import GF, QQ, Field, PrimeField
from .linalg import Matrix

_TOKEN = re.compile(
    r"""
    (?P<ws>\s+)
  | (?P<num>\d+(?:\s*/\s*\d+)?)
  | (?P<basis>e\s*\d+)
  | (?P<word>[A-Za-z_][^\s]*)
  | (?P<op>[*=+-])
  | (?P<bad>.)
    """,
    re.VERBOSE,
)


class _Tok:
    __slots__ = ("kind", "text", "col")

    def __init__(self, kind: str, text: str, col: int):
        self.kind, self.text, self.col = kind, text, col

    def __repr__(self):
        return f"{self.kind}:{self.text}@{self.col}"


def _strip_comment(line: str) -> str:
    pos = line.find("#")
    return line if pos < 0 else line[:pos]


def _tokenize(line: str, lineno: int) -> list[_Tok]:
    out = []
    for m in _TOKEN.finditer(line):
        kind = m.lastgroup
        if kind == "ws":
            continue
        text = m.group()
        col = m.start() + 1
        if kind == "bad":
            raise ParseError(f"unexpected character {text!r}", lineno, col)
        if kind == "word" and re.fullmatch(r"e\d+", text):
            kind = "basis"
        out.append(_Tok(kind, text, col))
    return out


def _basis_index(tok: _Tok, dim: int, lineno: int) -> int:
    k = int(tok.text[1:].strip())
    if not 1 <= k <= dim:
        raise ParseError(f"basis index e{k} out of range 1..{dim}", lineno, tok.col)
    return k


def _rational(tok: _Tok, lineno: int) -> Fraction:
    text = tok.text.replace(" ", "")
    if "/" in text:
        num, den = text.split("/")
        if int(den) == 0:
            raise ParseError("zero denominator", lineno, tok.col)
        return Fraction(int(num), int(den))
    return Fraction(int(text))


def _parse_header(toks: list[_Tok], lineno: int, keyword: str) -> tuple[str, int, int | None]:
    shape = " ".join(t.kind for t in toks)
    if not toks or toks[0].text != keyword:
        col = toks[0].col if toks else 1
        raise ParseError(f"expected '{keyword} NAME dim INT'", lineno, col)
    if len(toks) < 4:
        raise ParseError(f"incomplete {keyword} header", lineno, toks[-1].col)
    name_tok, dim_kw, dim_tok = toks[1], toks[2], toks[3]
    if name_tok.kind not in ("word", "basis"):
        raise ParseError("expected a name", lineno, name_tok.col)
    if dim_kw.text != "dim":
        raise ParseError("expected 'dim'", lineno, dim_kw.col)
    if dim_tok.kind != "num" or "/" in dim_tok.text:
        raise ParseError("dimension must be a positive integer", lineno, dim_tok.col)
    dim = int(dim_tok.text)
    prime = None
    rest = toks[4:]
    if rest:
        if rest[0].text != "mod" or len(rest) != 2 or rest[1].kind != "num" or "/" in rest[1].text:
            raise ParseError(f"unexpected trailing tokens in header ({shape})", lineno, rest[0].col)
        prime = int(rest[1].text)
        try:
            GF(prime)
        except ValueError:
            raise ParseError(f"{prime} is not prime", lineno, rest[1].col) from None
    return name_tok.text, dim, prime


def _parse_product(toks: list[_Tok], dim: int, lineno: int, field: Field):
    """``eI * eJ = term (+ term)*`` -> ``(i, j, {k: coeff})``."""
    pos = 0

    def expect(kind: str, text: str | None = None) -> _Tok:
        nonlocal pos
        if pos >= len(toks):
            last = toks[-1]
            raise ParseError(f"unexpected end of line, expected {text or kind}", lineno, last.col + len(last.text))
        t = toks[pos]
        if t.kind != kind or (text is not None and t.text != text):
            raise ParseError(f"expected {text or kind}, found {t.text!r}", lineno, t.col)
        pos += 1
        return t

    i = _basis_index(expect("basis"), dim, lineno)
    expect("op", "*")
    j = _basis_index(expect("basis"), dim, lineno)
    expect("op", "=")
    terms: dict[int, object] = {}
    first = True
    while pos < len(toks) or first:
        sign = 1
        if not first:
            t = expect("op")
            if t.text == "-":
                sign = -1
            elif t.text != "+":
                raise ParseError(f"expected '+' or '-', found {t.text!r}", lineno, t.col)
        if pos < len(toks) and toks[pos].kind == "op" and toks[pos].text in "+-":
            if toks[pos].text == "-":
                sign = -sign
            pos += 1
        coeff = Fraction(1)
        if pos < len(toks) and toks[pos].kind == "num":
            coeff = _rational(toks[pos], lineno)
            pos += 1
            if pos < len(toks) and toks[pos].text == "*":
                pos += 1
        if pos < len(toks) and toks[pos].kind == "word":
            raise ParseError(f"non-rational coefficient {toks[pos].text!r}", lineno, toks[pos].col)
        k = _basis_index(expect("basis"), dim, lineno)
        terms[k] = terms.get(k, 0) + sign * coeff
        first = False
    try:
        return i, j, {k: field(c) for k, c in terms.items()}
    except Exception as exc:
        raise ParseError(str(exc), lineno, toks[0].col) from None


def _lines(text: str) -> Iterator[tuple[int, list[_Tok]]]:
    for lineno, raw in enumerate(text.splitlines(), start=1):
        toks = _tokenize(_strip_comment(raw), lineno)
        if toks:
            yield lineno, toks


def parse_algebra(text: str) -> Algebra:
    """Parse one algebra document."""
    it = _lines(text)
    try:
        lineno, toks = next(it)
    except StopIteration:
        raise ParseError("empty document", 1, 1) from None
    name, dim, prime = _parse_header(toks, lineno, "algebra")
    field: Field = GF(prime) if prime else QQ
    products: dict[tuple[int, int], dict[int, object]] = {}
    for lineno, toks in it:
        i, j, terms = _parse_product(toks, dim, lineno, field)
        if (i, j) in products:
            raise ParseError(f"duplicate product line for e{i}*e{j}", lineno, toks[0].col)
        products[(i, j)] = terms
    return Algebra.from_products(dim, products, field=field, name=name)


def serialize_algebra(a: Algebra, name: str | None = None) -> str:
    """Canonical document: products ordered by ``(i, j)``, terms by index."""
    label = name or a.name or "A"
    label = re.sub(r"\s+", "", label)
    header = f"algebra {label} dim {a.dim}"
    if isinstance(a.field, PrimeField):
        header += f" mod {a.field.p}"
    lines = [header]
    for (i, j), terms in sorted(a.products().items()):
        parts = []
        for k, c in sorted(terms.items()):
            if c == 1:
                body = f"e{k}"
            elif c == -1:
                body = f"-e{k}"
            else:
                body = f"{c} e{k}"
            parts.append(body)
        lines.append(f"e{i}*e{j} = " + " + ".join(parts))
    return "\n".join(lines) + "\n"


def parse_cocycles(text: str, field: Field = QQ) -> list[tuple[str, BilinearForm]]:
    """Parse ``cocycle NAME dim n`` blocks, each followed by ``n`` rows of ``n`` rationals."""
    out = []
    it = _lines(text)
    for lineno, toks in it:
        name, n, prime = _parse_header(toks, lineno, "cocycle")
        fld = GF(prime) if prime else field
        rows = []
        for _ in range(n):
            try:
                lineno, toks = next(it)
            except StopIteration:
                raise ParseError(f"cocycle {name}: expected {n} rows", lineno + 1, 1) from None
            row = []
            pos = 0
            while pos < len(toks):
                sign = 1
                t = toks[pos]
                if t.kind == "op" and t.text in "+-":
                    sign = -1 if t.text == "-" else 1
                    pos += 1
                    if pos >= len(toks):
                        raise ParseError("dangling sign", lineno, t.col)
                    t = toks[pos]
                if t.kind != "num":
                    raise ParseError(f"expected a rational entry, found {t.text!r}", lineno, t.col)
                row.append(fld(sign * _rational(t, lineno)))
                pos += 1
            if len(row) != n:
                raise ParseError(f"cocycle {name}: row has {len(row)} entries, expected {n}", lineno, toks[0].col)
            rows.append(row)
        out.append((name, BilinearForm(Matrix(rows, ncols=n, field=fld))))
    if not out:
        raise ParseError("no cocycle block found", 1, 1)
    return out


def serialize_cocycle(theta: BilinearForm, name: str = "theta") -> str:
    lines = [f"cocycle {name} dim {theta.n}"]
    for row in theta.matrix.rows:
        lines.append(" ".join(str(x) for x in row))
    return "\n".join(lines) + "\n"


__all__ = ["parse_algebra", "parse_cocycles", "serialize_algebra", "serialize_cocycle"]
