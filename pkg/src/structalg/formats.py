"""Line-oriented text formats.

Grammar (``#`` starts a comment; blank lines are ignored; tokens are
separated by whitespace; indices are 0-based; ``<q>`` is a rational
``-?[0-9]+(/[1-9][0-9]*)?``)::

    algebra-doc = "algebra" NAME NL "dim" INT NL ["basis" LABEL{n} NL]
                  {"c" INT INT INT <q> NL} "end"
    map-doc     = "map" INT INT NL {"m" INT INT <q> NL} "end"
    tensor-doc  = "tensor" INT NL {"t" INT INT <q> NL} "end"
    poly-doc    = "poly" INT INT NL {"p" INT INT{m} <q> NL} "end"

``c i j k q`` means ``e_i e_j`` gains ``q e_k``; ``m k i q`` sets ``g^k_i``
(``map n_target n_source``); ``t p r q`` sets ``g^{pr}``; ``p j i1 .. im q``
sets ``f^j_{i1..im}`` (``poly m n``). Serializers emit entries sorted by
index with zero entries omitted, so equal values give identical bytes.
"""
from __future__ import annotations

import re
from itertools import product

from .algebra import Algebra, AlgebraError, Element, make_algebra
from .linmap import LinearMap, Tensor2
from .polymap import PolyMap
from .scalar import Rational, RationalParseError, format_rational, parse_rational

MAX_DIM = 64
MAX_ARITY = 6
MAX_TABLE = 1 << 20

_INT_RE = re.compile(r"[0-9]+")
_TOKEN_RE = re.compile(r"\S+")


class ParseError(ValueError):
    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"{message} at line {line}, column {column}")
        self.message = message
        self.line = line
        self.column = column


class _Tok(str):
    line: int
    col: int


def _tokenize(text) -> list:
    """``[(line_no, [tokens])]`` for non-empty lines; columns are 1-based."""
    if isinstance(text, (bytes, bytearray)):
        try:
            text = bytes(text).decode("utf-8")
        except UnicodeDecodeError as exc:
            before = bytes(text)[: exc.start]
            line = before.count(b"\n") + 1
            col = exc.start - (before.rfind(b"\n") + 1) + 1
            raise ParseError("invalid UTF-8", line, col) from None
    out = []
    for no, raw in enumerate(text.split("\n"), start=1):
        body = raw.split("#", 1)[0]
        toks = []
        for m in _TOKEN_RE.finditer(body):
            t = _Tok(m.group())
            t.line, t.col = no, m.start() + 1
            toks.append(t)
        if toks:
            out.append((no, toks))
    return out


def _end_pos(lines) -> tuple:
    if not lines:
        return 1, 1
    no, toks = lines[-1]
    return no + 1, 1


def _int(tok: _Tok, what: str, lo: int = 0, hi: int | None = None) -> int:
    if not _INT_RE.fullmatch(tok):
        raise ParseError(f"expected {what}, got {str(tok)!r}", tok.line, tok.col)
    v = int(tok)
    if v < lo or (hi is not None and v >= hi):
        if what.endswith("index"):
            raise ParseError("index out of range", tok.line, tok.col)
        raise ParseError(f"{what} {v} out of range", tok.line, tok.col)
    return v


def _rat(tok: _Tok) -> Rational:
    try:
        return parse_rational(tok)
    except RationalParseError as exc:
        raise ParseError(str(exc).split(" (at position")[0], tok.line, tok.col + exc.position) from None


def _expect(lines, idx: int, keyword: str, nargs: int):
    if idx >= len(lines):
        line, col = _end_pos(lines)
        raise ParseError(f"expected '{keyword}'", line, col)
    no, toks = lines[idx]
    if toks[0] != keyword:
        raise ParseError(f"expected '{keyword}', got {str(toks[0])!r}", no, toks[0].col)
    if nargs >= 0 and len(toks) - 1 != nargs:
        raise ParseError(f"'{keyword}' takes {nargs} argument(s), got {len(toks) - 1}", no, toks[0].col)
    return toks[1:]


def _entries(lines, idx: int, key: str, n_idx: int, bounds):
    """Parse ``key i1..i_n_idx q`` lines up to ``end``; returns ``(entries, next_idx)``."""
    entries = {}
    while True:
        if idx >= len(lines):
            line, col = _end_pos(lines)
            raise ParseError("missing 'end'", line, col)
        no, toks = lines[idx]
        if toks[0] == "end":
            if len(toks) != 1:
                raise ParseError("unexpected text after 'end'", no, toks[1].col)
            idx += 1
            break
        if toks[0] != key:
            raise ParseError(f"expected '{key}' or 'end', got {str(toks[0])!r}", no, toks[0].col)
        if len(toks) != n_idx + 2:
            raise ParseError(f"'{key}' takes {n_idx + 1} arguments, got {len(toks) - 1}", no, toks[0].col)
        index = tuple(_int(t, "index", 0, b) for t, b in zip(toks[1:-1], bounds))
        if index in entries:
            raise ParseError(f"duplicate entry {index}", no, toks[0].col)
        entries[index] = _rat(toks[-1])
        idx += 1
    if idx < len(lines):
        no, toks = lines[idx]
        raise ParseError("unexpected text after 'end'", no, toks[0].col)
    return entries


def parse_algebra(text) -> Algebra:
    lines = _tokenize(text)
    name_tok = _expect(lines, 0, "algebra", 1)[0]
    dim_tok = _expect(lines, 1, "dim", 1)[0]
    n = _int(dim_tok, "dimension", 1, MAX_DIM + 1)
    idx = 2
    labels = None
    if idx < len(lines) and lines[idx][1][0] == "basis":
        labels = tuple(str(t) for t in _expect(lines, idx, "basis", n))
        idx += 1
    entries = _entries(lines, idx, "c", 3, (n, n, n))
    try:
        return make_algebra(str(name_tok), n, [(*k, v) for k, v in entries.items()], labels)
    except AlgebraError as exc:
        raise ParseError(str(exc), name_tok.line, name_tok.col) from None


def serialize_algebra(A: Algebra) -> str:
    out = [f"algebra {A.name}", f"dim {A.dim}"]
    if A.labels is not None:
        out.append("basis " + " ".join(A.labels))
    n = A.dim
    for i, j, k in product(range(n), repeat=3):
        v = A.constants[i][j][k]
        if v != 0:
            out.append(f"c {i} {j} {k} {format_rational(v)}")
    out.append("end")
    return "\n".join(out) + "\n"


def parse_map(text) -> LinearMap:
    lines = _tokenize(text)
    a, b = _expect(lines, 0, "map", 2)
    nt = _int(a, "dimension", 1, MAX_DIM + 1)
    ns = _int(b, "dimension", 1, MAX_DIM + 1)
    entries = _entries(lines, 1, "m", 2, (nt, ns))
    return LinearMap(nt, ns, tuple(tuple(entries.get((k, i), Rational(0)) for i in range(ns)) for k in range(nt)))


def serialize_map(f: LinearMap) -> str:
    out = [f"map {f.target_dim} {f.source_dim}"]
    for k, row in enumerate(f.matrix):
        for i, v in enumerate(row):
            if v != 0:
                out.append(f"m {k} {i} {format_rational(v)}")
    out.append("end")
    return "\n".join(out) + "\n"


def parse_tensor(text) -> Tensor2:
    lines = _tokenize(text)
    (a,) = _expect(lines, 0, "tensor", 1)
    n = _int(a, "dimension", 1, MAX_DIM + 1)
    entries = _entries(lines, 1, "t", 2, (n, n))
    return Tensor2(n, tuple(tuple(entries.get((p, r), Rational(0)) for r in range(n)) for p in range(n)))


def serialize_tensor(t: Tensor2) -> str:
    out = [f"tensor {t.dim}"]
    for p, r, v in t.nonzero():
        out.append(f"t {p} {r} {format_rational(v)}")
    out.append("end")
    return "\n".join(out) + "\n"


def parse_polymap(text) -> PolyMap:
    lines = _tokenize(text)
    a, b = _expect(lines, 0, "poly", 2)
    m = _int(a, "arity", 1, MAX_ARITY + 1)
    n = _int(b, "dimension", 1, MAX_DIM + 1)
    if n ** (m + 1) > MAX_TABLE:
        raise ParseError(f"poly-map with {n ** (m + 1)} coordinates is too large", b.line, b.col)
    entries = _entries(lines, 1, "p", m + 1, (n,) * (m + 1))
    zero = Rational(0)
    return PolyMap(m, n, tuple(entries.get(idx, zero) for idx in product(range(n), repeat=m + 1)))


def serialize_polymap(f: PolyMap) -> str:
    out = [f"poly {f.arity} {f.dim}"]
    for idx, v in zip(product(range(f.dim), repeat=f.arity + 1), f.coords):
        if v != 0:
            out.append("p " + " ".join(map(str, idx)) + f" {format_rational(v)}")
    out.append("end")
    return "\n".join(out) + "\n"


def parse_element(text: str, n: int) -> Element:
    """``e<i>`` for a basis vector, otherwise ``n`` comma-separated rationals."""
    s = text.strip()
    m = re.fullmatch(r"e([0-9]+)", s)
    if m:
        i = int(m.group(1))
        if i >= n:
            raise ParseError(f"basis index {i} out of range for dimension {n}", 1, 2)
        return Element.basis(n, i)
    parts = s.split(",")
    if len(parts) != n:
        raise ParseError(f"expected {n} comma-separated coordinates, got {len(parts)}", 1, 1)
    coords = []
    col = 1
    for p in parts:
        tok = _Tok(p.strip())
        tok.line, tok.col = 1, col + (len(p) - len(p.lstrip()))
        coords.append(_rat(tok))
        col += len(p) + 1
    return Element(tuple(coords))


def format_element(x: Element) -> str:
    return ",".join(format_rational(v) for v in x.coords)
