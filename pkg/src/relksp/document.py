"""Line-oriented document grammar: ring descriptors, ideals, elements, matrices, rows and words.

A document is a sequence of semicolon-terminated statements::

    ring Zmod 8;
    ideal I = <4>;
    elem u = 5;
    matrix A = [[0,1],[-1,0]];
    row v = [5,4] witness [5,0];
    word W gl4 = gen(1,2,4) conj(gen(2,1,1); 1,2,4);
    stword S sp6 = X(1,2,3) X(2,1,1)^-1;

``elem``, ``matrix``, ``row``, ``word`` and ``stword`` accept an optional
``: <ring>`` annotation for values over a ring other than the document ring.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional

from .elementary import LINEAR, SYMPLECTIC, ConjGen, ElementaryWord, PlainGen, UnimodularRow
from .errors import DocumentSyntaxError, DocumentTypeError, RelKspError, UnknownBinding
from .matrices import Matrix
from .rings import (
    QQ,
    ZZ,
    Double,
    Excision,
    Ideal,
    Integers,
    IntegersMod,
    Localized,
    Polynomial,
    QuotientEuclidean,
    Rationals,
    Ring,
    ZeroRing,
)
from .steinberg import StAtom, SteinbergWord

_TOKEN = re.compile(r"(?P<ws>[ \t\r]+)|(?P<nl>\n)|(?P<comment>#[^\n]*)|(?P<int>\d+)"
                    r"|(?P<ident>[A-Za-z_][A-Za-z0-9_']*)|(?P<punct>[\[\](),;/|@&=<>^:\-])")

_SHAPE = re.compile(r"^(gl|sp)(\d+)$")


@dataclass(frozen=True)
class Token:
    kind: str
    text: str
    line: int
    column: int


def tokenize(text: str) -> List[Token]:
    out = []
    line, col, pos = 1, 1, 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise DocumentSyntaxError(f"unexpected character {text[pos]!r}", line, col)
        kind = m.lastgroup
        s = m.group()
        if kind == "nl":
            line, col = line + 1, 1
        else:
            if kind not in ("ws", "comment"):
                out.append(Token(kind, s, line, col))
            col += len(s)
        pos = m.end()
    out.append(Token("eof", "", line, col))
    return out


@dataclass
class Binding:
    kind: str  # ideal | elem | matrix | row | word | stword
    value: object
    ring: Ring


@dataclass
class Document:
    ring: Optional[Ring] = None
    bindings: Dict[str, Binding] = field(default_factory=dict)

    def get(self, name: str, kind: Optional[str] = None) -> Binding:
        if name not in self.bindings:
            raise UnknownBinding(name)
        b = self.bindings[name]
        if kind is not None and b.kind != kind:
            raise DocumentTypeError(f"{name} is a {b.kind}, expected a {kind}")
        return b

    def __eq__(self, other):
        if not isinstance(other, Document) or self.ring != other.ring:
            return False
        if list(self.bindings) != list(other.bindings):
            return False
        for name, b in self.bindings.items():
            c = other.bindings[name]
            if b.kind != c.kind or b.ring != c.ring or not _same_value(b, c):
                return False
        return True


def _same_value(b: Binding, c: Binding) -> bool:
    if b.kind == "elem":
        return b.ring.eq(b.value, c.value)
    if b.kind == "row":
        R = b.ring
        return all(R.eq(x, y) for x, y in zip(b.value.entries + b.value.witness, c.value.entries + c.value.witness))
    return b.value == c.value


class Parser:
    def __init__(self, text: str):
        self.tokens = tokenize(text)
        self.pos = 0

    # -- token helpers ------------------------------------------------------
    @property
    def tok(self) -> Token:
        return self.tokens[self.pos]

    def error(self, msg: str, tok: Optional[Token] = None, cls=DocumentSyntaxError):
        tok = tok or self.tok
        return cls(msg, tok.line, tok.column)

    def take(self) -> Token:
        t = self.tok
        self.pos += 1
        return t

    def at(self, text: str) -> bool:
        return self.tok.text == text and self.tok.kind != "eof"

    def accept(self, text: str) -> bool:
        if self.at(text):
            self.pos += 1
            return True
        return False

    def expect(self, text: str) -> Token:
        if not self.at(text):
            raise self.error(f"expected {text!r}, found {self.tok.text or 'end of input'!r}")
        return self.take()

    def ident(self) -> str:
        if self.tok.kind != "ident":
            raise self.error(f"expected a name, found {self.tok.text or 'end of input'!r}")
        return self.take().text

    def integer(self) -> int:
        neg = self.accept("-")
        if self.tok.kind != "int":
            raise self.error(f"expected an integer, found {self.tok.text or 'end of input'!r}")
        n = int(self.take().text)
        return -n if neg else n

    # -- rings and ideals ---------------------------------------------------
    def ring_desc(self) -> Ring:
        start = self.tok
        if self.accept("("):
            R = self.ring_desc()
            self.expect(")")
            return R
        name = self.ident()
        try:
            if name == "Z":
                return ZZ
            if name == "Q":
                return QQ
            if name == "zero":
                return ZeroRing()
            if name == "Zmod":
                m = self.integer()
                if m < 2:
                    raise self.error("Zmod needs a modulus of at least 2", start, DocumentTypeError)
                return IntegersMod(m)
            if name == "poly":
                base = self.ring_desc()
                return Polynomial(base, self.ident())
            if name == "loc":
                base = self.ring_desc()
                f = self.element(base)
                if base.is_zero(f):
                    raise self.error("cannot localize at zero", start, DocumentTypeError)
                return Localized(base, f)
            if name == "quot":
                base = self.ring_desc()
                if not base.is_euclidean:
                    raise self.error(f"quot needs a Euclidean base, got {base}", start, DocumentTypeError)
                return QuotientEuclidean(base, self.element(base))
            if name == "excision":
                base = self.ring_desc()
                return Excision(base, self.ideal_literal(base))
            if name == "double":
                base = self.ring_desc()
                return Double(base, self.ideal_literal(base))
        except RelKspError as exc:
            if isinstance(exc, DocumentSyntaxError):
                raise
            raise self.error(str(exc), start, DocumentTypeError) from None
        raise self.error(f"unknown ring {name!r}", start)

    def ideal_literal(self, R: Ring) -> Ideal:
        start = self.expect("<")
        gens = [self.element(R)]
        while self.accept(","):
            gens.append(self.element(R))
        self.expect(">")
        try:
            return Ideal.of(R, gens)
        except (ValueError, RelKspError) as exc:
            raise self.error(str(exc), start, DocumentTypeError) from None

    # -- elements -------------------------------------------------------------
    def element(self, R: Ring):
        start = self.tok
        try:
            return self._element(R)
        except RelKspError as exc:
            if isinstance(exc, DocumentSyntaxError):
                raise
            raise self.error(str(exc), start, DocumentTypeError) from None

    def _element(self, R: Ring):
        if isinstance(R, (Integers, IntegersMod, ZeroRing)):
            value = self.integer()
            if self.at("/"):
                raise self.error(f"fractions are not elements of {R}", self.tok, DocumentTypeError)
            return R.coerce(value)
        if isinstance(R, Rationals):
            p = self.integer()
            if self.accept("/"):
                q_tok = self.tok
                q = self.integer()
                if q == 0:
                    raise self.error("zero denominator", q_tok, DocumentTypeError)
                return Fraction(p, q)
            return Fraction(p)
        if isinstance(R, Polynomial):
            if self.accept("["):
                coeffs = []
                if not self.at("]"):
                    coeffs.append(self.element(R.base))
                    while self.accept(","):
                        coeffs.append(self.element(R.base))
                self.expect("]")
                return R.trim(coeffs)
            return R.coerce(self.element(R.base))
        if isinstance(R, Localized):
            num = self.element(R.base)
            k = 0
            if self.accept("@"):
                k_tok = self.tok
                k = self.integer()
                if k < 0:
                    raise self.error("exponent must be non-negative", k_tok, DocumentTypeError)
            return R.canon((num, k))
        if isinstance(R, QuotientEuclidean):
            return R.coerce(self.element(R.base))
        if isinstance(R, (Excision, Double)):
            if self.tok.kind == "int" or self.at("-"):
                return R.from_int(self.integer())
            self.expect("(")
            a = self.element(R.base)
            sep = "|" if isinstance(R, Excision) else "&"
            self.expect(sep)
            b = self.element(R.base)
            self.expect(")")
            return R.make(a, b)
        raise self.error(f"no element syntax for {R}", cls=DocumentTypeError)

    def element_list(self, R: Ring) -> list:
        self.expect("[")
        out = []
        if not self.at("]"):
            out.append(self.element(R))
            while self.accept(","):
                out.append(self.element(R))
        self.expect("]")
        return out

    # -- words ----------------------------------------------------------------
    def atoms(self, R: Ring) -> list:
        out = []
        while self.at("gen") or self.at("conj"):
            start = self.tok
            if self.accept("gen"):
                self.expect("(")
                i, j, a = self._triple(R)
                self.expect(")")
                out.append((start, PlainGen(i, j, a)))
            else:
                self.take()
                self.expect("(")
                inner = self.atoms(R)
                self.expect(";")
                i, j, a = self._triple(R)
                self.expect(")")
                out.append((start, ("conj", inner, i, j, a)))
        return out

    def _triple(self, R):
        i = self.integer()
        self.expect(",")
        j = self.integer()
        self.expect(",")
        return i, j, self.element(R)

    def st_atoms(self, R: Ring) -> list:
        out = []
        while self.at("X"):
            self.take()
            self.expect("(")
            i, j, a = self._triple(R)
            self.expect(")")
            exp = 1
            if self.accept("^"):
                e_tok = self.tok
                exp = self.integer()
                if exp not in (1, -1):
                    raise self.error("exponent must be 1 or -1", e_tok)
            out.append(StAtom(i, j, a, exp))
        return out

    # -- statements -----------------------------------------------------------
    def document(self) -> Document:
        doc = Document()
        while self.tok.kind != "eof":
            self.statement(doc)
        return doc

    def statement(self, doc: Document):
        start = self.tok
        kw = self.ident()
        if kw == "ring":
            if doc.ring is not None:
                raise self.error("the ring is already declared", start, DocumentTypeError)
            doc.ring = self.ring_desc()
            self.expect(";")
            return
        if kw not in ("ideal", "elem", "matrix", "row", "word", "stword"):
            raise self.error(f"unknown statement {kw!r}", start)
        if doc.ring is None:
            raise self.error("a ring statement must come first", start, DocumentTypeError)
        name_tok = self.tok
        name = self.ident()
        if name in doc.bindings:
            raise self.error(f"{name} is already bound", name_tok, DocumentTypeError)
        R = doc.ring
        if kw != "ideal" and self.accept(":"):
            R = self.ring_desc()
        value = getattr(self, "_stmt_" + kw)(R, start)
        self.expect(";")
        doc.bindings[name] = Binding(kw, value, R)

    def _stmt_ideal(self, R, start):
        self.expect("=")
        return self.ideal_literal(R)

    def _stmt_elem(self, R, start):
        self.expect("=")
        return self.element(R)

    def _stmt_matrix(self, R, start):
        self.expect("=")
        self.expect("[")
        rows = [self.element_list(R)]
        row_toks = [start]
        while self.accept(","):
            row_toks.append(self.tok)
            rows.append(self.element_list(R))
        self.expect("]")
        for tok, r in zip(row_toks[1:], rows[1:]):
            if len(r) != len(rows[0]):
                raise self.error(f"ragged rows: expected {len(rows[0])} entries, found {len(r)}", tok)
        if not rows[0]:
            raise self.error("empty matrix", start)
        return Matrix(R, rows)

    def _stmt_row(self, R, start):
        self.expect("=")
        entries = self.element_list(R)
        witness = None
        if self.accept("witness"):
            wtok = self.tok
            witness = self.element_list(R)
            if len(witness) != len(entries):
                raise self.error("witness length differs from the row", wtok)
        try:
            return UnimodularRow.make(R, entries, witness)
        except RelKspError as exc:
            raise self.error(str(exc), start, DocumentTypeError) from None

    def _shape(self):
        if self.tok.kind == "ident":
            m = _SHAPE.match(self.tok.text)
            if m:
                self.take()
                return (LINEAR if m.group(1) == "gl" else SYMPLECTIC), int(m.group(2))
        return None

    def _stmt_word(self, R, start):
        shape = self._shape()
        self.expect("=")
        raw = self.atoms(R)
        if shape is None:
            idx = _max_index(raw)
            shape = (LINEAR, max(idx, 2))
        family, size = shape
        try:
            return _build_word(R, family, size, raw)
        except RelKspError as exc:
            raise self.error(str(exc), start, DocumentTypeError) from None

    def _stmt_stword(self, R, start):
        shape = self._shape()
        if shape is None or shape[0] != SYMPLECTIC:
            raise self.error("Steinberg words need an sp<2n> shape")
        self.expect("=")
        atoms = self.st_atoms(R)
        try:
            if shape[1] % 2:
                raise DocumentTypeError("sp sizes are even")
            return SteinbergWord(R, shape[1] // 2, tuple(atoms))
        except (ValueError, RelKspError) as exc:
            if isinstance(exc, DocumentSyntaxError) and exc.line is not None:
                raise
            raise self.error(str(exc), start, DocumentTypeError) from None


def _max_index(raw) -> int:
    m = 0
    for _, atom in raw:
        if isinstance(atom, PlainGen):
            m = max(m, atom.i, atom.j)
        else:
            m = max(m, atom[2], atom[3], _max_index(atom[1]))
    return m


def _build_word(R, family, size, raw) -> ElementaryWord:
    atoms = []
    for _, atom in raw:
        if isinstance(atom, PlainGen):
            atoms.append(atom)
        else:
            _, inner, i, j, a = atom
            atoms.append(ConjGen(_build_word(R, family, size, inner), i, j, a))
    return ElementaryWord(R, family, size, tuple(atoms))


def parse_document(text: str) -> Document:
    return Parser(text).document()


def parse_element(text: str, R: Ring):
    p = Parser(text)
    x = p.element(R)
    if p.tok.kind != "eof":
        raise p.error(f"trailing input {p.tok.text!r}")
    return x


# ---------------------------------------------------------------------------
# printing


def format_word(w: ElementaryWord) -> str:
    f = w.ring.fmt
    parts = []
    for a in w.atoms:
        if isinstance(a, PlainGen):
            parts.append(f"gen({a.i},{a.j},{f(a.a)})")
        else:
            parts.append(f"conj({format_word(a.outer)}; {a.i},{a.j},{f(a.a)})")
    return " ".join(parts)


def word_shape(w) -> str:
    if isinstance(w, SteinbergWord):
        return f"sp{2 * w.n}"
    return ("gl" if w.family == LINEAR else "sp") + str(w.size)


def format_row(v: UnimodularRow) -> str:
    return v.fmt()


def format_value(b: Binding) -> str:
    R = b.ring
    if b.kind == "ideal":
        return b.value.fmt()
    if b.kind == "elem":
        return R.fmt(b.value)
    if b.kind == "matrix":
        return b.value.fmt()
    if b.kind == "row":
        return format_row(b.value)
    if b.kind == "word":
        return format_word(b.value)
    return b.value.fmt()


def print_document(doc: Document) -> str:
    lines = []
    if doc.ring is not None:
        lines.append(f"ring {doc.ring};")
    for name, b in doc.bindings.items():
        head = f"{b.kind} {name}"
        if b.kind != "ideal" and b.ring != doc.ring:
            head += f" : {b.ring}"
        if b.kind in ("word", "stword"):
            head += " " + word_shape(b.value)
        lines.append(f"{head} = {format_value(b)};")
    return "\n".join(lines) + "\n"
