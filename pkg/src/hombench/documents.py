"""Canonical text documents for every structure the workbench handles.

The format is line based and strict: fields appear in a fixed order, indices
are zero based, scalars are decimal rationals in lowest terms ("p" or "p/q"),
tensor entries are sorted with zero entries omitted, and matrices are written
row by row. Serialization of a parsed document reproduces the input byte for
byte, which is what makes regression files and search output stable.
"""

import re
from fractions import Fraction
from math import gcd

from .errors import ParseError
from .foundation import LinearMap, Tensor2, Tensor3
from .algebras import BilinearForm, HomLieAlgebra, HomPreLieAlgebra
from .representations import HomLieRep, HomPreLieRep
from .matched import LieMatchedPair, ManinTriple, PreLieMatchedPair
from .bialgebras import Bialgebra
from .dendriform import HomLDendriform, OOperator

KINDS = ("hom_lie", "hom_pre_lie", "representation", "matched_pair_lie",
         "matched_pair_pre_lie", "bilinear_form", "tensor2", "linear_map",
         "dendriform", "bialgebra", "manin_triple", "o_operator")

_KEY_RE = re.compile(r"^([a-z][a-z0-9_]*):(?: (.*))?$")
_INT_RE = re.compile(r"^(?:0|-?[1-9][0-9]*)$")
_DEN_RE = re.compile(r"^[1-9][0-9]*$")


class Document:
    """A kind tag plus the structured value it describes."""

    __slots__ = ("kind", "value")

    def __init__(self, kind, value):
        if kind not in KINDS:
            raise ParseError("unknown kind %r" % (kind,))
        self.kind = kind
        self.value = value

    def __eq__(self, other):
        if not isinstance(other, Document):
            return NotImplemented
        return (self.kind, self.value) == (other.kind, other.value)

    def __repr__(self):
        return "Document(%r)" % (self.kind,)


class _Cursor:
    def __init__(self, numbered):
        self.items = numbered
        self.pos = 0

    def peek(self):
        if self.pos < len(self.items):
            return self.items[self.pos]
        return None

    def take(self, wanted):
        item = self.peek()
        if item is None:
            last = self.items[-1][0] if self.items else 0
            raise ParseError("line %d: unexpected end of input, expected %s" % (last + 1, wanted))
        self.pos += 1
        return item

    def done(self):
        return self.pos >= len(self.items)


def _parse_int(token, line_no, minimum=None):
    if not _INT_RE.match(token):
        raise ParseError("line %d: bad integer %r" % (line_no, token))
    value = int(token)
    if minimum is not None and value < minimum:
        raise ParseError("line %d: integer %d below minimum %d" % (line_no, value, minimum))
    return value


def _parse_scalar(token, line_no):
    if "/" in token:
        num, _, den = token.partition("/")
        if not _INT_RE.match(num) or not _DEN_RE.match(den):
            raise ParseError("line %d: bad rational %r" % (line_no, token))
        n = int(num)
        d = int(den)
        if d == 1 or n == 0 or gcd(abs(n), d) != 1:
            raise ParseError("line %d: %r not in lowest terms" % (line_no, token))
        return Fraction(n, d)
    return Fraction(_parse_int(token, line_no))


def _split_tokens(text, line_no):
    tokens = text.split(" ")
    if any(t == "" for t in tokens):
        raise ParseError("line %d: malformed spacing" % line_no)
    return tokens


def _read_key(cur, expected):
    line_no, text = cur.take("'%s:'" % expected)
    match = _KEY_RE.match(text)
    if not match or match.group(1) != expected:
        raise ParseError("line %d: expected '%s:', got %r" % (line_no, expected, text))
    return line_no, match.group(2)


def _read_int_field(cur, key, minimum=1):
    line_no, value = _read_key(cur, key)
    if value is None:
        raise ParseError("line %d: '%s' needs a value" % (line_no, key))
    return _parse_int(value, line_no, minimum=minimum)


def _read_tag_field(cur, key, allowed):
    line_no, value = _read_key(cur, key)
    if value not in allowed:
        raise ParseError("line %d: '%s' must be one of %s" % (line_no, key, ", ".join(allowed)))
    return value


def _read_bare_header(cur, key):
    line_no, value = _read_key(cur, key)
    if value is not None:
        raise ParseError("line %d: '%s:' takes no value" % (line_no, key))
    return line_no


def _read_row(cur, cols):
    line_no, text = cur.take("a matrix row")
    if _KEY_RE.match(text):
        raise ParseError("line %d: expected a matrix row, got %r" % (line_no, text))
    tokens = _split_tokens(text, line_no)
    if len(tokens) != cols:
        raise ParseError("line %d: expected %d entries, got %d" % (line_no, cols, len(tokens)))
    return tuple(_parse_scalar(t, line_no) for t in tokens)


def _read_matrix(cur, key, rows, cols):
    _read_bare_header(cur, key)
    return LinearMap(tuple(_read_row(cur, cols) for _ in range(rows)))


def _entry_lines(cur):
    while True:
        item = cur.peek()
        if item is None or _KEY_RE.match(item[1]):
            return
        cur.pos += 1
        yield item


def _read_entries3(cur, key, dims):
    _read_bare_header(cur, key)
    items = {}
    previous = None
    for line_no, text in _entry_lines(cur):
        tokens = _split_tokens(text, line_no)
        if len(tokens) != 4:
            raise ParseError("line %d: tensor entry needs 'i j k c'" % line_no)
        index = tuple(_parse_int(t, line_no, minimum=0) for t in tokens[:3])
        for axis, bound in zip(index, dims):
            if axis >= bound:
                raise ParseError("line %d: index %d out of range" % (line_no, axis))
        if previous is not None and index <= previous:
            raise ParseError("line %d: entries out of order" % line_no)
        previous = index
        coeff = _parse_scalar(tokens[3], line_no)
        if coeff == 0:
            raise ParseError("line %d: zero entries must be omitted" % line_no)
        items[index] = coeff
    return Tensor3.from_entries(dims, items)


def _read_entries2(cur, key, dim_left, dim_right):
    _read_bare_header(cur, key)
    items = {}
    previous = None
    for line_no, text in _entry_lines(cur):
        tokens = _split_tokens(text, line_no)
        if len(tokens) != 3:
            raise ParseError("line %d: tensor entry needs 'i j c'" % line_no)
        index = tuple(_parse_int(t, line_no, minimum=0) for t in tokens[:2])
        if index[0] >= dim_left or index[1] >= dim_right:
            raise ParseError("line %d: index out of range" % line_no)
        if previous is not None and index <= previous:
            raise ParseError("line %d: entries out of order" % line_no)
        previous = index
        coeff = _parse_scalar(tokens[2], line_no)
        if coeff == 0:
            raise ParseError("line %d: zero entries must be omitted" % line_no)
        items[index] = coeff
    return Tensor2.from_entries(dim_left, dim_right, items)


def _read_map_family(cur, key, count, size):
    _read_bare_header(cur, key)
    maps = []
    for idx in range(count):
        line_no, value = _read_key(cur, "map")
        if value != str(idx):
            raise ParseError("line %d: expected 'map: %d'" % (line_no, idx))
        maps.append(LinearMap(tuple(_read_row(cur, size) for _ in range(size))))
    return maps


def _parse_hom_lie(cur):
    dim = _read_int_field(cur, "dim")
    twist = _read_matrix(cur, "twist", dim, dim)
    bracket = _read_entries3(cur, "bracket", (dim, dim, dim))
    return HomLieAlgebra(bracket, twist)


def _parse_hom_pre_lie(cur):
    dim = _read_int_field(cur, "dim")
    twist = _read_matrix(cur, "twist", dim, dim)
    product = _read_entries3(cur, "product", (dim, dim, dim))
    return HomPreLieAlgebra(product, twist)


def _parse_linear_map(cur):
    rows = _read_int_field(cur, "rows")
    cols = _read_int_field(cur, "cols")
    return _read_matrix(cur, "matrix", rows, cols)


def _parse_tensor2(cur):
    dim_left = _read_int_field(cur, "dim_left")
    dim_right = _read_int_field(cur, "dim_right")
    return _read_entries2(cur, "entries", dim_left, dim_right)


def _parse_bilinear_form(cur):
    dim = _read_int_field(cur, "dim")
    symmetry = _read_tag_field(cur, "symmetry", ("symmetric", "skew"))
    return BilinearForm(_read_matrix(cur, "matrix", dim, dim).entries, symmetry)


def _parse_dendriform(cur):
    dim = _read_int_field(cur, "dim")
    twist = _read_matrix(cur, "twist", dim, dim)
    left = _read_entries3(cur, "left", (dim, dim, dim))
    right = _read_entries3(cur, "right", (dim, dim, dim))
    return HomLDendriform(left, right, twist)


def _parse_representation(cur):
    base = _read_tag_field(cur, "base", ("hom_lie", "hom_pre_lie"))
    dim = _read_int_field(cur, "dim")
    twist = _read_matrix(cur, "twist", dim, dim)
    if base == "hom_lie":
        algebra = HomLieAlgebra(_read_entries3(cur, "bracket", (dim, dim, dim)), twist)
    else:
        algebra = HomPreLieAlgebra(_read_entries3(cur, "product", (dim, dim, dim)), twist)
    space_dim = _read_int_field(cur, "space_dim")
    space_twist = _read_matrix(cur, "space_twist", space_dim, space_dim)
    if base == "hom_lie":
        action = _read_map_family(cur, "action", dim, space_dim)
        return HomLieRep(algebra, space_dim, space_twist, action)
    left = _read_map_family(cur, "left", dim, space_dim)
    right = _read_map_family(cur, "right", dim, space_dim)
    return HomPreLieRep(algebra, space_dim, space_twist, left, right)


def _parse_o_operator(cur):
    dim = _read_int_field(cur, "dim")
    twist = _read_matrix(cur, "twist", dim, dim)
    algebra = HomPreLieAlgebra(_read_entries3(cur, "product", (dim, dim, dim)), twist)
    space_dim = _read_int_field(cur, "space_dim")
    space_twist = _read_matrix(cur, "space_twist", space_dim, space_dim)
    left = _read_map_family(cur, "left", dim, space_dim)
    right = _read_map_family(cur, "right", dim, space_dim)
    rep = HomPreLieRep(algebra, space_dim, space_twist, left, right)
    _read_bare_header(cur, "operator")
    matrix = LinearMap(tuple(_read_row(cur, space_dim) for _ in range(dim)))
    return OOperator(rep, matrix)


def _parse_matched_pair_lie(cur):
    first_dim = _read_int_field(cur, "first_dim")
    first_twist = _read_matrix(cur, "first_twist", first_dim, first_dim)
    first = HomLieAlgebra(_read_entries3(cur, "first_bracket", (first_dim,) * 3), first_twist)
    second_dim = _read_int_field(cur, "second_dim")
    second_twist = _read_matrix(cur, "second_twist", second_dim, second_dim)
    second = HomLieAlgebra(_read_entries3(cur, "second_bracket", (second_dim,) * 3), second_twist)
    first_action = _read_map_family(cur, "first_action", first_dim, second_dim)
    second_action = _read_map_family(cur, "second_action", second_dim, first_dim)
    return LieMatchedPair(first, second, first_action, second_action)


def _parse_matched_pair_pre_lie(cur):
    first_dim = _read_int_field(cur, "first_dim")
    first_twist = _read_matrix(cur, "first_twist", first_dim, first_dim)
    first = HomPreLieAlgebra(_read_entries3(cur, "first_product", (first_dim,) * 3), first_twist)
    second_dim = _read_int_field(cur, "second_dim")
    second_twist = _read_matrix(cur, "second_twist", second_dim, second_dim)
    second = HomPreLieAlgebra(_read_entries3(cur, "second_product", (second_dim,) * 3), second_twist)
    first_left = _read_map_family(cur, "first_left", first_dim, second_dim)
    first_right = _read_map_family(cur, "first_right", first_dim, second_dim)
    second_left = _read_map_family(cur, "second_left", second_dim, first_dim)
    second_right = _read_map_family(cur, "second_right", second_dim, first_dim)
    return PreLieMatchedPair(first, second, first_left, first_right, second_left, second_right)


def _parse_bialgebra(cur):
    dim = _read_int_field(cur, "dim")
    twist_line = cur.peek()[0] if cur.peek() else 0
    twist = _read_matrix(cur, "twist", dim, dim)
    product = _read_entries3(cur, "product", (dim, dim, dim))
    dual_product = _read_entries3(cur, "dual_product", (dim, dim, dim))
    if not twist.is_invertible():
        raise ParseError("line %d: bialgebra twist must be invertible" % twist_line)
    dual_twist = twist.inverse().transpose()
    return Bialgebra(HomPreLieAlgebra(product, twist),
                     HomPreLieAlgebra(dual_product, dual_twist))


def _parse_manin_triple(cur):
    first_dim = _read_int_field(cur, "first_dim")
    second_dim = _read_int_field(cur, "second_dim")
    total_dim = first_dim + second_dim
    twist = _read_matrix(cur, "twist", total_dim, total_dim)
    product = _read_entries3(cur, "product", (total_dim,) * 3)
    form = BilinearForm(_read_matrix(cur, "form", total_dim, total_dim).entries, "skew")
    return ManinTriple(HomPreLieAlgebra(product, twist), form, first_dim, second_dim)


_PARSERS = {
    "hom_lie": _parse_hom_lie,
    "hom_pre_lie": _parse_hom_pre_lie,
    "representation": _parse_representation,
    "matched_pair_lie": _parse_matched_pair_lie,
    "matched_pair_pre_lie": _parse_matched_pair_pre_lie,
    "bilinear_form": _parse_bilinear_form,
    "tensor2": _parse_tensor2,
    "linear_map": _parse_linear_map,
    "dendriform": _parse_dendriform,
    "bialgebra": _parse_bialgebra,
    "manin_triple": _parse_manin_triple,
    "o_operator": _parse_o_operator,
}


def _parse_one(numbered):
    cur = _Cursor(numbered)
    line_no, kind = _read_key(cur, "kind")
    if kind not in _PARSERS:
        raise ParseError("line %d: unknown kind %r" % (line_no, kind))
    value = _PARSERS[kind](cur)
    item = cur.peek()
    if item is not None:
        raise ParseError("line %d: unexpected trailing line %r" % (item[0], item[1]))
    return Document(kind, value)


def parse_documents(text):
    """Parse a file that may hold several documents separated by '---' lines."""
    if isinstance(text, bytes):
        text = text.decode("utf-8")
    raw = text.split("\n")
    if raw and raw[-1] == "":
        raw.pop()
    chunks = [[]]
    for offset, line in enumerate(raw):
        line_no = offset + 1
        if line == "---":
            chunks.append([])
            continue
        if line == "" or line != line.strip() or "\t" in line:
            raise ParseError("line %d: blank or badly spaced line" % line_no)
        chunks[-1].append((line_no, line))
    documents = []
    for chunk in chunks:
        if not chunk:
            raise ParseError("empty document")
        documents.append(_parse_one(chunk))
    return documents


def parse_document(text):
    """Parse exactly one document."""
    documents = parse_documents(text)
    if len(documents) != 1:
        raise ParseError("expected exactly one document, found %d" % len(documents))
    return documents[0]


def _scalar_str(value):
    return str(Fraction(value))


def _emit_matrix(lines, key, matrix):
    lines.append(key + ":")
    for row in matrix.entries:
        lines.append(" ".join(_scalar_str(v) for v in row))


def _emit_entries3(lines, key, tensor):
    lines.append(key + ":")
    for (i, j, k), c in tensor.nonzero_items():
        lines.append("%d %d %d %s" % (i, j, k, _scalar_str(c)))


def _emit_entries2(lines, key, tensor):
    lines.append(key + ":")
    for (i, j), c in tensor.nonzero_items():
        lines.append("%d %d %s" % (i, j, _scalar_str(c)))


def _emit_map_family(lines, key, maps):
    lines.append(key + ":")
    for idx, m in enumerate(maps):
        lines.append("map: %d" % idx)
        for row in m.entries:
            lines.append(" ".join(_scalar_str(v) for v in row))


def _serialize_hom_lie(lines, a):
    lines.append("dim: %d" % a.dim)
    _emit_matrix(lines, "twist", a.twist)
    _emit_entries3(lines, "bracket", a.bracket)


def _serialize_hom_pre_lie(lines, a):
    lines.append("dim: %d" % a.dim)
    _emit_matrix(lines, "twist", a.twist)
    _emit_entries3(lines, "product", a.product)


def _serialize_linear_map(lines, m):
    lines.append("rows: %d" % m.rows)
    lines.append("cols: %d" % m.cols)
    _emit_matrix(lines, "matrix", m)


def _serialize_tensor2(lines, t):
    lines.append("dim_left: %d" % t.dim_left)
    lines.append("dim_right: %d" % t.dim_right)
    _emit_entries2(lines, "entries", t)


def _serialize_bilinear_form(lines, b):
    lines.append("dim: %d" % b.dim)
    lines.append("symmetry: %s" % b.symmetry)
    _emit_matrix(lines, "matrix", b.matrix)


def _serialize_dendriform(lines, d):
    lines.append("dim: %d" % d.dim)
    _emit_matrix(lines, "twist", d.twist)
    _emit_entries3(lines, "left", d.left)
    _emit_entries3(lines, "right", d.right)


def _serialize_representation(lines, rep):
    if isinstance(rep, HomLieRep):
        lines.append("base: hom_lie")
        lines.append("dim: %d" % rep.algebra.dim)
        _emit_matrix(lines, "twist", rep.algebra.twist)
        _emit_entries3(lines, "bracket", rep.algebra.bracket)
        lines.append("space_dim: %d" % rep.space_dim)
        _emit_matrix(lines, "space_twist", rep.twist)
        _emit_map_family(lines, "action", rep.maps)
    else:
        lines.append("base: hom_pre_lie")
        lines.append("dim: %d" % rep.algebra.dim)
        _emit_matrix(lines, "twist", rep.algebra.twist)
        _emit_entries3(lines, "product", rep.algebra.product)
        lines.append("space_dim: %d" % rep.space_dim)
        _emit_matrix(lines, "space_twist", rep.twist)
        _emit_map_family(lines, "left", rep.left)
        _emit_map_family(lines, "right", rep.right)


def _serialize_o_operator(lines, o):
    rep = o.rep
    lines.append("dim: %d" % rep.algebra.dim)
    _emit_matrix(lines, "twist", rep.algebra.twist)
    _emit_entries3(lines, "product", rep.algebra.product)
    lines.append("space_dim: %d" % rep.space_dim)
    _emit_matrix(lines, "space_twist", rep.twist)
    _emit_map_family(lines, "left", rep.left)
    _emit_map_family(lines, "right", rep.right)
    _emit_matrix(lines, "operator", o.matrix)


def _serialize_matched_pair_lie(lines, mp):
    lines.append("first_dim: %d" % mp.first.dim)
    _emit_matrix(lines, "first_twist", mp.first.twist)
    _emit_entries3(lines, "first_bracket", mp.first.bracket)
    lines.append("second_dim: %d" % mp.second.dim)
    _emit_matrix(lines, "second_twist", mp.second.twist)
    _emit_entries3(lines, "second_bracket", mp.second.bracket)
    _emit_map_family(lines, "first_action", mp.first_action)
    _emit_map_family(lines, "second_action", mp.second_action)


def _serialize_matched_pair_pre_lie(lines, mp):
    lines.append("first_dim: %d" % mp.first.dim)
    _emit_matrix(lines, "first_twist", mp.first.twist)
    _emit_entries3(lines, "first_product", mp.first.product)
    lines.append("second_dim: %d" % mp.second.dim)
    _emit_matrix(lines, "second_twist", mp.second.twist)
    _emit_entries3(lines, "second_product", mp.second.product)
    _emit_map_family(lines, "first_left", mp.first_left)
    _emit_map_family(lines, "first_right", mp.first_right)
    _emit_map_family(lines, "second_left", mp.second_left)
    _emit_map_family(lines, "second_right", mp.second_right)


def _serialize_bialgebra(lines, b):
    lines.append("dim: %d" % b.primal.dim)
    _emit_matrix(lines, "twist", b.primal.twist)
    _emit_entries3(lines, "product", b.primal.product)
    _emit_entries3(lines, "dual_product", b.dual.product)


def _serialize_manin_triple(lines, mt):
    lines.append("first_dim: %d" % mt.first_dim)
    lines.append("second_dim: %d" % mt.second_dim)
    _emit_matrix(lines, "twist", mt.total.twist)
    _emit_entries3(lines, "product", mt.total.product)
    _emit_matrix(lines, "form", mt.form.matrix)


_SERIALIZERS = {
    "hom_lie": _serialize_hom_lie,
    "hom_pre_lie": _serialize_hom_pre_lie,
    "representation": _serialize_representation,
    "matched_pair_lie": _serialize_matched_pair_lie,
    "matched_pair_pre_lie": _serialize_matched_pair_pre_lie,
    "bilinear_form": _serialize_bilinear_form,
    "tensor2": _serialize_tensor2,
    "linear_map": _serialize_linear_map,
    "dendriform": _serialize_dendriform,
    "bialgebra": _serialize_bialgebra,
    "manin_triple": _serialize_manin_triple,
    "o_operator": _serialize_o_operator,
}

_KIND_BY_TYPE = (
    (HomLieAlgebra, "hom_lie"),
    (HomPreLieAlgebra, "hom_pre_lie"),
    (HomLieRep, "representation"),
    (HomPreLieRep, "representation"),
    (LieMatchedPair, "matched_pair_lie"),
    (PreLieMatchedPair, "matched_pair_pre_lie"),
    (BilinearForm, "bilinear_form"),
    (Tensor2, "tensor2"),
    (LinearMap, "linear_map"),
    (HomLDendriform, "dendriform"),
    (Bialgebra, "bialgebra"),
    (ManinTriple, "manin_triple"),
    (OOperator, "o_operator"),
)


def document_for(value):
    """Wrap a structured value in a Document with the kind inferred from its type."""
    for cls, kind in _KIND_BY_TYPE:
        if isinstance(value, cls):
            return Document(kind, value)
    raise ParseError("no document kind for %r" % type(value).__name__)


def serialize_document(doc):
    lines = ["kind: %s" % doc.kind]
    _SERIALIZERS[doc.kind](lines, doc.value)
    return "\n".join(lines) + "\n"


def serialize_documents(docs):
    return "---\n".join(serialize_document(d) for d in docs)
