"""Line-oriented input documents for algebras, bilinear maps and ideals.

An algebra document::

    # comments start with '#'
    gens x1 x2 x3
    rel 3 0 0
    mul 1 2 -> 0 1 0

``mul i j -> c1 ... cn`` gives the product of generators ``i`` and ``j``
(1-based) in generator coordinates; omitted products are zero.  The optional
line ``lenient`` accepts structure constants that are not well defined on
the relations (a warning is issued instead of an error).  ``factor`` lines
list hand-made factor generators separated by ``;`` for the ``verify``
command.

A bilinear document starts with ``kind bilinear`` and uses ``gens1``,
``gens2``, ``gensm`` and ``rel1``, ``rel2``, ``relm`` for the three groups;
``mul i j -> ...`` is then ``f(a_i, b_j)`` in the coordinates of ``M``.

An ideal document uses ``vars x y z``, an optional ``order lex`` line and
one ``poly ...`` line per generator.
"""

from __future__ import annotations

from dataclasses import dataclass

from .exactlin import FpAbelianGroup
from .polyring import Ideal, PolyRing, PolySyntaxError
from .scalars import BilinearMap, ZAlgebra

__all__ = [
    "DocumentError",
    "InputDocument",
    "parse_document",
    "format_document",
    "read_document",
]

KINDS = ("algebra", "bilinear", "ideal")


class DocumentError(ValueError):
    """A syntax or consistency error, located by 1-based line and column."""

    def __init__(self, message: str, line: int = 0, column: int = 0):
        self.message = message
        self.line = line
        self.column = column
        where = f"line {line}, column {column}: " if line else ""
        super().__init__(where + message)


@dataclass(frozen=True)
class InputDocument:
    kind: str = "algebra"
    gens: tuple = ()
    relations: tuple = ()
    structure: tuple = ()  # (i, j, vector) with 1-based indices
    lenient: bool = False
    factors: tuple = ()
    # bilinear maps only
    gens2: tuple = ()
    relations2: tuple = ()
    gens_m: tuple = ()
    relations_m: tuple = ()
    # ideals only
    polys: tuple = ()
    order: str = "degrevlex"

    # -- conversions -------------------------------------------------------

    def algebra(self) -> ZAlgebra:
        n = len(self.gens)
        G = FpAbelianGroup(n, self.relations)
        products = {(i - 1, j - 1): list(v) for i, j, v in self.structure}
        return ZAlgebra.from_products(G, products, strict=not self.lenient)

    def bilinear(self) -> BilinearMap:
        N1 = FpAbelianGroup(len(self.gens), self.relations)
        N2 = FpAbelianGroup(len(self.gens2), self.relations2)
        M = FpAbelianGroup(len(self.gens_m), self.relations_m)
        s = [[[0] * M.ngens for _ in range(N2.ngens)] for _ in range(N1.ngens)]
        for i, j, v in self.structure:
            s[i - 1][j - 1] = list(v)
        return BilinearMap(N1, N2, M, s, check=not self.lenient)

    def ideal(self) -> Ideal:
        ring = PolyRing(self.gens, order=self.order)
        return Ideal(ring, [ring.parse(p) for p in self.polys])


def _ints(tokens, lineno, col_of):
    out = []
    for t in tokens:
        try:
            out.append(int(t))
        except ValueError:
            raise DocumentError(f"expected an integer, got {t!r}", lineno, col_of(t)) from None
    return tuple(out)


def parse_document(text: str) -> InputDocument:
    """Parse a document; raises :class:`DocumentError` with a location."""
    fields: dict = {"kind": None, "gens": None, "gens2": None, "gens_m": None,
                    "factors": [], "polys": [], "lenient": False, "order": "degrevlex"}
    lines = text.splitlines()
    mul_lines = []
    rel_lines = {"rel": [], "rel1": [], "rel2": [], "relm": []}
    for lineno, raw in enumerate(lines, 1):
        line = raw.split("#", 1)[0].rstrip()
        if not line.strip():
            continue
        stripped = line.lstrip()
        indent = len(line) - len(stripped)
        head, _, rest = stripped.partition(" ")
        rest_col = indent + len(head) + 2

        def col_of(tok, _line=line):
            return _line.find(tok) + 1

        if head == "kind":
            if rest.strip() not in KINDS:
                raise DocumentError(f"unknown kind {rest.strip()!r}", lineno, rest_col)
            fields["kind"] = rest.strip()
        elif head in ("gens", "gens1", "vars"):
            fields["gens"] = tuple(rest.split())
            if head == "vars" and fields["kind"] is None:
                fields["kind"] = "ideal"
        elif head == "gens2":
            fields["gens2"] = tuple(rest.split())
        elif head == "gensm":
            fields["gens_m"] = tuple(rest.split())
        elif head in rel_lines:
            rel_lines[head].append((lineno, _ints(rest.split(), lineno, col_of)))
        elif head == "mul":
            left, arrow, right = rest.partition("->")
            if not arrow:
                raise DocumentError("expected 'mul i j -> c1 ... cn'", lineno, rest_col)
            idx = _ints(left.split(), lineno, col_of)
            if len(idx) != 2:
                raise DocumentError("expected two generator indices", lineno, rest_col)
            mul_lines.append((lineno, idx, _ints(right.split(), lineno, col_of), line))
        elif head == "lenient":
            if rest.strip():
                raise DocumentError("'lenient' takes no arguments", lineno, rest_col)
            fields["lenient"] = True
        elif head == "factor":
            vecs = tuple(_ints(part.split(), lineno, col_of) for part in rest.split(";"))
            fields["factors"].append((lineno, vecs))
        elif head == "poly":
            fields["polys"].append((lineno, rest.strip(), rest_col + (len(rest) - len(rest.lstrip()))))
        elif head == "order":
            if rest.strip() not in ("degrevlex", "lex", "deglex"):
                raise DocumentError(f"unknown term order {rest.strip()!r}", lineno, rest_col)
            fields["order"] = rest.strip()
        else:
            raise DocumentError(f"unknown directive {head!r}", lineno, indent + 1)
    kind = fields["kind"] or "algebra"
    gens = fields["gens"]
    if gens is None:
        raise DocumentError("missing 'gens' (or 'vars') line", len(lines) or 1, 1)
    if kind == "ideal":
        ring = PolyRing(gens, order=fields["order"])
        for lineno, p, col in fields["polys"]:
            try:
                ring.parse(p)
            except PolySyntaxError as exc:
                raise DocumentError(exc.msg, lineno, col + exc.col - 1) from None
        return InputDocument(kind="ideal", gens=gens, order=fields["order"],
                             polys=tuple(p for _, p, _ in fields["polys"]))
    n1 = len(gens)
    if kind == "bilinear":
        if fields["gens2"] is None or fields["gens_m"] is None:
            raise DocumentError("bilinear documents need 'gens2' and 'gensm'", len(lines) or 1, 1)
        n2, nm = len(fields["gens2"]), len(fields["gens_m"])
        groups = {"rel": n1, "rel1": n1, "rel2": n2, "relm": nm}
    else:
        n2 = nm = n1
        groups = {"rel": n1}
        for key in ("rel1", "rel2", "relm"):
            if rel_lines[key]:
                raise DocumentError(f"'{key}' is only allowed in bilinear documents", rel_lines[key][0][0], 1)
    rels = {}
    for key, size in groups.items():
        out = []
        for lineno, vec in rel_lines[key]:
            if len(vec) != size:
                raise DocumentError(f"relation has {len(vec)} entries, expected {size}", lineno, 5)
            out.append(vec)
        rels[key] = tuple(out)
    structure = []
    seen = set()
    for lineno, (i, j), vec, line in mul_lines:
        col = line.find("mul") + 5
        if not (1 <= i <= n1):
            raise DocumentError(f"index {i} out of range 1..{n1}", lineno, col)
        if not (1 <= j <= n2):
            raise DocumentError(f"index {j} out of range 1..{n2}", lineno, col)
        if len(vec) != nm:
            raise DocumentError(f"product has {len(vec)} entries, expected {nm}", lineno, line.find("->") + 1)
        if (i, j) in seen:
            raise DocumentError(f"product {i} {j} given twice", lineno, col)
        seen.add((i, j))
        structure.append((i, j, vec))
    structure.sort(key=lambda t: (t[0], t[1]))
    factors = []
    for lineno, vecs in fields["factors"]:
        for v in vecs:
            if len(v) != n1:
                raise DocumentError(f"factor vector has {len(v)} entries, expected {n1}", lineno, 8)
        factors.append(vecs)
    if kind == "bilinear":
        return InputDocument(kind="bilinear", gens=gens, relations=rels["rel"] + rels["rel1"],
                             structure=tuple(structure), lenient=fields["lenient"],
                             gens2=fields["gens2"], relations2=rels["rel2"],
                             gens_m=fields["gens_m"], relations_m=rels["relm"])
    return InputDocument(kind="algebra", gens=gens, relations=rels["rel"],
                         structure=tuple(structure), lenient=fields["lenient"],
                         factors=tuple(factors))


def _vec(v) -> str:
    return " ".join(str(c) for c in v)


def format_document(doc: InputDocument) -> str:
    """Canonical text of a document; ``parse_document`` inverts it."""
    out = []
    if doc.kind == "ideal":
        out.append("vars " + " ".join(doc.gens))
        if doc.order != "degrevlex":
            out.append(f"order {doc.order}")
        out.extend(f"poly {p}" for p in doc.polys)
        return "\n".join(out) + "\n"
    if doc.kind == "bilinear":
        out.append("kind bilinear")
        out.append("gens1 " + " ".join(doc.gens))
        out.append("gens2 " + " ".join(doc.gens2))
        out.append("gensm " + " ".join(doc.gens_m))
        out.extend(f"rel1 {_vec(r)}" for r in doc.relations)
        out.extend(f"rel2 {_vec(r)}" for r in doc.relations2)
        out.extend(f"relm {_vec(r)}" for r in doc.relations_m)
    else:
        out.append("gens " + " ".join(doc.gens))
        out.extend(f"rel {_vec(r)}" for r in doc.relations)
    if doc.lenient:
        out.append("lenient")
    out.extend(f"mul {i} {j} -> {_vec(v)}" for i, j, v in doc.structure)
    out.extend("factor " + " ; ".join(_vec(v) for v in f) for f in doc.factors)
    return "\n".join(out) + "\n"


def read_document(path) -> InputDocument:
    with open(path, encoding="utf-8") as fh:
        return parse_document(fh.read())
