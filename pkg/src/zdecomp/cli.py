"""Command-line front end.

Every command reads one input document (see :mod:`zdecomp.docformat`),
runs one stage of the pipeline and prints an output document, either as
readable text or as JSON (``--format structured``).  Exit codes: 0 on
success, 1 when a module reports a mathematical failure (or ``verify``
rejects a decomposition), 2 on input errors.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
import warnings
from typing import Optional

from .decompose import (
    AlgebraFactor,
    DecompositionReport,
    certify_indecomposable,
    decompose_algebra,
    decompose_bilinear,
    verify_decomposition,
)
from .docformat import DocumentError, InputDocument, read_document
from .exactlin import hermite_basis
from .idempotents import primitive_idempotents
from .polyring import Ideal
from .primdec import PrimdecError, primary_decomposition_with_primes
from .scalars import ScalarsError, annihilators, max_scalars_algebra, max_scalars_bilinear, scalar_presentation

__all__ = ["main", "run", "render", "parse_output"]

COMMANDS = ("annihilator", "scalars", "idempotents", "primdec", "decompose", "verify")

HELP = {
    "annihilator": "left, right and two-sided annihilators of an algebra",
    "scalars": "generators and presentation of the maximal ring of scalars",
    "idempotents": "primitive idempotents of an ideal's quotient or of a ring of scalars",
    "primdec": "primary decomposition with primes of an ideal with finite quotient",
    "decompose": "direct decomposition of an algebra modulo its annihilator, or of a bilinear map",
    "verify": "check the document's factor lines (or the computed factors) as a decomposition",
}


class CommandFailure(Exception):
    """A result that should make the process exit with status 1."""


def _rows(vectors) -> list:
    return [list(map(int, v)) for v in vectors]


def _ideal_doc(I: Ideal) -> dict:
    return {"generators": [str(g) for g in I.gens], "groebner_basis": [str(g) for g in I.gb()]}


def _need(doc: InputDocument, *kinds):
    if doc.kind not in kinds:
        wanted = " or ".join(kinds)
        article = "an" if wanted[0] in "aei" else "a"
        raise DocumentError(f"this command expects {article} {wanted} document, got {doc.kind}")


def _with_relations(R, lattice):
    return _rows(hermite_basis([list(v) for v in lattice] + [list(r) for r in R.group.relations], R.n))


def cmd_annihilator(doc: InputDocument, seed: int) -> dict:
    _need(doc, "algebra")
    R = doc.algebra()
    left, right, both = annihilators(R)
    return {"left": _with_relations(R, left), "right": _with_relations(R, right),
            "two_sided": _with_relations(R, both)}


def _scalar_ring(doc: InputDocument):
    if doc.kind == "bilinear":
        return scalar_presentation(max_scalars_bilinear(doc.bilinear()))
    return max_scalars_algebra(doc.algebra())


def cmd_scalars(doc: InputDocument, seed: int) -> dict:
    _need(doc, "algebra", "bilinear")
    S = _scalar_ring(doc)
    gens = [{"first": _rows(g.first), "second": _rows(g.second)} for g in S.generators]
    return {"generators": gens, "presentation": _ideal_doc(S.presentation)}


def cmd_idempotents(doc: InputDocument, seed: int) -> dict:
    _need(doc, "ideal", "algebra", "bilinear")
    if doc.kind == "ideal":
        I = doc.ideal()
        out = {}
    else:
        I = _scalar_ring(doc).presentation
        out = {"presentation": _ideal_doc(I)}
    idems = primitive_idempotents(I, seed)
    out["idempotents"] = [str(e) for e in idems]
    out["clusters"] = [list(c.members) for c in idems.clusters]
    out["axioms_hold"] = idems.check_axioms()
    return out


def cmd_primdec(doc: InputDocument, seed: int) -> dict:
    _need(doc, "ideal")
    res = primary_decomposition_with_primes(doc.ideal(), seed)
    comps = [{"primary": [str(g) for g in c.primary.gb()], "prime": [str(g) for g in c.prime.gb()],
              "height_class": c.height_class} for c in res]
    return {"components": comps, "intersection_ok": res.check_intersection(),
            "irredundant": res.is_irredundant()}


def _report_doc(R, rep: DecompositionReport) -> dict:
    return {"annihilator": _rows(rep.ann_basis),
            "idempotents": [str(e) for e in rep.idempotents] if rep.idempotents else [],
            "factors": [_rows(f.generators) for f in rep.factors],
            "indecomposable_certified": rep.indecomposable_certified,
            "verified": verify_decomposition(R, rep)}


def cmd_decompose(doc: InputDocument, seed: int) -> dict:
    _need(doc, "algebra", "bilinear")
    if doc.kind == "bilinear":
        factors = decompose_bilinear(doc.bilinear(), seed)
        return {"factors": [{"n1": _rows(f.n1_gens), "n2": _rows(f.n2_gens), "m": _rows(f.m_gens)}
                            for f in factors]}
    R = doc.algebra()
    return _report_doc(R, decompose_algebra(R, seed))


def cmd_verify(doc: InputDocument, seed: int) -> dict:
    _need(doc, "algebra")
    R = doc.algebra()
    if doc.factors:
        rep = DecompositionReport(tuple(AlgebraFactor(tuple(f), i) for i, f in enumerate(doc.factors)),
                                  certify_indecomposable(R), ())
        out = {"source": "input", "factors": [_rows(f) for f in doc.factors],
               "verified": verify_decomposition(R, rep)}
    else:
        out = {"source": "decompose"}
        out.update(_report_doc(R, decompose_algebra(R, seed)))
    if not out["verified"]:
        raise CommandFailure(out)
    return out


HANDLERS = {
    "annihilator": cmd_annihilator,
    "scalars": cmd_scalars,
    "idempotents": cmd_idempotents,
    "primdec": cmd_primdec,
    "decompose": cmd_decompose,
    "verify": cmd_verify,
}


def run(command: str, doc: InputDocument, seed: int = 0) -> dict:
    """Run one command and return its output document."""
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        result = HANDLERS[command](doc, seed)
    return {"command": command, "seed": seed, "result": result}


def _text_lines(value, indent=0) -> list[str]:
    pad = "  " * indent
    out = []
    if isinstance(value, dict):
        for k, v in value.items():
            if isinstance(v, (dict, list)) and v and not _flat(v):
                out.append(f"{pad}{k}:")
                out.extend(_text_lines(v, indent + 1))
            else:
                out.append(f"{pad}{k}: {_scalar(v)}")
    elif isinstance(value, list):
        for v in value:
            if isinstance(v, (dict, list)) and v and not _flat(v):
                out.append(f"{pad}-")
                out.extend(_text_lines(v, indent + 1))
            else:
                out.append(f"{pad}- {_scalar(v)}")
    else:
        out.append(pad + _scalar(value))
    return out


def _flat(v) -> bool:
    return isinstance(v, list) and all(not isinstance(x, (list, dict)) for x in v)


def _scalar(v) -> str:
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, list):
        return "[" + ", ".join(_scalar(x) for x in v) + "]"
    if isinstance(v, dict):
        return "{}"
    return str(v)


def render(output: dict, fmt: str = "text") -> str:
    """Serialize an output document."""
    if fmt == "structured":
        return json.dumps(output, indent=2) + "\n"
    return "\n".join(_text_lines(output)) + "\n"


def parse_output(text: str) -> dict:
    """Inverse of ``render(..., "structured")``."""
    return json.loads(text)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="zdecomp", description="Direct decompositions of finite Z-algebras.")
    sub = parser.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        p = sub.add_parser(name, help=HELP[name], description=HELP[name])
        p.add_argument("input", help="input document")
        p.add_argument("--seed", type=int, default=0, help="seed for randomized steps (default 0)")
        p.add_argument("--format", choices=("text", "structured"), default="text",
                       help="readable text (default) or JSON")
        p.add_argument("--output", help="write the result here instead of stdout")
        p.add_argument("--timing", action="store_true",
                       help="add wall-clock seconds (makes output non-reproducible)")
    return parser


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if not 0 <= args.seed < 2 ** 64:
        parser.error("--seed must be an unsigned 64-bit integer")
    status = 0
    try:
        doc = read_document(args.input)
        start = time.perf_counter()
        try:
            output = run(args.command, doc, args.seed)
        except CommandFailure as exc:
            output = {"command": args.command, "seed": args.seed, "result": exc.args[0]}
            status = 1
        if args.timing:
            output["seconds"] = round(time.perf_counter() - start, 3)
    except DocumentError as exc:
        print(f"{args.input}: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"{args.input}: {exc.strerror}", file=sys.stderr)
        return 2
    except (ScalarsError, PrimdecError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    text = render(output, args.format)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return status


if __name__ == "__main__":
    raise SystemExit(main())
