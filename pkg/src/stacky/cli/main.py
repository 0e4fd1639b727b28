from __future__ import annotations
from fractions import Fraction
from typing import Callable, Dict, List, Optional
import argparse
import logging
import sys

from . import document, plot, report
from ..deformation.family import DeformationFamily
from ..deformation.rationalize import OrbifoldPipeline, rationalize
from ..delzant.delzant_data import compile as compile_delzant
from ..delzant.sampler import LevelSetSampler, samples_frame
from ..delzant.vertex_check import verify_vertex_lattices
from ..error.value_error.document_error import DocumentError
from ..isomorphism.search import IsomorphismSearch

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_PARSE = 2


class CommandFailed(Exception):
    """A semantic failure whose report has already been prepared."""
    def __init__(self, output: str):
        self.output = output
        super().__init__(output)


def _emit(args: argparse.Namespace, text: str) -> None:
    if args.output:
        with open(args.output, "w", encoding="utf-8") as f:
            f.write(text)
    else:
        print(text, end="" if text.endswith("\n") else "\n")


def _load_valid(path: str) -> document.Document:
    doc = document.load(path)
    validation = doc.decorated.validate()
    if not validation.valid:
        raise CommandFailed(report.validation_text(validation, None))
    return doc


def cmd_validate(args: argparse.Namespace) -> int:
    doc = document.load(args.file)
    validation = doc.decorated.validate()
    classification = doc.decorated.classify() if validation.valid else None
    if args.format == "doc":
        _emit(args, document.dumps({
            "valid": validation.valid,
            "classification": str(classification) if classification else None,
            "checks": [{"check": c.name, "face": c.face, "passed": c.passed, "message": c.message}
                       for c in validation.checks]}))
    else:
        _emit(args, report.validation_text(validation, classification))
    return EXIT_OK if validation.valid else EXIT_FAILURE


def cmd_info(args: argparse.Namespace) -> int:
    D = _load_valid(args.file).decorated
    if args.format == "doc":
        classification = D.classify()
        _emit(args, document.dumps({
            "classification": classification.kind,
            "global_isotropy": str(D.quasilattice.kernel()),
            "isotropy": [{"face": face.name, "dim": face.dim, "group": str(group)}
                         for face, group in D.isotropy_table()],
            "delzant_conditions": D.polytope.delzant_conditions()}))
    else:
        _emit(args, report.info_text(D))
    return EXIT_OK


def cmd_isom(args: argparse.Namespace) -> int:
    D1 = _load_valid(args.file).decorated
    D2 = _load_valid(args.other).decorated
    witness = IsomorphismSearch(args.max_facets).find(D1, D2)
    if args.format == "doc":
        out = {"isomorphic": witness is not None}
        if witness is not None:
            out["witness"] = {"T": document.matrix_to_json(witness.T),
                              "c": [document.element_to_json(a) for a in witness.c],
                              "sigma": [j + 1 for j in witness.sigma],
                              "kernel": witness.kernel_iso_note}
        _emit(args, document.dumps(out))
    else:
        _emit(args, report.iso_text(witness))
    return EXIT_OK


def _family(doc: document.Document, path: str) -> DeformationFamily:
    if doc.family is None:
        raise DocumentError(path, "no deformation section")
    return doc.family


def cmd_deform_validate(args: argparse.Namespace) -> int:
    family = _family(document.load(args.file), args.file)
    family_report = family.validate_family(args.samples, certify_exact=args.certify, progress_bar=args.progress)
    _emit(args, str(family_report))
    return EXIT_OK


def cmd_rationalize(args: argparse.Namespace) -> int:
    doc = _load_valid(args.file)
    family = rationalize(doc.decorated, args.denom, args.samples)
    out = document.Document(doc.decorated, family, doc.notes)
    if args.format == "doc":
        _emit(args, document.emit(out))
    else:
        end = family.evaluate(Fraction(1))
        _emit(args, f"endpoint: {end.classify()}\nend generators: {family.end.gen_matrix}\n"
                    f"end offsets: ({', '.join(str(b) for _, b in family.offset_paths)})")
    return EXIT_OK


def cmd_orbifoldize(args: argparse.Namespace) -> int:
    doc = _load_valid(args.file)
    result = OrbifoldPipeline(args.ceiling, args.samples).run(doc.decorated)
    if args.format == "doc":
        _emit(args, document.emit(document.Document(doc.decorated, result.family, doc.notes)))
    else:
        _emit(args, str(result))
    return EXIT_OK


def cmd_delzant(args: argparse.Namespace) -> int:
    D = _load_valid(args.file).decorated
    data = compile_delzant(D)
    checks = verify_vertex_lattices(D, data)
    if args.format == "doc":
        _emit(args, document.dumps(document.delzant_to_json(data, checks)))
    else:
        _emit(args, report.delzant_text(data, checks))
    return EXIT_OK if all(c.passed for c in checks) else EXIT_FAILURE


def cmd_sample(args: argparse.Namespace) -> int:
    data = compile_delzant(_load_valid(args.file).decorated)
    samples = LevelSetSampler(data, args.seed).sample(args.count, progress_bar=args.progress)
    _emit(args, samples_frame(samples, args.seed, args.moduli).to_csv(index=False))
    return EXIT_OK if all(s.exact for s in samples) else EXIT_FAILURE


def cmd_plot(args: argparse.Namespace) -> int:
    doc = document.load(args.file)
    if args.frames and doc.family is not None:
        _emit(args, plot.plot_family(doc.family, args.frames))
    else:
        _emit(args, plot.plot_polytope(doc.decorated))
    return EXIT_OK


COMMANDS: Dict[str, Callable[[argparse.Namespace], int]] = {
    "validate": cmd_validate,
    "info": cmd_info,
    "isom": cmd_isom,
    "deform-validate": cmd_deform_validate,
    "rationalize": cmd_rationalize,
    "orbifoldize": cmd_orbifoldize,
    "delzant": cmd_delzant,
    "sample": cmd_sample,
    "plot": cmd_plot,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="stacky", description="Decorated stacky moment polytopes, exactly.")
    parser.add_argument("-v", "--verbose", action="store_true", help="log debug diagnostics to stderr")
    sub = parser.add_subparsers(dest="command", required=True)

    def command(name: str, help: str, default_format: str = "text") -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help)
        p.add_argument("file", help="input document (JSON)")
        p.add_argument("--format", choices=("text", "doc"), default=default_format)
        p.add_argument("-o", "--output", help="write to this file instead of stdout")
        return p

    command("validate", "check every condition on a decorated polytope")
    command("info", "classification, isotropy table and labels")
    p = command("isom", "decide whether two decorated polytopes are isomorphic")
    p.add_argument("other", help="second input document")
    p.add_argument("--max-facets", type=int, default=None)
    p = command("deform-validate", "validate the deformation family of a document")
    p.add_argument("--samples", type=int, default=DeformationFamily.DEFAULT_SAMPLES)
    p.add_argument("--certify", action="store_true", help="add the exact certificate for rational families")
    p.add_argument("--progress", action="store_true")
    p = command("rationalize", "deform to a rational datum with image Z^n", default_format="doc")
    p.add_argument("--denom", type=int, required=True)
    p.add_argument("--samples", type=int, default=None)
    p = command("orbifoldize", "deform to an orbifold-type endpoint")
    p.add_argument("--ceiling", type=int, default=None)
    p.add_argument("--samples", type=int, default=None)
    command("delzant", "compile the Delzant construction data", default_format="doc")
    p = command("sample", "sample the level set as CSV")
    p.add_argument("--count", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--moduli", action="store_true", help="add |z_j|^2 = t_j / pi columns")
    p.add_argument("--progress", action="store_true")
    p = command("plot", "SVG of a planar polytope or a strip of family frames")
    p.add_argument("--frames", type=int, default=0)
    return parser


def run(argv: Optional[List[str]] = None) -> int:
    """
    Runs one subcommand.

    Returns:
        int: 0 on success (including a "no" isomorphism answer), 1 on a semantic
            failure, 2 when the input cannot be parsed.
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_PARSE if e.code else EXIT_OK
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        return COMMANDS[args.command](args)
    except DocumentError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_PARSE
    except CommandFailed as e:
        _emit(args, e.output)
        return EXIT_FAILURE
    except (ValueError, ZeroDivisionError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_FAILURE


def main() -> None:
    sys.exit(run())
