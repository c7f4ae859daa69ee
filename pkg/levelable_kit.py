#!/usr/bin/env python3
"""
levelable-kit command line

Reads one JSON complex or graph document (a file path, or '-' for standard
input), runs the requested computation and writes one JSON object to
standard output. Exit codes: 0 levelable or success, 1 not levelable,
2 any input or precondition error.
"""

import argparse
import itertools
import logging
import sys
from collections import Counter, defaultdict
from typing import Any, Dict, Optional, Sequence, Tuple

from config import Config
from corpus import random_complex, seeded
from documents import (
    ComplexDocument,
    dump,
    load_complex_document,
    load_graph_document,
)
from errors import LevelableKitError, TooSmall
from levelability import (
    STRATEGIES,
    LevelDecision,
    Verdict,
    construct,
    decide_levelable,
    nonlevelable_family,
    nonlevelable_family_facets,
)
from monomial_algebra import (
    ExponentTuple,
    betti_tail,
    describe,
    inverse_system_generators,
    normalize,
    socle_bruteforce,
)
from simplicial_complex import (
    SimplicialComplex,
    independence_complex,
    is_forest,
    is_pure,
    maximal_independent_sets,
    restrict,
)

_log = logging.getLogger("levelable_kit.cli")

Result = Tuple[Dict[str, Any], int]

EXIT_OK = 0
EXIT_NOT_LEVELABLE = 1
EXIT_ERROR = 2


def _exit_code(verdict: Verdict) -> int:
    return EXIT_NOT_LEVELABLE if verdict == Verdict.NOT_LEVELABLE else EXIT_OK


def _prepare(doc: ComplexDocument, reduce: bool, strip_singletons: bool = False,
             need_exponents: bool = False) -> Tuple[SimplicialComplex, Optional[ExponentTuple]]:
    """
    Complex and exponents of a document, optionally normalized

    With reduce set, vertices with exponent 1 are dropped and, when
    strip_singletons is set, so are vertices forming a facet on their own.
    """
    c = doc.to_complex()
    if need_exponents:
        doc.require_exponents()
    elif not reduce:
        return c, None
    a = ExponentTuple(doc.exponents) if doc.exponents is not None else None
    if not reduce:
        return c, a
    if a is not None:
        c, a = normalize(c, a)
    if strip_singletons:
        singles = {f.members[0] for f in c.facets if len(f) == 1}
        if singles:
            _log.info("dropping singleton facets %s", [c.vertices.label(i) for i in sorted(singles)])
            keep = [i for i in range(1, c.n + 1) if i not in singles]
            if a is not None:
                a = ExponentTuple(tuple(a.a[i - 1] for i in keep))
            c = restrict(c, keep)
    return c, a


def _with_vertices(payload: Dict[str, Any], c: SimplicialComplex, reduce: bool) -> Dict[str, Any]:
    if reduce:
        payload["vertices"] = list(c.vertices.names)
    return payload


def _decision_payload(decision: LevelDecision) -> Dict[str, Any]:
    system = decision.system
    payload: Dict[str, Any] = {
        "verdict": decision.verdict.value,
        "system": {
            "rows": system.coefficients if system else [],
            "rhs": system.rhs if system else [],
        },
    }
    if decision.certificate is not None:
        payload["certificate"] = list(decision.certificate.a)
    if decision.report is not None:
        payload["report"] = {
            "reduced_rows": list(decision.report.reduced_rows),
            "forced_zero": decision.report.forced_labels,
            "summary": decision.report.summary(),
        }
    return payload


def cmd_socle(doc: ComplexDocument, reduce: bool = False) -> Result:
    c, a = _prepare(doc, reduce, need_exponents=True)
    report = describe(c, a)
    labels = c.vertices.names
    payload = {
        "h_vector": list(report.h_vector.h),
        "socle_vector": list(report.socle_vector.s),
        "socle_degree": report.socle_vector.degree,
        "type": report.type,
        "inverse_system_generators": [g.render(labels) for g in report.generators],
        "is_level": report.is_level,
        "is_gorenstein": report.is_gorenstein,
    }
    return _with_vertices(payload, c, reduce), EXIT_OK


def cmd_levelable(doc: ComplexDocument, reduce: bool = False) -> Result:
    c, _ = _prepare(doc, reduce, strip_singletons=True)
    decision = decide_levelable(c)
    return _with_vertices(_decision_payload(decision), c, reduce), _exit_code(decision.verdict)


def cmd_construct(doc: ComplexDocument, strategy: str = "auto", d: int = 2, reduce: bool = False) -> Result:
    c, _ = _prepare(doc, reduce, strip_singletons=True)
    built = construct(c, strategy, d)
    payload: Dict[str, Any] = {
        "strategy": built.strategy,
        "certificate": list(built.certificate.a) if built.certificate is not None else None,
        "verified": built.verified,
    }
    if built.skipped:
        payload["skipped"] = list(built.skipped)
    code = EXIT_OK
    if built.decision is not None:
        decided = _decision_payload(built.decision)
        payload["verdict"] = decided["verdict"]
        if "report" in decided:
            payload["report"] = decided["report"]
        code = _exit_code(built.decision.verdict)
    return _with_vertices(payload, c, reduce), code


def cmd_family(n: int) -> Result:
    facets = nonlevelable_family_facets(n)
    doc = ComplexDocument.from_complex(nonlevelable_family(n), facets=facets)
    return doc.to_json(), EXIT_OK


def cmd_graph(doc) -> Result:
    g = doc.to_graph()
    delta = independence_complex(g)
    tail = betti_tail(g)
    payload = {
        "independence_complex": delta.facet_labels(),
        "max_independent_set_count": len(maximal_independent_sets(g)),
        "betti_tail": [{"shift": shift, "multiplicity": count} for shift, count in tail.pairs],
        "type": tail.total,
    }
    return payload, EXIT_OK


def cmd_oracle(doc: ComplexDocument, max_box: Optional[int] = None, reduce: bool = False) -> Result:
    c, a = _prepare(doc, reduce, need_exponents=True)
    labels = c.vertices.names
    found = socle_bruteforce(c, a, max_box)
    predicted = sorted((g.renamed(False) for g in inverse_system_generators(c, a)), key=lambda m: m.exponents)
    payload = {
        "monomials": [m.render(labels) for m in found],
        "predicted": [m.render(labels) for m in predicted],
        "match": sorted(m.exponents for m in found) == [m.exponents for m in predicted],
    }
    return _with_vertices(payload, c, reduce), EXIT_OK


def cmd_normalize(doc: ComplexDocument) -> Result:
    c, a = normalize(doc.to_complex(), doc.require_exponents())
    return ComplexDocument.from_complex(c, a.a).to_json(), EXIT_OK


def _classify(c: SimplicialComplex) -> str:
    if is_pure(c):
        return "pure"
    if all(not f & g for f, g in itertools.combinations(c.masks, 2)):
        return "disjoint"
    if is_forest(c):
        return "forest"
    return "other"


def cmd_census(n: int, samples: int = 100, seed: Optional[int] = 0) -> Result:
    """Verdict counts by class over random complexes on n vertices"""
    if n < 2:
        raise TooSmall("a census needs at least two vertices")
    rng = seeded(seed)
    counts: Dict[str, Counter] = defaultdict(Counter)
    for _ in range(samples):
        c = random_complex(rng, n)
        counts[_classify(c)][decide_levelable(c).verdict.value] += 1
    payload = {
        "n": n,
        "samples": samples,
        "seed": seed,
        "classes": {name: dict(tally) for name, tally in counts.items()},
    }
    return payload, EXIT_OK


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return value


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--log-level", help="logging level for stderr (default: LEVELABLE_LOG_LEVEL or WARNING)")
    common.add_argument("--normalize", action="store_true", help="drop vertices with exponent 1 (and singleton facets) first")
    common.add_argument("--max-box", type=_positive, help="lattice-point cap for the brute-force oracle")

    parser = argparse.ArgumentParser(
        prog="levelable-kit",
        description="Socle, h-vector and levelability of A(Delta, a) for simplicial complexes.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    for name, text in [
        ("socle", "h-vector, socle vector and inverse system of a complex with exponents"),
        ("levelable", "decide whether some exponent tuple makes the algebra level"),
        ("oracle", "brute-force socle checked against the facet prediction"),
        ("normalize", "drop vertices with exponent 1 and emit the reduced document"),
        ("graph", "independence complex and last Betti module of a graph"),
    ]:
        p = sub.add_parser(name, parents=[common], help=text)
        p.add_argument("input", help="JSON document path, or - for standard input")

    p = sub.add_parser("construct", parents=[common], help="build a level tuple with a constructive strategy")
    p.add_argument("input", help="JSON document path, or - for standard input")
    p.add_argument("--strategy", choices=STRATEGIES, default="auto")
    p.add_argument("--d", type=int, default=2, help="repeated exponent for the pure strategy")

    p = sub.add_parser("family", parents=[common], help="the non-levelable complex on n >= 5 vertices")
    p.add_argument("n", type=int)

    p = sub.add_parser("census", parents=[common], help="verdict counts over random complexes on n vertices")
    p.add_argument("n", type=_positive)
    p.add_argument("--samples", type=_positive, default=100)
    p.add_argument("--seed", type=int, default=0)
    return parser


def dispatch(args: argparse.Namespace) -> Result:
    if args.command == "socle":
        return cmd_socle(load_complex_document(args.input), args.normalize)
    if args.command == "levelable":
        return cmd_levelable(load_complex_document(args.input), args.normalize)
    if args.command == "construct":
        return cmd_construct(load_complex_document(args.input), args.strategy, args.d, args.normalize)
    if args.command == "family":
        return cmd_family(args.n)
    if args.command == "graph":
        return cmd_graph(load_graph_document(args.input))
    if args.command == "oracle":
        return cmd_oracle(load_complex_document(args.input), args.max_box, args.normalize)
    if args.command == "normalize":
        return cmd_normalize(load_complex_document(args.input))
    return cmd_census(args.n, args.samples, args.seed)


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        Config.configure_logging(args.log_level)
        Config.validate_config()
    except ValueError as e:
        sys.stdout.write(dump({"error": "ConfigError", "message": str(e)}))
        return EXIT_ERROR
    try:
        payload, code = dispatch(args)
    except LevelableKitError as e:
        _log.debug("%s failed: %s", args.command, e)
        payload, code = e.to_dict(), EXIT_ERROR
    sys.stdout.write(dump(payload))
    return code


if __name__ == "__main__":
    sys.exit(main())
