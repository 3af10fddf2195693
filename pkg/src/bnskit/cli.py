"""Command line driver and the text formats shared with it.

Exit codes: 0 on success, 1 on parse or usage errors, 2 when a mathematical
precondition fails.  Every command renders both a human report and porcelain
key=value lines (keys sorted, rationals in lowest terms) so scripted callers
get byte-stable output.  A file argument of - reads standard input.
"""

from __future__ import annotations

import argparse
import re
import sys
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Sequence

from . import braid, loop, raag
from .characters import Character, GeneratorBasis, abelianize
from .errors import BnsError, DomainError, InputError, ParseError, PreconditionError
from .graphs import Graph, is_clique, is_connected, min_separating_clique_witness, out_finiteness_predicates
from .obstruction import CERTIFICATE, ObstructionReport, WitnessPair
from .words import Word, f2z, f2z_generate_free


class UsageError(BnsError):
    """Bad command line (unknown command, missing argument, unreadable file)."""


# ---------------------------------------------------------------------------
# text formats

_VALUE_RE = re.compile(r"^[+-]?\d+(/[1-9]\d*)?$")


def _content_lines(text: str) -> list[tuple[int, str]]:
    out = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.split("#", 1)[0].strip()
        if stripped:
            out.append((lineno, stripped))
    return out


def parse_graph_file(text: str) -> Graph:
    """Parse the graph format: 'vertices: a b c' and 'edges: a-b b-c' lines."""
    vertices: list[str] = []
    seen = set()
    edges: list[tuple[str, str]] = []
    edge_keys = set()
    saw_vertices = False
    for lineno, line in _content_lines(text):
        if line.startswith("vertices:"):
            saw_vertices = True
            for token in line[len("vertices:"):].split():
                if "-" in token:
                    raise ParseError(lineno, f"vertex name {token!r} may not contain '-'")
                if token in seen:
                    raise ParseError(lineno, f"duplicate vertex {token!r}")
                seen.add(token)
                vertices.append(token)
        elif line.startswith("edges:"):
            for token in line[len("edges:"):].split():
                parts = token.split("-")
                if len(parts) != 2 or not parts[0] or not parts[1]:
                    raise ParseError(lineno, f"malformed edge {token!r}")
                a, b = parts
                if a not in seen or b not in seen:
                    raise ParseError(lineno, f"edge {token!r} uses an undeclared vertex")
                if a == b:
                    raise ParseError(lineno, f"self-loop {token!r}")
                key = frozenset((a, b))
                if key in edge_keys:
                    raise ParseError(lineno, f"duplicate edge {token!r}")
                edge_keys.add(key)
                edges.append((a, b))
        else:
            raise ParseError(lineno, f"expected 'vertices:' or 'edges:', got {line!r}")
    if not saw_vertices:
        raise ParseError(1, "missing 'vertices:' line")
    return Graph(vertices, edges)


def render_graph_file(g: Graph) -> str:
    lines = ["vertices: " + " ".join(g.vertices)]
    if g.edges:
        lines.append("edges: " + " ".join(f"{a}-{b}" for a, b in g.edges))
    return "\n".join(lines) + "\n"


def parse_character_file(
    text: str, basis: GeneratorBasis, integers_only: bool = False
) -> Character:
    """Parse 'name = p/q' lines; generators not listed get the value zero."""
    values = [Fraction(0)] * basis.dim
    assigned = set()
    for lineno, line in _content_lines(text):
        if "=" not in line:
            raise ParseError(lineno, f"expected 'name = value', got {line!r}")
        name, _, value_text = line.partition("=")
        name = name.strip()
        value_text = value_text.strip()
        try:
            index = basis.index(name)
        except InputError:
            raise ParseError(lineno, f"unknown generator {name!r}") from None
        if name in assigned:
            raise ParseError(lineno, f"generator {name!r} assigned twice")
        assigned.add(name)
        if not _VALUE_RE.match(value_text):
            raise ParseError(lineno, f"malformed rational {value_text!r}")
        value = Fraction(value_text)
        if integers_only and value.denominator != 1:
            raise ParseError(lineno, f"integer required, got {value_text!r}")
        values[index] = value
    return Character(basis, tuple(values))


def render_character_file(c: Character) -> str:
    lines = [
        f"{name} = {value}"
        for name, value in zip(c.basis.names, c.values)
        if value != 0
    ]
    return "\n".join(lines) + ("\n" if lines else "")


def _parse_letter(lineno: int, token: str, known: set[str]) -> tuple[str, int]:
    sign = 1
    if token.endswith("^-1"):
        token, sign = token[:-3], -1
    elif token.endswith("'"):
        token, sign = token[:-1], -1
    if token not in known:
        raise ParseError(lineno, f"unknown generator {token!r}")
    return token, sign


def parse_words_file(text: str, alphabet: Sequence[str]) -> list[Word]:
    """Parse one word per line; letters are 'a', 'a^-1' or 'a'' separated by space."""
    alphabet = tuple(alphabet)
    known = set(alphabet)
    words = []
    for lineno, line in _content_lines(text):
        letters = [_parse_letter(lineno, token, known) for token in line.split()]
        words.append(Word(alphabet, letters))
    return words


def parse_vector_file(text: str, basis: GeneratorBasis) -> tuple[int, ...]:
    """An integer vector in character syntax: 'name = k' lines."""
    c = parse_character_file(text, basis, integers_only=True)
    return tuple(int(v) for v in c.values)


# ---------------------------------------------------------------------------
# rendering helpers


def _fmt_set(items: Iterable[str]) -> str:
    return ",".join(items)


def _fmt_braced(items: Iterable[str]) -> str:
    return "{" + ",".join(items) + "}"


def _fmt_character(c: Character) -> str:
    parts = [
        f"{name}:{value}" for name, value in zip(c.basis.names, c.values) if value != 0
    ]
    return " ".join(parts) if parts else "0"


def _fmt_opt(value: Optional[object]) -> str:
    return "none" if value is None else str(value)


def _fmt_bool(flag: bool) -> str:
    return "true" if flag else "false"


def _raag_verdict_compact(v: raag.RaagSigmaVerdict) -> str:
    if v.inside:
        return "in"
    return f"out:{v.reason}:{_fmt_set(v.offending)}"


def _raag_verdict_human(v: raag.RaagSigmaVerdict) -> str:
    if v.inside:
        return "IN"
    return f"OUT {v.reason} {_fmt_braced(v.offending)}"


def _proj_verdict_compact(v) -> str:
    if v.inside:
        return "in"
    if v.witness == "zero":
        return "out:zero"
    kept = _fmt_set(str(i) for i in v.kept)
    return f"out:projection:{kept}:{v.base}"


def _proj_verdict_human(v, n: int) -> str:
    if v.inside:
        return "IN"
    if v.witness == "zero":
        return "OUT zero-character"
    if len(v.kept) == n:
        return f"OUT {v.base}"
    return f"OUT projection {_fmt_braced(str(i) for i in v.kept)} {v.base}"


@dataclass(frozen=True)
class RenderedReport:
    human: str
    porcelain: tuple[str, ...]
    exit_code: int


def _report(lines: Sequence[str], porcelain: dict[str, str], code: int = 0) -> RenderedReport:
    rendered = tuple(f"{key}={porcelain[key]}" for key in sorted(porcelain))
    return RenderedReport("\n".join(lines), rendered, code)


def _error_report(code: int, message: str) -> RenderedReport:
    return _report([f"error: {message}"], {"error": message}, code)


# ---------------------------------------------------------------------------
# command implementations


def _read_file(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, "r", encoding="utf-8") as handle:
            return handle.read()
    except OSError as e:
        raise UsageError(f"cannot read {path!r}: {e.strerror or e}") from None


def _cmd_graph_analyze(args) -> RenderedReport:
    g = parse_graph_file(_read_file(args.graph))
    witness = min_separating_clique_witness(g)
    predicates = out_finiteness_predicates(g)
    clique = is_clique(g, g.vertices)
    connected = is_connected(g)
    porcelain = {
        "vertices": _fmt_set(g.vertices),
        "edges": _fmt_set(f"{a}-{b}" for a, b in g.edges),
        "clique": _fmt_bool(clique),
        "connected": _fmt_bool(connected),
        "min_separating_clique": _fmt_opt(None if witness is None else len(witness)),
        "witness": _fmt_opt(None if witness is None else _fmt_set(witness)),
        "separating_closed_star": _fmt_opt(predicates.separating_closed_star),
        "link_in_star": _fmt_opt(
            None if predicates.link_in_star is None else _fmt_set(predicates.link_in_star)
        ),
        "finite_out": _fmt_bool(predicates.finite),
    }
    lines = [
        f"graph: {len(g.vertices)} vertices, {len(g.edges)} edges",
        f"clique: {_fmt_bool(clique)}",
        f"connected: {_fmt_bool(connected)}",
        "min separating clique: "
        + ("none" if witness is None else f"{len(witness)} (witness {_fmt_braced(witness)})"),
        f"separating closed star: {_fmt_opt(predicates.separating_closed_star)}",
        "link in star: "
        + ("none" if predicates.link_in_star is None else _fmt_braced(predicates.link_in_star)),
        f"finite outer automorphism group: {_fmt_bool(predicates.finite)}",
    ]
    return _report(lines, porcelain)


def _cmd_raag_sigma(args) -> RenderedReport:
    g = parse_graph_file(_read_file(args.graph))
    c = parse_character_file(_read_file(args.character), raag.vertex_basis(g))
    verdict = raag.sigma_membership(g, c)
    porcelain = {"status": verdict.status}
    if not verdict.inside:
        porcelain["reason"] = verdict.reason
        porcelain["witness"] = _fmt_set(verdict.offending)
    return _report([_raag_verdict_human(verdict)], porcelain)


def _cmd_raag_kill(args) -> RenderedReport:
    g = parse_graph_file(_read_file(args.graph))
    gens = parse_words_file(_read_file(args.words), g.vertices)
    result = raag.kill_and_test(g, gens)
    porcelain = {
        "lattice_rank": str(result.lattice.rank),
        "killing": "|".join(_fmt_character(row) for row in result.killing.rows),
        "specialized": _fmt_character(result.specialized),
        "dead": _fmt_set(result.dead),
        "verdict_plus": _raag_verdict_compact(result.verdict_plus),
        "verdict_minus": _raag_verdict_compact(result.verdict_minus),
    }
    lines = [
        f"lattice rank: {result.lattice.rank}",
        f"killing rows: {len(result.killing.rows)}",
    ]
    lines += [f"  {_fmt_character(row)}" for row in result.killing.rows]
    lines += [
        f"specialized: {_fmt_character(result.specialized)}",
        f"dead clique: {_fmt_braced(result.dead)}",
        f"plus ray: {_raag_verdict_human(result.verdict_plus)}",
        f"minus ray: {_raag_verdict_human(result.verdict_minus)}",
    ]
    return _report(lines, porcelain)


def _cmd_raag_complement(args) -> RenderedReport:
    g = parse_graph_file(_read_file(args.graph))
    supports = raag.sigma_complement_supports(g)
    porcelain = {
        "count": str(len(supports)),
        "supports": " ".join(_fmt_set(s) for s in supports),
    }
    lines = [f"minimal always-dead supports: {len(supports)}"]
    lines += [f"  {_fmt_braced(s)}" for s in supports]
    return _report(lines, porcelain)


def _cmd_raag_split_report(args) -> RenderedReport:
    g = parse_graph_file(_read_file(args.graph))
    report = raag.virtual_split_report(g, args.max_k)
    porcelain = {
        "clique": _fmt_bool(report.is_clique),
        "max_k": str(report.max_k),
        "min_separating_clique": _fmt_opt(report.min_separating_clique),
        "witness": _fmt_opt(
            None if report.witness is None else _fmt_set(report.witness)
        ),
        "verdicts": " ".join(
            f"{k}:{verdict}" for k, verdict in enumerate(report.verdicts)
        ),
        "nf_certified": _fmt_bool(report.nf_certified),
    }
    if report.note:
        porcelain["note"] = report.note
    lines = [
        f"graph: {report.vertex_count} vertices, {report.edge_count} edges",
        f"clique: {_fmt_bool(report.is_clique)}",
        "min separating clique: " + _fmt_opt(report.min_separating_clique),
    ]
    if report.witness is not None:
        lines.append(f"splitting witness: {_fmt_braced(report.witness)}")
    for k, verdict in enumerate(report.verdicts):
        lines.append(f"  Z^{k}: {verdict}")
    if report.nf_certified:
        lines.append(
            "certified: no finite-index subgroup splits over a subgroup "
            "without non-abelian free subgroups"
        )
    if report.note:
        lines.append(f"note: {report.note}")
    return _report(lines, porcelain)


def _cmd_raag_compare(args) -> RenderedReport:
    g1 = parse_graph_file(_read_file(args.graph1))
    g2 = parse_graph_file(_read_file(args.graph2))
    result = raag.commensurability_compare(g1, g2)
    porcelain = {
        "clique1": _fmt_bool(result.clique1),
        "clique2": _fmt_bool(result.clique2),
        "invariant1": _fmt_opt(result.invariant1),
        "invariant2": _fmt_opt(result.invariant2),
        "verdict": result.verdict,
    }
    lines = [
        f"invariants: {_fmt_opt(result.invariant1)} vs {_fmt_opt(result.invariant2)}",
        f"verdict: {result.verdict}",
    ]
    return _report(lines, porcelain)


def _braid_character(args) -> tuple[braid.PureBraidBasis, Character]:
    basis = braid.PureBraidBasis(args.n)
    c = parse_character_file(_read_file(args.character), basis.generators)
    return basis, c


def _cmd_braid_sigma(args) -> RenderedReport:
    _, c = _braid_character(args)
    verdict = braid.sigma_membership(args.n, c)
    porcelain = {"status": verdict.status}
    if not verdict.inside:
        porcelain["witness"] = verdict.witness
        if verdict.kept is not None:
            porcelain["kept"] = _fmt_set(str(i) for i in verdict.kept)
            porcelain["base"] = verdict.base
    return _report([_proj_verdict_human(verdict, args.n)], porcelain)


def _witness_soundness(
    c: Character,
    pair: WitnessPair,
    project,
    reduce_free,
) -> tuple[Fraction, Fraction, bool]:
    basis = c.basis
    pairing_u = c.pair(abelianize(basis, pair.u))
    pairing_v = c.pair(abelianize(basis, pair.v))
    image_u = reduce_free(project(pair.u, pair.designated))
    image_v = reduce_free(project(pair.v, pair.designated))
    return pairing_u, pairing_v, f2z_generate_free(image_u, image_v)


def _cmd_braid_witness(args) -> RenderedReport:
    _, c = _braid_character(args)
    pair = braid.witness_pair(args.n, c)
    pairing_u, pairing_v, free = _witness_soundness(
        c,
        pair,
        lambda w, kept: braid.project_word(args.n, kept, w),
        braid.pb3_reduce,
    )
    porcelain = {
        "u": str(pair.u),
        "v": str(pair.v),
        "designated": _fmt_set(str(i) for i in pair.designated),
        "pairing_u": str(pairing_u),
        "pairing_v": str(pairing_v),
        "free": _fmt_bool(free),
    }
    lines = [
        f"u: {pair.u}",
        f"v: {pair.v}",
        f"designated strands: {_fmt_braced(str(i) for i in pair.designated)}",
        f"character pairing: {pairing_u}, {pairing_v}",
        f"projected images generate freely: {_fmt_bool(free)}",
    ]
    return _report(lines, porcelain)


_BRAID_NOTE = (
    "the full braid group abelianizes to a single infinite cyclic group, so "
    "its character sphere is two points killing the whole commutator "
    "subgroup; pure braid characters carry the content"
)

_LOOP_NOTE = (
    "the full loop braid group has finite abelianization and therefore no "
    "nonzero characters at all; pure loop braid characters carry the content"
)


def _obstruction_report(
    report: ObstructionReport, verdict_human, note: str
) -> RenderedReport:
    porcelain = {"branch": report.branch, "character": _fmt_character(report.character)}
    lines = [f"branch: {report.branch}"]
    if report.branch == CERTIFICATE:
        porcelain["verdict_plus"] = _proj_verdict_compact(report.verdict_plus)
        porcelain["verdict_minus"] = _proj_verdict_compact(report.verdict_minus)
        lines += [
            f"character: {_fmt_character(report.character)}",
            f"plus ray: {verdict_human(report.verdict_plus)}",
            f"minus ray: {verdict_human(report.verdict_minus)}",
        ]
    else:
        kept = _fmt_set(str(i) for i in report.covering.kept)
        porcelain["covering"] = f"{report.covering.kind}:{kept}"
        porcelain["u"] = str(report.witness.u)
        porcelain["v"] = str(report.witness.v)
        porcelain["designated"] = _fmt_set(str(i) for i in report.witness.designated)
        lines += [
            f"covering: {report.covering.kind} {{{kept}}}",
            f"sample character: {_fmt_character(report.character)}",
            f"u: {report.witness.u}",
            f"v: {report.witness.v}",
            f"designated: {{{_fmt_set(str(i) for i in report.witness.designated)}}}",
        ]
    lines.append(f"guidance: {report.guidance}")
    lines.append(f"note: {note}")
    return _report(lines, porcelain)


def _cmd_braid_obstruct(args) -> RenderedReport:
    basis = braid.PureBraidBasis(args.n)
    vectors = [
        parse_vector_file(_read_file(path), basis.generators) for path in args.vectors
    ]
    report = braid.nf_obstruction_demo(args.n, vectors)
    return _obstruction_report(
        report, lambda v: _proj_verdict_human(v, args.n), _BRAID_NOTE
    )


def _loop_character(args) -> tuple[loop.LoopBraidBasis, Character]:
    basis = loop.LoopBraidBasis(args.n)
    c = parse_character_file(_read_file(args.character), basis.generators)
    return basis, c


def _cmd_loop_sigma(args) -> RenderedReport:
    _, c = _loop_character(args)
    verdict = loop.sigma_membership(args.n, c)
    porcelain = {"status": verdict.status}
    if not verdict.inside:
        porcelain["witness"] = verdict.witness
        if verdict.kept is not None:
            porcelain["kept"] = _fmt_set(str(i) for i in verdict.kept)
            porcelain["base"] = verdict.base
    return _report([_proj_verdict_human(verdict, args.n)], porcelain)


def _cmd_loop_witness(args) -> RenderedReport:
    _, c = _loop_character(args)
    pair = loop.witness_pair(args.n, c)

    def reduce_to_f2z(word_over_plb2):
        reduced = loop.plb2_reduce(word_over_plb2)
        return f2z(reduced.letters)

    pairing_u, pairing_v, free = _witness_soundness(
        c,
        pair,
        lambda w, kept: loop.project_word(args.n, kept, w),
        reduce_to_f2z,
    )
    porcelain = {
        "u": str(pair.u),
        "v": str(pair.v),
        "designated": _fmt_set(str(i) for i in pair.designated),
        "pairing_u": str(pairing_u),
        "pairing_v": str(pairing_v),
        "free": _fmt_bool(free),
    }
    lines = [
        f"u: {pair.u}",
        f"v: {pair.v}",
        f"designated loops: {_fmt_braced(str(i) for i in pair.designated)}",
        f"character pairing: {pairing_u}, {pairing_v}",
        f"projected images generate freely: {_fmt_bool(free)}",
    ]
    return _report(lines, porcelain)


def _cmd_loop_obstruct(args) -> RenderedReport:
    basis = loop.LoopBraidBasis(args.n)
    vectors = [
        parse_vector_file(_read_file(path), basis.generators) for path in args.vectors
    ]
    report = loop.nf_obstruction_demo(args.n, vectors)
    return _obstruction_report(
        report, lambda v: _proj_verdict_human(v, args.n), _LOOP_NOTE
    )


# ---------------------------------------------------------------------------
# argument parsing


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _build_parser() -> _Parser:
    parser = _Parser(prog="bnskit", add_help=True)
    parser.add_argument("--porcelain", action="store_true", help="key=value output")
    groups = parser.add_subparsers(dest="group", required=True)

    graph = groups.add_parser("graph", help="plain graph computations")
    graph_cmds = graph.add_subparsers(dest="command", required=True)
    analyze = graph_cmds.add_parser("analyze")
    analyze.add_argument("graph")
    analyze.set_defaults(handler=_cmd_graph_analyze)

    raag_p = groups.add_parser("raag", help="right-angled Artin groups")
    raag_cmds = raag_p.add_subparsers(dest="command", required=True)
    sigma = raag_cmds.add_parser("sigma")
    sigma.add_argument("graph")
    sigma.add_argument("character")
    sigma.set_defaults(handler=_cmd_raag_sigma)
    kill = raag_cmds.add_parser("kill")
    kill.add_argument("graph")
    kill.add_argument("words")
    kill.set_defaults(handler=_cmd_raag_kill)
    complement = raag_cmds.add_parser("complement")
    complement.add_argument("graph")
    complement.set_defaults(handler=_cmd_raag_complement)
    split = raag_cmds.add_parser("split-report")
    split.add_argument("--max-k", dest="max_k", type=int, required=True)
    split.add_argument("graph")
    split.set_defaults(handler=_cmd_raag_split_report)
    compare = raag_cmds.add_parser("compare")
    compare.add_argument("graph1")
    compare.add_argument("graph2")
    compare.set_defaults(handler=_cmd_raag_compare)

    braid_p = groups.add_parser("braid", help="pure braid groups")
    braid_cmds = braid_p.add_subparsers(dest="command", required=True)
    bsigma = braid_cmds.add_parser("sigma")
    bsigma.add_argument("-n", type=int, required=True)
    bsigma.add_argument("character")
    bsigma.set_defaults(handler=_cmd_braid_sigma)
    bwitness = braid_cmds.add_parser("witness")
    bwitness.add_argument("-n", type=int, required=True)
    bwitness.add_argument("character")
    bwitness.set_defaults(handler=_cmd_braid_witness)
    bobstruct = braid_cmds.add_parser("obstruct")
    bobstruct.add_argument("-n", type=int, required=True)
    bobstruct.add_argument("vectors", nargs="*")
    bobstruct.set_defaults(handler=_cmd_braid_obstruct)

    loop_p = groups.add_parser("loop", help="pure loop braid groups")
    loop_cmds = loop_p.add_subparsers(dest="command", required=True)
    lsigma = loop_cmds.add_parser("sigma")
    lsigma.add_argument("-n", type=int, required=True)
    lsigma.add_argument("character")
    lsigma.set_defaults(handler=_cmd_loop_sigma)
    lwitness = loop_cmds.add_parser("witness")
    lwitness.add_argument("-n", type=int, required=True)
    lwitness.add_argument("character")
    lwitness.set_defaults(handler=_cmd_loop_witness)
    lobstruct = loop_cmds.add_parser("obstruct")
    lobstruct.add_argument("-n", type=int, required=True)
    lobstruct.add_argument("vectors", nargs="*")
    lobstruct.set_defaults(handler=_cmd_loop_obstruct)

    return parser


def run(argv: Sequence[str]) -> RenderedReport:
    """Parse and execute one invocation, capturing errors as exit codes."""
    parser = _build_parser()
    try:
        args = parser.parse_args(list(argv))
    except UsageError as e:
        return _error_report(1, str(e))
    try:
        return args.handler(args)
    except (ParseError, UsageError) as e:
        return _error_report(1, str(e))
    except (InputError, DomainError, PreconditionError) as e:
        return _error_report(2, str(e))


def main(argv: Optional[Sequence[str]] = None) -> None:
    argv = list(sys.argv[1:] if argv is None else argv)
    report = run(argv)
    if "--porcelain" in argv:
        if report.porcelain:
            print("\n".join(report.porcelain))
    elif report.human:
        print(report.human)
    sys.exit(report.exit_code)


if __name__ == "__main__":
    main()
