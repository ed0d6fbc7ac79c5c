"""Command-line surface for the toolkit.

Every subcommand works on plain line-based text files and is
deterministic given identical inputs and flags.  Decision commands end
with a machine block of stable key=value lines; document commands print
bare documents in the same formats the parsers accept.

Exit codes: 0 success or decided, 1 invalid input, 2 undecided.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass, field
from pathlib import Path

from . import __version__
from .braidclosure import (
    burau_alexander,
    knot_corpus,
    parse_artin_word,
    seifert_matrix,
)
from .intlin import format_matrix, parse_matrix
from .laurent import format_laurent
from .purebraid import (
    delta_equivalent,
    is_delta_trivial,
    linking_matrix,
    parse_braid,
)
from .seifert import (
    SearchBudget,
    alexander,
    arf,
    bounded_sequiv_search,
    column_enlarge,
    knot_determinant,
    knot_signature,
    row_enlarge,
    try_reduce,
    validate,
)
from .standardform import (
    format_disk_band,
    from_disk_band,
    parse_disk_band,
    standardization_witness,
    standardize,
    to_disk_band,
)
from .stringlink import (
    delta_equivalent_links,
    format_string_link,
    normalize_linking,
    pairwise_linking,
    parse_string_link,
)

DEFAULT_CORPUS_SEED = 7

_FORMAT_HELP = """\
file formats (one example each):

  matrix        line 1 is the size m, then m rows of m integers.
                empty matrix is the single line "0".
                    2
                    -1 1
                    0 -1

  braid word    header "n <strands>", then signed generator indices.
                    n 2
                    1 1 1

  pure braid    header "n <strands>", then letters "i j e", e in {1, -1}.
                    n 3
                    1 2 1
                    2 3 -1

  string link   header "n <n> k <k>", framings line, letters "i.a j.b e".
                    n 2 k 2
                    framings 0 0
                    1.1 2.1 1
                    1.2 2.2 -1

  disk band     "g <g>", framings line, nonzero band-linking lines "i j lk".
                    g 1
                    framings -1 -1

  polynomial    printed as "lo=<lowest exponent>; coeffs=<integers>".

decision commands end with key=value machine lines; the default corpus
seed is %d.
""" % DEFAULT_CORPUS_SEED


@dataclass
class Verdict:
    """Outcome of a subcommand: detail lines plus a stable machine block."""

    status: str  # ok | distinct | equivalent | unknown | invalid-input
    detail: list[str] = field(default_factory=list)
    machine: dict[str, str] = field(default_factory=dict)

    def emit(self, out=None) -> None:
        out = out if out is not None else sys.stdout
        for line in self.detail:
            print(line, file=out)
        print(f"status={self.status}", file=out)
        for key, value in self.machine.items():
            print(f"{key}={value}", file=out)

    @property
    def exit_code(self) -> int:
        if self.status == "invalid-input":
            return 1
        if self.status == "unknown":
            return 2
        return 0


def _read(path: str) -> str:
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise ValueError(f"cannot read {path}: {exc}") from exc


def _load_seifert(path: str):
    return validate(parse_matrix(_read(path)))


def _bool(x: bool) -> str:
    return "true" if x else "false"


# ---------------------------------------------------------------------------
# mat


def _cmd_mat_invariants(args) -> Verdict:
    sm = _load_seifert(args.file)
    delta = alexander(sm)
    values = {
        "alexander": format_laurent(delta),
        "signature": str(knot_signature(sm)),
        "determinant": str(knot_determinant(sm)),
        "arf": str(arf(sm)),
        "genus": str(sm.genus),
        "valid": "true",
    }
    detail = [f"{k}: {v}" for k, v in values.items()]
    machine = {
        "alexander_lo": str(delta.lo),
        "alexander_coeffs": " ".join(str(c) for c in delta.coeffs) or "0",
        "signature": values["signature"],
        "determinant": values["determinant"],
        "arf": values["arf"],
        "genus": values["genus"],
        "valid": "true",
    }
    return Verdict("ok", detail, machine)


def _cmd_mat_standardize(args) -> Verdict:
    sm = _load_seifert(args.file)
    a, n = standardize(sm)
    out_a = args.out_a or args.file + ".A"
    out_n = args.out_n or args.file + ".N"
    Path(out_a).write_text(format_matrix(a))
    Path(out_n).write_text(format_matrix(n.matrix))
    detail = [f"A -> {out_a}", f"N -> {out_n}"]
    return Verdict("ok", detail, {"a_file": out_a, "n_file": out_n})


def _cmd_mat_enlarge(args) -> int:
    sm = _load_seifert(args.file)
    xi = [int(tok) for tok in (args.vector or [])]
    if not xi:
        xi = [0] * sm.size
    if args.kind == "column":
        enlarged = column_enlarge(sm, xi, args.x)
    else:
        enlarged = row_enlarge(sm, xi, args.x)
    sys.stdout.write(format_matrix(enlarged.matrix))
    return 0


def _cmd_mat_reduce(args) -> int:
    sm = _load_seifert(args.file)
    reduced = try_reduce(sm)
    if reduced is None:
        print("irreducible")
    else:
        sys.stdout.write(format_matrix(reduced.matrix))
    return 0


def _cmd_mat_sequiv(args) -> Verdict:
    m1 = _load_seifert(args.file1)
    m2 = _load_seifert(args.file2)
    budget = SearchBudget(
        max_size=args.max_size, max_entry=args.max_entry, max_nodes=args.max_nodes
    )
    result = bounded_sequiv_search(m1, m2, budget)
    if result.verdict == "distinct":
        return Verdict("distinct", [f"distinct ({result.reason})"], {"invariant": result.reason.split()[0]})
    if result.verdict == "equivalent":
        detail = [f"equivalent ({len(result.witness)} moves)"]
        machine = {"moves": str(len(result.witness))}
        for idx, move in enumerate(result.witness, 1):
            detail.append(f"move {idx}: {move.describe()}")
            machine[f"move_{idx}"] = move.describe()
        return Verdict("equivalent", detail, machine)
    return Verdict("unknown", [f"unknown ({result.reason})"], {"reason": result.reason})


# ---------------------------------------------------------------------------
# braid


def _cmd_braid_lk(args) -> Verdict:
    w = parse_braid(_read(args.file))
    lm = linking_matrix(w)
    detail = [f"n {lm.n}"] + [f"{i} {j} {v}" for i, j, v in lm.nonzero_entries()]
    return Verdict("ok", detail, {"n": str(lm.n), "zero": _bool(lm.is_zero())})


def _cmd_braid_delta_trivial(args) -> Verdict:
    w = parse_braid(_read(args.file))
    trivial = is_delta_trivial(w)
    return Verdict("ok", [f"delta-trivial: {_bool(trivial)}"], {"delta_trivial": _bool(trivial)})


def _cmd_braid_delta_equiv(args) -> Verdict:
    w1 = parse_braid(_read(args.file1))
    w2 = parse_braid(_read(args.file2))
    same = delta_equivalent(w1, w2)
    status = "equivalent" if same else "distinct"
    return Verdict(status, [status], {"delta_equivalent": _bool(same)})


# ---------------------------------------------------------------------------
# slink


def _cmd_slink_lk(args) -> Verdict:
    link = parse_string_link(_read(args.file))
    lm = pairwise_linking(link)
    detail = [f"n {lm.n}"] + [f"{i} {j} {v}" for i, j, v in lm.nonzero_entries()]
    return Verdict("ok", detail, {"n": str(lm.n), "zero": _bool(lm.is_zero())})


def _cmd_slink_normalize(args) -> int:
    link = parse_string_link(_read(args.file))
    sys.stdout.write(format_string_link(normalize_linking(link)))
    return 0


def _cmd_slink_delta_equiv(args) -> Verdict:
    l1 = parse_string_link(_read(args.file1))
    l2 = parse_string_link(_read(args.file2))
    same = delta_equivalent_links(l1, l2)
    status = "equivalent" if same else "distinct"
    return Verdict(status, [status], {"delta_equivalent": _bool(same)})


# ---------------------------------------------------------------------------
# std


def _cmd_std_to_disk_band(args) -> int:
    sm = _load_seifert(args.file)
    sys.stdout.write(format_disk_band(to_disk_band(sm)))
    return 0


def _cmd_std_from_disk_band(args) -> int:
    d = parse_disk_band(_read(args.file))
    sys.stdout.write(format_matrix(from_disk_band(d).matrix))
    return 0


def _cmd_std_witness(args) -> Verdict:
    sm = _load_seifert(args.matrix)
    a1 = parse_matrix(_read(args.a1))
    a2 = parse_matrix(_read(args.a2))
    report = standardization_witness(sm, a1, a2)
    machine = {
        "symplectic": _bool(report.c_symplectic),
        "forms_match": _bool(report.forms_match_after_transition),
        "framings": " ".join(str(f) for f in report.framings),
    }
    return Verdict("ok", report.lines(), machine)


# ---------------------------------------------------------------------------
# closure


def _cmd_closure_seifert(args) -> int:
    w = parse_artin_word(_read(args.file))
    sys.stdout.write(format_matrix(seifert_matrix(w).matrix))
    return 0


def _cmd_closure_alexander(args) -> Verdict:
    w = parse_artin_word(_read(args.file))
    surface = alexander(seifert_matrix(w))
    burau = burau_alexander(w)
    agree = surface == burau
    detail = [
        f"surface: {format_laurent(surface)}",
        f"burau: {format_laurent(burau)}",
        f"agree: {_bool(agree)}",
    ]
    return Verdict("ok", detail, {"agree": _bool(agree)})


# ---------------------------------------------------------------------------
# corpus


def _cmd_corpus_generate(args) -> int:
    words = knot_corpus(args.n, args.maxlen, args.seed, args.count)
    print("word\tn\tlength\talexander\tsignature\tdeterminant\tarf\tagree")
    for w in words:
        sm = seifert_matrix(w)
        delta = alexander(sm)
        agree = delta == burau_alexander(w)
        print(
            "%s\t%d\t%d\t%s\t%d\t%d\t%d\t%s"
            % (
                " ".join(str(v) for v in w.letters),
                w.strands,
                len(w.letters),
                format_laurent(delta),
                knot_signature(sm),
                knot_determinant(sm),
                arf(sm),
                _bool(agree),
            )
        )
    return 0


# ---------------------------------------------------------------------------
# parser wiring


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sequiv",
        description="Exact-arithmetic toolkit for Seifert matrices and S-equivalence.",
        epilog=_FORMAT_HELP,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    parser.add_argument("--version", action="version", version=f"sequiv {__version__}")
    top = parser.add_subparsers(dest="group", required=True)

    mat = top.add_parser("mat", help="Seifert matrix operations").add_subparsers(
        dest="command", required=True
    )
    p = mat.add_parser("invariants", help="Alexander, signature, determinant, Arf")
    p.add_argument("file")
    p.set_defaults(func=_cmd_mat_invariants)
    p = mat.add_parser("standardize", help="write A and N with N = A M A^T standardized")
    p.add_argument("file")
    p.add_argument("--out-a")
    p.add_argument("--out-n")
    p.set_defaults(func=_cmd_mat_standardize)
    p = mat.add_parser("enlarge", help="apply a column or row enlargement")
    p.add_argument("file")
    p.add_argument("--kind", choices=("column", "row"), default="column")
    p.add_argument("--x", type=int, default=0)
    p.add_argument("--vector", nargs="*", help="enlargement column/row entries")
    p.set_defaults(func=_cmd_mat_enlarge)
    p = mat.add_parser("reduce", help="strip one enlargement if a pattern matches")
    p.add_argument("file")
    p.set_defaults(func=_cmd_mat_reduce)
    p = mat.add_parser("sequiv", help="bounded search for an S-equivalence witness")
    p.add_argument("file1")
    p.add_argument("file2")
    p.add_argument("--max-size", type=int, default=None)
    p.add_argument("--max-entry", type=int, default=8)
    p.add_argument("--max-nodes", type=int, default=20000)
    p.set_defaults(func=_cmd_mat_sequiv)

    braid = top.add_parser("braid", help="pure braid words").add_subparsers(
        dest="command", required=True
    )
    p = braid.add_parser("lk", help="pairwise linking numbers")
    p.add_argument("file")
    p.set_defaults(func=_cmd_braid_lk)
    p = braid.add_parser("delta-trivial", help="can the word be undone by delta moves")
    p.add_argument("file")
    p.set_defaults(func=_cmd_braid_delta_trivial)
    p = braid.add_parser("delta-equiv", help="same pairwise linking numbers")
    p.add_argument("file1")
    p.add_argument("file2")
    p.set_defaults(func=_cmd_braid_delta_equiv)

    slink = top.add_parser("slink", help="doubled string links").add_subparsers(
        dest="command", required=True
    )
    p = slink.add_parser("lk", help="string-link pairwise linking numbers")
    p.add_argument("file")
    p.set_defaults(func=_cmd_slink_lk)
    p = slink.add_parser("normalize", help="zero out every braid-level linking number")
    p.add_argument("file")
    p.set_defaults(func=_cmd_slink_normalize)
    p = slink.add_parser("delta-equiv", help="same linking numbers and framings")
    p.add_argument("file1")
    p.add_argument("file2")
    p.set_defaults(func=_cmd_slink_delta_equiv)

    std = top.add_parser("std", help="standard form and disk-band data").add_subparsers(
        dest="command", required=True
    )
    p = std.add_parser("to-disk-band", help="framings and band linking of a standardized matrix")
    p.add_argument("file")
    p.set_defaults(func=_cmd_std_to_disk_band)
    p = std.add_parser("from-disk-band", help="rebuild the standardized matrix")
    p.add_argument("file")
    p.set_defaults(func=_cmd_std_from_disk_band)
    p = std.add_parser("witness", help="check two standardizations of one matrix")
    p.add_argument("matrix")
    p.add_argument("a1")
    p.add_argument("a2")
    p.set_defaults(func=_cmd_std_witness)

    closure = top.add_parser("closure", help="braid closures").add_subparsers(
        dest="command", required=True
    )
    p = closure.add_parser("seifert", help="Seifert matrix of a knot closure")
    p.add_argument("file")
    p.set_defaults(func=_cmd_closure_seifert)
    p = closure.add_parser("alexander", help="both polynomial paths and agreement flag")
    p.add_argument("file")
    p.set_defaults(func=_cmd_closure_alexander)

    corpus = top.add_parser("corpus", help="derived example corpus").add_subparsers(
        dest="command", required=True
    )
    p = corpus.add_parser("generate", help="deterministic knot-closure corpus with invariants")
    p.add_argument("--n", type=int, default=4, help="maximum strand count")
    p.add_argument("--maxlen", type=int, default=12, help="maximum word length")
    p.add_argument("--seed", type=int, default=DEFAULT_CORPUS_SEED)
    p.add_argument("--count", type=int, default=100)
    p.set_defaults(func=_cmd_corpus_generate)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        outcome = args.func(args)
    except (ValueError, IndexError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    if isinstance(outcome, Verdict):
        outcome.emit()
        return outcome.exit_code
    return int(outcome)


if __name__ == "__main__":
    sys.exit(main())
