"""Command line front end.

    avoidgf compositions --avoid "2 2; 2 1 2" --max-weight 6
    avoidgf strings --avoid "1 1" --alphabet 2 --max-length 10
    avoidgf family --exponents 1,3,5 --max-weight 8 --format json
    avoidgf verify --exponents 2,4
    avoidgf --batch queries.txt

Words are whitespace-separated positive integers; words are separated by
semicolons.  Exit status: 0 ok, 1 bad input, 2 bound exceeded, 3 oracle
mismatch, 4 internal invariant failure.
"""

import argparse
import csv
import io
import json
import re
import shlex
import sys
from dataclasses import dataclass

from . import __version__
from .correlate import ForbiddenSet, Word
from .engine import composition_gf, string_gf, verify_proof_identities
from .errors import AvoidError, BoundTooLarge, InvariantError, ParseError, ValidationError
from .family import ExponentSet, family_gf, family_words
from .oracle import (
    MAX_ORACLE_WEIGHT,
    enumerate_avoiders,
    enumerate_quasi_avoiders,
    enumerate_string_avoiders,
)
from .series import MAX_WEIGHT_CAP, UniPoly

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_BOUND = 2
EXIT_MISMATCH = 3
EXIT_INTERNAL = 4

MODES = ("compositions", "strings", "family", "verify")
FORMATS = ("table", "json", "csv")
DEFAULT_MAX = 12

_TOKEN = re.compile(r"[^\s;]+|;")


def parse_words(text):
    """``"2 2; 2 1 2"`` -> list of Words.  Blank input means no words."""
    words, current = [], []
    start = 0
    for tok in _TOKEN.finditer(text):
        if tok.group() == ";":
            if not current:
                raise ParseError("empty word", ";", tok.start())
            words.append(Word(tuple(current)))
            current = []
            continue
        if not current:
            start = tok.start()
        value = tok.group()
        if not value.isdigit() or int(value) < 1:
            raise ParseError("parts must be positive base-10 integers", value, tok.start())
        current.append(int(value))
    if current:
        words.append(Word(tuple(current)))
    elif words:
        raise ParseError("empty word", ";", start)
    return words


def parse_exponents(text):
    values = []
    pos = 0
    for chunk in text.split(","):
        token = chunk.strip()
        if not token.isdigit() or int(token) < 1:
            raise ParseError("exponents must be positive integers", token, pos)
        values.append(int(token))
        pos += len(chunk) + 1
    return ExponentSet(tuple(values))


@dataclass(frozen=True)
class Query:
    mode: str
    forbidden: ForbiddenSet
    exponents: ExponentSet = None
    alphabet_size: int = None
    max_weight: int = DEFAULT_MAX
    max_length: int = DEFAULT_MAX
    output_format: str = "table"
    show_quasi: bool = False
    run_oracle: bool = False


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise ParseError(message)


def _build_parser():
    parser = _Parser(prog="avoidgf", description="Count compositions and strings avoiding substrings.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("--batch", metavar="FILE", help="run one query per line of FILE")
    sub = parser.add_subparsers(dest="mode", parser_class=_Parser)

    def common(p, bound):
        p.add_argument(f"--{bound}", type=int, default=DEFAULT_MAX, dest="bound")
        p.add_argument("--format", choices=FORMATS, default="table")
        p.add_argument("--run-oracle", action="store_true")

    p = sub.add_parser("compositions", help="compositions avoiding a set of words")
    p.add_argument("--avoid", required=True)
    common(p, "max-weight")
    p.add_argument("--show-quasi", action="store_true")

    p = sub.add_parser("strings", help="strings over [n] avoiding a set of words")
    p.add_argument("--avoid", required=True)
    p.add_argument("--alphabet", type=int, required=True)
    common(p, "max-length")

    p = sub.add_parser("family", help="compositions avoiding 2 1^(a-1) 2 for a in EXPONENTS")
    p.add_argument("--exponents", required=True)
    common(p, "max-weight")
    p.add_argument("--show-quasi", action="store_true")

    p = sub.add_parser("verify", help="check identities and brute force for one query")
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--avoid")
    src.add_argument("--exponents")
    p.add_argument("--max-weight", type=int, default=DEFAULT_MAX, dest="bound")
    p.add_argument("--format", choices=("table", "json"), default="table")
    return parser


def _namespace_to_query(ns):
    bound = ns.bound
    if bound < 0:
        raise ValidationError(f"bound must be nonnegative, got {bound}")
    exponents = None
    if getattr(ns, "exponents", None) is not None:
        exponents = parse_exponents(ns.exponents)
        forbidden = family_words(exponents)
    else:
        forbidden = ForbiddenSet(tuple(parse_words(ns.avoid)))
    fields = dict(
        mode=ns.mode,
        forbidden=forbidden,
        exponents=exponents,
        output_format=ns.format,
        show_quasi=getattr(ns, "show_quasi", False),
        run_oracle=getattr(ns, "run_oracle", False) or ns.mode == "verify",
    )
    if ns.mode == "strings":
        if ns.alphabet < 1:
            raise ValidationError(f"alphabet size must be at least 1, got {ns.alphabet}")
        fields.update(alphabet_size=ns.alphabet, max_length=bound)
    else:
        fields.update(max_weight=bound)
    return Query(**fields)


def parse_query(argv):
    """Parse one query (no ``--batch``) from an argument list."""
    ns = _build_parser().parse_args(list(argv))
    if ns.batch is not None:
        raise ParseError("--batch cannot be combined with a query")
    if ns.mode is None:
        raise ParseError("missing subcommand; expected one of " + ", ".join(MODES))
    return _namespace_to_query(ns)


def parse_batch(path):
    """Yield ``(line, argv)`` for every non-blank, non-comment line."""
    with open(path, encoding="utf-8") as fh:
        for line in fh:
            line = line.strip()
            if line and not line.startswith("#"):
                yield line, shlex.split(line)


# rendering

def _cell(row):
    return str(UniPoly({(m,): c for m, c in enumerate(row) if c}))


def _coefficients(rows):
    return [
        {"weight": n, "length": m, "count": str(c)}
        for n, row in enumerate(rows)
        for m, c in enumerate(row)
    ]


def _table(rows):
    return [f"{n:>6} | {_cell(row)}" for n, row in enumerate(rows)]


def _compare(name, want, got):
    out = []
    for n, (r, s) in enumerate(zip(want, got)):
        for m, (u, v) in enumerate(zip(r, s)):
            if u != v:
                out.append({"series": name, "weight": n, "length": m, "oracle": str(u), "engine": str(v)})
    return out


def _oracle_check(q, result):
    if q.max_weight > MAX_ORACLE_WEIGHT:
        raise BoundTooLarge(f"oracle limited to weight {MAX_ORACLE_WEIGHT}, asked for {q.max_weight}")
    mismatches = _compare("G", enumerate_avoiders(q.forbidden, q.max_weight).rows, result.gf.rows)
    compared = sum(n + 1 for n in range(q.max_weight + 1))
    for i, b in enumerate(result.quasi):
        want = enumerate_quasi_avoiders(q.forbidden, i, q.max_weight).rows
        mismatches += _compare(f"B{i + 1}", want, b.rows)
        compared += sum(n + 1 for n in range(q.max_weight + 1))
    return {"match": not mismatches, "compared": compared, "mismatches": mismatches}


def _header(q):
    if q.mode == "strings":
        return (f"strings over [1..{q.alphabet_size}] avoiding {q.forbidden}, "
                f"length <= {q.max_length}")
    what = f"exponents {{{', '.join(map(str, q.exponents))}}} = " if q.exponents else ""
    return f"{q.mode} avoiding {what}{q.forbidden}, weight <= {q.max_weight}"


def _run_strings(q):
    series = string_gf(q.forbidden, q.alphabet_size, q.max_length)
    counts = list(series.coeffs)
    oracle = None
    if q.run_oracle:
        want = enumerate_string_avoiders(q.forbidden, q.alphabet_size, q.max_length)
        bad = [
            {"length": m, "oracle": str(u), "engine": str(v)}
            for m, (u, v) in enumerate(zip(want, counts)) if u != v
        ]
        oracle = {"match": not bad, "compared": len(counts), "mismatches": bad}
    code = EXIT_MISMATCH if oracle and not oracle["match"] else EXIT_OK
    fmt = q.output_format
    if fmt == "json":
        doc = {
            "mode": q.mode,
            "forbidden": [list(w) for w in q.forbidden],
            "alphabet_size": q.alphabet_size,
            "max_length": q.max_length,
            "coefficients": [{"length": m, "count": str(c)} for m, c in enumerate(counts)],
        }
        if oracle:
            doc["oracle"] = oracle
        return json.dumps(doc, indent=2) + "\n", code
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["length", "count"])
        w.writerows((m, c) for m, c in enumerate(counts))
        if oracle and not oracle["match"]:
            print(f"oracle mismatch at {len(oracle['mismatches'])} lengths", file=sys.stderr)
        return buf.getvalue(), code
    lines = [f"# {_header(q)}", "length | count"]
    lines += [f"{m:>6} | {c}" for m, c in enumerate(counts)]
    if oracle:
        lines.append(_oracle_line(oracle))
    return "\n".join(lines) + "\n", code


def _oracle_line(oracle):
    if oracle["match"]:
        return f"# oracle: match ({oracle['compared']} coefficients compared)"
    first = oracle["mismatches"][0]
    where = ", ".join(f"{k}={v}" for k, v in first.items())
    return f"# oracle: MISMATCH in {len(oracle['mismatches'])} coefficients, first: {where}"


def _run_counting(q):
    if q.max_weight > MAX_WEIGHT_CAP:
        raise BoundTooLarge(f"max weight {q.max_weight} exceeds cap {MAX_WEIGHT_CAP}")
    result = composition_gf(q.forbidden, q.max_weight)
    gf = result.gf
    if q.mode == "family":
        closed = family_gf(q.exponents, q.max_weight)
        if closed != gf:
            raise InvariantError("closed form and determinant formula disagree")
        gf = closed
    oracle = _oracle_check(q, result) if q.run_oracle else None
    code = EXIT_MISMATCH if oracle and not oracle["match"] else EXIT_OK
    quasi = list(zip(q.forbidden, result.quasi)) if q.show_quasi else []

    fmt = q.output_format
    if fmt == "json":
        doc = {
            "mode": q.mode,
            "forbidden": [list(w) for w in q.forbidden],
            "max_weight": q.max_weight,
            "coefficients": _coefficients(gf.rows),
        }
        if q.exponents:
            doc["exponents"] = list(q.exponents)
        if quasi:
            doc["quasi"] = [{"word": list(w), "coefficients": _coefficients(b.rows)} for w, b in quasi]
        if oracle:
            doc["oracle"] = oracle
        return json.dumps(doc, indent=2) + "\n", code
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        if quasi:
            w.writerow(["series", "weight", "length", "count"])
            blocks = [("G", gf)] + [(f"B{i + 1}", b) for i, (_, b) in enumerate(quasi)]
            for name, s in blocks:
                w.writerows((name, c["weight"], c["length"], c["count"]) for c in _coefficients(s.rows))
        else:
            w.writerow(["weight", "length", "count"])
            w.writerows((c["weight"], c["length"], c["count"]) for c in _coefficients(gf.rows))
        if oracle and not oracle["match"]:
            print(_oracle_line(oracle).lstrip("# "), file=sys.stderr)
        return buf.getvalue(), code
    lines = [f"# {_header(q)}", "weight | coefficient"]
    lines += _table(gf.rows)
    for i, (word, b) in enumerate(quasi):
        lines += ["", f"# B{i + 1}: quasi-avoiders ending in {word}"]
        lines += _table(b.rows)
    if oracle:
        lines.append(_oracle_line(oracle))
    return "\n".join(lines) + "\n", code


def _run_verify(q):
    result = composition_gf(q.forbidden, q.max_weight)
    report = verify_proof_identities(result, q.forbidden)
    checks = [{"name": n, "passed": ok, "detail": d} for n, ok, d in report.checks]
    internal_ok = report.all_passed
    if q.exponents:
        same = family_gf(q.exponents, q.max_weight) == result.gf
        internal_ok &= same
        checks.append({"name": "closed form = determinant formula", "passed": same, "detail": ""})
    oracle = _oracle_check(q, result)
    checks.append({
        "name": f"oracle: avoiders and {len(result.quasi)} quasi-avoider series",
        "passed": oracle["match"],
        "detail": "" if oracle["match"] else _oracle_line(oracle).lstrip("# "),
    })
    if not internal_ok:
        code, summary = EXIT_INTERNAL, "identity failure"
    elif not oracle["match"]:
        code, summary = EXIT_MISMATCH, "all identities pass; oracle MISMATCH"
    else:
        code, summary = EXIT_OK, "all identities pass; oracle match"
    if q.output_format == "json":
        doc = {
            "mode": "verify",
            "forbidden": [list(w) for w in q.forbidden],
            "max_weight": q.max_weight,
            "checks": checks,
            "passed": code == EXIT_OK,
            "summary": summary,
        }
        if q.exponents:
            doc["exponents"] = list(q.exponents)
        return json.dumps(doc, indent=2) + "\n", code
    lines = [f"# {_header(q)}"]
    for c in checks:
        lines.append(f"{'pass' if c['passed'] else 'FAIL'}  {c['name']}"
                     + (f"  ({c['detail']})" if c["detail"] else ""))
    lines.append(summary)
    return "\n".join(lines) + "\n", code


def run_query(q):
    """Return ``(rendered_text, exit_code)``; library errors propagate."""
    if q.mode == "strings":
        return _run_strings(q)
    if q.mode == "verify":
        return _run_verify(q)
    return _run_counting(q)


def _run_argv(argv, out, err):
    try:
        text, code = run_query(parse_query(argv))
    except AvoidError as exc:
        print(f"error: {exc}", file=err)
        return exc.exit_code
    out.write(text)
    return code


def main(argv=None, out=None, err=None):
    out = out or sys.stdout
    err = err or sys.stderr
    argv = sys.argv[1:] if argv is None else list(argv)
    if not argv or argv[0] in ("-h", "--help"):
        _build_parser().print_help(out)
        return EXIT_OK if argv else EXIT_INPUT
    if argv[0] == "--version":
        out.write(f"avoidgf {__version__}\n")
        return EXIT_OK
    if argv[0] == "--batch" or argv[0].startswith("--batch="):
        path = argv[0].split("=", 1)[1] if "=" in argv[0] else (argv[1] if len(argv) > 1 else None)
        rest = argv[1:] if "=" in argv[0] else argv[2:]
        if path is None or rest:
            print("error: usage: avoidgf --batch FILE", file=err)
            return EXIT_INPUT
        try:
            lines = list(parse_batch(path))
        except OSError as exc:
            print(f"error: cannot read batch file: {exc}", file=err)
            return EXIT_INPUT
        except ValueError as exc:
            print(f"error: {exc}", file=err)
            return EXIT_INPUT
        worst = EXIT_OK
        for i, (line, query_argv) in enumerate(lines, 1):
            out.write(f"==> query {i}: {line}\n")
            worst = max(worst, _run_argv(query_argv, out, err))
        return worst
    return _run_argv(argv, out, err)


if __name__ == "__main__":
    sys.exit(main())
