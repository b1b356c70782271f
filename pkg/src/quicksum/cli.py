"""Command-line front end.

Exit codes: 0 success, 1 unreadable input, 2 malformed data file,
3 invalid flags.
"""

from __future__ import annotations

import argparse
import os
import sys
import tempfile

from . import __version__
from .classify import StructureWordList
from .mmml import MMMLError, load_mmml, touch_sentence_last_used, write_mmml
from .morphology import RulesError, load_rules
from .pipeline import summarize
from .render import render_ansi, render_html, render_json
from .scoring import ScoreWeights

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_DATA = 2
EXIT_FLAGS = 3

_DATA_DIR_ENV = "QUICKSUM_DATA_DIR"
_DATA_DIR_NAMES = {
    "rules": "rules.txt",
    "lexicon": "lexicon.mmml",
    "structure_words": "structure-words.txt",
}


class _FlagError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _FlagError(message)


def _build_parser() -> _Parser:
    parser = _Parser(
        prog="quicksum",
        description="Highlight the most important sentences of a plain-text document.",
    )
    parser.add_argument("input", help="input text file, or '-' for stdin")
    parser.add_argument(
        "-n", "--sentences", type=int, default=3, metavar="K",
        help="number of sentences to highlight (default: 3)",
    )
    parser.add_argument(
        "--format", choices=["ansi", "html", "json"], default=None,
        help="output format (default: ansi on a terminal, json otherwise)",
    )
    parser.add_argument("--rules", metavar="FILE", help="affix rules file")
    parser.add_argument("--lexicon", metavar="FILE", help="MMML lexicon file")
    parser.add_argument("--structure-words", metavar="FILE", help="structure word list file")
    parser.add_argument(
        "--weights", metavar="POS,THEME,TYPE,LEN",
        help="four comma-separated non-negative weights",
    )
    parser.add_argument(
        "--ideal-length", type=int, default=20, metavar="N",
        help="ideal sentence length in words (default: 20)",
    )
    parser.add_argument(
        "--update-lexicon", action="store_true",
        help="write back last-used sentences to the lexicon file",
    )
    parser.add_argument("--version", action="version", version=f"quicksum {__version__}")
    return parser


def _parse_weights(spec: str | None, ideal_length: int) -> ScoreWeights:
    if spec is None:
        return ScoreWeights(ideal_length=ideal_length)
    parts = spec.split(",")
    if len(parts) != 4:
        raise _FlagError("--weights takes exactly four comma-separated values")
    try:
        values = [float(p) for p in parts]
    except ValueError:
        raise _FlagError(f"--weights values must be numbers, got {spec!r}")
    try:
        return ScoreWeights(*values, ideal_length=ideal_length)
    except ValueError as exc:
        raise _FlagError(str(exc))


def _resolve_data_path(flag_value: str | None, key: str) -> str | None:
    if flag_value is not None:
        return flag_value
    data_dir = os.environ.get(_DATA_DIR_ENV)
    if data_dir:
        candidate = os.path.join(data_dir, _DATA_DIR_NAMES[key])
        if os.path.exists(candidate):
            return candidate
    return None


def _read_data_file(path: str) -> str:
    try:
        with open(path, encoding="utf-8") as f:
            return f.read()
    except OSError as exc:
        raise _DataError(f"{path}: {exc.strerror or exc}")


class _DataError(Exception):
    pass


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        if args.sentences < 0:
            raise _FlagError("--sentences must be >= 0")
        if args.ideal_length <= 0:
            raise _FlagError("--ideal-length must be positive")
        weights = _parse_weights(args.weights, args.ideal_length)
        lexicon_path = _resolve_data_path(args.lexicon, "lexicon")
        if args.update_lexicon and lexicon_path is None:
            raise _FlagError("--update-lexicon requires a lexicon file (--lexicon or QUICKSUM_DATA_DIR)")
    except _FlagError as exc:
        print(f"quicksum: error: {exc}", file=sys.stderr)
        return EXIT_FLAGS

    try:
        if args.input == "-":
            text = sys.stdin.read()
        else:
            with open(args.input, encoding="utf-8") as f:
                text = f.read()
    except (OSError, UnicodeDecodeError) as exc:
        print(f"quicksum: error: cannot read input {args.input}: {exc}", file=sys.stderr)
        return EXIT_INPUT

    rules = lexicon = structure_words = None
    try:
        rules_path = _resolve_data_path(args.rules, "rules")
        if rules_path is not None:
            try:
                rules = load_rules(_read_data_file(rules_path))
            except RulesError as exc:
                raise _DataError(f"{rules_path}: {exc}")
        if lexicon_path is not None:
            try:
                lexicon = load_mmml(_read_data_file(lexicon_path))
            except MMMLError as exc:
                raise _DataError(f"{lexicon_path}: {exc}")
        sw_path = _resolve_data_path(args.structure_words, "structure_words")
        if sw_path is not None:
            structure_words = StructureWordList.from_text(_read_data_file(sw_path))
    except _DataError as exc:
        print(f"quicksum: error: {exc}", file=sys.stderr)
        return EXIT_DATA

    result = summarize(
        text,
        k=args.sentences,
        weights=weights,
        rules=rules,
        lexicon=lexicon,
        structure_words=structure_words,
    )

    fmt = args.format
    if fmt is None:
        fmt = "ansi" if sys.stdout.isatty() else "json"
    if fmt == "ansi":
        output = render_ansi(result.document, result.summary)
    elif fmt == "html":
        output = render_html(result.document, result.summary)
    else:
        output = render_json(result.document, result.summary)
    sys.stdout.write(output)
    if fmt == "ansi" and not output.endswith("\n"):
        sys.stdout.write("\n")

    if args.update_lexicon:
        _write_back_lexicon(result, lexicon_path)
    return EXIT_OK


def _write_back_lexicon(result, lexicon_path: str) -> None:
    """Record the last sentence each lexicon headword appeared in."""
    lexicon = load_mmml(_read_data_file(lexicon_path))
    sentences = list(result.document.sentences())
    for i, sentence in enumerate(sentences):
        for j, token in enumerate(sentence.tokens):
            analysis = result.analyses[i][j]
            if analysis is None:
                continue
            for candidate in (analysis.surface, analysis.root, analysis.root_key):
                if lexicon.is_headword(candidate):
                    lexicon = touch_sentence_last_used(lexicon, candidate, sentence.text)
    serialized = write_mmml(lexicon)
    directory = os.path.dirname(os.path.abspath(lexicon_path))
    fd, tmp_path = tempfile.mkstemp(dir=directory, suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="utf-8") as f:
            f.write(serialized)
        os.replace(tmp_path, lexicon_path)
    except BaseException:
        if os.path.exists(tmp_path):
            os.unlink(tmp_path)
        raise


if __name__ == "__main__":
    sys.exit(main())
