"""Output rendering: ANSI terminal, HTML, and JSON.

All formats reproduce the document text losslessly; highlighting wraps
the selected sentences without touching anything else. Rank 1 is green,
rank 2 yellow, every later rank red.
"""

from __future__ import annotations

import html
import json

from .scoring import RankedSummary
from .segmenter import Document

_ANSI_CODES = {"green": "32", "yellow": "33", "red": "31"}
_ANSI_RESET = "\x1b[0m"

_HTML_HEAD = """\
<!DOCTYPE html>
<html>
<head>
<meta charset="utf-8">
<style>
.qs-rank-1 { background-color: #b4f0b4; }
.qs-rank-2 { background-color: #f5ee9e; }
.qs-rank-3 { background-color: #f5b4aa; }
</style>
</head>
<body>"""

_HTML_FOOT = "</body>\n</html>\n"


def color_for_rank(rank: int) -> str:
    if rank == 1:
        return "green"
    if rank == 2:
        return "yellow"
    return "red"


def _highlight_map(summary: RankedSummary) -> dict[tuple[int, int], int]:
    """Map sentence span -> rank for the selected sentences."""
    return {entry.sentence.span: entry.rank for entry in summary.entries}


def render_ansi(doc: Document, summary: RankedSummary) -> str:
    """Document text with selected sentences wrapped in SGR color codes."""
    highlights = sorted(
        (entry.sentence.span, entry.rank) for entry in summary.entries
    )
    out = []
    pos = 0
    text = doc.source_text
    for (start, end), rank in highlights:
        code = _ANSI_CODES[color_for_rank(rank)]
        out.append(text[pos:start])
        out.append(f"\x1b[{code}m{text[start:end]}{_ANSI_RESET}")
        pos = end
    out.append(text[pos:])
    return "".join(out)


def render_html(doc: Document, summary: RankedSummary) -> str:
    """HTML with <p> paragraphs and <span> highlights; text fully escaped."""
    highlights = _highlight_map(summary)
    text = doc.source_text
    esc = lambda s: html.escape(s, quote=False)
    body = []
    pos = 0
    for para in doc.paragraphs:
        p_start, p_end = para.span
        body.append(esc(text[pos:p_start]))
        body.append("<p>")
        cursor = p_start
        for sentence in para.sentences:
            s_start, s_end = sentence.span
            body.append(esc(text[cursor:s_start]))
            rank = highlights.get(sentence.span)
            if rank is None:
                body.append(esc(sentence.text))
            else:
                cls = f"qs-rank-{min(rank, 3)}"
                color = color_for_rank(rank)
                body.append(
                    f'<span class="{cls}" data-color="{color}">{esc(sentence.text)}</span>'
                )
            cursor = s_end
        body.append(esc(text[cursor:p_end]))
        body.append("</p>")
        pos = p_end
    body.append(esc(text[pos:]))
    return _HTML_HEAD + "".join(body) + _HTML_FOOT


def render_json(doc: Document, summary: RankedSummary) -> str:
    """Machine-readable summary: ranked sentences with score breakdowns."""
    sentences = []
    for entry in summary.entries:
        s = entry.sentence
        sentences.append(
            {
                "rank": entry.rank,
                "color": color_for_rank(entry.rank),
                "paragraph_index": s.paragraph_index,
                "index_in_paragraph": s.index_in_paragraph,
                "text": s.text,
                "score": {
                    "position": round(entry.score.position, 6),
                    "theme": round(entry.score.theme, 6),
                    "type_bonus": round(entry.score.type_bonus, 6),
                    "length_penalty": round(entry.score.length_penalty, 6),
                    "total": round(entry.score.total, 6),
                },
            }
        )
    payload = {"k_requested": summary.k_requested, "sentences": sentences}
    return json.dumps(payload, ensure_ascii=False, indent=2) + "\n"
