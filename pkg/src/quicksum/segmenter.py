"""Plain-text segmentation: paragraphs, sentences, tokens, with exact offsets.

Every span indexes into the original text so downstream rendering can
reproduce the input byte-for-byte.
"""

from __future__ import annotations

import re
import unicodedata
from dataclasses import dataclass

# Terminators that may end a sentence.
_TERMINATORS = ".!?"

# A '.' directly after one of these does not end a sentence.
_ABBREVIATIONS = frozenset({"mr", "mrs", "ms", "dr", "st", "etc", "e.g", "i.e", "vs"})

_TOKEN_RE = re.compile(r"\S+")


@dataclass(frozen=True)
class Token:
    surface: str
    span: tuple[int, int]  # relative to the sentence text
    normalized: str
    is_word: bool


@dataclass(frozen=True)
class SentenceSpan:
    paragraph_index: int
    index_in_paragraph: int
    span: tuple[int, int]  # into Document.source_text
    text: str
    tokens: tuple[Token, ...]

    def word_count(self) -> int:
        return sum(1 for t in self.tokens if t.is_word)


@dataclass(frozen=True)
class Paragraph:
    index: int
    span: tuple[int, int]
    sentences: tuple[SentenceSpan, ...]


@dataclass(frozen=True)
class Document:
    source_text: str
    paragraphs: tuple[Paragraph, ...]

    def sentences(self):
        for para in self.paragraphs:
            yield from para.sentences

    def sentence_count(self) -> int:
        return sum(len(p.sentences) for p in self.paragraphs)


def _trim(text: str, start: int, end: int) -> tuple[int, int] | None:
    while start < end and text[start].isspace():
        start += 1
    while end > start and text[end - 1].isspace():
        end -= 1
    if start >= end:
        return None
    return (start, end)


def segment_paragraphs(text: str) -> list[tuple[int, int]]:
    """Split text into paragraph ranges separated by blank lines."""
    ranges: list[tuple[int, int]] = []
    pos = 0
    start = None
    end = 0
    for line in text.splitlines(keepends=True):
        if line.strip():
            if start is None:
                start = pos
            end = pos + len(line)
        elif start is not None:
            r = _trim(text, start, end)
            if r:
                ranges.append(r)
            start = None
        pos += len(line)
    if start is not None:
        r = _trim(text, start, end)
        if r:
            ranges.append(r)
    return ranges


def _abbreviation_before(text: str, dot_index: int) -> bool:
    j = dot_index
    while j > 0 and (text[j - 1].isalpha() or text[j - 1] == "."):
        j -= 1
    word = text[j:dot_index].lower().lstrip(".")
    if not word:
        return False
    if word in _ABBREVIATIONS:
        return True
    return len(word) == 1 and word.isalpha()


def segment_sentences(paragraph_text: str) -> list[tuple[int, int]]:
    """Split one paragraph into sentence ranges (relative to the paragraph).

    A sentence ends at '.', '!' or '?' followed by whitespace or end of
    text, unless the '.' closes a known abbreviation or a single initial.
    Trailing text without a terminator still forms a sentence.
    """
    ranges: list[tuple[int, int]] = []
    n = len(paragraph_text)
    start = 0
    i = 0
    while i < n:
        ch = paragraph_text[i]
        if ch in _TERMINATORS and (i + 1 >= n or paragraph_text[i + 1].isspace()):
            if ch == "." and _abbreviation_before(paragraph_text, i):
                i += 1
                continue
            r = _trim(paragraph_text, start, i + 1)
            if r:
                ranges.append(r)
            start = i + 1
        i += 1
    r = _trim(paragraph_text, start, n)
    if r:
        ranges.append(r)
    return ranges


def _is_punct(ch: str) -> bool:
    return unicodedata.category(ch).startswith("P")


_ASCII_PUNCT = "".join(chr(c) for c in range(128) if _is_punct(chr(c)))


def normalize_token(surface: str) -> str:
    """Case-fold and strip punctuation from both ends; '' for non-words."""
    if surface.isascii():
        core = surface.strip(_ASCII_PUNCT).casefold()
    else:
        start = 0
        end = len(surface)
        while start < end and _is_punct(surface[start]):
            start += 1
        while end > start and _is_punct(surface[end - 1]):
            end -= 1
        core = surface[start:end].casefold()
    if not core:
        return ""
    if core.isalpha() or any(ch.isalpha() for ch in core):
        return core
    return ""


def tokenize(sentence_text: str) -> list[Token]:
    """Tokens are maximal runs of non-whitespace; interior apostrophes kept."""
    tokens = []
    for m in _TOKEN_RE.finditer(sentence_text):
        surface = m.group()
        normalized = normalize_token(surface)
        tokens.append(
            Token(
                surface=surface,
                span=(m.start(), m.end()),
                normalized=normalized,
                is_word=bool(normalized),
            )
        )
    return tokens


def parse_document(text: str) -> Document:
    """Full segmentation pipeline: paragraphs, sentences, tokens."""
    paragraphs = []
    for p_idx, (p_start, p_end) in enumerate(segment_paragraphs(text)):
        para_text = text[p_start:p_end]
        sentences = []
        for s_idx, (s_start, s_end) in enumerate(segment_sentences(para_text)):
            span = (p_start + s_start, p_start + s_end)
            sent_text = text[span[0] : span[1]]
            sentences.append(
                SentenceSpan(
                    paragraph_index=p_idx,
                    index_in_paragraph=s_idx,
                    span=span,
                    text=sent_text,
                    tokens=tuple(tokenize(sent_text)),
                )
            )
        # A trimmed paragraph range is never empty, so sentences is non-empty.
        paragraphs.append(
            Paragraph(index=p_idx, span=(p_start, p_end), sentences=tuple(sentences))
        )
    return Document(source_text=text, paragraphs=tuple(paragraphs))
