"""MMML etymology lexicon: XML wordlist load, canonical write, updates.

The format is a `<wordlist>` of `<word id="...">` records, each holding
word, origin, source, morphemes, and sentencelastused children. Field
text survives a load/store cycle byte-exactly; writing is canonical
(fixed declaration, 2-space indent, entries in ascending id order).
"""

from __future__ import annotations

import xml.etree.ElementTree as ET
from dataclasses import dataclass, field
from xml.sax.saxutils import escape, quoteattr

_REQUIRED_CHILDREN = ("word", "origin", "source")
_OPTIONAL_CHILDREN = ("morphemes", "sentencelastused")
_CHILD_ORDER = ("word", "origin", "source", "morphemes", "sentencelastused")


class MMMLError(ValueError):
    """Bad MMML document; carries (line, column) when known."""

    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        if line is not None:
            message = f"{message} (line {line}, column {column})"
        super().__init__(message)
        self.line = line
        self.column = column


@dataclass(frozen=True)
class WordEntry:
    id: str
    word: str
    origin: str
    source: str
    morphemes: str = ""
    sentence_last_used: str = ""


@dataclass(frozen=True)
class Lexicon:
    entries: dict[str, WordEntry] = field(default_factory=dict)
    root_aliases: dict[str, str] = field(default_factory=dict)

    def is_headword(self, word: str) -> bool:
        return word in self.entries

    def with_aliases(self, aliases: dict[str, str]) -> "Lexicon":
        """New lexicon with extra variant -> canonical-root mappings."""
        merged = dict(self.root_aliases)
        merged.update(aliases)
        return Lexicon(entries=dict(self.entries), root_aliases=merged)


def _identity_aliases(entries: dict[str, WordEntry]) -> dict[str, str]:
    return {headword: headword for headword in entries}


def make_lexicon(entries: list[WordEntry]) -> Lexicon:
    table = {}
    for entry in entries:
        if entry.word in table:
            raise MMMLError(f"duplicate headword {entry.word!r}")
        table[entry.word] = entry
    return Lexicon(entries=table, root_aliases=_identity_aliases(table))


def load_mmml(xml_text: str) -> Lexicon:
    """Parse an MMML wordlist document into a Lexicon."""
    try:
        root = ET.fromstring(xml_text)
    except ET.ParseError as exc:
        line, column = exc.position
        raise MMMLError(f"not well-formed XML: {exc.msg.split(':')[0]}", line, column) from exc
    if root.tag != "wordlist":
        raise MMMLError(f"root element must be <wordlist>, got <{root.tag}>")
    entries: dict[str, WordEntry] = {}
    seen_ids: set[str] = set()
    for elem in root:
        if elem.tag != "word":
            raise MMMLError(f"unexpected element <{elem.tag}> under <wordlist>")
        entry_id = elem.get("id")
        if entry_id is None or not entry_id:
            raise MMMLError("<word> entry missing id attribute")
        if entry_id in seen_ids:
            raise MMMLError(f"duplicate id {entry_id!r}")
        seen_ids.add(entry_id)
        fields: dict[str, str] = {}
        for child in elem:
            if child.tag not in _CHILD_ORDER:
                raise MMMLError(f"unexpected element <{child.tag}> in entry {entry_id!r}")
            if child.tag in fields:
                raise MMMLError(f"repeated element <{child.tag}> in entry {entry_id!r}")
            fields[child.tag] = child.text or ""
        for required in _REQUIRED_CHILDREN:
            if required not in fields:
                raise MMMLError(f"entry {entry_id!r} missing <{required}> child")
        if not fields["word"]:
            raise MMMLError(f"entry {entry_id!r} has an empty <word> child")
        entry = WordEntry(
            id=entry_id,
            word=fields["word"],
            origin=fields["origin"],
            source=fields["source"],
            morphemes=fields.get("morphemes", ""),
            sentence_last_used=fields.get("sentencelastused", ""),
        )
        if entry.word in entries:
            raise MMMLError(f"duplicate headword {entry.word!r}")
        entries[entry.word] = entry
    return Lexicon(entries=entries, root_aliases=_identity_aliases(entries))


def write_mmml(lexicon: Lexicon) -> str:
    """Serialize canonically; load(write(L)) reproduces L's entries exactly."""
    lines = ['<?xml version="1.0"?>', "<wordlist>"]
    for entry in sorted(lexicon.entries.values(), key=lambda e: e.id):
        lines.append(f"  <word id={quoteattr(entry.id)}>")
        values = {
            "word": entry.word,
            "origin": entry.origin,
            "source": entry.source,
            "morphemes": entry.morphemes,
            "sentencelastused": entry.sentence_last_used,
        }
        for tag in _CHILD_ORDER:
            lines.append(f"    <{tag}>{escape(values[tag])}</{tag}>")
        lines.append("  </word>")
    lines.append("</wordlist>")
    return "\n".join(lines) + "\n"


def touch_sentence_last_used(lexicon: Lexicon, headword: str, sentence_text: str) -> Lexicon:
    """New lexicon with the headword's example sentence replaced (no-op if absent)."""
    if headword not in lexicon.entries:
        return lexicon
    entries = dict(lexicon.entries)
    old = entries[headword]
    entries[headword] = WordEntry(
        id=old.id,
        word=old.word,
        origin=old.origin,
        source=old.source,
        morphemes=old.morphemes,
        sentence_last_used=sentence_text,
    )
    return Lexicon(entries=entries, root_aliases=dict(lexicon.root_aliases))
