"""Content vs. structure words, and shallow sentence classification.

Structure words (function words and discourse markers) are filtered out
before theme counting. Sentence kind, voice, and polarity come from
lexical heuristics, not parsing.
"""

from __future__ import annotations

from dataclasses import dataclass

from .segmenter import SentenceSpan

_BE_FORMS = frozenset({"is", "are", "was", "were", "been", "being", "be"})
_NEGATIONS = frozenset({"not", "no", "never", "none", "neither", "nor"})
_IMPERATIVE_VERBS = frozenset(
    {
        "consider", "note", "see", "let", "take", "find", "look", "remember",
        "imagine", "suppose", "try", "keep", "stop", "go", "wait", "use",
        "check", "read", "run", "make", "add", "call", "listen", "think",
    }
)


@dataclass(frozen=True)
class StructureWordList:
    words: frozenset[str]
    phrases: tuple[tuple[str, ...], ...]

    @classmethod
    def from_text(cls, text: str) -> "StructureWordList":
        """One word or phrase per line; '#' starts a comment."""
        words = set()
        phrases = []
        for raw in text.splitlines():
            line = raw.split("#", 1)[0].strip().lower()
            if not line:
                continue
            parts = tuple(line.split())
            if len(parts) == 1:
                words.add(parts[0])
            else:
                phrases.append(parts)
        return cls(words=frozenset(words), phrases=tuple(phrases))


@dataclass(frozen=True)
class SentenceFeatures:
    kind: str  # declarative | interrogative | imperative | exclamatory
    voice: str  # active | passive
    polarity: str  # positive | negative
    content_token_indices: tuple[int, ...]


def is_structure_word(normalized: str, word_list: StructureWordList) -> bool:
    return normalized in word_list.words


def content_tokens(sentence: SentenceSpan, word_list: StructureWordList) -> list[int]:
    """Indices of word tokens that carry content.

    Multi-word structure phrases ("hope that") knock out all their tokens.
    """
    tokens = sentence.tokens
    excluded = set()
    for phrase in word_list.phrases:
        span = len(phrase)
        for start in range(len(tokens) - span + 1):
            window = tokens[start : start + span]
            if all(t.is_word for t in window) and tuple(t.normalized for t in window) == phrase:
                excluded.update(range(start, start + span))
    return [
        i
        for i, tok in enumerate(tokens)
        if tok.is_word and i not in excluded and not is_structure_word(tok.normalized, word_list)
    ]


def _detect_kind(sentence: SentenceSpan) -> str:
    text = sentence.text.rstrip()
    if text.endswith("?"):
        return "interrogative"
    if text.endswith("!"):
        return "exclamatory"
    word_tokens = [t for t in sentence.tokens if t.is_word]
    if word_tokens and word_tokens[0].normalized in _IMPERATIVE_VERBS:
        # First word token is the verb, so no subject precedes it.
        return "imperative"
    return "declarative"


def _detect_voice(sentence: SentenceSpan) -> str:
    words = [t.normalized for t in sentence.tokens if t.is_word]
    for i, word in enumerate(words):
        if word in _BE_FORMS:
            for follower in words[i + 1 : i + 4]:
                if follower.endswith("ed") or follower.endswith("en"):
                    return "passive"
    return "active"


def _detect_polarity(sentence: SentenceSpan) -> str:
    for tok in sentence.tokens:
        if tok.normalized in _NEGATIONS or tok.normalized.endswith("n't"):
            return "negative"
    return "positive"


def classify_sentence(sentence: SentenceSpan, word_list: StructureWordList) -> SentenceFeatures:
    return SentenceFeatures(
        kind=_detect_kind(sentence),
        voice=_detect_voice(sentence),
        polarity=_detect_polarity(sentence),
        content_token_indices=tuple(content_tokens(sentence, word_list)),
    )
