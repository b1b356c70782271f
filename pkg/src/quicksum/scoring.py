"""Sentence scoring and top-k selection.

Each sentence gets four component scores in [0, 1]:
  position    - where it sits in its paragraph and in the document
  theme       - how much its content roots repeat across the document
  type bonus  - declarative > imperative > exclamatory > interrogative
  length      - penalty for deviating from an ideal word count

total = w_pos * position + w_theme * theme + w_type * type - w_len * length
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .classify import SentenceFeatures
from .segmenter import Document, SentenceSpan

_TYPE_SCORES = {
    "declarative": 1.0,
    "imperative": 0.5,
    "exclamatory": 0.3,
    "interrogative": 0.2,
}

# Positional categories, highest applicable wins.
POS_CONCLUSION = 1.0  # last sentence of the final paragraph
POS_PARAGRAPH_FIRST = 0.8  # topic-sentence position
POS_PARAGRAPH_LAST = 0.6  # last sentence of a non-final paragraph
POS_MIDDLE = 0.2


@dataclass(frozen=True)
class ScoreWeights:
    w_pos: float = 0.4
    w_theme: float = 0.4
    w_type: float = 0.1
    w_len: float = 0.1
    ideal_length: int = 20

    def __post_init__(self):
        if min(self.w_pos, self.w_theme, self.w_type, self.w_len) < 0:
            raise ValueError("weights must be non-negative")
        if self.w_pos + self.w_theme + self.w_type + self.w_len <= 0:
            raise ValueError("at least one weight must be positive")
        if self.ideal_length <= 0:
            raise ValueError("ideal_length must be positive")


@dataclass(frozen=True)
class DocIndex:
    df: dict[str, int]
    max_df: int
    sentence_count: int


@dataclass(frozen=True)
class ScoreBreakdown:
    position: float
    theme: float
    type_bonus: float
    length_penalty: float
    total: float


@dataclass(frozen=True)
class SummaryEntry:
    rank: int
    sentence: SentenceSpan
    score: ScoreBreakdown


@dataclass(frozen=True)
class RankedSummary:
    entries: tuple[SummaryEntry, ...]
    k_requested: int


def build_doc_index(doc: Document, sentence_roots: list[set[str]]) -> DocIndex:
    """Count, for every content root, the number of sentences containing it."""
    df: dict[str, int] = {}
    for roots in sentence_roots:
        for root in roots:
            df[root] = df.get(root, 0) + 1
    return DocIndex(df=df, max_df=max(df.values(), default=0), sentence_count=len(sentence_roots))


def positional_score(sentence: SentenceSpan, doc: Document) -> float:
    para = doc.paragraphs[sentence.paragraph_index]
    is_first = sentence.index_in_paragraph == 0
    is_last = sentence.index_in_paragraph == len(para.sentences) - 1
    final_para = sentence.paragraph_index == len(doc.paragraphs) - 1
    if is_last and final_para:
        return POS_CONCLUSION
    if is_first:
        return POS_PARAGRAPH_FIRST
    if is_last:
        return POS_PARAGRAPH_LAST
    return POS_MIDDLE


def theme_score(content_roots: set[str], index: DocIndex) -> float:
    if not content_roots or index.max_df == 0:
        return 0.0
    # Sorted iteration keeps float summation order independent of set order.
    ratios = [index.df.get(root, 0) / index.max_df for root in sorted(content_roots)]
    return sum(ratios) / len(ratios)


def type_score(features: SentenceFeatures) -> float:
    return _TYPE_SCORES[features.kind]


def length_penalty(sentence: SentenceSpan, weights: ScoreWeights) -> float:
    deviation = abs(sentence.word_count() - weights.ideal_length) / weights.ideal_length
    return min(max(deviation, 0.0), 1.0)


def score_sentence(
    sentence: SentenceSpan,
    doc: Document,
    index: DocIndex,
    features: SentenceFeatures,
    weights: ScoreWeights,
    content_roots: set[str],
) -> ScoreBreakdown:
    position = positional_score(sentence, doc)
    theme = theme_score(content_roots, index)
    type_bonus = type_score(features)
    penalty = length_penalty(sentence, weights)
    total = (
        weights.w_pos * position
        + weights.w_theme * theme
        + weights.w_type * type_bonus
        - weights.w_len * penalty
    )
    return ScoreBreakdown(
        position=position,
        theme=theme,
        type_bonus=type_bonus,
        length_penalty=penalty,
        total=total,
    )


def select_top_k(doc: Document, scores: list[ScoreBreakdown], k: int) -> RankedSummary:
    """Top-k sentences by total score, ties broken by document position."""
    if k < 0:
        raise ValueError("k must be >= 0")
    sentences = list(doc.sentences())
    order = sorted(range(len(sentences)), key=lambda i: (-scores[i].total, i))
    entries = tuple(
        SummaryEntry(rank=rank, sentence=sentences[i], score=scores[i])
        for rank, i in enumerate(order[:k], start=1)
    )
    return RankedSummary(entries=entries, k_requested=k)
