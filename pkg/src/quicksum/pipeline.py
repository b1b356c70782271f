"""End-to-end orchestration: segment, analyze, classify, score, select."""

from __future__ import annotations

from dataclasses import dataclass
from importlib import resources

from .classify import SentenceFeatures, StructureWordList, classify_sentence
from .mmml import Lexicon, load_mmml
from .morphology import MorphAnalysis, MorphRuleSet, analyze, load_rules
from .scoring import (
    DocIndex,
    RankedSummary,
    ScoreBreakdown,
    ScoreWeights,
    build_doc_index,
    score_sentence,
    select_top_k,
)
from .segmenter import Document, parse_document


def _data_text(name: str) -> str:
    return (resources.files("quicksum") / "data" / name).read_text(encoding="utf-8")


def default_rules() -> MorphRuleSet:
    return load_rules(_data_text("rules.txt"))


def default_lexicon() -> Lexicon:
    return load_mmml(_data_text("lexicon.mmml"))


def default_structure_words() -> StructureWordList:
    return StructureWordList.from_text(_data_text("structure_words.txt"))


@dataclass(frozen=True)
class PipelineResult:
    document: Document
    summary: RankedSummary
    analyses: tuple[tuple[MorphAnalysis | None, ...], ...]  # per sentence, per token
    features: tuple[SentenceFeatures, ...]
    sentence_roots: tuple[frozenset[str], ...]
    index: DocIndex
    scores: tuple[ScoreBreakdown, ...]


def summarize(
    text: str,
    k: int = 3,
    weights: ScoreWeights | None = None,
    rules: MorphRuleSet | None = None,
    lexicon: Lexicon | None = None,
    structure_words: StructureWordList | None = None,
) -> PipelineResult:
    """Run the whole pipeline over one document."""
    weights = weights or ScoreWeights()
    rules = rules or default_rules()
    lexicon = lexicon or default_lexicon()
    structure_words = structure_words or default_structure_words()

    doc = parse_document(text)
    sentences = list(doc.sentences())

    cache: dict[str, MorphAnalysis] = {}

    def analysis_for(normalized: str) -> MorphAnalysis:
        hit = cache.get(normalized)
        if hit is None:
            hit = analyze(normalized, rules, lexicon)
            cache[normalized] = hit
        return hit

    analyses = tuple(
        tuple(analysis_for(t.normalized) if t.is_word else None for t in s.tokens)
        for s in sentences
    )
    features = tuple(classify_sentence(s, structure_words) for s in sentences)
    sentence_roots = tuple(
        frozenset(
            analyses[i][j].root_key
            for j in features[i].content_token_indices
        )
        for i in range(len(sentences))
    )
    index = build_doc_index(doc, [set(r) for r in sentence_roots])
    scores = tuple(
        score_sentence(sentences[i], doc, index, features[i], weights, set(sentence_roots[i]))
        for i in range(len(sentences))
    )
    summary = select_top_k(doc, list(scores), k)
    return PipelineResult(
        document=doc,
        summary=summary,
        analyses=analyses,
        features=features,
        sentence_roots=sentence_roots,
        index=index,
        scores=scores,
    )
