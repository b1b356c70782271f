"""Quick Summary: heuristic extractive summarizer with color highlighting.

Scores every sentence of a plain-text document by paragraph position,
theme repetition, and sentence type, then highlights the top-k sentences
(rank 1 green, rank 2 yellow, later ranks red).
"""

from .classify import (
    SentenceFeatures,
    StructureWordList,
    classify_sentence,
    content_tokens,
    is_structure_word,
)
from .mmml import (
    Lexicon,
    MMMLError,
    WordEntry,
    load_mmml,
    make_lexicon,
    touch_sentence_last_used,
    write_mmml,
)
from .morphology import (
    MorphAnalysis,
    MorphRule,
    MorphRuleSet,
    RulesError,
    analyze,
    load_rules,
    root_key,
)
from .pipeline import (
    PipelineResult,
    default_lexicon,
    default_rules,
    default_structure_words,
    summarize,
)
from .render import color_for_rank, render_ansi, render_html, render_json
from .scoring import (
    DocIndex,
    RankedSummary,
    ScoreBreakdown,
    ScoreWeights,
    SummaryEntry,
    build_doc_index,
    length_penalty,
    positional_score,
    score_sentence,
    select_top_k,
    theme_score,
    type_score,
)
from .segmenter import (
    Document,
    Paragraph,
    SentenceSpan,
    Token,
    parse_document,
    segment_paragraphs,
    segment_sentences,
    tokenize,
)

__version__ = "0.1.0"
