import pathlib
import random

import pytest

from quicksum import (
    default_lexicon,
    default_rules,
    default_structure_words,
)

FIXTURES = pathlib.Path(__file__).parent / "fixtures"

_CONTENT_WORDS = [
    "engine", "theme", "report", "reader", "summary", "daisy", "rabbit",
    "button", "signal", "village", "window", "captain", "garden", "letter",
    "market", "singer", "record", "castle", "forest", "harbor",
]
_STRUCTURE_WORDS = ["the", "a", "and", "of", "in", "to", "for", "with", "is", "was"]
_TERMINATORS = [".", ".", ".", "!", "?"]


@pytest.fixture(scope="session")
def rules():
    return default_rules()


@pytest.fixture(scope="session")
def lexicon():
    return default_lexicon()


@pytest.fixture(scope="session")
def structure_words():
    return default_structure_words()


@pytest.fixture(scope="session")
def d1_text():
    return (FIXTURES / "d1.txt").read_text(encoding="utf-8")


def random_document(rng: random.Random, max_sentences: int = 20) -> str:
    """Small random plain-text document for oracle and losslessness checks."""
    n_sentences = rng.randint(1, max_sentences)
    paragraphs = []
    remaining = n_sentences
    while remaining > 0:
        in_para = rng.randint(1, min(4, remaining))
        remaining -= in_para
        sentences = []
        for _ in range(in_para):
            n_words = rng.randint(2, 12)
            words = []
            for w in range(n_words):
                pool = _CONTENT_WORDS if rng.random() < 0.6 else _STRUCTURE_WORDS
                word = rng.choice(pool)
                if w == 0:
                    word = word.capitalize()
                words.append(word)
            sentences.append(" ".join(words) + rng.choice(_TERMINATORS))
        paragraphs.append(" ".join(sentences))
    return "\n\n".join(paragraphs) + ("\n" if rng.random() < 0.5 else "")
