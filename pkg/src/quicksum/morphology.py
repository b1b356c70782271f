"""Affix stripping driven by a rules file, with lexicon-aware stopping.

Words decompose into prefixes, a root, and suffixes. Stripping is bounded
(at most two affixes per side, residual stem never shorter than three
characters) and stops early when the stem is a known lexicon headword.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field

from .mmml import Lexicon

MIN_STEM_LEN = 3

_VOWELS = "aeiou"


class RulesError(ValueError):
    """Malformed rules file; carries the offending line number."""

    def __init__(self, message: str, line: int):
        super().__init__(f"line {line}: {message}")
        self.line = line


@dataclass(frozen=True)
class MorphRule:
    kind: str  # "prefix" or "suffix"
    affix: str
    min_stem_len: int
    restore: str = ""


@dataclass(frozen=True)
class MorphRuleSet:
    prefixes: tuple[MorphRule, ...]
    suffixes: tuple[MorphRule, ...]
    max_strip_per_side: int = 2


@dataclass(frozen=True)
class MorphAnalysis:
    surface: str
    prefixes: tuple[str, ...]
    root: str
    suffixes: tuple[str, ...]
    root_key: str


def load_rules(rules_text: str) -> MorphRuleSet:
    """Parse a rules file: `<prefix|suffix> <affix> <min_stem_len> [restore]`.

    Blank lines and '#' comments are ignored. Rules come out sorted
    longest-affix-first within each kind; duplicates are rejected.
    """
    prefixes: list[MorphRule] = []
    suffixes: list[MorphRule] = []
    seen: set[tuple[str, str, str]] = set()
    for lineno, raw in enumerate(rules_text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) not in (3, 4):
            raise RulesError(f"expected 3 or 4 fields, got {len(parts)}", lineno)
        kind, affix, min_len = parts[0], parts[1].lower(), parts[2]
        restore = parts[3].lower() if len(parts) == 4 else ""
        if kind not in ("prefix", "suffix"):
            raise RulesError(f"unknown rule kind {kind!r}", lineno)
        if not min_len.isdigit() or int(min_len) < 1:
            raise RulesError(f"min stem length must be a positive integer, got {min_len!r}", lineno)
        key = (kind, affix, restore)
        if key in seen:
            raise RulesError(f"duplicate rule {kind} {affix!r}", lineno)
        seen.add(key)
        rule = MorphRule(kind=kind, affix=affix, min_stem_len=int(min_len), restore=restore)
        (prefixes if kind == "prefix" else suffixes).append(rule)
    longest_first = lambda rules: tuple(
        sorted(rules, key=lambda r: -len(r.affix))
    )
    return MorphRuleSet(prefixes=longest_first(prefixes), suffixes=longest_first(suffixes))


def _cv_pattern(stem: str) -> str:
    out: list[str] = []
    for i, ch in enumerate(stem):
        if ch in _VOWELS or (ch == "y" and i > 0 and out[i - 1] == "C"):
            out.append("V")
        else:
            out.append("C")
    return "".join(out)


def _wants_final_e(stem: str) -> bool:
    # Short stems ending consonant-vowel-consonant usually lost a final
    # 'e' to the suffix ("mak" -> "make"), longer ones did not ("button").
    cv = _cv_pattern(stem)
    measure = len(re.findall("V+C", cv))
    return measure == 1 and cv.endswith("CVC") and stem[-1] not in "wxy"


def _strip_one(
    stem: str, rules: tuple[MorphRule, ...], side: str, lexicon: Lexicon
) -> tuple[str, str] | None:
    """Try one strip on `stem`; return (new_stem, affix) or None."""
    i = 0
    n = len(rules)
    while i < n:
        affix_len = len(rules[i].affix)
        # Rules sharing the same affix (restore variants) compete as a group.
        group = [r for r in rules if len(r.affix) == affix_len]
        i += len(group)
        matches = []
        for rule in group:
            if side == "suffix":
                ok = stem.endswith(rule.affix)
                bare = stem[: len(stem) - len(rule.affix)]
            else:
                ok = stem.startswith(rule.affix)
                bare = stem[len(rule.affix) :]
            if ok and len(bare) >= max(rule.min_stem_len, MIN_STEM_LEN):
                matches.append((rule, bare))
        if not matches:
            continue
        plain = next(((r, b) for r, b in matches if not r.restore), None)
        restored = next(((r, b + r.restore) for r, b in matches if r.restore), None)
        if restored is not None:
            rule, candidate = restored
            bare = candidate[: len(candidate) - len(rule.restore)]
            if (
                plain is None
                or lexicon.is_headword(candidate)
                or (rule.restore == "e" and _wants_final_e(bare))
            ):
                return candidate, rule.affix
        if plain is not None:
            rule, bare = plain
            return bare, rule.affix
    return None


def analyze(token_normalized: str, rules: MorphRuleSet, lexicon: Lexicon) -> MorphAnalysis:
    """Decompose a normalized word into prefixes, root, and suffixes."""
    word = token_normalized
    prefixes: list[str] = []
    suffixes: list[str] = []
    stem = word
    n_pre = n_suf = 0
    while not lexicon.is_headword(stem):
        progressed = False
        if n_suf < rules.max_strip_per_side:
            hit = _strip_one(stem, rules.suffixes, "suffix", lexicon)
            if hit:
                stem, affix = hit
                suffixes.append(affix)
                n_suf += 1
                progressed = True
                if lexicon.is_headword(stem):
                    break
        if n_pre < rules.max_strip_per_side:
            hit = _strip_one(stem, rules.prefixes, "prefix", lexicon)
            if hit:
                stem, affix = hit
                prefixes.append(affix)
                n_pre += 1
                progressed = True
        if not progressed:
            break
    analysis = MorphAnalysis(
        surface=word,
        prefixes=tuple(prefixes),
        root=stem,
        suffixes=tuple(suffixes),
        root_key="",
    )
    return MorphAnalysis(
        surface=analysis.surface,
        prefixes=analysis.prefixes,
        root=analysis.root,
        suffixes=analysis.suffixes,
        root_key=root_key(analysis, lexicon),
    )


def root_key(analysis: MorphAnalysis, lexicon: Lexicon) -> str:
    """Unify a root under the lexicon's canonical key, if it has one."""
    for candidate in (analysis.root, analysis.surface):
        target = lexicon.root_aliases.get(candidate)
        if target is not None:
            return target.lower()
    return analysis.root.lower()
