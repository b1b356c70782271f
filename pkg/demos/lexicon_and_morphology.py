"""Explore the affix analyzer and the MMML etymology lexicon.

Run from the repository root after installing the package:

    python3 demos/lexicon_and_morphology.py
"""

from quicksum import (
    analyze,
    default_lexicon,
    default_rules,
    touch_sentence_last_used,
    write_mmml,
)


def main():
    rules = default_rules()
    lexicon = default_lexicon()

    print("=== affix stripping ===")
    for word in ("unbuttoning", "making", "happily", "rereading", "daisy", "rabbits"):
        a = analyze(word, rules, lexicon)
        parts = list(a.prefixes) + [f"[{a.root}]"] + list(reversed(a.suffixes))
        print(f"{word:14s} -> {' + '.join(parts):28s} root key: {a.root_key}")
    print()

    print("=== etymology records ===")
    for entry in lexicon.entries.values():
        print(f"{entry.word:10s} origin={entry.origin:16s} source={entry.source}")
    print()

    # Headword variants can be unified under one canonical root.
    aliased = lexicon.with_aliases({"gaol": "jail"})
    a = analyze("gaol", rules, aliased)
    print(f"alias lookup: gaol -> {a.root_key}")
    print()

    print("=== updating a last-used sentence and serializing ===")
    updated = touch_sentence_last_used(lexicon, "rabbit", "The rabbit stole the lettuce.")
    print(write_mmml(updated))


if __name__ == "__main__":
    main()
