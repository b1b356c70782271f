"""Walk through the summarizer on a small document.

Run from the repository root after installing the package:

    python3 demos/highlight_basics.py
"""

from quicksum import render_ansi, render_json, summarize

TEXT = """\
The engine ranks every sentence by theme. A theme repeats across the document.

Readers skim long reports. Why do readers skim? The engine highlights the theme for them.

Short notes still need care. A careful engine earns trust. The engine finds the theme and ranks each sentence."""


def main():
    # Three highlights: rank 1 green, rank 2 yellow, rank 3 red.
    result = summarize(TEXT, k=3)

    print("=== highlighted document (ANSI) ===")
    print(render_ansi(result.document, result.summary))
    print()

    print("=== score breakdown per selected sentence ===")
    for entry in result.summary.entries:
        s = entry.score
        print(
            f"rank {entry.rank}: total={s.total:.3f} "
            f"(position={s.position}, theme={s.theme:.3f}, "
            f"type={s.type_bonus}, length_penalty={s.length_penalty})"
        )
        print(f"  {entry.sentence.text}")
    print()

    print("=== machine-readable form ===")
    print(render_json(result.document, result.summary))


if __name__ == "__main__":
    main()
