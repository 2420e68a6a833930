"""Build the bundled English word-frequency list from CPython's pydoc topic text.

Run once; the output is checked in as package data so tests never depend on
pydoc_data being present.
"""
import collections
import pathlib
import re

import pydoc_data.topics

OUT = pathlib.Path(__file__).resolve().parents[1] / "src/blockmatch/data/english_vocab.txt"


def main(limit=4000):
    words = collections.Counter()
    for body in pydoc_data.topics.topics.values():
        # drop code samples and reST markup; keep running prose
        for line in body.splitlines():
            if line.startswith("      ") or ">>>" in line or "::=" in line:
                continue
            words.update(w.lower() for w in re.findall(r"\b[A-Za-z]+\b", line))
    with OUT.open("w") as fh:
        for word, count in words.most_common(limit):
            if count < 2:
                break
            fh.write(f"{word} {count}\n")


if __name__ == "__main__":
    main()
