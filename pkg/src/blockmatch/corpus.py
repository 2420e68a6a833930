"""Corpora: loading, byte statistics, pattern sampling and synthetic stand-ins.

The benchmark corpora themselves are not shipped.  ``synthetic_text`` makes
texts with the same alphabet sizes (English-like 63, Czech-like 117, protein
19, DNA 4); the small checked-in fixtures under ``blockmatch/data/fixtures``
were produced by it.
"""
from __future__ import annotations

import os
from dataclasses import dataclass
from importlib import resources
from pathlib import Path

import numpy as np

from .core import as_bytes
from .orders import FrequencyTable

RNG_NAME = "numpy.random.default_rng (PCG64)"

FIXTURES = ("english", "czech", "protein", "dna")

# human proteome residue frequencies in percent, tryptophan dropped
PROTEIN_FREQ = {
    "L": 9.96, "S": 8.33, "E": 7.10, "A": 7.02, "G": 6.58, "P": 6.31, "V": 5.96,
    "K": 5.72, "R": 5.64, "T": 5.36, "Q": 4.77, "D": 4.73, "I": 4.33, "F": 3.65,
    "N": 3.58, "Y": 2.66, "H": 2.63, "C": 2.30, "M": 2.13,
}

_NAMES = (
    "Aaron Benjamin Cain David Esau Festus Gideon Herod Isaac Jacob Korah Levi Moses "
    "Noah Obed Pharaoh Quartus Reuben Samuel Timothy Uriah Vashti Wisdom Xerxes "
    "Yahweh Zebedee").split()
_CZECH_NAMES = _NAMES + (
    "Ádam Éva Íra Ólga Úsvit Ůdolí Ýmir Čapek Ďábel Ěchon Ňadra Řehoř Šimon Ťapka "
    "Žofie").split()
_PUNCT = (",", ";", ":")
_ENDS = (".", ".", ".", ".", ".", "?", "!")
_CZECH_SYMBOLS = tuple('-"*/&%#+=<>[]_~')
_HACEK = str.maketrans("cdenrstz", "čďěňřšťž")
_ACUTE = str.maketrans("aeiouy", "áéíóúý")


@dataclass(frozen=True)
class Corpus:
    name: str
    text: bytes

    @property
    def alphabet_size(self) -> int:
        return len(set(self.text))

    def __len__(self):
        return len(self.text)


@dataclass(frozen=True)
class PatternSet:
    patterns: tuple[bytes, ...]
    m: int
    seed: int
    source_positions: tuple[int, ...]
    rng: str = RNG_NAME


def load_corpus(path: str | os.PathLike, name: str | None = None) -> Corpus:
    """Load a file verbatim; OSError (with the path) if it cannot be read."""
    path = Path(path)
    return Corpus(name or path.stem, path.read_bytes())


def fixture_path(name: str) -> Path:
    if name not in FIXTURES:
        raise ValueError(f"unknown fixture {name!r}; expected one of {FIXTURES}")
    return Path(str(resources.files("blockmatch") / "data" / "fixtures" / f"{name}.txt"))


def load_fixture(name: str) -> Corpus:
    return load_corpus(fixture_path(name))


def build_frequency_table(corpus: Corpus) -> FrequencyTable:
    return FrequencyTable.from_text(corpus.text)


def sample_patterns(corpus: Corpus, m: int, k: int, seed: int) -> PatternSet:
    """Draw ``k`` substrings of length ``m`` at uniform random start positions."""
    n = len(corpus.text)
    if m < 1 or m > n:
        raise ValueError(f"pattern length {m} not in 1..{n}")
    if k < 1:
        raise ValueError("k must be at least 1")
    starts = np.random.default_rng(seed).integers(0, n - m + 1, size=k)
    return PatternSet(
        patterns=tuple(corpus.text[s:s + m] for s in starts),
        m=m,
        seed=seed,
        source_positions=tuple(int(s) + 1 for s in starts),
    )


def _vocabulary():
    words, weights = [], []
    with resources.files("blockmatch").joinpath("data/english_vocab.txt").open() as fh:
        for line in fh:
            word, count = line.split()
            words.append(word)
            weights.append(int(count))
    weights = np.array(weights, float)
    return words, weights / weights.sum()


def _czech_word(word: str, rng) -> str:
    if rng.random() < 0.35:
        k = int(rng.integers(len(word)))
        table = _HACEK if rng.random() < 0.5 else _ACUTE
        word = word[:k] + word[k].translate(table) + word[k + 1:]
    if "u" in word and rng.random() < 0.05:
        word = word.replace("u", "ů", 1)
    return word


def _prose(size: int, rng, czech: bool) -> bytes:
    words, weights = _vocabulary()
    names = _CZECH_NAMES if czech else _NAMES
    lines, line, total = [], "", 0
    sentence_start = True
    while total + len(line) < size:
        draws = rng.choice(len(words), size=256, p=weights)
        for w in draws:
            word = words[w]
            if czech:
                word = _czech_word(word, rng)
            u = rng.random()
            if u < 0.03:
                word = names[int(rng.integers(len(names)))]
            elif u < 0.04:
                word += "'s"
            elif u < 0.05:
                word = f"({word})"
            elif czech and u < 0.07:
                word = _CZECH_SYMBOLS[int(rng.integers(len(_CZECH_SYMBOLS)))] + word
            elif czech and u < 0.08:
                word = f"{int(rng.integers(1, 200))}:{int(rng.integers(1, 50))}"
            if sentence_start:
                word = word[:1].upper() + word[1:]
            u = rng.random()
            sentence_start = u < 0.08
            if sentence_start:
                word += _ENDS[int(rng.integers(len(_ENDS)))]
            elif u < 0.15:
                word += _PUNCT[int(rng.integers(len(_PUNCT)))]
            if len(line) + 1 + len(word) > 72:
                lines.append(line)
                total += len(line) + 1
                line = word
            else:
                line = f"{line} {word}" if line else word
    lines.append(line)
    return "\n".join(lines).encode("utf-8")[:size]


def synthetic_text(kind: str, size: int, seed: int = 0) -> bytes:
    """Deterministic stand-in text of ``size`` bytes.

    ``english`` and ``czech`` are word-level samples from a bundled English
    word-frequency list (the Czech variant adds diacritics, digits and extra
    symbols); ``protein`` draws residues i.i.d. with proteome frequencies;
    ``dna`` is uniform over ACGT.
    """
    rng = np.random.default_rng(seed)
    if kind == "english":
        return _prose(size, rng, czech=False)
    if kind == "czech":
        return _prose(size, rng, czech=True)
    if kind == "protein":
        letters = np.frombuffer("".join(PROTEIN_FREQ).encode(), np.uint8)
        freq = np.array(list(PROTEIN_FREQ.values()))
        return rng.choice(letters, size=size, p=freq / freq.sum()).tobytes()
    if kind == "dna":
        return np.frombuffer(b"ACGT", np.uint8)[rng.integers(0, 4, size=size)].tobytes()
    raise ValueError(f"unknown text kind {kind!r}")


def synthetic_corpus(kind: str, size: int, seed: int = 0) -> Corpus:
    return Corpus(f"synthetic-{kind}", synthetic_text(kind, size, seed))


def concatenate_copies(text, copies: int = 5) -> bytes:
    """The five-fold concatenation used to lengthen the Dostoevsky corpus."""
    return as_bytes(text) * copies
