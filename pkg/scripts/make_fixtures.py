"""Regenerate the small benchmark fixtures shipped in blockmatch/data/fixtures."""
from blockmatch.corpus import fixture_path, synthetic_text

SIZE = 60_000
ALPHABET = {"english": 63, "czech": 117, "protein": 19, "dna": 4}


def main():
    for seed, (kind, sigma) in enumerate(ALPHABET.items(), start=1):
        text = synthetic_text(kind, SIZE, seed)
        got = len(set(text))
        if got != sigma:
            raise SystemExit(f"{kind}: alphabet size {got}, wanted {sigma}")
        fixture_path(kind).write_bytes(text)
        print(f"{kind}: {len(text)} bytes, |alphabet| = {got}")


if __name__ == "__main__":
    main()
