"""Assemble the four benchmark corpora into one directory.

Sources (give each as a URL or a local path; archives are unpacked):

  --canterbury   Canterbury "large" corpus archive; provides bible.txt and E.coli
  --protein      Protein Corpus file hs (Homo sapiens); saved as protein-hs.txt
  --dostoevsky   Project Gutenberg plain text of Dostoevsky's The Double in Czech;
                 saved as Dostoevsky-TheDouble.txt, five copies concatenated

Example:
  python scripts/fetch_corpora.py corpora/ --canterbury large.tar.gz \
      --protein hs --dostoevsky dvojnik.txt
"""
import argparse
import io
import tarfile
import urllib.request
import zipfile
from pathlib import Path

from blockmatch.corpus import concatenate_copies


def fetch(source: str) -> bytes:
    if "://" in source:
        with urllib.request.urlopen(source) as response:
            return response.read()
    return Path(source).read_bytes()


def members(blob: bytes) -> dict:
    """Files in a tar/zip archive by base name, or ``{}`` if ``blob`` is not an archive."""
    try:
        with tarfile.open(fileobj=io.BytesIO(blob)) as tar:
            return {Path(m.name).name: tar.extractfile(m).read() for m in tar if m.isfile()}
    except tarfile.ReadError:
        pass
    if zipfile.is_zipfile(io.BytesIO(blob)):
        with zipfile.ZipFile(io.BytesIO(blob)) as zf:
            return {Path(n).name: zf.read(n) for n in zf.namelist() if not n.endswith("/")}
    return {}


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("directory")
    parser.add_argument("--canterbury")
    parser.add_argument("--protein")
    parser.add_argument("--dostoevsky")
    args = parser.parse_args(argv)
    out = Path(args.directory)
    out.mkdir(parents=True, exist_ok=True)

    if args.canterbury:
        files = members(fetch(args.canterbury))
        for name in ("bible.txt", "E.coli"):
            if name not in files:
                raise SystemExit(f"{name} not found in {args.canterbury}")
        (out / "bible.txt").write_bytes(files["bible.txt"])
        (out / "E.coli.txt").write_bytes(files["E.coli"])
    if args.protein:
        blob = fetch(args.protein)
        files = members(blob)
        (out / "protein-hs.txt").write_bytes(files.get("hs", blob))
    if args.dostoevsky:
        (out / "Dostoevsky-TheDouble.txt").write_bytes(concatenate_copies(fetch(args.dostoevsky), 5))
    for path in sorted(out.glob("*.txt")):
        print(f"{path}: {path.stat().st_size} bytes, {len(set(path.read_bytes()))} distinct bytes")


if __name__ == "__main__":
    main()
