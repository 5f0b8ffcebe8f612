#!/usr/bin/env python3
"""Build data/scdb_snapshot.csv from a justice-centered Supreme Court Database release.

The output keeps six columns (caseId, term, naturalCourt, justice, justiceName,
majority). Natural courts are relabelled "firstTerm-lastTerm" and justice codes
such as "CThomas" become surnames, so reports read naturally. Rows are sorted by
term, case and justice, which makes the file byte-stable for a given release.

Usage:
    tools/extract_snapshot.py SCDB_2017_01_justiceCentered_Citation.csv [-o data/scdb_snapshot.csv]
    tools/extract_snapshot.py SCDB_2017_01_justiceCentered_Citation.csv.zip
"""

import argparse
import csv
import io
import re
import sys
import zipfile
from collections import defaultdict
from pathlib import Path

COLUMNS = ["caseId", "term", "naturalCourt", "justice", "justiceName", "majority"]

# Database justice codes whose surname is not the trailing capitalised word.
SURNAME_OVERRIDES = {
    "SDOConnor": "O'Connor",
    "JMcReynolds": "McReynolds",
    "JFByrnes": "Byrnes",
    "WODouglas": "Douglas",
}


def surname(code: str) -> str:
    if code in SURNAME_OVERRIDES:
        return SURNAME_OVERRIDES[code]
    match = re.search(r"[A-Z][a-z].*$", code)
    return match.group(0) if match else code


def open_source(path: Path) -> io.TextIOBase:
    if path.suffix == ".zip":
        archive = zipfile.ZipFile(path)
        member = next(n for n in archive.namelist() if n.endswith(".csv"))
        return io.TextIOWrapper(archive.open(member), encoding="latin-1", newline="")
    return open(path, encoding="latin-1", newline="")


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    parser.add_argument("source", type=Path, help="justice-centered SCDB CSV (or the release zip)")
    parser.add_argument("-o", "--output", type=Path, default=Path("data/scdb_snapshot.csv"))
    parser.add_argument("--first-term", type=int, default=1946)
    parser.add_argument("--last-term", type=int, default=2016)
    args = parser.parse_args()

    rows = []
    seen = set()
    with open_source(args.source) as handle:
        reader = csv.DictReader(handle)
        missing = [c for c in COLUMNS if c not in (reader.fieldnames or [])]
        if missing:
            print(f"missing columns: {', '.join(missing)}", file=sys.stderr)
            return 2
        for rec in reader:
            term = int(rec["term"])
            if not args.first_term <= term <= args.last_term:
                continue
            key = (rec["caseId"], rec["justice"])
            if key in seen:
                continue
            seen.add(key)
            rows.append(rec)

    terms = defaultdict(list)
    for rec in rows:
        terms[rec["naturalCourt"]].append(int(rec["term"]))
    labels = {court: f"{min(t)}-{max(t)}" for court, t in terms.items()}
    if len(set(labels.values())) != len(labels):
        # Two courts with the same term span keep their database code as a suffix.
        counts = defaultdict(int)
        for label in labels.values():
            counts[label] += 1
        labels = {c: (l if counts[l] == 1 else f"{l}#{c}") for c, l in labels.items()}

    rows.sort(key=lambda r: (int(r["term"]), r["caseId"], int(r["justice"])))
    args.output.parent.mkdir(parents=True, exist_ok=True)
    with open(args.output, "w", encoding="utf-8", newline="") as out:
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(COLUMNS)
        for rec in rows:
            writer.writerow([rec["caseId"], rec["term"], labels[rec["naturalCourt"]], rec["justice"],
                             surname(rec["justiceName"]), rec["majority"]])
    print(f"wrote {len(rows)} rows, {len(labels)} natural courts to {args.output}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
