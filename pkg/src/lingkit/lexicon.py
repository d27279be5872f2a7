"""Word-difficulty lookup tables: age-of-acquisition norms and Zipf frequencies.

The toolkit consumes these resources as two-column TSV files
(``word<TAB>score``) because the originally published spreadsheets are
licensed and cannot be bundled; see the README for conversion notes. All
word-difficulty features stay computable without lexicons and evaluate to
0 for every unknown (or missing) entry.
"""

from __future__ import annotations

import logging
import math
import os
from dataclasses import dataclass, field
from pathlib import Path

from .errors import LexiconError

logger = logging.getLogger(__name__)

KUPERMAN_AOA = "kuperman_aoa"
BRYSBAERT_AOA = "brysbaert_aoa"
SUBTLEX_US_ZIPF = "subtlex_us_zipf"

LEXICON_KINDS = (KUPERMAN_AOA, BRYSBAERT_AOA, SUBTLEX_US_ZIPF)

# Conventional file names probed inside LINGKIT_LEXICON_DIR.
DEFAULT_FILENAMES = {
    KUPERMAN_AOA: "kuperman_aoa.tsv",
    BRYSBAERT_AOA: "brysbaert_aoa.tsv",
    SUBTLEX_US_ZIPF: "subtlex_us_zipf.tsv",
}

# Zipf values live on a bounded log scale; AoA ratings are ages in years.
_ZIPF_MAX = 8.5


@dataclass(frozen=True)
class Lexicon:
    """Immutable word→score table keyed by lowercased word."""

    kind: str
    entries: dict[str, float]
    source_id: str = ""

    def lookup(self, lemma: str) -> float | None:
        """Score for the lowercased lemma, or None if out of vocabulary."""
        return self.entries.get(lemma.lower())

    def __len__(self) -> int:
        return len(self.entries)


def _validate_score(kind: str, score: float, line_number: int) -> None:
    if not math.isfinite(score):
        raise LexiconError("score must be finite", line_number)
    if kind in (KUPERMAN_AOA, BRYSBAERT_AOA) and score <= 0:
        raise LexiconError("age-of-acquisition scores must be positive", line_number)
    if kind == SUBTLEX_US_ZIPF and not 0 <= score <= _ZIPF_MAX:
        raise LexiconError(f"Zipf scores must lie in [0, {_ZIPF_MAX}]", line_number)


def load_lexicon(path: str | Path, kind: str) -> Lexicon:
    """Load a two-column TSV lexicon; later duplicates win, words are lowercased."""
    if kind not in LEXICON_KINDS:
        raise ValueError(f"unknown lexicon kind {kind!r}")
    path = Path(path)
    entries: dict[str, float] = {}
    with open(path, encoding="utf-8") as handle:
        for line_number, raw in enumerate(handle, start=1):
            line = raw.rstrip("\n").rstrip("\r")
            if not line.strip() or line.startswith("#"):
                continue
            columns = line.split("\t")
            if len(columns) != 2:
                raise LexiconError(
                    f"expected 2 tab-separated columns, got {len(columns)}", line_number
                )
            word = columns[0].strip().lower()
            if not word or any(c.isspace() for c in word):
                raise LexiconError(f"invalid word {columns[0]!r}", line_number)
            try:
                score = float(columns[1])
            except ValueError:
                raise LexiconError(f"unparseable score {columns[1]!r}", line_number) from None
            _validate_score(kind, score, line_number)
            entries[word] = score
    return Lexicon(kind=kind, entries=entries, source_id=str(path))


@dataclass(frozen=True)
class LexiconSet:
    """The (optional) trio of lexicons behind the word-difficulty features."""

    kuperman: Lexicon | None = None
    brysbaert: Lexicon | None = None
    zipf: Lexicon | None = None

    def missing_kinds(self) -> tuple[str, ...]:
        missing = []
        if self.kuperman is None:
            missing.append(KUPERMAN_AOA)
        if self.brysbaert is None:
            missing.append(BRYSBAERT_AOA)
        if self.zipf is None:
            missing.append(SUBTLEX_US_ZIPF)
        return tuple(missing)

    @classmethod
    def from_paths(
        cls,
        kuperman: str | Path | None = None,
        brysbaert: str | Path | None = None,
        zipf: str | Path | None = None,
        default_dir: str | Path | None = None,
    ) -> "LexiconSet":
        """Load explicitly given lexicon files, probing ``default_dir`` for the rest.

        Explicit paths must exist; conventional files under ``default_dir``
        (see :data:`DEFAULT_FILENAMES`) are picked up only when present.
        ``default_dir`` defaults to the LINGKIT_LEXICON_DIR environment
        variable.
        """
        if default_dir is None:
            default_dir = os.environ.get("LINGKIT_LEXICON_DIR")
        chosen: dict[str, Path | None] = {
            KUPERMAN_AOA: Path(kuperman) if kuperman else None,
            BRYSBAERT_AOA: Path(brysbaert) if brysbaert else None,
            SUBTLEX_US_ZIPF: Path(zipf) if zipf else None,
        }
        if default_dir is not None:
            for kind, name in DEFAULT_FILENAMES.items():
                candidate = Path(default_dir) / name
                if chosen[kind] is None and candidate.is_file():
                    chosen[kind] = candidate
        loaded = {
            kind: load_lexicon(path, kind) if path is not None else None
            for kind, path in chosen.items()
        }
        return cls(
            kuperman=loaded[KUPERMAN_AOA],
            brysbaert=loaded[BRYSBAERT_AOA],
            zipf=loaded[SUBTLEX_US_ZIPF],
        )
