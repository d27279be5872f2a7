"""Derivation feature computation: 155 arithmetic combinations of foundations.

Every division goes through :func:`safe_ratio`, so all derivations stay
finite on degenerate documents (empty text, single-word vocabularies).
Readability formulas may legitimately go negative; everything else is
nonnegative.
"""

from __future__ import annotations

import math
from typing import NamedTuple

from .catalog import AVERAGE_RATIOS, VARIATION_INPUTS


class ReadingSpeeds(NamedTuple):
    """Words-per-minute assumptions behind the reading-time features."""

    fast: float = 250.0
    average: float = 200.0
    slow: float = 150.0


DEFAULT_READING_SPEEDS = ReadingSpeeds()


def safe_ratio(numerator: float, denominator: float) -> float:
    """numerator/denominator, with 0 for a zero denominator."""
    if denominator == 0:
        return 0.0
    return numerator / denominator


def compute_averages(foundations: dict[str, float]) -> dict[str, float]:
    """All 85 per-word and per-sentence averages. Requires complete foundations."""
    return {
        key: safe_ratio(foundations[num], foundations[den])
        for key, (num, den) in AVERAGE_RATIOS.items()
    }


def variation_value(kind: str, unique: float, total: float) -> float:
    """One lexical-variation figure: unique count over a (scaled) total."""
    if kind == "simp":
        return safe_ratio(unique, total)
    if kind == "root":
        return safe_ratio(unique, math.sqrt(total))
    if kind == "corr":
        return safe_ratio(unique, math.sqrt(2.0 * total))
    raise ValueError(f"unknown variation kind {kind!r}")


def compute_lexical_variation(foundations: dict[str, float]) -> dict[str, float]:
    """Simple/root/corrected variation for every POS category (51 values)."""
    return {
        key: variation_value(kind, foundations[unique], foundations[total])
        for key, (kind, unique, total) in VARIATION_INPUTS.items()
    }


def _ttr_five(unique: float, total: float) -> tuple[float, float, float, float, float]:
    simp = safe_ratio(unique, total)
    root = safe_ratio(unique, math.sqrt(total))
    corr = safe_ratio(unique, math.sqrt(2.0 * total))
    if total <= 1 or unique < 1:
        # log-degenerate sizes: pinned to 0 rather than ±inf/nan
        return simp, root, corr, 0.0, 0.0
    bilog = math.log(unique) / math.log(total)
    uber = 0.0 if unique == total else math.log(total) ** 2 / (math.log(total) - math.log(unique))
    return simp, root, corr, bilog, uber


def compute_ttr(t_word: float, t_uword: float, t_uword_surface: float) -> dict[str, float]:
    """The 10 type-token ratios: lemma-based and surface-form (_no_lem) variants."""
    values: dict[str, float] = {}
    for suffix, unique in (("", t_uword), ("_no_lem", t_uword_surface)):
        simp, root, corr, bilog, uber = _ttr_five(unique, t_word)
        values[f"simp_ttr{suffix}"] = simp
        values[f"root_ttr{suffix}"] = root
        values[f"corr_ttr{suffix}"] = corr
        values[f"bilog_ttr{suffix}"] = bilog
        values[f"uber_ttr{suffix}"] = uber
    return values


def compute_readformulas(foundations: dict[str, float]) -> dict[str, float]:
    """The six classic readability formulas at their standard coefficients."""
    words = foundations["t_word"]
    sents = foundations["t_sent"]
    sylls = foundations["t_syll"]
    chars = foundations["t_char"]
    poly = foundations["t_syll3"]
    words_per_sent = safe_ratio(words, sents)
    sylls_per_word = safe_ratio(sylls, words)
    chars_per_word = safe_ratio(chars, words)
    return {
        "fkre": 206.835 - 1.015 * words_per_sent - 84.6 * sylls_per_word,
        "fkgl": 0.39 * words_per_sent + 11.8 * sylls_per_word - 15.59,
        "fogi": 0.4 * (words_per_sent + 100.0 * safe_ratio(poly, words)),
        "smog": 1.0430 * math.sqrt(30.0 * safe_ratio(poly, sents)) + 3.1291,
        "cole": 0.0588 * 100.0 * chars_per_word - 0.296 * 100.0 * safe_ratio(sents, words) - 15.8,
        "auto": 4.71 * chars_per_word + 0.5 * words_per_sent - 21.43,
    }


def compute_readtime(
    foundations: dict[str, float],
    speeds: ReadingSpeeds = DEFAULT_READING_SPEEDS,
) -> dict[str, float]:
    """Estimated reading times in seconds for fast/average/slow readers."""
    for wpm in speeds:
        if not wpm > 0:
            raise ValueError("reading speeds must be positive words per minute")
    words = foundations["t_word"]
    return {
        "rt_fast": words / speeds.fast * 60.0,
        "rt_average": words / speeds.average * 60.0,
        "rt_slow": words / speeds.slow * 60.0,
    }
