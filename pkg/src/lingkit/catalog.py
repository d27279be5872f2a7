"""The feature registry: all 220 descriptors, their taxonomy, and selection.

Descriptors are generated from family templates (17 POS tags, 18 entity
labels, ratio/variation patterns) rather than hand-written rows, so the
published feature inventory can serve as an independent test fixture. The
per-feature branch assignment is pinned in ``data/feature_branches.tsv``;
tests assert its totals per branch.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from importlib import resources
from typing import Iterable, Iterator

from .annotation import ENTITY_LABELS, UPOS_TAGS
from .errors import UnknownFeatureError

FOUNDATION = "foundation"
DERIVATION = "derivation"

GENERAL = "general"
ENGLISH_SPECIFIC = "english_specific"
APPLICABILITIES = (GENERAL, ENGLISH_SPECIFIC)

LEXICOSEMANTICS = "lexicosemantics"
SYNTAX = "syntax"
DISCOURSE = "discourse"
SURFACE = "surface"
BRANCHES = (LEXICOSEMANTICS, SYNTAX, DISCOURSE, SURFACE)

FOUNDATION_FAMILIES = ("wordsent", "worddiff", "partofspeech", "entity")
DERIVATION_FAMILIES = (
    "avgwordsent", "avgworddiff", "avgpartofspeech", "avgentity",
    "lexicalvariation", "typetokenratio", "readformula", "readtimeformula",
)
FAMILIES = FOUNDATION_FAMILIES + DERIVATION_FAMILIES

# Plural spellings used inside long feature names, per POS tag.
_TAG_NOUNS = {
    "ADJ": "adjectives",
    "ADP": "adpositions",
    "ADV": "adverbs",
    "AUX": "auxiliaries",
    "CCONJ": "coordinating_conjunctions",
    "DET": "determiners",
    "INTJ": "interjections",
    "NOUN": "nouns",
    "NUM": "numerals",
    "PART": "particles",
    "PRON": "pronouns",
    "PROPN": "proper_nouns",
    "PUNCT": "punctuations",
    "SCONJ": "subordinating_conjunctions",
    "SYM": "symbols",
    "VERB": "verbs",
    "SPACE": "spaces",
}

# Foundations that rely on English-only machinery (syllable counter, norms).
_ENGLISH_FOUNDATIONS = frozenset(
    ("t_syll", "t_syll2", "t_syll3", "t_kup", "t_bry", "t_subtlex_us_zipf")
)

# (key, long name). Note "puntuations"/"acquistion": the published names
# carry these spellings and the registry reproduces them verbatim.
_WORDSENT = (
    ("t_word", "total_number_of_words"),
    ("t_stopword", "total_number_of_stop_words"),
    ("t_punct", "total_number_of_puntuations"),
    ("t_syll", "total_number_of_syllables"),
    ("t_syll2", "total_number_of_words_more_than_two_syllables"),
    ("t_syll3", "total_number_of_words_more_than_three_syllables"),
    ("t_uword", "total_number_of_unique_words"),
    ("t_sent", "total_number_of_sentences"),
    ("t_char", "total_number_of_characters"),
)

_AVGWORDSENT = (
    ("a_word_ps", "average_number_of_words_per_sentence", "t_word", "t_sent"),
    ("a_char_ps", "average_number_of_characters_per_sentence", "t_char", "t_sent"),
    ("a_char_pw", "average_number_of_characters_per_word", "t_char", "t_word"),
    ("a_syll_ps", "average_number_of_syllables_per_sentence", "t_syll", "t_sent"),
    ("a_syll_pw", "average_number_of_syllables_per_word", "t_syll", "t_word"),
    ("a_stopword_ps", "average_number_of_stop_words_per_sentence", "t_stopword", "t_sent"),
    ("a_stopword_pw", "average_number_of_stop_words_per_word", "t_stopword", "t_word"),
)

_WORDDIFF = (
    ("t_kup", "total_kuperman_age_of_acquistion_of_words"),
    ("t_bry", "total_brysbaert_age_of_acquistion_of_words"),
    ("t_subtlex_us_zipf", "total_subtlex_us_zipf_of_words"),
)

_AVGWORDDIFF = (
    ("a_kup_pw", "average_kuperman_age_of_acquistion_of_words_per_word", "t_kup", "t_word"),
    ("a_bry_pw", "average_brysbaert_age_of_acquistion_of_words_per_word", "t_bry", "t_word"),
    ("a_kup_ps", "average_kuperman_age_of_acquistion_of_words_per_sentence", "t_kup", "t_sent"),
    ("a_bry_ps", "average_brysbaert_age_of_acquistion_of_words_per_sentence", "t_bry", "t_sent"),
    ("a_subtlex_us_zipf_pw", "average_subtlex_us_zipf_of_words_per_word", "t_subtlex_us_zipf", "t_word"),
    ("a_subtlex_us_zipf_ps", "average_subtlex_us_zipf_of_words_per_sentence", "t_subtlex_us_zipf", "t_sent"),
)

_TTR_KINDS = (
    ("simp", "simple"),
    ("root", "root"),
    ("corr", "corrected"),
    ("bilog", "bilogarithmic"),
    ("uber", "uber"),
)

_VARIATION_KINDS = (("simp", "simple"), ("root", "root"), ("corr", "corrected"))

_READFORMULAS = (
    ("fkre", "flesch_kincaid_reading_ease", ("t_word", "t_sent", "t_syll")),
    ("fkgl", "flesch_kincaid_grade_level", ("t_word", "t_sent", "t_syll")),
    ("fogi", "gunning_fog_index", ("t_word", "t_sent", "t_syll3")),
    ("smog", "smog_index", ("t_syll3", "t_sent")),
    ("cole", "coleman_liau_index", ("t_char", "t_word", "t_sent")),
    ("auto", "automated_readability_index", ("t_char", "t_word", "t_sent")),
)

_READTIMES = (
    ("rt_fast", "reading_time_for_fast_readers"),
    ("rt_average", "reading_time_for_average_readers"),
    ("rt_slow", "reading_time_for_slow_readers"),
)


def _entity_suffix(label: str | None) -> str:
    return "" if label is None else f"_{label.lower()}"


def _generate_rows() -> Iterator[tuple[str, str, str, tuple[str, ...]]]:
    """Yield (key, name, family, depends_on) for all 220 features, in inventory order."""
    for key, name in _WORDSENT:
        yield key, name, "wordsent", ()
    for key, name, num, den in _AVGWORDSENT:
        yield key, name, "avgwordsent", (num, den)
    for key, name in _WORDDIFF:
        yield key, name, "worddiff", ()
    for key, name, num, den in _AVGWORDDIFF:
        yield key, name, "avgworddiff", (num, den)

    yield "t_n_ent", "total_number_of_named_entities", "entity", ()
    for label in ENTITY_LABELS:
        yield (
            f"t_n_ent_{label.lower()}",
            f"total_number_of_named_entities_{label.lower()}",
            "entity",
            (),
        )
    for suffix, per, den in (("pw", "per_word", "t_word"), ("ps", "per_sentence", "t_sent")):
        for label in (None, *ENTITY_LABELS):
            ent = _entity_suffix(label)
            yield (
                f"a_n_ent{ent}_{suffix}",
                f"average_number_of_named_entities{ent}_{per}",
                "avgentity",
                (f"t_n_ent{ent}", den),
            )

    for prefix, word in _VARIATION_KINDS:
        for tag in UPOS_TAGS:
            low = tag.lower()
            yield (
                f"{prefix}_{low}_var",
                f"{word}_{_TAG_NOUNS[tag]}_variation",
                "lexicalvariation",
                (f"n_u{low}", f"n_{low}"),
            )

    for lemma_based in (True, False):
        for prefix, word in _TTR_KINDS:
            key = f"{prefix}_ttr" if lemma_based else f"{prefix}_ttr_no_lem"
            name = f"{word}_type_token_ratio" + ("" if lemma_based else "_no_lemma")
            # The surface-form unique count behind the _no_lem variants is a
            # byproduct of the wordsent pass, not a cataloged foundation.
            deps = ("t_uword", "t_word") if lemma_based else ("t_word",)
            yield key, name, "typetokenratio", deps

    for tag in UPOS_TAGS:
        yield f"n_{tag.lower()}", f"total_number_of_{_TAG_NOUNS[tag]}", "partofspeech", ()
    for tag in UPOS_TAGS:
        yield f"n_u{tag.lower()}", f"total_number_of_unique_{_TAG_NOUNS[tag]}", "partofspeech", ()
    for suffix, per, den in (("pw", "per_word", "t_word"), ("ps", "per_sentence", "t_sent")):
        for tag in UPOS_TAGS:
            low = tag.lower()
            yield (
                f"a_{low}_{suffix}",
                f"average_number_of_{_TAG_NOUNS[tag]}_{per}",
                "avgpartofspeech",
                (f"n_{low}", den),
            )

    for key, name, deps in _READFORMULAS:
        yield key, name, "readformula", deps
    for key, name in _READTIMES:
        yield key, name, "readtimeformula", ("t_word",)


def derive_applicability(parts: Iterable[str]) -> str:
    """Language applicability of a combination: general only if every part is."""
    parts = tuple(parts)
    if not parts:
        raise ValueError("applicability of an empty combination is undefined")
    for part in parts:
        if part not in APPLICABILITIES:
            raise ValueError(f"unknown applicability {part!r}")
    return GENERAL if all(p == GENERAL for p in parts) else ENGLISH_SPECIFIC


@dataclass(frozen=True)
class FeatureDescriptor:
    """Immutable metadata for one feature."""

    key: str
    name: str
    formulation: str
    branch: str
    family: str
    applicability: str
    depends_on: tuple[str, ...]

    def to_dict(self) -> dict:
        return {
            "key": self.key,
            "name": self.name,
            "formulation": self.formulation,
            "branch": self.branch,
            "family": self.family,
            "applicability": self.applicability,
            "depends_on": list(self.depends_on),
        }


@dataclass(frozen=True)
class SelectionFilter:
    """Conjunctive feature selection; an empty filter selects everything."""

    keys: tuple[str, ...] | None = None
    families: tuple[str, ...] | None = None
    branches: tuple[str, ...] | None = None
    applicability: str | None = None

    def __post_init__(self):
        coerce = lambda v: None if v is None else tuple(v)
        object.__setattr__(self, "keys", coerce(self.keys))
        object.__setattr__(self, "families", coerce(self.families))
        object.__setattr__(self, "branches", coerce(self.branches))


def _load_branches() -> dict[str, str]:
    text = resources.files("lingkit").joinpath("data/feature_branches.tsv").read_text("utf-8")
    branches: dict[str, str] = {}
    for line in text.splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        key, branch = line.split("\t")
        branches[key] = branch
    return branches


class FeatureRegistry:
    """All feature descriptors in inventory order, with conjunctive search."""

    def __init__(self, descriptors: Iterable[FeatureDescriptor]):
        self._descriptors = tuple(descriptors)
        self._by_key = {d.key: d for d in self._descriptors}
        if len(self._by_key) != len(self._descriptors):
            raise ValueError("feature keys must be unique")
        if len({d.name for d in self._descriptors}) != len(self._descriptors):
            raise ValueError("feature names must be unique")

    def __iter__(self) -> Iterator[FeatureDescriptor]:
        return iter(self._descriptors)

    def __len__(self) -> int:
        return len(self._descriptors)

    @property
    def descriptors(self) -> tuple[FeatureDescriptor, ...]:
        return self._descriptors

    def get(self, key: str) -> FeatureDescriptor:
        try:
            return self._by_key[key]
        except KeyError:
            raise UnknownFeatureError(f"unknown feature key {key!r}") from None

    def __contains__(self, key: str) -> bool:
        return key in self._by_key

    def search(self, selection: SelectionFilter | None = None) -> list[FeatureDescriptor]:
        """Descriptors matching every present filter dimension, in inventory order."""
        if selection is None:
            selection = SelectionFilter()
        key_set = None
        if selection.keys is not None:
            for key in selection.keys:
                if key not in self._by_key:
                    raise UnknownFeatureError(f"unknown feature key {key!r}")
            key_set = frozenset(selection.keys)
        family_set = None
        if selection.families is not None:
            for family in selection.families:
                if family not in FAMILIES:
                    raise UnknownFeatureError(f"unknown family {family!r}")
            family_set = frozenset(selection.families)
        branch_set = None
        if selection.branches is not None:
            for branch in selection.branches:
                if branch not in BRANCHES:
                    raise UnknownFeatureError(f"unknown branch {branch!r}")
            branch_set = frozenset(selection.branches)
        if selection.applicability is not None and selection.applicability not in APPLICABILITIES:
            raise UnknownFeatureError(f"unknown applicability {selection.applicability!r}")

        out = []
        for d in self._descriptors:
            if key_set is not None and d.key not in key_set:
                continue
            if family_set is not None and d.family not in family_set:
                continue
            if branch_set is not None and d.branch not in branch_set:
                continue
            if selection.applicability is not None and d.applicability != selection.applicability:
                continue
            out.append(d)
        return out

    def to_dicts(self) -> list[dict]:
        """JSON-ready registry export, one dict per descriptor."""
        return [d.to_dict() for d in self._descriptors]


def build_registry() -> FeatureRegistry:
    """Build the full 220-descriptor registry from the family templates."""
    branches = _load_branches()
    rows = list(_generate_rows())
    # Derivations may precede their foundations in inventory order, so
    # foundation applicabilities are assigned in a first pass.
    applicability = {
        key: ENGLISH_SPECIFIC if key in _ENGLISH_FOUNDATIONS else GENERAL
        for key, _, family, _ in rows
        if family in FOUNDATION_FAMILIES
    }
    descriptors = []
    for key, name, family, depends_on in rows:
        if family in FOUNDATION_FAMILIES:
            formulation = FOUNDATION
        else:
            formulation = DERIVATION
            applicability[key] = derive_applicability(applicability[d] for d in depends_on)
        if key not in branches:
            raise ValueError(f"feature {key!r} missing from the branch table")
        descriptors.append(
            FeatureDescriptor(
                key=key,
                name=name,
                formulation=formulation,
                branch=branches[key],
                family=family,
                applicability=applicability[key],
                depends_on=depends_on,
            )
        )
    extra = set(branches) - {d.key for d in descriptors}
    if extra:
        raise ValueError(f"branch table contains unknown keys {sorted(extra)}")
    return FeatureRegistry(descriptors)


@lru_cache(maxsize=1)
def default_registry() -> FeatureRegistry:
    """The shared registry instance (immutable, thread-safe)."""
    return build_registry()


# Ratio tables reused by the derivation math: key -> (numerator, denominator).
AVERAGE_RATIOS: dict[str, tuple[str, str]] = {
    key: (deps[0], deps[1])
    for key, _, family, deps in _generate_rows()
    if family in ("avgwordsent", "avgworddiff", "avgentity", "avgpartofspeech")
}

# key -> (kind, unique-count key, total-count key) for the 51 variation features.
VARIATION_INPUTS: dict[str, tuple[str, str, str]] = {
    key: (key.split("_", 1)[0], deps[0], deps[1])
    for key, _, family, deps in _generate_rows()
    if family == "lexicalvariation"
}
