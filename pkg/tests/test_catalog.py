import json
from collections import Counter

import pytest

from lingkit.catalog import (
    DERIVATION,
    ENGLISH_SPECIFIC,
    FOUNDATION,
    GENERAL,
    FeatureRegistry,
    SelectionFilter,
    build_registry,
    default_registry,
    derive_applicability,
)
from lingkit.errors import UnknownFeatureError


@pytest.fixture(scope="module")
def registry():
    return build_registry()


class TestRegistryShape:
    def test_total_size(self, registry):
        assert len(registry) == 220

    def test_formulation_split(self, registry):
        counts = Counter(d.formulation for d in registry)
        assert counts[FOUNDATION] == 65
        assert counts[DERIVATION] == 155

    def test_family_counts(self, registry):
        counts = Counter(d.family for d in registry)
        assert counts == {
            "wordsent": 9,
            "worddiff": 3,
            "partofspeech": 34,
            "entity": 19,
            "avgwordsent": 7,
            "avgworddiff": 6,
            "avgpartofspeech": 34,
            "avgentity": 38,
            "lexicalvariation": 51,
            "typetokenratio": 10,
            "readformula": 6,
            "readtimeformula": 3,
        }

    def test_branch_counts(self, registry):
        counts = Counter(d.branch for d in registry)
        assert counts == {
            "lexicosemantics": 70,
            "discourse": 57,
            "syntax": 69,
            "surface": 24,
        }

    def test_derivation_families_are_exactly_the_derived_ones(self, registry):
        derived = {
            "avgwordsent", "avgworddiff", "avgpartofspeech", "avgentity",
            "lexicalvariation", "typetokenratio", "readformula", "readtimeformula",
        }
        for d in registry:
            assert (d.formulation == DERIVATION) == (d.family in derived)
            assert (d.formulation == FOUNDATION) == (not d.depends_on)

    def test_key_name_bijection(self, registry):
        keys = [d.key for d in registry]
        names = [d.name for d in registry]
        assert len(set(keys)) == len(keys)
        assert len(set(names)) == len(names)

    def test_branch_examples(self, registry):
        assert registry.get("fkgl").branch == "surface"
        assert registry.get("n_noun").branch == "syntax"
        assert registry.get("t_n_ent").branch == "discourse"
        assert registry.get("simp_ttr").branch == "lexicosemantics"

    def test_published_spellings_kept_verbatim(self, registry):
        assert registry.get("t_punct").name == "total_number_of_puntuations"
        assert registry.get("t_kup").name == "total_kuperman_age_of_acquistion_of_words"

    def test_default_registry_cached(self):
        assert default_registry() is default_registry()


class TestApplicability:
    def test_truth_table(self):
        assert derive_applicability([GENERAL, GENERAL]) == GENERAL
        assert derive_applicability([GENERAL, ENGLISH_SPECIFIC]) == ENGLISH_SPECIFIC
        assert derive_applicability([ENGLISH_SPECIFIC, GENERAL]) == ENGLISH_SPECIFIC
        assert derive_applicability([ENGLISH_SPECIFIC, ENGLISH_SPECIFIC]) == ENGLISH_SPECIFIC

    def test_single_element(self):
        assert derive_applicability([ENGLISH_SPECIFIC]) == ENGLISH_SPECIFIC
        assert derive_applicability([GENERAL]) == GENERAL

    def test_empty_rejected(self):
        with pytest.raises(ValueError):
            derive_applicability([])

    def test_invalid_value_rejected(self):
        with pytest.raises(ValueError):
            derive_applicability(["english"])

    def test_stored_applicability_matches_rule(self, registry):
        for d in registry:
            if d.formulation == DERIVATION:
                parts = [registry.get(dep).applicability for dep in d.depends_on]
                assert d.applicability == derive_applicability(parts), d.key

    def test_syllable_and_lexicon_foundations_are_english(self, registry):
        english = {d.key for d in registry if d.applicability == ENGLISH_SPECIFIC}
        assert {"t_syll", "t_syll2", "t_syll3", "t_kup", "t_bry", "t_subtlex_us_zipf"} <= english

    def test_character_formulas_stay_general(self, registry):
        # Coleman-Liau and ARI build on characters, not syllables
        assert registry.get("cole").applicability == GENERAL
        assert registry.get("auto").applicability == GENERAL
        assert registry.get("fkgl").applicability == ENGLISH_SPECIFIC


class TestSearch:
    def test_empty_filter_selects_all(self, registry):
        assert len(registry.search()) == 220
        assert len(registry.search(SelectionFilter())) == 220

    def test_family_filter_in_inventory_order(self, registry):
        keys = [d.key for d in registry.search(SelectionFilter(families=("readtimeformula",)))]
        assert keys == ["rt_fast", "rt_average", "rt_slow"]

    def test_keys_filter_returns_inventory_order(self, registry):
        found = registry.search(SelectionFilter(keys=("fkgl", "t_word")))
        assert [d.key for d in found] == ["t_word", "fkgl"]

    def test_general_filter_excludes_fkgl(self, registry):
        general = registry.search(SelectionFilter(applicability=GENERAL))
        keys = {d.key for d in general}
        assert len(general) == 202
        assert "fkgl" not in keys and "t_word" in keys

    def test_branch_filter(self, registry):
        assert len(registry.search(SelectionFilter(branches=("discourse",)))) == 57

    def test_conjunctive_semantics(self, registry):
        found = registry.search(
            SelectionFilter(families=("wordsent",), applicability=ENGLISH_SPECIFIC)
        )
        assert [d.key for d in found] == ["t_syll", "t_syll2", "t_syll3"]

    def test_unknown_key_named_in_error(self, registry):
        with pytest.raises(UnknownFeatureError, match="t_wrod"):
            registry.search(SelectionFilter(keys=("t_wrod",)))

    def test_unknown_family_named_in_error(self, registry):
        with pytest.raises(UnknownFeatureError, match="verbs"):
            registry.search(SelectionFilter(families=("verbs",)))

    def test_unknown_branch_and_applicability_rejected(self, registry):
        with pytest.raises(UnknownFeatureError):
            registry.search(SelectionFilter(branches=("morphology",)))
        with pytest.raises(UnknownFeatureError):
            registry.search(SelectionFilter(applicability="english"))

    def test_get_unknown_key(self, registry):
        with pytest.raises(UnknownFeatureError, match="nope"):
            registry.get("nope")


class TestExport:
    def test_descriptor_dict_fields(self, registry):
        entry = registry.get("a_kup_pw").to_dict()
        assert entry == {
            "key": "a_kup_pw",
            "name": "average_kuperman_age_of_acquistion_of_words_per_word",
            "formulation": "derivation",
            "branch": "lexicosemantics",
            "family": "avgworddiff",
            "applicability": "english_specific",
            "depends_on": ["t_kup", "t_word"],
        }

    def test_registry_export_is_json_serializable(self, registry):
        payload = json.loads(json.dumps(registry.to_dicts()))
        assert len(payload) == 220
        assert payload[0]["key"] == "t_word"

    def test_duplicate_keys_rejected(self, registry):
        first = registry.descriptors[0]
        with pytest.raises(ValueError):
            FeatureRegistry([first, first])
