import numpy as np
import pytest
from sklearn.base import clone
from sklearn.exceptions import NotFittedError
from sklearn.linear_model import LinearRegression
from sklearn.pipeline import make_pipeline

from lingkit.annotation import annotate_plaintext
from lingkit.errors import UnknownFeatureError
from lingkit.extractor import extract
from lingkit.transform import LinguisticFeatures

TEXTS = [
    "The dog runs. It barks.",
    "A green idea sleeps furiously under the tree.",
    "Stop! Who goes there?",
]


class TestSklearnApi:
    def test_fit_transform_shape_and_order(self):
        transformer = LinguisticFeatures(features=["fkgl", "t_word", "simp_ttr"])
        X = transformer.fit_transform(TEXTS)
        assert X.shape == (3, 3)
        # columns follow inventory order, not argument order
        assert tuple(transformer.get_feature_names_out()) == ("t_word", "simp_ttr", "fkgl")

    def test_values_match_direct_extraction(self):
        transformer = LinguisticFeatures().fit(TEXTS)
        X = transformer.transform(TEXTS)
        direct = extract(annotate_plaintext(TEXTS[0]))
        np.testing.assert_allclose(X[0], np.array(list(direct.values()), dtype=float))

    def test_accepts_annotated_documents(self):
        docs = [annotate_plaintext(t) for t in TEXTS]
        transformer = LinguisticFeatures(families=["wordsent"]).fit(docs)
        X = transformer.transform(docs)
        assert X.shape == (3, 9)

    def test_rejects_other_input_types(self):
        transformer = LinguisticFeatures().fit([])
        with pytest.raises(TypeError, match="str or AnnotatedDocument"):
            transformer.transform([42])

    def test_unfitted_transform_raises(self):
        with pytest.raises(NotFittedError):
            LinguisticFeatures().transform(TEXTS)

    def test_unknown_feature_raises_at_fit(self):
        with pytest.raises(UnknownFeatureError):
            LinguisticFeatures(features=["t_wrod"]).fit(TEXTS)

    def test_bad_language_raises_at_fit(self):
        with pytest.raises(ValueError, match="language"):
            LinguisticFeatures(language="french").fit(TEXTS)

    def test_language_general_drops_english_features(self):
        transformer = LinguisticFeatures(language="general").fit(TEXTS)
        names = set(transformer.get_feature_names_out())
        assert len(names) == 202
        assert "fkgl" not in names and "cole" in names

    def test_get_set_params_roundtrip(self):
        transformer = LinguisticFeatures(families=["readformula"], language="general")
        params = transformer.get_params()
        assert params["families"] == ["readformula"]
        transformer.set_params(language="all")
        assert transformer.language == "all"

    def test_clone_preserves_params(self):
        transformer = LinguisticFeatures(features=["fkgl"], reading_speeds=(300, 200, 100))
        cloned = clone(transformer)
        assert cloned.features == ["fkgl"]
        assert cloned.reading_speeds == (300, 200, 100)

    def test_empty_input_keeps_width(self):
        transformer = LinguisticFeatures(families=["readformula"]).fit([])
        X = transformer.transform([])
        assert X.shape == (0, 6)

    def test_reading_speed_param(self):
        transformer = LinguisticFeatures(
            features=["rt_average"], reading_speeds=(250, 50, 150)
        ).fit([])
        X = transformer.transform(["one two three four five"])
        assert X[0, 0] == 5 / 50 * 60

    def test_lexicon_paths_loaded_at_fit(self, tmp_path):
        lex = tmp_path / "kup.tsv"
        lex.write_text("dog\t4.0\n")
        transformer = LinguisticFeatures(features=["t_kup"], lexicon_kup=lex).fit([])
        X = transformer.transform(["dog dog"])
        assert X[0, 0] == 8.0

    def test_composes_in_pipeline(self):
        pipe = make_pipeline(
            LinguisticFeatures(families=["wordsent"]), LinearRegression()
        )
        y = [2.0, 4.0, 3.0]
        pipe.fit(TEXTS, y)
        predictions = pipe.predict(TEXTS)
        assert predictions.shape == (3,)
