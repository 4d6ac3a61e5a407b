import math

import pytest

import htp


def test_basis_generation():
    basis = htp.Basis.generate(3, min_modulus=3)
    assert basis.moduli == [3, 5, 7]
    assert basis.capacity == 105
    assert len(basis) == 3


def test_basis_json_round_trip():
    basis = htp.Basis.generate(8)
    loaded = htp.Basis.from_json(basis.to_json())
    assert loaded.moduli == basis.moduli
    assert loaded.capacity == basis.capacity


def test_token_round_trip():
    codec = htp.Codec(dim=512)
    assert codec.reversible
    for token in ["hello", "héllo", "中文词", "🙂🚀", "Ω"]:
        vec = codec.encode(token)
        assert len(vec) == 512
        decoded, capacity_limited = codec.decode(vec)
        assert decoded == token
        assert not capacity_limited


def test_token_integer_round_trip():
    codec = htp.Codec(dim=64, l_max=2)
    n = codec.token_to_integer("AB")
    assert n == 65 * 65536 + 66
    assert codec.integer_to_token(n) == "AB"


def test_errors_surface_as_htp_error():
    codec = htp.Codec(dim=64, l_max=4)
    with pytest.raises(htp.HtpError):
        codec.encode("waytoolongforfourunits")
    with pytest.raises(htp.HtpError):
        codec.encode("")


def test_sentence_similarity():
    enc = htp.SentenceEncoder(scheme="uniform", dim=128)
    assert enc.similarity("a man plays guitar", "a man plays guitar") == pytest.approx(1.0)
    vec = enc.embed("a man plays guitar")
    assert len(vec) == 128
    assert math.isclose(sum(c * c for c in vec), 1.0, rel_tol=1e-9)


def test_stopword_scheme():
    enc = htp.SentenceEncoder(scheme="stopword", dim=64)
    filtered = htp.SentenceEncoder(scheme="uniform", dim=64)
    assert enc.embed("the quick fox") == filtered.embed("quick fox")


def test_tfidf_needs_corpus():
    with pytest.raises(ValueError):
        htp.SentenceEncoder(scheme="tfidf", dim=64)
    corpus = ["a man plays guitar", "a woman sings a song", "dogs run fast"]
    enc = htp.SentenceEncoder(scheme="tfidf", dim=64, corpus=corpus)
    score = enc.similarity("a man plays guitar", "a woman sings a song")
    assert -1.0 <= score <= 1.0


def test_correlations():
    assert htp.spearman([1, 2, 3], [3, 1, 2]) == pytest.approx(-0.5)
    assert htp.pearson([1, 2, 3], [1, 2, 4]) == pytest.approx(0.9819805060619659)
    assert htp.cosine_similarity([1.0, 0.0], [0.0, 1.0]) == 0.0


def test_evaluate_records():
    pairs = [
        ("a man plays guitar", "a man plays a guitar", 4.8),
        ("a cat sleeps", "the dog barks loudly", 0.5),
        ("children play outside", "kids are playing in the park", 4.0),
        ("the train is late", "my flight was on time", 1.0),
    ]
    report = htp.evaluate(pairs, scheme="tfidf", dim=64)
    assert report["n_pairs"] == 4
    assert -1.0 <= report["rho"] <= 1.0
    assert len(report["predictions"]) == 4
    assert report["config_fingerprint"]
    # same inputs, same scores, bit for bit
    again = htp.evaluate(pairs, scheme="tfidf", dim=64, threads=2)
    assert report["predictions"] == again["predictions"]
    assert report["rho"] == again["rho"]
