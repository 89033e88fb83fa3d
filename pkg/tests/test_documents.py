import json
import random
from fractions import Fraction

import pytest

from conftest import mono, rand_plain_map
from hermsos import (
    DocumentError,
    EnsembleConfig,
    GaussianRational,
    HoloMap,
    HoloPoly,
    ScaledMap,
    grams_equal,
    norm_form,
    parse_form_document,
    parse_map_document,
    random_map,
    reduce_minimal,
    serialize_form_document,
    serialize_map_document,
    solve_h,
)


def test_map_document_round_trip_plain():
    rng = random.Random(4001)
    for _ in range(8):
        n = rng.choice((1, 2, 3))
        f = rand_plain_map(rng, n, rng.randint(1, 3))
        doc = serialize_map_document(f)
        assert parse_map_document(doc) == f
        # documents survive JSON text round trips byte-exactly
        assert parse_map_document(json.loads(json.dumps(doc))) == f


def test_map_document_round_trip_scaled():
    f = HoloMap(2, [HoloPoly.variable(2, 0)])
    h = solve_h(f, 1, 1)
    doc = serialize_map_document(h)
    assert any("scale" in comp for comp in doc["components"])
    back = parse_map_document(doc)
    assert isinstance(back, ScaledMap)
    assert grams_equal(back, h)
    assert back.components == h.components


def test_map_document_rational_strings():
    doc = {
        "n": 1,
        "components": [[{"exp": [2], "re": "3/4", "im": "-1/2"}]],
    }
    f = parse_map_document(doc)
    assert f.components[0].terms[mono(2)] == GaussianRational(
        Fraction(3, 4), Fraction(-1, 2)
    )


def test_map_document_rejections():
    with pytest.raises(DocumentError):
        parse_map_document([])
    with pytest.raises(DocumentError):
        parse_map_document({"n": 0, "components": []})
    with pytest.raises(DocumentError):
        parse_map_document({"n": 1, "components": [[{"exp": [1], "re": 0.5}]]})
    with pytest.raises(DocumentError):
        parse_map_document({"n": 1, "components": [[{"exp": [1, 0], "re": 1}]]})
    with pytest.raises(DocumentError):
        parse_map_document(
            {"n": 1, "components": [[{"exp": [1], "re": 1}, {"exp": [1], "re": 2}]]}
        )
    with pytest.raises(DocumentError):
        parse_map_document({"n": 1, "components": [[{"exp": [1], "re": "1/0"}]]})
    with pytest.raises(DocumentError):
        parse_map_document({"n": 1, "components": [[{"exp": [1], "re": 1, "x": 2}]]})
    with pytest.raises(DocumentError):
        parse_map_document({"n": 1, "components": [{"scale": 0, "terms": []}]})
    with pytest.raises(DocumentError):
        parse_map_document({"n": 1, "stuff": []})


def test_form_document_round_trip():
    rng = random.Random(4002)
    for _ in range(6):
        n = rng.choice((1, 2))
        a = norm_form(rand_plain_map(rng, n, 2))
        doc = serialize_form_document(a)
        assert parse_form_document(doc) == a


def test_form_document_bare_rational_entries():
    doc = {
        "n": 1,
        "basis": [[1], [2]],
        "gram": [[2, {"im": "1/2"}], [{"im": "-1/2"}, "3/4"]],
    }
    a = parse_form_document(doc)
    entries = dict(((ma.exponents, mb.exponents), v) for ma, mb, v in a.entries())
    assert entries[(1,), (1,)] == GaussianRational(2, 0)
    assert entries[(2,), (2,)] == GaussianRational(Fraction(3, 4), 0)
    assert entries[(1,), (2,)] == GaussianRational(0, Fraction(1, 2))
    with pytest.raises(DocumentError):
        parse_form_document({"n": 1, "basis": [[0]], "gram": [[0.5]]})


def test_form_document_rejections():
    with pytest.raises(DocumentError):
        parse_form_document({"n": 1, "basis": [[0]], "gram": [[{"re": 1}], [{"re": 1}]]})
    with pytest.raises(DocumentError):
        # not Hermitian
        parse_form_document(
            {
                "n": 1,
                "basis": [[0], [1]],
                "gram": [
                    [{"re": 1}, {"re": 0, "im": 1}],
                    [{"re": 0, "im": 1}, {"re": 1}],
                ],
            }
        )
    with pytest.raises(DocumentError):
        parse_form_document({"n": 1, "basis": [[0, 0]], "gram": [[{"re": 1}]]})
    with pytest.raises(DocumentError):
        parse_form_document({"n": 1, "basis": [[0]], "gram": [[{"re": True}]]})


def test_ensemble_config_validation():
    cfg = EnsembleConfig(n=2, d_max=2, degree_max=2, count=0, seed=1)
    assert cfg.coefficient_height == 5
    with pytest.raises(ValueError):
        EnsembleConfig(n=0, d_max=1, degree_max=1, count=1, seed=1)
    with pytest.raises(ValueError):
        EnsembleConfig(n=1, d_max=1, degree_max=1, count=-1, seed=1)
    with pytest.raises(ValueError):
        EnsembleConfig(n=1, d_max=1, degree_max=1, count=1, seed=2**64)
    with pytest.raises(ValueError):
        EnsembleConfig(n=1, d_max=1, degree_max=1, count=1, seed=-1)


def test_random_map_minimal_and_reproducible():
    for seed in (1, 7, 99):
        f1 = random_map(random.Random(seed), 2, 2, 2, 4)
        f2 = random_map(random.Random(seed), 2, 2, 2, 4)
        assert f1 == f2
        assert f1.vanishes_at_zero
        assert reduce_minimal(f1)[1] == 2
    g = random_map(random.Random(5), 3, 3, 2, 3)
    assert reduce_minimal(g)[1] == 3
