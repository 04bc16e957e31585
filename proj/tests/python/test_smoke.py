import json

import pytest

import formacheck as fc


def test_sphere_pipeline():
    s2 = fc.corpus.even_sphere(2)
    assert s2.labels == ["1", "x"]
    assert s2.degrees == [0, 2]
    assert fc.validate(s2)["ok"]
    assert [g["degree"] for g in fc.choose_generators(s2)] == [2]
    assert fc.good_objects(s2) == ["x^2"]

    model = fc.build_model(s2)
    assert model.degrees == [2, 3]
    assert model.differential_matrix(3) == [["1"]]
    assert [model.cohomology_dim(n) for n in range(6)] == [1, 0, 1, 0, 0, 0]

    q = fc.verify_quasi_iso(model, s2, 12)
    assert q["all_bijective"]
    assert q["first_failure"] is None


def test_check_certificate():
    cert = fc.check(fc.corpus.truncated_poly(2, 3))
    assert cert["verdict"]["classification"] == "FORMAL_BY_THEOREM"
    assert cert["verdict"]["condition_ii"]
    assert cert["verdict"]["exit_code"] == 0

    s2 = fc.corpus.even_sphere(2)
    wedge = fc.check(fc.corpus.wedge(s2, s2))
    assert wedge["verdict"]["discrepancy"]
    assert wedge["quasi_isomorphism"]["first_failure"] == 5

    odd = fc.check(fc.corpus.truncated_poly(3, 2))
    assert odd["verdict"]["classification"] == "HYPOTHESIS_VIOLATED"


def test_compute_E():
    e = fc.compute_E(fc.corpus.truncated_poly(2, 4))
    assert [m for m, _ in e] == ["x^2", "x^3"]
    assert fc.as_fraction(e[0][1]["x^2"]) == 1


def test_parse_roundtrip_and_errors():
    cp2 = fc.corpus.truncated_poly(2, 3)
    again = fc.parse_algebra(cp2.to_json())
    assert again.to_json() == cp2.to_json()

    doc = json.loads(cp2.to_json())
    doc["products"][0]["value"][0]["coeff"] = "1/0"
    with pytest.raises(ValueError, match="coeff"):
        fc.parse_algebra(json.dumps(doc))
    with pytest.raises(fc.InputError):
        fc.parse_algebra("{")


def test_linear_algebra_and_corollary():
    assert fc.rank([["2", "4"], ["1", "2"]]) == 1
    assert fc.kernel_basis([["1", "1", "0"]]) == [["-1", "1", "0"], ["0", "0", "1"]]
    assert fc.corollary_integer_check([2, 4]) == [True, False]
    assert fc.corollary_nonnegative_check([4, 6]) == [True, True]


def test_duality():
    rows = fc.duality_check(json.dumps({"dims": [1, 2, 1],
                                        "boundaries": {"2": [["1"], ["-1"]]}}))
    assert [r["homology_dim"] for r in rows] == [1, 1, 0]
    assert all(r["equal"] for r in rows)
