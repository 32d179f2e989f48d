import json

import numpy as np
import pytest

from qlmps import FormatError, LocalObservable, MPSFamily, ghz_family, reduced_density_matrix
from qlmps import io
from qlmps.state import check_projectivity

from conftest import Z, crand


def test_matrix_roundtrip(rng):
    a = crand(rng, 3, 2)
    obj = io.matrix_to_json(a)
    assert obj["rows"] == 3 and obj["cols"] == 2 and len(obj["entries"]) == 6
    assert obj["entries"][1] == [a[0, 1].real, a[0, 1].imag]
    np.testing.assert_array_equal(io.matrix_from_json(json.loads(json.dumps(obj))), a)


def test_matrix_accepts_real_entries():
    np.testing.assert_array_equal(io.matrix_from_json({"rows": 1, "cols": 2, "entries": [1, [0, 2]]}), [[1, 2j]])


@pytest.mark.parametrize(
    "bad",
    [
        {"rows": 2, "cols": 2, "entries": [[1, 0]]},
        {"rows": 1, "cols": 1, "entries": [[1, 0, 0]]},
        {"rows": 1, "cols": 1, "entries": ["x"]},
        {"cols": 1, "entries": [[1, 0]]},
        [1, 2],
    ],
)
def test_matrix_malformed(bad):
    with pytest.raises(FormatError):
        io.matrix_from_json(bad)


def test_family_roundtrip(rng):
    fam = MPSFamily(tuple(crand(rng, 3, 2, 2) for _ in range(3)), "finite")
    back = io.family_from_json(json.loads(json.dumps(io.family_to_json(fam))))
    assert back.tail == "finite" and back.n_explicit == 3
    for a, b in zip(fam.sites, back.sites):
        np.testing.assert_array_equal(a, b)


def test_family_json_shape():
    obj = io.family_to_json(ghz_family())
    assert obj["d"] == 2 and obj["m"] == 2 and obj["tail"] == "repeat_last"
    assert len(obj["sites"]) == 2 and len(obj["sites"][0]["matrices"]) == 2


@pytest.mark.parametrize(
    "mutate",
    [
        lambda o: o.update(tail="cyclic"),
        lambda o: o.update(sites=[]),
        lambda o: o.update(d=3),
        lambda o: o["sites"][0]["matrices"].pop(),
        lambda o: o.pop("sites"),
    ],
)
def test_family_malformed(mutate):
    obj = io.family_to_json(ghz_family())
    mutate(obj)
    with pytest.raises(FormatError):
        io.family_from_json(obj)


def test_observable_roundtrip(rng):
    x = LocalObservable.product([crand(rng, 2, 2) for _ in range(3)])
    back = io.observable_from_json(io.observable_to_json(x))
    assert back.form == "product" and back.n_sites == 3
    np.testing.assert_array_equal(back.to_dense(), x.to_dense())
    dense = LocalObservable.dense(crand(rng, 4, 4), 2)
    back = io.observable_from_json(io.observable_to_json(dense))
    assert back.form == "dense"
    np.testing.assert_array_equal(back.matrix, dense.matrix)


@pytest.mark.parametrize(
    "obj",
    [
        {"form": "product", "n_sites": 2, "factors": [io.matrix_to_json(Z)]},
        {"form": "dense", "n_sites": 2, "matrix": io.matrix_to_json(np.eye(3))},
        {"form": "sparse", "n_sites": 1},
        {"form": "product", "n_sites": 1, "factors": []},
    ],
)
def test_observable_malformed(obj):
    with pytest.raises(FormatError):
        io.observable_from_json(obj)


def test_report_json(ghz):
    report = check_projectivity(ghz, LocalObservable.product([Z, Z]), 1)
    obj = io.report_to_json(report)
    assert set(obj) == {"condition", "pass", "tolerance", "sites", "residuals", "notes", "values"}
    assert obj["pass"] is True and obj["sites"] == [2, 3]


def test_density_json(ghz):
    obj = io.density_to_json(reduced_density_matrix(ghz, 2))
    assert obj["n_sites"] == 2 and obj["matrix"]["rows"] == 4


def test_load_json_errors(tmp_path):
    with pytest.raises(FormatError):
        io.load_json(tmp_path / "missing.json")
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    with pytest.raises(FormatError):
        io.load_json(bad)
