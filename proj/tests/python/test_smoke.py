import json
import pathlib

import pytest

import trispec

DATA = pathlib.Path(__file__).resolve().parents[2] / "data" / "catalog"


def v_model():
    return trispec.Space(["a", "b", "η"], [("a", "η"), ("b", "η")], name="V")


def test_space_basics():
    v = v_model()
    assert len(v) == 3
    assert v.closure(["η"]) == ["a", "b", "η"]
    assert v.enumerate_spcl() == [[], ["a"], ["b"], ["a", "b"], ["a", "b", "η"]]
    assert v.prime_spcl() == {"a": ["b"], "b": ["a"], "η": ["a", "b"]}
    assert trispec.discrete_space(10).count_spcl() == 1024


def test_space_errors():
    with pytest.raises(trispec.InputError, match="cycle"):
        trispec.Space(["a", "b"], [("a", "b"), ("b", "a")])
    with pytest.raises(trispec.CapExceeded):
        trispec.discrete_space(21).enumerate_spcl()
    assert issubclass(trispec.InputError, trispec.Error)


def test_lattice_and_spectrum():
    lat = trispec.from_support_data(v_model())
    assert lat.primes() == ["{a}", "{b}", "{a,b}"]
    assert lat.primes() == trispec.scan_primes(lat)
    spec = trispec.spectrum(lat)
    assert spec.points == ["{a}", "{b}", "{a,b}"]
    assert spec.witness["{a}"] == "{a,b}"
    assert spec.closure("{a,b}") == ["{a}", "{b}", "{a,b}"]
    assert trispec.supp(lat, "{a}") == ["{b}"]
    assert trispec.verify_cls(lat)["facts"] == {"radical": "5", "param": "5"}
    assert trispec.homeomorphic(spec, v_model())


def test_quotient_augment_transport():
    lat = trispec.from_support_data(v_model())
    q = trispec.quotient(lat, "{a}")
    assert q.ids == ["{a}", "{a,b}", "{a,b,η}"]
    aug = trispec.augment(lat, ["f1", "f2"])
    assert len(aug) == 7
    assert aug.join("f1", "f2") == aug.top
    assert aug.meet("f1", "f2") == aug.bottom
    assert trispec.spectrum(aug).points[-2:] == ["f1", "f2"]
    assert trispec.induced_immersion(lat, "{a}")["image"] == ["{a}", "{a,b}"]
    same = trispec.transport(lat, {i: i for i in lat.ids})
    assert same == lat
    with pytest.raises(trispec.InputError):
        trispec.augment(lat, [])


def test_explicit_pentagon():
    n5 = trispec.from_explicit(["0", "a", "b", "c", "1"],
                               [("0", "a"), ("a", "c"), ("c", "1"), ("0", "b"), ("b", "1")],
                               ["0", "a", "b", "c", "1"])
    assert n5.primes() == ["a", "b", "c"]
    assert trispec.verify_cls(n5)["passed"]
    with pytest.raises(trispec.InputError, match="not a lattice"):
        trispec.from_explicit(["x", "y", "1"], [("x", "1"), ("y", "1")], ["x", "y", "1"])


def test_reconstruction_on_all_posets():
    for space in trispec.all_posets(4):
        assert trispec.rcst_map(space)["passed"]
    assert len(trispec.all_posets(5)) == 4231
    assert len(trispec.all_posets(5, up_to_iso=True)) == 63


def test_tensor():
    v = v_model()
    assert trispec.prime_ideals(v) == ["{a}", "{b}", "{a,b}"]
    assert trispec.tensor_radical(v, "∅") == "∅"
    assert all(r["passed"] for r in trispec.verify_tensor(v))
    assert trispec.homeomorphic(trispec.balmer_spectrum(v), v)
    with pytest.raises(trispec.InputError):
        trispec.prime_ideals(trispec.augment(trispec.from_support_data(v), ["f"]))


def test_models():
    md = trispec.model(v_model(), {"a": "hypersurface", "b": "hypersurface", "η": "regular"})
    assert md.sing_locus() == ["a", "b"]
    assert md.hs_locus() == ["a", "b"]
    assert trispec.perf_immersion(md)["homeomorphism"]
    assert trispec.sg_immersion(md)["homeomorphism"]
    assert trispec.locus_prime_predicates(md, "a") == {"sb_prime": True, "sg_prime": "yes"}
    bad = trispec.model(v_model(), {"a": "ci:2", "b": "other", "η": "regular"})
    with pytest.raises(trispec.ClassificationUnavailable, match="classification unavailable"):
        trispec.sg_immersion(bad)
    assert trispec.loci_openness_check(bad)["status"] == "PASS"


def test_catalog_files():
    models = trispec.models_from_catalog((DATA / "models.json").read_text())
    assert len(models) >= 10
    for md in models:
        assert trispec.perf_immersion(md)["homeomorphism"]
    lat = trispec.lattice_from_json((DATA / "v-lattice.json").read_text())
    assert lat.origin == "classified"
    assert lat == trispec.from_support_data(v_model())
    doc = json.loads(lat.to_json())
    assert doc["schema"] == "trispec/1"
    assert trispec.lattice_from_json(lat.to_json()).to_json() == lat.to_json()


def test_grid_counts():
    assert trispec.grid_space(4, 5).count_spcl() == trispec.grid_downsets_transfer(4, 5)
