"""Generators, bundled instance data, and the expectation catalog."""

import hashlib
from importlib import resources

import pytest

from eulerizer import fixtures
from eulerizer.core import classify_surface, odd_vertices
from eulerizer.errors import BadParamsError

# Bundled instances are frozen; a silent edit would invalidate every
# downstream expectation, so their digests are pinned here.
_DATA_SHA256 = {
    "bunimovich.json": "532ef815f02af9794df9c27e8d8d48a077a3224c0884143c448cf584644bba5e",
    "ergodic_torus.json": "116d8b7b94da574446807414b70b74b4c19bc65fcc590bc4b4dea5e3a0f1e915",
}


def test_bundled_data_is_unchanged():
    for name, expected in _DATA_SHA256.items():
        blob = resources.files("eulerizer").joinpath("data", name).read_bytes()
        assert hashlib.sha256(blob).hexdigest() == expected, name


def test_catalog_expectations_hold():
    for entry in fixtures.fixture_catalog():
        g = entry.build()
        report = classify_surface(g)
        assert report.surface_type.value == entry.surface_type, entry
        assert report.euler_characteristic == entry.euler_characteristic, entry
        lengths = tuple(sorted(len(c) for c in report.boundary_cycles))
        assert lengths == tuple(sorted(entry.boundary_lengths)), entry
        assert len(odd_vertices(g)) == entry.odd_count, entry


def test_regular_degrees():
    assert {fixtures.octahedron().degree(v) for v in range(1, 7)} == {4}
    assert {fixtures.icosahedron().degree(v) for v in range(1, 13)} == {5}
    t = fixtures.torus(5, 5)
    assert {t.degree(v) for v in t.vertices} == {6}
    a = fixtures.annulus(8)
    assert {a.degree(v) for v in a.vertices} == {4}


def test_bundled_instances_shape():
    b = fixtures.bunimovich()
    assert (b.vertex_count, b.edge_count) == (18, 42)
    assert odd_vertices(b) == frozenset()
    t = fixtures.ergodic_torus()
    assert (t.vertex_count, t.edge_count) == (89, 267)
    assert odd_vertices(t) == frozenset()
    # ids are sparse on purpose; they must never be renumbered on load
    assert t.max_vertex() > t.vertex_count


def test_wheel_layout():
    w = fixtures.wheel(6)
    assert w.degree(0) == 6
    assert all(w.degree(v) == 3 for v in range(1, 7))
    assert w.has_edge(6, 1)


def test_half_wheel_is_a_fan():
    h = fixtures.half_wheel(4)
    assert h.degree(0) == 5
    assert not h.has_edge(1, 5)


def test_generator_param_validation():
    with pytest.raises(BadParamsError):
        fixtures.wheel(3)
    with pytest.raises(BadParamsError):
        fixtures.half_wheel(1)
    with pytest.raises(BadParamsError):
        fixtures.torus(3, 5)
    with pytest.raises(BadParamsError):
        fixtures.annulus(3)


def test_generate_dispatch():
    assert fixtures.generate("wheel", 6) == fixtures.wheel(6)
    assert fixtures.generate("torus", 5, 5) == fixtures.torus(5, 5)
    with pytest.raises(BadParamsError) as err:
        fixtures.generate("moebius")
    assert "octahedron" in err.value.payload["known"]
    with pytest.raises(BadParamsError):
        fixtures.generate("wheel")


def test_random_refined_is_deterministic():
    a = fixtures.random_refined(fixtures.octahedron(), 10, seed=5)
    b = fixtures.random_refined(fixtures.octahedron(), 10, seed=5)
    c = fixtures.random_refined(fixtures.octahedron(), 10, seed=6)
    assert a == b
    assert a != c
    assert a.vertex_count == 16
    assert fixtures.random_refined(fixtures.octahedron(), 0, seed=1) == fixtures.octahedron()
    with pytest.raises(BadParamsError):
        fixtures.random_refined(fixtures.octahedron(), -1)


def test_generate_random_refined_by_name():
    g = fixtures.generate("random_refined", "icosahedron", 4, seed=2)
    assert g.vertex_count == 16
    report = classify_surface(g)
    assert report.surface_type.value == "Closed2Graph"
