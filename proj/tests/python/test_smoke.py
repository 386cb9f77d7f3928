import json

import pytest

import normalsurf as ns


def test_figure_eight_not_split():
    tri = ns.fixtures.fig8_closed()
    v = ns.split_link_check(tri, ns.fixtures.fig8_link())
    assert v["answer"] == "NOT_SPLIT"
    assert v["searched"] == 3
    assert v["witness"] is None
    assert sorted(v["surfaces"]) == sorted(ns.fixtures.fig8_reference_solutions())


def test_equations_and_zeros():
    tri = ns.fixtures.fig8_closed()
    eqs, zeros = ns.matching_equations(tri)
    assert len(eqs) == 72 and zeros == []
    _, zeros = ns.matching_equations(tri, ns.fixtures.fig8_link())
    assert len(zeros) == 38


def test_surfaces():
    tri = ns.fixtures.fig8_closed()
    link = ns.fixtures.fig8_link()
    one, two, three = ns.fixtures.fig8_reference_solutions()
    assert ns.analyze(tri, two) == {"euler": 0, "components": 1, "closed": True, "boundary_circles": 0,
                                    "weight": ns.analyze(tri, two)["weight"]}
    assert ns.separates(tri, two, link)
    assert not ns.separates(tri, one, link)
    assert ns.analyze(tri, three)["euler"] == 0


def test_positive_control():
    v = ns.split_link_check(ns.fixtures.fig8_disconnected(), ns.fixtures.fig8_disconnected_link())
    assert v["answer"] == "SPLIT"
    assert ns.analyze(ns.fixtures.fig8_disconnected(), v["witness"])["euler"] == 2


def test_homology():
    h = ns.homology(ns.fixtures.fig8_exterior(), strict=True)
    assert h["description"] == "Z" and h["free_rank"] == 1 and h["torsion"] == []
    ext = ns.fixtures.fig8_exterior()
    free, torsion = ns.cycle_class(ext, json.dumps({"edgeCycle": [{"tet": "b1*", "edge": [1, 2]}]}))
    assert free == ["0"] and torsion == []
    with pytest.raises(ns.InputError):
        ns.homology(ns.fixtures.fig8_closed(), strict=True)


def test_json_round_trip_and_errors():
    tri = ns.fixtures.fig8_exterior()
    assert ns.Triangulation.from_json(tri.to_json()) == tri
    assert len(tri) == 10 and tri.boundary_face_count() == 2
    with pytest.raises(ns.InputError):
        ns.Triangulation.from_json('{"tetrahedra": ["A"')
    with pytest.raises(ValueError):
        ns.Link.from_json('{"components": [{"idealVertex": {"tet": "zz", "vertex": 0}}]}', tri)


def test_resource_cap():
    with pytest.raises(ns.ResourceLimitError):
        ns.fundamental_surfaces(ns.fixtures.fig8_exterior(), admissible_only=False, time_budget_ms=1)


def test_curves_2d():
    square = json.dumps({"triangles": ["L", "R"],
                         "gluings": [{"tri": "L", "face": [0, 2], "to": {"tri": "R", "verts": [0, 2]}}]})
    connected, witness = ns.connect_boundary_points(square, "L", [0, 1], "R", [0, 1])
    assert connected and witness is not None
    apart = json.dumps({"triangles": ["A", "B"], "gluings": []})
    assert ns.connect_boundary_points(apart, "A", [0, 1], "B", [0, 1]) == (False, None)


def test_haken_sum():
    a = [0, 0, 0, 0, 1, 0, 0]
    assert ns.haken_sum(a, a) == [0, 0, 0, 0, 2, 0, 0]
    with pytest.raises(ValueError):
        ns.haken_sum(a, [0, 0, 0, 0, 0, 1, 0])
