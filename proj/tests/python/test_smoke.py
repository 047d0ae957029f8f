import os
import pathlib

import pytest

import qnormal

CORPUS = pathlib.Path(os.environ.get("QNORMAL_CORPUS_DIR", pathlib.Path(__file__).parents[2] / "corpus"))


def corpus(name):
    return qnormal.load(CORPUS / f"{name}.tri")


def test_load_and_properties():
    tri = corpus("lst_2")
    assert len(tri) == 2
    assert tri.orientable
    assert not tri.closed
    assert tri.vertex_count == 1
    assert qnormal.parse(tri.to_text()).to_text() == tri.to_text()


def test_parse_errors():
    with pytest.raises(qnormal.ParseError):
        qnormal.parse("tets x\n")
    with pytest.raises(ValueError):
        qnormal.parse("tets 1\nglue 0 0 0 0 0123\n")


def test_matching_rows():
    rows = qnormal.matching_rows(corpus("lst_2"))
    assert len(rows) == 1
    assert sorted(abs(x) for x in rows[0]) == [0, 1, 1, 1, 1, 2]
    assert all(len(r) == 14 for r in qnormal.matching_rows(corpus("lst_2"), "standard"))


def test_enumeration_agrees_with_oracle():
    tri = corpus("lst_3")
    for coords in ("quad", "standard"):
        dd = qnormal.enumerate(tri, coords)
        assert dd == qnormal.enumerate(tri, coords, filter=False)
        assert dd == qnormal.enumerate_bruteforce(tri, coords)
        assert all(qnormal.is_admissible(tri, v, coords) for v in dd)


def test_resource_limit():
    with pytest.raises(qnormal.ResourceLimitError):
        qnormal.enumerate(corpus("trefoil_complement"), "standard", max_rays=3)


def test_meridian_disc():
    tri = corpus("lst_1")
    std = qnormal.quad_to_standard(tri, [0, 0, 1])
    assert std == [1, 1, 0, 0, 0, 0, 1]
    inv = qnormal.invariants(tri, std)
    assert inv["components"][0]["euler_characteristic"] == 1


def test_verdicts():
    assert qnormal.recognize(corpus("lst_3"), oracle=True)["verdict"] == "DISC_FOUND"
    assert qnormal.recognize(corpus("trefoil_complement"))["verdict"] == "NO_DISC"
    assert qnormal.recognize(corpus("lens_3_1"))["verdict"] == "UNSUPPORTED"


def test_survey_and_cross_check():
    tri = corpus("trefoil_complement")
    assert qnormal.survey(tri, threads=1) == qnormal.survey(tri, threads=4)
    assert qnormal.cross_check(tri)["discrepancies"] == []
