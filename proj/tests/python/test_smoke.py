import json

import pytest

pyleg = pytest.importorskip("pyleg")


def test_invariants():
    inv = pyleg.invariants("T23")
    assert inv["tb"] == 1
    assert inv["determinant"] == 3
    assert pyleg.normalize("l1  r1") == "l1 r1"


def test_classes():
    assert pyleg.class_count("l1 r1", 1) == 2
    assert pyleg.class_count("l1 r1", 0) == 1
    assert len(pyleg.aforms("T23")) == pyleg.class_count("T23", 0) == 5


def test_fill_and_verify():
    cert = pyleg.fill("T23", 0, [1])
    ok, frame, rule, reason = pyleg.verify(cert)
    assert ok
    bad = json.loads(cert)
    bad["tags"][0] = "bogus"
    assert not pyleg.verify(json.dumps(bad))[0]


def test_errors():
    with pytest.raises(pyleg.LegError):
        pyleg.invariants("l1 x9")
    assert pyleg.front_svg("l1 r1").startswith("<svg")
