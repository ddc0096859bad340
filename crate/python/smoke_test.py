"""Smoke test for the pyskewpbw extension module.

Build first:  pip install --no-build-isolation -e crates/python
Run:          python python/smoke_test.py
"""

import json
import pathlib

import jsonschema

import pyskewpbw as sp

SCHEMA = json.loads(
    (pathlib.Path(__file__).resolve().parent.parent / "crates/core/schema/report.schema.json").read_text()
)


def checked(rep):
    jsonschema.validate(rep, SCHEMA)
    return rep


def main():
    assert "dispin" in sp.catalog_names()
    checked(sp.catalog_list())

    weyl = sp.Ring.preset("weyl")
    x, y = weyl.var(1), weyl.var(2)
    assert y * x - x * y == 1
    assert (x * y).degree == 2
    assert weyl.parse("x*y") == x * y
    assert 2 * x - x == x

    doc = sp.Document.load("@dispin")
    assert checked(doc.validate())["checks"]
    hil = checked(doc.hilbert(2))
    assert hil["values"]["dimensions"] == ["1", "3", "6"], hil["values"]
    label, rep = doc.sas_check()
    checked(rep)
    assert label == "SAS_Verified", label
    cen = checked(doc.center(1))
    assert cen["values"]["basis"] == ["1"], cen["values"]

    mem = checked(doc.member("x1", ["x1", "x2", "x3"]))
    assert all(c["status"] == "pass" for c in mem["checks"])

    try:
        sp.Ring.preset("no_such_ring")
    except sp.SkewPbwError as e:
        assert "no_such_ring" in str(e)
    else:
        raise AssertionError("unknown preset accepted")

    ore = sp.Document.load("@ore_idempotent")
    assert any(c["status"] == "fail" for c in checked(ore.idem_check())["checks"])
    print("smoke test ok")


if __name__ == "__main__":
    main()
