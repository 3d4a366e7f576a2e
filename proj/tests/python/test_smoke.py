"""Smoke tests for the pyqdw extension module."""

import json
import os
import subprocess

import pytest

import pyqdw


def test_chain_arithmetic():
    q = pyqdw.build_chain(3, "lukasiewicz")  # {0, 1/2, 1}
    assert q.size == 3
    assert q.tensor(1, 1) == 0
    assert q.hom(1, 0) == 1
    assert q.is_girard()

    g = pyqdw.build_chain(3, "minimum")
    assert g.hom(1, 0) == 0
    assert not g.is_girard()


def test_build_table_rejects_bad_tensor():
    leq = [[True, True], [False, True]]
    with pytest.raises(ValueError, match="TensorNotMonoid"):
        pyqdw.build_table(leq, [[0, 0], [0, 0]], 1)


def test_vcat_and_priestley():
    q = pyqdw.build_chain(3, "lukasiewicz")
    chain = pyqdw.VCat(q, [[2, 2], [0, 2]], labels=["p", "q"], name="chain")
    assert chain.is_valid()
    assert chain.is_separated()
    report = pyqdw.is_priestley(chain)
    assert report["priestley"] is True

    indis = pyqdw.indiscrete(q, 2)
    report = pyqdw.is_priestley(indis)
    assert report["priestley"] is False
    classes, reflected = pyqdw.reflect_pi0(indis)
    assert reflected.points == 1
    assert classes == [0, 0]


def test_dual_object_example():
    g = pyqdw.build_chain(3, "minimum")
    x = pyqdw.VCat(g, [[2, 0], [2, 2]], labels=["0", "1"])
    dual = pyqdw.dual_object(x)
    assert dual["carrier_size"] == 6
    assert all(u <= v for (u, v) in dual["carrier"])

    report = pyqdw.verify_j_iso(x)
    assert report["finsup_bijective"] is True
    assert report["is_iso"] is False  # minimum tensor: the ordered shadow fails


def test_encode_levels():
    q = pyqdw.build_chain(3, "lukasiewicz")
    sets = pyqdw.encode_levels([1, 0], q)
    assert sets == [[0, 1], [0], []]


def test_l_closure_and_completion():
    q = pyqdw.build_chain(3, "lukasiewicz")
    indis = pyqdw.indiscrete(q, 2)
    assert pyqdw.l_closure(indis, [0]) == [0, 1]
    chain = pyqdw.VCat(q, [[2, 1], [0, 2]])
    assert pyqdw.is_cauchy_complete(chain)
    completed, yoneda = pyqdw.cauchy_completion(chain)
    assert completed.points == len(set(yoneda))


def test_verify_runs_and_is_deterministic():
    a = pyqdw.verify("ordered", seed=1, max_size=2)
    b = pyqdw.verify("ordered", seed=1, max_size=2)
    assert a == b
    assert a["passed"] is True


def test_cli_round_trip(tmp_path):
    cli = os.environ.get("QDW_CLI")
    if not cli:
        pytest.skip("QDW_CLI not set")
    doc = tmp_path / "q.json"
    doc.write_text(json.dumps({
        "name": "luka2",
        "elements": ["0", "1/2", "1"],
        "order": "chain",
        "tensor": "lukasiewicz",
        "unit": 2,
    }))
    out = subprocess.run([cli, "check", str(doc), "--format", "json"],
                         capture_output=True, text=True)
    assert out.returncode == 0
    payload = json.loads(out.stdout)
    assert payload["ok"] is True
