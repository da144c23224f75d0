import json
import math
import os
import subprocess

import numpy as np
import pytest

import kronx


def test_su2_matches_cli():
    m = kronx.su2(3)
    assert m == {"field": "sqrt_rational", "order": 4,
                 "terms": [[1, 2, 1, 3, 1], [2, 3, 1, 4, 1], [3, 4, 1, 3, 1]]}
    code, out, _ = kronx.run(["su2", "--twoj", "3"])
    assert code == 0
    assert json.loads(out) == m


def test_cg_matrix_two_spin_halves():
    s = np.array(kronx.to_dense(kronx.cg_matrix(1, 1)))
    h = math.sqrt(0.5)
    want = np.array([[1, 0, 0, 0], [0, h, 0, h], [0, h, 0, -h], [0, 0, 1, 0]])
    assert np.allclose(s, want, atol=1e-15)
    assert np.allclose(s.T @ s, np.eye(4))


def test_cg_coefficient():
    assert kronx.cg_coefficient(2, 2, 1, -1, 1, 1)[:3] == (1, 2, 3)
    assert kronx.cg_coefficient(2, 0, 1, 1, 1, 1)[:3] == (-1, 1, 3)
    with pytest.raises(kronx.KronxError):
        kronx.cg_coefficient(1, 3, 1, 1, 2, 2)


def test_kron_against_numpy():
    a = kronx.su2(1, "j3")
    b = kronx.su2(2, "jplus")
    k = kronx.kron(a, b)
    assert k["field"] == "sqrt_rational"
    assert np.allclose(kronx.to_dense(k), np.kron(kronx.to_dense(a), kronx.to_dense(b)))


def test_heisenberg_spectrum():
    h = kronx.heisenberg(4)
    got = kronx.eigenvalues(h)
    want = np.linalg.eigvalsh(np.array(kronx.to_dense(h)))
    assert np.allclose(got, want, atol=1e-9)
    assert kronx.eigenvalues(kronx.heisenberg(2)) == pytest.approx([-1, -1, -1, 3])


def test_jc_unitary_below_cutoff():
    u = np.array(kronx.to_dense(kronx.jc_evolution(1.0, 4, 0.7)))
    keep = [i for i in range(u.shape[0]) if i != 4]
    w = u[np.ix_(keep, keep)]
    assert np.allclose(w @ w.conj().T, np.eye(len(keep)), atol=1e-12)


def test_verify_suite():
    assert "intertwining" in kronx.suite_names()
    checks = kronx.verify("intertwining", max_twoj=3)
    assert checks and all(ok for _, _, ok in checks)


def test_cli_exit_codes():
    assert kronx.run(["su2", "--twoj", "1", "--nope"])[0] == 64
    assert kronx.run(["su2", "--twoj", "x"])[0] == 2


@pytest.mark.skipif("KRONX_BIN" not in os.environ, reason="needs the kronx executable")
def test_binary_round_trip(tmp_path):
    exe = os.environ["KRONX_BIN"]
    h = subprocess.run([exe, "heisenberg", "--sites", "2"], check=True, capture_output=True, text=True).stdout
    path = tmp_path / "h.json"
    path.write_text(h)
    out = subprocess.run([exe, "diag", str(path)], check=True, capture_output=True, text=True).stdout
    assert out == "eigenvalue,multiplicity\n-1,3\n3,1\n"
