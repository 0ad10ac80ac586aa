"""Smoke tests for the python bindings: a thin pass over each exposed surface."""

import math

import pytest

import jctriangle as jc


def balanced_ring():
    m = jc.ModelParams()
    m.omega, m.delta = 1.0, 50.0
    m.g1 = m.g2 = m.g3 = 0.3
    m.j1 = m.j2 = m.j3 = 0.01
    m.theta = math.pi / 6
    m.gamma = math.sqrt(3) * 0.01
    return m


def test_version_and_presets():
    assert jc.__version__ == "0.1.0"
    names = jc.preset_names()
    assert "fig2" in names and len(names) == 8


def test_model_and_spectrum():
    m = balanced_ring()
    assert jc.validate(m) == []
    w = jc.renormalized_frequencies(m)
    assert w[0] == pytest.approx(1.0 - 0.09 / 50.0)

    eigs = jc.cardano_eigenvalues(m)
    spread = max(abs(a - b) for a in eigs for b in eigs)
    assert spread < 1e-6  # triple coalescence

    s = jc.numeric_eigensystem(jc.effective_matrix(m))
    assert s.max_residual < 1e-6  # conditioning degrades at the coalescence
    assert s.defectiveness < 1e-6  # nearly defective there, by construction


def test_critical_point_formulas():
    m = balanced_ring()
    cp = jc.critical_3el(m)
    assert cp.theta == pytest.approx(math.pi / 6, abs=1e-12)
    assert cp.gamma == pytest.approx(math.sqrt(3) * 0.01, abs=1e-12)
    assert jc.gamma_2c(m.j1, m.j3, cp.theta) == pytest.approx(cp.gamma, abs=1e-12)

    detuned = jc.critical_3el(0.1, 0.3, 20.0, 0.01, 0.01)
    assert detuned.theta == pytest.approx(0.6642273212919623, abs=1e-12)
    assert detuned.gamma == pytest.approx(0.01747378989610821, abs=1e-12)

    assert jc.classify(m).kind == "ep3"


def test_fidelity_and_echo():
    m = balanced_ring()
    f = jc.fidelity(m, 0.005, 5e-5)
    assert all(0.0 <= v <= 1.0 for v in f)

    times = jc.linear_times(200.0, 64)
    before = balanced_ring()
    before.gamma = 0.006  # away from the coalescence: frames stay invertible
    quenched = balanced_ring()
    quenched.gamma = 0.018
    series = jc.loschmidt_echo(before, quenched, 1, times)
    assert series.values[0] == pytest.approx(1.0, abs=1e-10)
    assert all(0.0 <= v <= 1.0 + 1e-12 for v in series.values)


def test_run_writes_tables(tmp_path):
    files = jc.run("classify", preset="fig2", out_dir=str(tmp_path))
    assert sorted(p.split("/")[-1] for p in files) == ["classify.csv", "classify.json"]
    text = (tmp_path / "classify.csv").read_text()
    assert text.startswith("#")
    assert "kind" in text


def test_errors_surface_as_python_exceptions():
    with pytest.raises(jc.OutOfReachError):
        jc.critical_3el(0.5, 0.1, 10.0, 0.01, 0.001)
    with pytest.raises(jc.ConfigError):
        jc.run("slice", preset="no_such_preset")
