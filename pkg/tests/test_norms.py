"""Unitarily invariant norms and the numerical radius."""

import math

import numpy as np
import pytest

from sectormeans import (
    PreconditionError,
    gen_pd,
    gen_unitary,
    numerical_radius,
    op_norm,
    ui_norm,
)


def random_complex(n, seed):
    rng = np.random.default_rng(seed)
    return rng.normal(size=(n, n)) + 1j * rng.normal(size=(n, n))


def test_norm_examples_diag():
    A = np.diag([1.0, -2.0])
    assert ui_norm(A, "trace") == pytest.approx(3.0, abs=1e-12)
    assert ui_norm(A, "operator") == pytest.approx(2.0, abs=1e-12)
    assert ui_norm(A, "frobenius") == pytest.approx(math.sqrt(5.0), abs=1e-12)


def test_unitary_operator_norm_is_one():
    U = gen_unitary(5, 21)
    assert ui_norm(U, "operator") == pytest.approx(1.0, abs=1e-12)


def test_kyfan_extremes():
    A = random_complex(5, 2)
    assert ui_norm(A, "kyfan", k=1) == pytest.approx(ui_norm(A, "operator"), abs=1e-12)
    assert ui_norm(A, "kyfan", k=5) == pytest.approx(ui_norm(A, "trace"), abs=1e-12)


def test_kyfan_requires_valid_k():
    A = random_complex(3, 3)
    with pytest.raises(PreconditionError):
        ui_norm(A, "kyfan")
    with pytest.raises(PreconditionError):
        ui_norm(A, "kyfan", k=0)
    with pytest.raises(PreconditionError):
        ui_norm(A, "kyfan", k=4)


def test_unknown_norm_kind():
    with pytest.raises(PreconditionError):
        ui_norm(np.eye(2), "nuclear-ish")


@pytest.mark.parametrize("kind,k", [("operator", None), ("frobenius", None),
                                    ("trace", None), ("kyfan", 2)])
def test_unitary_invariance(kind, k):
    for seed in range(6):
        A = random_complex(4, 400 + seed)
        U, V = gen_unitary(4, 500 + seed), gen_unitary(4, 600 + seed)
        base = ui_norm(A, kind, k=k)
        moved = ui_norm(U @ A @ V, kind, k=k)
        assert abs(moved - base) <= 1e-9 * base


def test_radius_hermitian_is_spectral():
    H = gen_pd(5, 30) - 1.5 * np.eye(5)
    w = np.linalg.eigvalsh(H)
    assert numerical_radius(H) == pytest.approx(max(abs(w[0]), abs(w[-1])), abs=1e-9)


def test_radius_nilpotent_shift():
    A = np.array([[0.0, 1.0], [0.0, 0.0]])
    assert numerical_radius(A) == pytest.approx(0.5, abs=1e-10)


def test_radius_normal_two_points():
    # eigenvalues 1 and i: the numerical range is the joining segment
    A = np.diag([1.0, 1.0j])
    assert numerical_radius(A) == pytest.approx(1.0, abs=1e-9)


def test_radius_homogeneous():
    A = random_complex(4, 31)
    w = numerical_radius(A)
    lam = -2.3 + 1.1j
    assert numerical_radius(lam * A) == pytest.approx(abs(lam) * w, rel=1e-9)


def test_radius_subadditive():
    for seed in range(5):
        A, B = random_complex(4, 700 + seed), random_complex(4, 800 + seed)
        wa, wb, wab = numerical_radius(A), numerical_radius(B), numerical_radius(A + B)
        assert wab <= wa + wb + 1e-9 * max(1.0, wa + wb)


def test_radius_norm_sandwich():
    for seed in range(8):
        A = random_complex(5, 900 + seed)
        w, nrm = numerical_radius(A), op_norm(A)
        assert nrm / 2.0 - 1e-12 <= w <= nrm + 1e-12
