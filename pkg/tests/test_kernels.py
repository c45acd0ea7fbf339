import numpy as np
import pytest

from spherica import builtin_pairs, kernels


@pytest.fixture(scope="module")
def sym4_data():
    pair = builtin_pairs.build_builtin("sym:4")
    g = pair.group
    rng = np.random.default_rng(0)
    f = rng.standard_normal(g.order) + 1j * rng.standard_normal(g.order)
    h = rng.standard_normal(g.order) + 1j * rng.standard_normal(g.order)
    return pair, g, f, h


@pytest.fixture()
def restore_backend():
    previous = kernels.active_backend()
    yield
    kernels.use_backend(previous)


def _has_numba():
    try:
        import numba  # noqa: F401
        return True
    except ImportError:
        return False


class TestBackendSelection:
    def test_numpy_forced(self, restore_backend):
        assert kernels.use_backend("numpy") == "numpy"
        assert kernels.active_backend() == "numpy"

    def test_auto(self, restore_backend):
        name = kernels.use_backend("auto")
        assert name in ("numba", "numpy")

    def test_invalid_choice(self):
        with pytest.raises(ValueError, match="SPHERICA_BACKEND"):
            kernels.use_backend("cython")

    def test_environment_selects_backend(self):
        import subprocess
        import sys

        out = subprocess.run(
            [sys.executable, "-c",
             "from spherica import kernels; print(kernels.active_backend())"],
            env={"SPHERICA_BACKEND": "numpy", "PATH": "/usr/bin:/bin"},
            capture_output=True, text=True,
        )
        assert out.stdout.strip() == "numpy"


@pytest.mark.skipif(not _has_numba(), reason="numba backend unavailable")
class TestBackendEquivalence:
    def _both(self, fn):
        kernels.use_backend("numba")
        a = fn()
        kernels.use_backend("numpy")
        b = fn()
        return a, b

    def test_cayley_table(self, sym4_data, restore_backend):
        _, g, _, _ = sym4_data
        a, b = self._both(lambda: kernels.cayley_table(g.element_labels))
        assert np.array_equal(a, b)

    def test_find_rows(self, sym4_data, restore_backend):
        _, g, _, _ = sym4_data
        queries = np.vstack([g.element_labels[5], g.element_labels[0]])
        missing = np.array([[3, 3, 3, 3]], dtype=np.int32)
        a, b = self._both(lambda: kernels.find_rows(g.element_labels, np.vstack([queries, missing])))
        assert np.array_equal(a, b)
        assert a[-1] == -1 and a[0] == 5 and a[1] == 0

    def test_convolve(self, sym4_data, restore_backend):
        _, g, f, h = sym4_data
        a, b = self._both(lambda: kernels.convolve_table(f, h, g.mul, g.inv))
        assert np.abs(a - b).max() <= 1e-13

    def test_coset_counts(self, sym4_data, restore_backend):
        pair, g, _, _ = sym4_data
        a, b = self._both(lambda: kernels.coset_counts(
            g.mul, g.inv, pair.coset_of, pair.representatives))
        assert np.array_equal(a, b)

    def test_jacobi(self, restore_backend):
        rng = np.random.default_rng(3)
        m = rng.standard_normal((9, 9)) + 1j * rng.standard_normal((9, 9))
        a, b = self._both(lambda: kernels.jacobi_singular_values(m))
        assert np.abs(a - b).max() <= 1e-12

    def test_full_pipeline_matches(self, restore_backend):
        from spherica import gelfand, verify

        results = {}
        for backend in ("numba", "numpy"):
            kernels.use_backend(backend)
            pair = builtin_pairs.build_builtin("dih:5")
            table = gelfand.compute_spherical_functions(pair)
            report = verify.run_suite(pair, table, trials=10, seed=0)
            results[backend] = (table.values.copy(), report.passed())
        assert np.allclose(results["numba"][0], results["numpy"][0], atol=1e-12)
        assert results["numba"][1] and results["numpy"][1]
