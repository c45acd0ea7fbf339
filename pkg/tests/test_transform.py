import math

import numpy as np
import pytest

from spherica import builtin_pairs, gelfand, groups, transform


def brute_sft(coords, table):
    """Definition oracle: (1/|G|) sum_x f(x) phi_i(x^-1) by explicit loops."""
    pair = table.pair
    g = pair.group
    f = gelfand.expand(coords, pair)
    out = np.zeros(table.num_functions, dtype=complex)
    for i in range(table.num_functions):
        phi = gelfand.expand(table.values[i], pair)
        out[i] = sum(f[x] * phi[g.inv[x]] for x in range(g.order)) / g.order
    return out


def brute_convolve(f, g, group):
    n = group.order
    out = np.zeros(n, dtype=complex)
    for x in range(n):
        out[x] = sum(f[y] * g[group.mul[group.inv[y], x]] for y in range(n)) / n
    return out


def random_coords(pair, seed):
    rng = np.random.default_rng(seed)
    return rng.standard_normal(pair.num_cosets) + 1j * rng.standard_normal(pair.num_cosets)


@pytest.fixture(scope="module")
def sym3_table():
    return gelfand.compute_spherical_functions(builtin_pairs.build_builtin("sym:3"))


@pytest.fixture(scope="module")
def dih5_table():
    return gelfand.compute_spherical_functions(builtin_pairs.build_builtin("dih:5"))


class TestSft:
    def test_constant_function(self, sym3_table):
        coeffs = transform.sft(np.ones(2), sym3_table)
        expected = np.zeros(2)
        expected[0] = 1.0
        assert np.allclose(coeffs, expected, atol=1e-12)

    def test_spherical_row(self, sym3_table):
        coeffs = transform.sft(sym3_table.values[1], sym3_table)
        assert np.allclose(coeffs, [0.0, 0.5], atol=1e-12)

    def test_zero(self, sym3_table):
        assert np.allclose(transform.sft(np.zeros(2), sym3_table), 0.0)

    @pytest.mark.parametrize("seed", [0, 1, 2])
    def test_matches_definition_oracle(self, dih5_table, seed):
        f = random_coords(dih5_table.pair, seed)
        assert np.allclose(transform.sft(f, dih5_table), brute_sft(f, dih5_table), atol=1e-12)

    def test_dimension_mismatch(self, sym3_table):
        with pytest.raises(ValueError, match="domain mismatch"):
            transform.sft(np.ones(3), sym3_table)


class TestInverseSft:
    def test_delta_spectrum(self, sym3_table):
        coords = transform.inverse_sft(np.array([1.0, 0.0]), sym3_table)
        assert np.allclose(coords, 1.0, atol=1e-12)

    def test_weighted_row(self, sym3_table):
        coords = transform.inverse_sft(np.array([0.0, 0.5]), sym3_table)
        assert np.allclose(coords, sym3_table.values[1], atol=1e-12)

    def test_zero(self, sym3_table):
        assert np.allclose(transform.inverse_sft(np.zeros(2), sym3_table), 0.0)

    @pytest.mark.parametrize("name", ["sym:4", "dih:6", "cyc:9", "full:4"])
    def test_round_trips(self, name):
        table = gelfand.compute_spherical_functions(builtin_pairs.build_builtin(name))
        for seed in range(5):
            f = random_coords(table.pair, seed)
            assert np.abs(transform.inverse_sft(transform.sft(f, table), table) - f).max() <= 1e-10
            c = random_coords(table.pair, seed + 50)
            assert np.abs(transform.sft(transform.inverse_sft(c, table), table) - c).max() <= 1e-10


class TestPlancherel:
    def test_constant_pair(self, sym3_table):
        lhs, rhs = transform.plancherel_pairing(np.ones(2), np.ones(2), sym3_table)
        assert lhs == pytest.approx(1.0) and rhs == pytest.approx(1.0)

    def test_spherical_row_with_itself(self, sym3_table):
        phi = sym3_table.values[1]
        lhs, rhs = transform.plancherel_pairing(phi, phi, sym3_table)
        assert lhs == pytest.approx(0.5, abs=1e-12)
        assert rhs == pytest.approx(0.5, abs=1e-12)

    def test_orthogonal_rows(self, sym3_table):
        lhs, rhs = transform.plancherel_pairing(sym3_table.values[0], sym3_table.values[1], sym3_table)
        assert abs(lhs) <= 1e-12 and abs(rhs) <= 1e-12

    def test_isometry_random(self, dih5_table):
        for seed in range(5):
            f = random_coords(dih5_table.pair, seed)
            fh = transform.sft(f, dih5_table)
            spectral = math.sqrt(float(dih5_table.weights @ np.abs(fh) ** 2))
            assert spectral == pytest.approx(
                gelfand.biinv_lp_norm(f, dih5_table.pair, 2.0), abs=1e-10)


class TestInequalitiesAndIdentities:
    def test_riemann_lebesgue_bound(self, dih5_table):
        for seed in range(10):
            f = random_coords(dih5_table.pair, seed)
            assert np.abs(transform.sft(f, dih5_table)).max() <= \
                gelfand.biinv_lp_norm(f, dih5_table.pair, 1.0) + 1e-12

    @pytest.mark.parametrize("name", ["sym:3", "dih:5", "cyc:8"])
    def test_convolution_theorem(self, name):
        table = gelfand.compute_spherical_functions(builtin_pairs.build_builtin(name))
        pair = table.pair
        for seed in range(5):
            f = random_coords(pair, seed)
            g = random_coords(pair, seed + 30)
            lhs = transform.sft(gelfand.conv_coords(f, g, pair), table)
            rhs = transform.sft(f, table) * transform.sft(g, table)
            assert np.abs(lhs - rhs).max() <= 1e-10

    def test_coset_convolution_matches_group_convolution(self, sym3_table):
        pair = sym3_table.pair
        f = random_coords(pair, 3)
        g = random_coords(pair, 4)
        via_group = brute_convolve(gelfand.expand(f, pair), gelfand.expand(g, pair), pair.group)
        via_coords = gelfand.expand(gelfand.conv_coords(f, g, pair), pair)
        assert np.allclose(via_group, via_coords, atol=1e-12)

    def test_counting_one_sided_plancherel(self, sym3_table):
        # sum |<f, phi_i>|^2 <= ||f||_2^2, with a strict gap off the unit-norm rows
        for seed in range(5):
            f = random_coords(sym3_table.pair, seed)
            coeffs = transform.counting_coefficients(f, sym3_table)
            assert float(np.sum(np.abs(coeffs) ** 2)) <= \
                gelfand.biinv_lp_norm(f, sym3_table.pair, 2.0) ** 2 + 1e-12

    def test_counting_coefficients_match_sft_for_psd_rows(self, dih5_table):
        f = random_coords(dih5_table.pair, 8)
        assert np.allclose(
            transform.counting_coefficients(f, dih5_table),
            transform.sft(f, dih5_table),
            atol=1e-11,
        )


class TestSpectralNorms:
    def test_weighting_conventions_differ(self, sym3_table):
        c = np.array([0.0, 1.0])
        plancherel = transform.spectral_lp_norm(c, sym3_table, 1.0, transform.PLANCHEREL)
        counting = transform.spectral_lp_norm(c, sym3_table, 1.0, transform.COUNTING)
        assert plancherel == pytest.approx(2.0)  # weight mu_1 = 2
        assert counting == pytest.approx(1.0)

    def test_sup_norm_ignores_weights(self, sym3_table):
        c = np.array([0.5, 0.25])
        for conv in transform.CONVENTIONS:
            assert transform.spectral_lp_norm(c, sym3_table, math.inf, conv) == pytest.approx(0.5)

    def test_invalid_convention(self, sym3_table):
        with pytest.raises(ValueError, match="convention"):
            transform.spectral_lp_norm(np.ones(2), sym3_table, 2.0, "spectral")

    def test_invalid_exponent(self, sym3_table):
        with pytest.raises(ValueError, match="invalid exponent"):
            transform.spectral_lp_norm(np.ones(2), sym3_table, 0.5, transform.COUNTING)
