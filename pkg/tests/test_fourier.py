"""Frequency picture: transform, weighted composition, adjoint, norms."""

import math

import numpy as np
import pytest

import pwlab
from pwlab import AffineSymbol, L2Function, OverflowGuardError

SEED = pwlab.DEFAULT_SEED


def unit_smooth(a, half_width, rng):
    f = pwlab.smooth_probe(a, half_width, rng)
    return pwlab.scaled(f, 1.0 / f.norm())


class TestGridAndContainer:
    def test_midpoint_grid(self):
        a, m = 2.0, 8
        t = pwlab.l2_grid(a, m)
        assert t.size == m
        step = 2.0 * a / m
        np.testing.assert_allclose(t, -a + (np.arange(m) + 0.5) * step)
        np.testing.assert_allclose(t, -t[::-1])

    def test_validation(self):
        with pytest.raises(ValueError):
            L2Function(0.0, np.ones(4))
        with pytest.raises(ValueError):
            L2Function(1.0, np.zeros((2, 2)))

    def test_inner_needs_matching_grids(self):
        F = L2Function(1.0, np.ones(8))
        with pytest.raises(ValueError):
            F.inner(L2Function(1.0, np.ones(16)))
        with pytest.raises(ValueError):
            F.inner(L2Function(2.0, np.ones(8)))


class TestTransform:
    def test_norm_preserved(self):
        rng = np.random.default_rng(SEED)
        for a in (1.0, math.pi, 2.5):
            f = pwlab.rough_probe(a, 32, rng)
            F = pwlab.to_l2(f, 4096)
            assert abs(F.norm() - f.norm()) < 1e-9 * f.norm()

    def test_inner_products_preserved(self):
        rng = np.random.default_rng(SEED + 1)
        a = 1.5
        f = pwlab.rough_probe(a, 24, rng)
        g = pwlab.rough_probe(a, 24, rng)
        lhs = pwlab.inner_product(f, g)
        rhs = pwlab.to_l2(f, 4096).inner(pwlab.to_l2(g, 4096))
        assert abs(lhs - rhs) < 1e-9 * max(1.0, abs(lhs))

    def test_round_trip_recovers_samples(self):
        rng = np.random.default_rng(SEED + 2)
        f = pwlab.rough_probe(2.0, 20, rng)
        back = pwlab.from_l2(pwlab.to_l2(f, 1024), 20)
        assert np.max(np.abs(back.samples - f.samples)) < 1e-10

    def test_round_trip_wider_window_pads_with_zeros(self):
        rng = np.random.default_rng(SEED + 3)
        f = pwlab.rough_probe(1.0, 8, rng)
        back = pwlab.from_l2(pwlab.to_l2(f, 512), 12)
        np.testing.assert_allclose(back.samples[4:-4], f.samples, atol=1e-10)
        assert np.max(np.abs(back.samples[:4])) < 1e-10
        assert np.max(np.abs(back.samples[-4:])) < 1e-10

    def test_transform_of_node_function_is_pure_phase(self):
        # node indicator at node j transforms to e^{-i j pi t / a} / sqrt(2a)
        a, j = 1.0, 3
        F = pwlab.to_l2(pwlab.node_function(a, 8, j), 256)
        t = F.grid()
        expected = np.exp(-1j * j * math.pi * t / a) * math.sqrt(math.pi / a) / math.sqrt(2 * a)
        assert np.max(np.abs(F.values - expected)) < 1e-12


class TestWeightedComposition:
    def test_support_is_exact(self):
        rng = np.random.default_rng(SEED + 4)
        a = 1.0
        F = pwlab.to_l2(pwlab.rough_probe(a, 16, rng), 2048)
        for c in (0.5, -0.25):
            out = pwlab.weighted_compose_apply(AffineSymbol(c, 0.3 + 0.2j), F)
            t = out.grid()
            outside = np.abs(t) >= abs(c) * a
            assert np.all(out.values[outside] == 0.0)
            assert np.any(out.values[~outside] != 0.0)

    def test_identity_path_is_pure_weight(self):
        rng = np.random.default_rng(SEED + 5)
        a = 2.0
        F = pwlab.to_l2(pwlab.rough_probe(a, 16, rng), 1024)
        d = 0.4 - 0.7j
        out = pwlab.weighted_compose_apply(AffineSymbol(1.0, d), F)
        expected = np.exp(1j * d * F.grid()) * F.values
        assert np.max(np.abs(out.values - expected)) == 0.0

    def test_reflection_path_is_weighted_flip(self):
        rng = np.random.default_rng(SEED + 6)
        a = 1.0
        F = pwlab.to_l2(pwlab.rough_probe(a, 16, rng), 1024)
        d = 1.0 + 0.5j
        out = pwlab.weighted_compose_apply(AffineSymbol(-1.0, d), F)
        t = F.grid()
        expected = np.exp(-1j * d * t) * F.values[::-1]
        assert np.max(np.abs(out.values - expected)) < 1e-14 * np.max(np.abs(F.values))

    def test_commuting_square_single_symbol(self):
        rng = np.random.default_rng(SEED + 7)
        a = 1.0
        phi = AffineSymbol(0.5, 1.0 + 1.0j)
        f = unit_smooth(a, 96, rng)
        path_a = pwlab.to_l2(pwlab.compose_apply(phi, f, grow=True), 4096)
        path_b = pwlab.weighted_compose_apply(phi, pwlab.to_l2(f, 4096))
        diff = L2Function(a, path_a.values - path_b.values).norm()
        assert diff < 1e-9

    def test_adjoint_pairing(self):
        rng = np.random.default_rng(SEED + 8)
        a = 1.0
        m = 32768
        F = pwlab.to_l2(unit_smooth(a, 16, rng), m)
        G = pwlab.to_l2(unit_smooth(a, 16, rng), m)
        for phi in (AffineSymbol(0.5, 0.3 + 0.4j), AffineSymbol(-0.5, 1j), AffineSymbol(1.0, 2.0 - 1j)):
            lhs = pwlab.weighted_compose_apply(phi, F).inner(G)
            rhs = F.inner(pwlab.weighted_compose_adjoint(phi, G))
            assert abs(lhs - rhs) < 1e-6

    def test_adjoint_identity_symbol_is_conjugate_weight(self):
        rng = np.random.default_rng(SEED + 9)
        a = 1.0
        F = pwlab.to_l2(pwlab.rough_probe(a, 8, rng), 512)
        d = 0.3 + 0.25j
        out = pwlab.weighted_compose_adjoint(AffineSymbol(1.0, d), F)
        expected = np.exp(-1j * np.conj(d) * F.grid()) * F.values
        assert np.max(np.abs(out.values - expected)) == 0.0

    def test_data_helper(self):
        data = pwlab.WeightedCompositionData(AffineSymbol(0.5, 1j), 2.0)
        assert data.support_half_width == 1.0
        t = np.array([0.0, 0.5, 0.999, 1.0, 1.5])
        w = data.weight(t)
        assert np.all(w[np.abs(t) >= 1.0] == 0.0)
        np.testing.assert_allclose(data.inner_map(t), t / 0.5)

    def test_norm_preserved_under_scaled_composition(self):
        # sqrt|c| C_{cz} is unitary; in frequency terms the weighted operator
        # divides the norm by sqrt|c| exactly
        rng = np.random.default_rng(SEED + 10)
        a = 1.0
        f = unit_smooth(a, 64, rng)
        F = pwlab.to_l2(f, 8192)
        out = pwlab.weighted_compose_apply(AffineSymbol(0.5, 0.0), F)
        assert abs(out.norm() - 1.0 / math.sqrt(0.5)) < 1e-6


class TestMultiplicationNorm:
    def test_closed_value_and_weight_sup(self):
        a = 1.5
        d = 0.3 + 0.8j
        target = math.exp(abs(d.imag) * a)
        assert abs(pwlab.multiplication_norm(d, a) - target) < 1e-14
        data = pwlab.WeightedCompositionData(AffineSymbol(1.0, d), a)
        t = np.linspace(-a, a, 20001)
        sup = float(np.max(np.abs(np.exp(1j * d * t))))
        assert sup <= target * (1.0 + 1e-12)
        assert sup > target * (1.0 - 1e-3)
        assert np.max(np.abs(data.weight(t[1:-1]))) <= target * (1.0 + 1e-12)

    def test_real_translation_is_contractive_weight(self):
        assert pwlab.multiplication_norm(5.0, 3.0) == 1.0

    def test_guards(self):
        with pytest.raises(OverflowGuardError):
            pwlab.multiplication_norm(500j, 1.0)
        with pytest.raises(OverflowGuardError):
            pwlab.weighted_compose_apply(
                AffineSymbol(0.5, 400j), L2Function(1.0, np.ones(64))
            )
