"""Tests for laws, geometry, weights and JSON round-trips of the domain types."""

import json
import math

import numpy as np
import pytest

from freebrown.brown import brown_measure
from freebrown.errors import InvalidLawError, NormalOperatorError, ParamsMismatchError
from freebrown.models import (
    FIGURE_PRESETS,
    Atom,
    AtomWeights,
    BrownDescriptor,
    EsdCloud,
    ModelParams,
    Orientation,
    SupportGeometry,
    TwoAtomLaw,
    geometry,
    get_preset,
    make_params,
    make_two_atom,
    reflect_params,
)


class TestTwoAtomLaw:
    def test_bernoulli_half(self):
        law = make_two_atom(0, 1, 0.5)
        assert law.atoms() == [(0.0, 0.5), (1.0, 0.5)]

    def test_reversed_positions_are_canonicalized(self):
        law = make_two_atom(1, 0, 0.8)
        assert law.pos_low == 0.0
        assert law.pos_high == 1.0
        assert law.weight_low == pytest.approx(0.2)

    def test_figure_two_law(self):
        law = make_two_atom(0, 0.9, 0.8)
        assert law.atoms() == [(0.0, 0.8), (0.9, pytest.approx(0.2))]
        assert law.mean == pytest.approx(0.18)
        assert law.gap == pytest.approx(0.9)

    @pytest.mark.parametrize(
        "values",
        [
            (math.nan, 1, 0.5),
            (0, math.inf, 0.5),
            (0, 1, 1.5),
            (0, 1, -0.1),
            (0.3, 0.3, 0.5),
        ],
    )
    def test_invalid_input(self, values):
        with pytest.raises(InvalidLawError):
            make_two_atom(*values)

    def test_non_canonical_direct_construction(self):
        with pytest.raises(InvalidLawError, match="make_two_atom"):
            TwoAtomLaw(pos_low=1.0, pos_high=0.0, weight_low=0.5)

    @pytest.mark.parametrize("weight", [0.0, 1.0])
    def test_point_mass_is_valid_but_degenerate(self, weight):
        law = make_two_atom(0, 1, weight)
        assert law.is_degenerate
        assert len(law.atoms()) == 1

    def test_equal_positions_with_full_weight(self):
        assert make_two_atom(0.5, 0.5, 1.0).is_degenerate


class TestModelParams:
    def test_accessors(self, fig1_params):
        assert fig1_params.to_flat() == (0.0, 1.0, 0.5, 0.0, 0.8, 0.5)
        assert fig1_params.a == 0.5
        assert fig1_params.beta_prime == 0.8

    def test_swapped(self, fig1_params):
        swapped = fig1_params.swapped()
        assert swapped.law_p == fig1_params.law_q
        assert not swapped.isclose(fig1_params)

    def test_require_non_degenerate(self):
        with pytest.raises(NormalOperatorError, match="normal case"):
            make_params(0, 1, 1.0, 0, 1, 0.5).require_non_degenerate()

    def test_reflect_trades_weights(self, fig2a_params):
        reflected = reflect_params(fig2a_params, flip_p=True, flip_q=True)
        assert reflected.a == pytest.approx(1 - fig2a_params.a)
        assert reflected.b == pytest.approx(1 - fig2a_params.b)
        assert reflected.alpha == fig2a_params.alpha

    def test_round_trip(self, fig2a_params):
        assert ModelParams.from_dict(json.loads(json.dumps(fig2a_params.to_dict()))) == fig2a_params


class TestPresets:
    def test_known_names(self):
        assert set(FIGURE_PRESETS) == {"fig1", "fig2a", "fig2b", "fig3a", "fig3b"}

    def test_unknown_name(self):
        with pytest.raises(KeyError, match="fig1"):
            get_preset("fig9")


class TestGeometry:
    def test_figure_one(self, fig1_params):
        g = geometry(fig1_params)
        assert g.center == pytest.approx(0.5 + 0.4j)
        assert g.gap_a == pytest.approx(1.0)
        assert g.gap_b == pytest.approx(0.8)
        assert g.orientation is Orientation.WIDE_OR_SQUARE

    def test_square(self, square_params):
        g = geometry(square_params)
        assert g.center == 0.5 + 0.5j
        assert g.gap_a == g.gap_b == 1.0
        assert g.orientation is Orientation.WIDE_OR_SQUARE

    def test_tall(self, fig2a_params):
        g = geometry(fig2a_params)
        assert g.gap_a == pytest.approx(0.9)
        assert g.gap_b == pytest.approx(1.0)
        assert g.orientation is Orientation.TALL

    def test_degenerate(self):
        with pytest.raises(NormalOperatorError):
            geometry(make_params(0, 1, 0.5, 0.2, 0.7, 0.0))

    def test_corners_on_hyperbola(self, fig2a_params):
        g = geometry(fig2a_params)
        corners = np.array(g.corners())
        assert np.allclose(g.hyperbola_residual(corners), 0.0, atol=1e-15)
        assert np.allclose(g.centered_residual(corners), 0.0, atol=1e-15)
        assert g.in_rectangle(corners).all()
        assert not g.in_rectangle(2 + 2j)

    def test_inconsistent_orientation(self):
        with pytest.raises(InvalidLawError):
            SupportGeometry(
                center=0j, gap_a=1.0, gap_b=2.0, orientation=Orientation.WIDE_OR_SQUARE,
                alpha=-0.5, alpha_prime=0.5, beta=-1.0, beta_prime=1.0,
            )

    def test_round_trip(self, fig2a_params):
        g = geometry(fig2a_params)
        assert SupportGeometry.from_dict(json.loads(json.dumps(g.to_dict()))) == g


class TestWeights:
    def test_opposite_corners_rejected(self):
        with pytest.raises(InvalidLawError, match="opposite"):
            AtomWeights(w00=0.2, w01=0.0, w10=0.0, w11=0.2, w_cont=0.6)

    def test_sum_must_be_one(self):
        with pytest.raises(InvalidLawError, match="sum"):
            AtomWeights(w00=0.2, w01=0.0, w10=0.0, w11=0.0, w_cont=0.7)

    def test_continuous_weight_positive(self):
        with pytest.raises(InvalidLawError):
            AtomWeights(w00=1.0, w01=0.0, w10=0.0, w11=0.0, w_cont=0.0)

    def test_atom_round_trip(self):
        atom = Atom(position=0.5 - 2j, mass=0.25)
        assert Atom.from_dict(json.loads(json.dumps(atom.to_dict()))) == atom


class TestDescriptorJson:
    def test_round_trip(self, fig2a_desc):
        restored = BrownDescriptor.from_dict(json.loads(json.dumps(fig2a_desc.to_dict())))
        assert restored.params == fig2a_desc.params
        assert restored.weights == fig2a_desc.weights
        assert restored.atoms == fig2a_desc.atoms
        assert restored.geometry == fig2a_desc.geometry
        assert restored.nu.support == fig2a_desc.nu.support

    def test_preview_is_small(self, fig1_desc):
        preview = fig1_desc.to_dict()["nu"]["preview"]
        assert set(preview) == {"theta", "density", "cdf"}
        assert len(preview["theta"]) <= 66

    def test_tampered_weights(self, fig1_desc):
        data = fig1_desc.to_dict()
        data["weights"] = {"w00": 0.5, "w01": 0.0, "w10": 0.0, "w11": 0.0, "w_cont": 0.5}
        with pytest.raises(ParamsMismatchError):
            BrownDescriptor.from_dict(data)

    def test_total_mass(self, fig3a_params):
        assert brown_measure(fig3a_params).total_mass() == pytest.approx(1.0, abs=1e-15)


class TestEsdCloud:
    def test_length_must_match(self, fig1_params):
        with pytest.raises(InvalidLawError):
            EsdCloud(n=3, seed=0, params=fig1_params, eigenvalues=[1j, 2j])

    def test_seed_range(self, fig1_params):
        with pytest.raises(InvalidLawError):
            EsdCloud(n=1, seed=-1, params=fig1_params, eigenvalues=[0j])

    def test_round_trip(self, fig1_params):
        cloud = EsdCloud(n=2, seed=5, params=fig1_params, eigenvalues=[1 + 1j, -0.5j], trial=3, metadata={"k": 1})
        restored = EsdCloud.from_dict(json.loads(json.dumps(cloud.to_dict())))
        assert np.array_equal(restored.eigenvalues, cloud.eigenvalues)
        assert restored.trial == 3
        assert restored.metadata == {"k": 1}
        assert restored.stem == "rmt_trial003"
