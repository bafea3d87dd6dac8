"""Domain types shared across the package."""

from freebrown.models.cloud import EsdCloud
from freebrown.models.codec import complex_from_dict, complex_to_dict
from freebrown.models.descriptor import BrownDescriptor
from freebrown.models.geometry import Orientation, SupportGeometry, geometry
from freebrown.models.laws import ModelParams, TwoAtomLaw, make_params, make_two_atom, reflect_params
from freebrown.models.presets import FIGURE_PRESETS, get_preset
from freebrown.models.weights import Atom, AtomWeights

__all__ = [
    "Atom",
    "AtomWeights",
    "BrownDescriptor",
    "EsdCloud",
    "FIGURE_PRESETS",
    "ModelParams",
    "Orientation",
    "SupportGeometry",
    "TwoAtomLaw",
    "complex_from_dict",
    "complex_to_dict",
    "geometry",
    "get_preset",
    "make_params",
    "make_two_atom",
    "reflect_params",
]
