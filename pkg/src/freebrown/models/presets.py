"""Named parameter sets of the reference figures."""

from freebrown.models.laws import ModelParams, make_params

# (p_low, p_high, p_weight, q_low, q_high, q_weight)
_FIGURES: dict[str, tuple[float, float, float, float, float, float]] = {
    # zero atoms, wide rectangle
    "fig1": (0.0, 1.0, 0.5, 0.0, 0.8, 0.5),
    # symmetry pair
    "fig2a": (0.0, 0.9, 0.8, 0.0, 1.0, 0.2),
    "fig2b": (0.0, 0.9, 0.2, 0.0, 1.0, 0.2),
    # support boundary pair
    "fig3a": (0.0, 0.8, 0.9, 0.0, 1.0, 0.5),
    "fig3b": (0.0, 0.9, 0.8, 0.0, 1.0, 0.2),
}

FIGURE_PRESETS: dict[str, ModelParams] = {
    name: make_params(*values) for name, values in _FIGURES.items()
}


def get_preset(name: str) -> ModelParams:
    """Look up a figure preset by name."""
    try:
        return FIGURE_PRESETS[name]
    except KeyError:
        known = ", ".join(sorted(FIGURE_PRESETS))
        raise KeyError(f"unknown preset {name!r} (known: {known})") from None
