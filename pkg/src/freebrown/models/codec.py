"""JSON encoding helpers for complex numbers."""


def complex_to_dict(value: complex) -> dict:
    """Encode a complex number as {"re": ..., "im": ...}."""
    value = complex(value)
    return {"re": value.real, "im": value.imag}


def complex_from_dict(data: dict) -> complex:
    """Decode a complex number written by complex_to_dict."""
    return complex(float(data["re"]), float(data["im"]))
