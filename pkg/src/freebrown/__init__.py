"""freebrown - Brown measure of p + iq for free two-atom Hermitian operators."""

__version__ = "0.1.0"
