"""Exact 11-component first-order wave equation for massless spin 0 and 1."""

__version__ = "0.1.0"

from .algebra import BASIS, ComplexRational, ComponentIndex, RepMatrix, WaveState  # noqa: E402
from .momentum import FourMomentum, LightlikeMomentum, MassiveMomentum, projector_set  # noqa: E402
from .representation import build_representation  # noqa: E402

__all__ = [
    "__version__",
    "BASIS",
    "ComplexRational",
    "ComponentIndex",
    "RepMatrix",
    "WaveState",
    "FourMomentum",
    "LightlikeMomentum",
    "MassiveMomentum",
    "projector_set",
    "build_representation",
]
