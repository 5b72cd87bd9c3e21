"""Operator-algebra checks for quantized spacetime and free Dirac wave-packet dynamics.

Natural units (hbar = c = m = 1, so the Compton wavelength and Compton time
are both 1) are the default everywhere; all scales stay configurable through
:class:`chronon.gamma_algebra.PhysicalParams`.
"""

from chronon.gamma_algebra import PhysicalParams

__all__ = ["PhysicalParams"]
__version__ = "0.1.0"
