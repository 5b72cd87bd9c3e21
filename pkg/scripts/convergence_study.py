#!/usr/bin/env python3
"""Residual convergence study for the deformed-commutator realizations.

Sweeps the momentum-grid resolution for the 1-D deformed Heisenberg check
and the 2-D coordinate-commutator check and prints one table per check.
The residuals fall roughly 4x per grid doubling (spectral accuracy on a
Gaussian witness) until they hit the roundoff floor, which scales with the
deformation coefficient 1 + (a*p_max/hbar)^2.

    python3 scripts/convergence_study.py
"""

from chronon import snyder_rep as sr
from chronon.gamma_algebra import PhysicalParams


def main() -> None:
    params = PhysicalParams()

    print("1-D deformed Heisenberg residual (p_max = 20)")
    print(f"{'n':>6}  {'residual':>12}")
    for n in (16, 32, 64, 128, 256, 512, 1024):
        grid = sr.GridSpec1D(n=n, p_max=20.0)
        r = sr.heisenberg_residual_1d(grid, params, sr.gaussian_1d(grid))
        print(f"{n:>6}  {r:>12.4e}")

    print()
    print("2-D coordinate commutator residual (p_max = 12)")
    print(f"{'n':>6}  {'r_xy':>12}  {'r_mixed':>12}")
    for n in (16, 32, 64, 128, 256):
        grid = sr.GridSpec1D(n=n, p_max=12.0)
        r_xy, r_mixed = sr.coordinate_commutator_residual_2d(
            grid, params, sr.gaussian_2d(grid))
        print(f"{n:>6}  {r_xy:>12.4e}  {r_mixed:>12.4e}")


if __name__ == "__main__":
    main()
