"""Nystrom eigenvalue decay: the sorted kernel operator decays faster."""
import math

from sortkern import (
    BoundInputs,
    KernelMode,
    KernelSpec,
    decay_slope,
    eigen_bound_weyl,
    nystrom_spectrum,
    sup_kernel_constant,
)

k = KernelSpec(amplitude=1 / (2 * math.pi), bandwidth=1.0)
d, m = 2, 300
c_k0, c_knu = sup_kernel_constant(k, 2, d)
b = BoundInputs(nu=2, d=d, c_k0=c_k0, c_knu=c_knu)

for mode in (KernelMode.PLAIN, KernelMode.SORTED):
    s = nystrom_spectrum(k, mode, m, d, seed=42)
    lam = s.eigenvalues
    print(f"{mode.value:6s} trace={lam.sum():.6f}"
          f" slope[5,30]={decay_slope(s, 5, 30):+.2f}")
    for j in (2, 5, 10, 20):
        w = eigen_bound_weyl(j, b, mode).value
        print(f"   j={j:2d}  lambda_hat={lam[j - 1]:.3e}  weyl bound={w:.3e}")
