"""Every constant behind the error bounds, tabulated for a few dimensions."""
import math

from sortkern import (
    BoundInputs,
    Domain,
    KernelSpec,
    cone_parameters,
    covering_design,
    p_constant,
    sup_kernel_constant,
    tilde_constant,
)

k = KernelSpec(amplitude=1 / (2 * math.pi), bandwidth=1.0)

print(" d  C_K0     C_Knu    tilde_C      P           cone(cube)        cone(simplex)")
for d in (2, 3, 6):
    c_k0, c_knu = sup_kernel_constant(k, 2, d)
    b = BoundInputs(nu=2, d=d, c_k0=c_k0, c_knu=c_knu)
    cube = cone_parameters(d, Domain.CUBE)
    srt = cone_parameters(d, Domain.SORTED_SIMPLEX)
    print(f"{d:2d}  {c_k0:.4f}  {c_knu:.4f}  {tilde_constant(b):.3e}"
          f"  {p_constant(b):.3e}  ({cube.theta:.3f},{cube.radius:.3f})"
          f"  ({srt.theta:.3f},{srt.radius:.3f})")

# covering designs back the epsilon-net eigenvalue bound; the simplex
# needs d! fewer points at the same resolution
for dom in (Domain.CUBE, Domain.SORTED_SIMPLEX):
    pts = covering_design(0.25, 3, dom)
    print(f"eps=0.25 d=3 {dom.value}: {len(pts)} points")
