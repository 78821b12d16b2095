"""Tour of the pointwise invariants k, kappa, K and the point classes.

Four charts, four different classes:
  * a plane and a catenoid inside a hyperplane consist of flat points
    (L = M = N = 0 -- the R^4 invariants cannot see curvature that lives
    inside an R^3),
  * the product-of-circles torus is non-minimal,
  * the graph of the complex square w -> w^2 is minimal with a circular
    curvature ellipse (super-conformal),
  * a generated rotational minimal surface is minimal of general type.
"""

import numpy as np

import minsurf4 as ms

surfaces = [
    ms.plane(),
    ms.catenoid_r3(),
    ms.clifford_torus(),
    ms.graph_w2(),
    ms.surface_from_profile(
        ms.solve_minimal_profile(alpha=1.0, beta=2.0, f0=1.0, g0=0.3,
                                 theta0=np.pi / 2, length=2.0),
        alpha=1.0, beta=2.0),
]

for surf in surfaces:
    us, vs = surf.grid(15, 15)
    pad = 0.05 * (us[-1] - us[0])
    ga = ms.analyze_grid(surf, np.linspace(us[0] + pad, us[-1] - pad, 12), vs)
    inv = ga.inv
    print(f"\n== {surf.name}")
    print("   class histogram:", {k: v for k, v in ga.class_histogram().items() if v})
    print(f"   kappa^2 - k   in [{np.min(inv.kappa**2 - inv.k):+.2e}, "
          f"{np.max(inv.kappa**2 - inv.k):+.2e}]   (0 iff minimal)")
    print(f"   K^2 - kappa^2 in [{np.min(inv.K**2 - inv.kappa**2):+.2e}, "
          f"{np.max(inv.K**2 - inv.kappa**2):+.2e}]   (>= 0 on minimal)")
    major, minor = inv.ellipse_semiaxes
    print(f"   curvature-ellipse axes: major up to {major.max():.3f}, "
          f"eccentric where major != minor")

# the ellipse of curvature at one point of the minimal rotational surface
surf = surfaces[-1]
inv = ms.invariants(surf, 1.0, 0.7)
cf = ms.geometric_frame(surf, 1.0, 0.7)
print(f"\nAt (u,v)=(1.0,0.7) on {surf.name}:")
print(f"   ellipse semi-axes = {inv.ellipse_semiaxes[0]:.6f}, {inv.ellipse_semiaxes[1]:.6f}")
print(f"   |nu|, mu          = {abs(cf.nu):.6f}, {cf.mu:.6f}   (same pair)")
print(f"   kappa - 2 nu mu   = {inv.kappa - 2 * cf.nu * cf.mu:+.2e}")
print(f"   K + nu^2 + mu^2   = {inv.K + cf.nu**2 + cf.mu**2:+.2e}")
