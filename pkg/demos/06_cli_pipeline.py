"""End-to-end file pipeline through the command-line interface.

Writes a surface spec, runs analyze / rotational / residuals / reconstruct
as the CLI would, and shows the exit-code contract on bad input. Everything
lands in demos/out/cli/.
"""

import os
import sys

import numpy as np

from minsurf4.cli import main

out = os.path.join(os.path.dirname(__file__), "out", "cli")
os.makedirs(out, exist_ok=True)

spec = os.path.join(out, "rotational.spec")
with open(spec, "w") as fh:
    fh.write(
        "[surface]\n"
        "kind = rotational-ode\n"
        "alpha = 1.0\nbeta = 2.0\n"
        "f0 = 1.0\ng0 = 0.3\ntheta0 = 1.5707963267948966\n"
        "length = 2.0\nh_u = 0.005\n"
        "[grid]\nn_u = 41\nn_v = 33\n")

print("== minsurf4 rotational", spec)
rc = main(["rotational", spec, "--out", os.path.join(out, "rot")])
print("exit:", rc)

print("\n== minsurf4 analyze builtin:clifford")
rc = main(["analyze", "builtin:clifford", "--out", os.path.join(out, "clifford"),
           "--grid", "12x12"])
print("exit:", rc)

# feed the extracted invariants back through residuals + reconstruct
import minsurf4 as ms
from minsurf4 import io as msio

prof_csv = os.path.join(out, "invariants_profile.csv")
prof = ms.solve_minimal_profile(1.0, 2.0, 1.0, 0.3, np.pi / 2, 2.0, h_u=5e-3)
surf = ms.surface_from_profile(prof, 1.0, 2.0)
field = ms.frame_invariants_field(surf, ms.Grid(prof.u, np.linspace(0.3, 0.5, 3)))
msio.write_csv(prof_csv, ["u", "mu", "nu"],
               zip(prof.u, field.mu[:, 0], field.nu[:, 0]))
rec_spec = os.path.join(out, "reconstruct.spec")
with open(rec_spec, "w") as fh:
    fh.write("[surface]\nkind = invariant-profile\n"
             f"file = {os.path.basename(prof_csv)}\nv_extent = 0.7\n")

print("\n== minsurf4 residuals", rec_spec)
rc = main(["residuals", rec_spec, "--out", os.path.join(out, "residuals")])
print("exit:", rc)

print("\n== minsurf4 reconstruct", rec_spec)
rc = main(["reconstruct", rec_spec, "--out", os.path.join(out, "reconstructed")])
print("exit:", rc)

print("\n== exit-code contract on incompatible invariants (expect 5)")
bad_csv = os.path.join(out, "bad_profile.csv")
us = np.linspace(0.0, 1.0, 51)
msio.write_csv(bad_csv, ["u", "mu", "nu"], zip(us, 1.0 + 0.3 * us, 0.3 + 0.1 * us))
bad_spec = os.path.join(out, "bad.spec")
with open(bad_spec, "w") as fh:
    fh.write("[surface]\nkind = invariant-profile\n"
             f"file = {os.path.basename(bad_csv)}\nv_extent = 0.5\n")
rc = main(["reconstruct", bad_spec, "--out", os.path.join(out, "rejected")])
print("exit:", rc)
sys.exit(0)
