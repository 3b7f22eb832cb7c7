"""How the stored L-shape reference eigenvalue was obtained.

RT_1 adaptive refinement converges like dofs^(-2); fitting
lambda_h = lambda_ref - C dofs^(-2) over the finest levels extrapolates
the limit.  The full run (about 390k dofs) takes a few minutes; pass
``--quick`` for a 50k-dof version that agrees to about 1e-5.
"""
import sys

import numpy as np

from mixedeig import LSHAPE_LAMBDA_REF, AdaptConfig, adaptive_loop, generate_lshape

max_dofs = 5e4 if '--quick' in sys.argv else 4e5
rec = adaptive_loop(generate_lshape(2), AdaptConfig(theta=0.5, k=1, max_levels=200,
                                                     max_dofs=max_dofs))
d = rec.column('ndof_total')
lam = rec.column('lambda_h')
print(f"{len(d)} levels, finest {int(d[-1])} dofs, lambda_h = {lam[-1]:.12f}")

# least squares in (lambda_ref, C) over trailing windows
for start in (len(d) // 2, 2 * len(d) // 3, 3 * len(d) // 4):
    A = np.column_stack([np.ones(len(d) - start), -d[start:]**-2.0])
    (ref, c), *_ = np.linalg.lstsq(A, lam[start:], rcond=None)
    print(f"  fit from {int(d[start]):7d} dofs: lambda_ref = {ref:.10f}")

print(f"stored value: {LSHAPE_LAMBDA_REF}")
