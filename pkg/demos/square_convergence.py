"""Uniform refinement on the square [0, pi]^2, where lambda = 2 is known.

Prints the error table and convergence rates against total dofs for
k = 0 and k = 1, then the efficiency index and the hypercircle residual.
"""
import numpy as np

from mixedeig import EocTable, generate_square, square_eigenpair, uniform_loop

exact = square_eigenpair()  # u = (2/pi) sin x sin y, lambda = 2

for k, levels in ((0, 5), (1, 4)):
    rec = uniform_loop(generate_square(4), k, levels, exact=exact)
    dofs = rec.column('ndof_total')
    print(f"\nRT_{k}: {levels} uniform levels from a 4x4 grid")
    print(f"{'dofs':>7} {'lambda_h':>16} {'|lam-lam_h|':>12} {'|u-u_h|':>10} {'eta':>10} {'eff':>7}")
    for r in rec.rows():
        print(f"{r['ndof_total']:>7} {r['lambda_h']:>16.12f} {r['err_lambda']:>12.3e} "
              f"{r['err_u_L2']:>10.3e} {r['eta']:>10.3e} {r['eff_index']:>7.4f}")

    # rates of the squared quantities against dofs; dofs ~ h^-2
    for name, col, sq in (('|lam - lam_h|', 'err_lambda', False),
                          ('|u - u_h|^2', 'err_u_L2', True),
                          ('|sigma_h - grad u**|^2', 'eta', True),
                          ('|P_h u - u_h|^2', 'err_proj_L2', True)):
        v = rec.column(col)
        rates = EocTable(dofs, v**2 if sq else v).rates
        print(f"  EOC {name:<24}" + ' '.join(f"{x:6.3f}" for x in rates))

    res = np.abs(rec.column('identity_residual'))
    print(f"  largest identity residual {res.max():.2e}")

# The estimator tracks the combined error (|grad(u - u**)|^2 + |sigma - sigma_h|^2)^1/2
# so closely that the efficiency index approaches 1 from above.
