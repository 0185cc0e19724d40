"""Independent helpers shared by the test modules and the acceptance script."""
import numpy as np

from chm8 import perms
from chm8.verify import dephase


def scramble(H, rng):
    """Random D1 P1 H P2 D2."""
    n = len(H)
    d1 = np.exp(2j * np.pi * rng.random(n))
    d2 = np.exp(2j * np.pi * rng.random(n))
    return d1[:, None] * perms.apply(rng.permutation(n), H, rng.permutation(n)) * d2[None, :]


def fd_defect(H, step=1e-6, cutoff=1e-6):
    """Defect from a finite-difference Jacobian of the off-diagonal Gram entries
    with respect to the phases of the dephased core."""
    H = dephase(H).dephased
    n = len(H)
    iu = np.triu_indices(n, 1)

    def gram(theta):
        M = H.copy()
        M[1:, 1:] *= np.exp(1j * theta.reshape(n - 1, n - 1))
        G = (M @ M.conj().T)[iu]
        return np.concatenate([G.real, G.imag])

    m = (n - 1) ** 2
    J = np.empty((2 * len(iu[0]), m))
    for k in range(m):
        e = np.zeros(m)
        e[k] = step
        J[:, k] = (gram(e) - gram(-e)) / (2 * step)
    s = np.linalg.svd(J, compute_uv=False)
    return m - int(np.sum(s > cutoff * s[0]))


def witness_residual(family, H, report):
    """Entrywise gap between the dephased witness image of ``H`` and the
    dephased family matrix at the reported parameters."""
    from chm8.families import eval_family

    lhs = dephase(report.perms.apply(H)).dephased
    rhs = dephase(eval_family(family, report.params, report.branch)).dephased
    return float(np.max(np.abs(lhs - rhs)))
