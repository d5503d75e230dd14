"""Numerical tolerances for float-mode decisions."""

from dataclasses import dataclass


@dataclass(frozen=True)
class Tolerances:
    """Float-mode thresholds; exact mode ignores them for discrete decisions.

    eps_root: a cluster of k computed roots counts as one k-fold root when the
        (scale-normalized) polynomial is within backward error ``eps_root**2``
        of having a k-fold root at the cluster centroid. For two simple roots
        this merges them when they are about ``eps_root`` apart.
    eps_real: a root z is real when ``|Im z| <= eps_real * (1 + |z|)``.
    eps_eig: relative residual tolerance for eigenpairs and zero eigenvalues.
    """

    eps_root: float = 1e-6
    eps_real: float = 1e-8
    eps_eig: float = 1e-8


DEFAULT = Tolerances()
