"""Pure-numpy implementations of the hot grid kernels.

Same call signatures as the compiled core in ``_core.pyx``; used as the
fallback backend when the extension is unavailable (or forced via the
``SUPLAP_KERNELS=numpy`` environment variable).
"""

import numpy as np

BACKEND = "numpy"


def lap_apply(values, node_idx, nb_idx, inv_h2):
    """Centered Laplacian at the nodes ``node_idx``.

    ``nb_idx`` holds the 2*dim neighbour flat indices per node.  Returns an
    array of len(node_idx).
    """
    acc = values[nb_idx].sum(axis=1)
    return (acc - nb_idx.shape[1] * values[node_idx]) * inv_h2


def power_pass(F, Fxi, Fxixi, p, M0):
    """Fused pointwise pass for one objective/derivative evaluation.

    Given F = F(x, lap u) and its xi-derivatives at the energy nodes, with
    frozen scale M0 = max|F| > 0, computes

        sum_tp = sum_i (|F_i|/M0)^p
        q_i    = (|F_i|/M0)^(p-1) * sgn(F_i) * Fxi_i
        w_i    = p * (|F_i|/M0)^(p-2) * ((p-1)*Fxi_i^2 + F_i*Fxixi_i) / M0^2

    All powers act on ratios in [0, 1] so nothing overflows for large p.
    """
    t = np.abs(F) / M0
    tpm2 = t ** (p - 2.0)
    tpm1 = tpm2 * t
    sgn = np.sign(F)
    sum_tp = float((tpm1 * t).sum())
    q = tpm1 * sgn * Fxi
    w = (p / (M0 * M0)) * tpm2 * ((p - 1.0) * Fxi * Fxi + F * Fxixi)
    return sum_tp, q, w


def power_sum(F, p, M0):
    """sum_i (|F_i|/M0)^p, the objective-only pass used in line searches."""
    t = np.abs(F) / M0
    return float((t ** p).sum())
