"""
The rearrangement inequality behind the strong hyperbolicity bound

    min{a + b, c + d} * min{a + c, b + d} <= a d + b c + 2 sqrt(a b c d)

for nonnegative a, b, c, d, with equality exactly in three cases.
All functions broadcast over numpy arrays.
"""
import numpy as np

from ..utils import getLogger
from ..utils.exceptions import NegativeInput

logger = getLogger(__name__)

CASES = ("i", "ii", "iii")

# permutations of (alpha, beta, gamma, delta) leaving both sides unchanged,
# given as the positions each new slot reads from, with the induced case map
SYMMETRIES = (
    ((3, 1, 2, 0), (0, 1, 2)),  # (alpha delta)
    ((1, 0, 3, 2), (1, 0, 2)),  # (alpha beta)(gamma delta)
    ((2, 0, 3, 1), (1, 0, 2)),  # (alpha gamma delta beta)
)


def _inputs(alpha, beta, gamma, delta):
    values = np.broadcast_arrays(
        *(np.asarray(v, dtype=float) for v in (alpha, beta, gamma, delta))
    )
    for v in values:
        if np.any(np.isnan(v)) or np.any(v < 0):
            raise NegativeInput("Rearrangement inputs must be nonnegative reals")
    return values


def _unwrap(value):
    if np.ndim(value) == 0:
        return float(value)
    return value


def rearrangement_sides(alpha, beta, gamma, delta):
    """Both sides of the rearrangement inequality

    Parameters
    ----------
    alpha, beta, gamma, delta : float or np.array
        nonnegative

    Returns
    -------
    (lhs, rhs)
        lhs = min{alpha+beta, gamma+delta} * min{alpha+gamma, beta+delta},
        rhs = alpha delta + beta gamma + 2 sqrt(alpha beta gamma delta)
    """
    a, b, c, d = _inputs(alpha, beta, gamma, delta)
    lhs = np.minimum(a + b, c + d) * np.minimum(a + c, b + d)
    rhs = a * d + b * c + 2.0 * np.sqrt(a * b * c * d)
    return _unwrap(lhs), _unwrap(rhs)


def _scale(a, b, c, d):
    s = np.maximum(np.maximum(a, b), np.maximum(c, d))
    return np.where(s > 0, s, 1.0)


def _sides_agree(a, b, c, d, s, tol):
    lhs = np.minimum(a + b, c + d) * np.minimum(a + c, b + d)
    rhs = a * d + b * c + 2.0 * np.sqrt(a * b * c * d)
    return np.asarray(np.abs(lhs - rhs) <= tol * s * s)


def _case_residuals(a, b, c, d, s):
    # each vanishes exactly on its case and is measured in products, like lhs - rhs
    r_i = a * d + np.minimum(b, c) * np.maximum(np.abs(b - c) - np.maximum(a, d), 0.0)
    r_ii = b * c + np.minimum(a, d) * np.maximum(np.abs(a - d) - np.maximum(b, c), 0.0)
    r_iii = s * (np.abs(a - d) + np.abs(b - c))
    return np.stack([r_i, r_ii, r_iii], axis=-1)


def equality_flags(alpha, beta, gamma, delta, tol=1e-12):
    """Which equality conditions hold, as a boolean array with a trailing axis of 3

    A row has a flag only where the two sides agree to tol * s**2,
    s = max(alpha, beta, gamma, delta), so any(axis=-1) matches
    is_equality. A case is flagged when its residual is within
    tol * s**2; if the sides agree but no residual is that small the
    nearest cases are flagged.
    """
    a, b, c, d = _inputs(alpha, beta, gamma, delta)
    s = _scale(a, b, c, d)
    residuals = _case_residuals(a, b, c, d, s)
    flags = residuals <= np.asarray(tol * s * s)[..., np.newaxis]
    nearest = residuals <= residuals.min(axis=-1, keepdims=True)
    flags = np.where(flags.any(axis=-1, keepdims=True), flags, nearest)
    return flags & _sides_agree(a, b, c, d, s, tol)[..., np.newaxis]


def equality_case(alpha, beta, gamma, delta, tol=1e-12):
    """Equality conditions met by one quadruple

    Returns
    -------
    set
        subset of {'i', 'ii', 'iii'}; nonempty iff is_equality
    """
    flags = equality_flags(alpha, beta, gamma, delta, tol)
    if flags.ndim != 1:
        raise ValueError("equality_case takes scalars, use equality_flags for arrays")
    return {name for name, flag in zip(CASES, flags) if flag}


def is_equality(alpha, beta, gamma, delta, tol=1e-12):
    """True where |lhs - rhs| <= tol * s**2, s the largest input; a bool for scalars"""
    a, b, c, d = _inputs(alpha, beta, gamma, delta)
    agree = _sides_agree(a, b, c, d, _scale(a, b, c, d), tol)
    if agree.ndim == 0:
        return bool(agree)
    return agree


def shest_sides(lam_xy, lam_zt, lam_xz, lam_yt, lam_yz, lam_xt):
    """The chain of bounds on (1 + l(x,y)) (1 + l(z,t)) for inversion values l

    Returns
    -------
    (lhs, min_bound, rearranged_bound)
        lhs = (1 + l_xy)(1 + l_zt);
        min_bound = min{2 + l_xz + l_yz, 2 + l_xt + l_yt}
                    * min{2 + l_xz + l_xt, 2 + l_yz + l_yt};
        rearranged_bound = (1+l_xz)(1+l_yt) + (1+l_yz)(1+l_xt)
                    + 2 sqrt((1+l_xz)(1+l_yz)(1+l_xt)(1+l_yt)).
        For inversions over a Ptolemaic space lhs < min_bound <= rearranged_bound.
    """
    xy, zt, xz, yt, yz, xt = (
        1.0 + np.asarray(v, dtype=float) for v in (lam_xy, lam_zt, lam_xz, lam_yt, lam_yz, lam_xt)
    )
    lhs = xy * zt
    # the lemma with (alpha, beta, gamma, delta) = (1+l_xz, 1+l_yz, 1+l_xt, 1+l_yt)
    min_bound, rearranged = rearrangement_sides(xz, yz, xt, yt)
    return _unwrap(lhs), min_bound, rearranged


def four_product_bound(lam_xy, lam_zt, lam_xz, lam_yt, lam_yz, lam_xt):
    """Ratio (1+l_xy)(1+l_zt) / (4 max{(1+l_xz)(1+l_yt), (1+l_yz)(1+l_xt)}), below 1 on Ptolemaic inversions"""
    xy, zt, xz, yt, yz, xt = (
        1.0 + np.asarray(v, dtype=float) for v in (lam_xy, lam_zt, lam_xz, lam_yt, lam_yz, lam_xt)
    )
    return _unwrap(xy * zt / (4.0 * np.maximum(xz * yt, yz * xt)))
