"""The 30 benchmark objective kernels of the ICSI-2014-BS suite.

Every evaluator here is pure and stateless.  A point is a length-D array
(D >= 2) or an (N, D) batch of rows; the return value is a float for a
single point and an (N,) array for a batch.  Per-function input scalings
z_i = (c / 100) * y_i are applied internally, so callers always work on the
nominal [-100, 100] coordinates.  The kernels do not enforce that domain.

Function classes:

* 1-22   basic closed-form kernels,
* 23-26  weighted sums of basic kernels sharing one input point,
* 27-30  an outer basic kernel applied to the 3-vector of inner kernel
         values (the outer kernel runs at dimension 3, including its own
         input scaling and dimension-dependent constants).
"""

from __future__ import annotations

import numpy as np

__all__ = [
    "ALL_IDS",
    "BASIC_IDS",
    "WEIGHTED_IDS",
    "NESTED_IDS",
    "check_function_id",
    "function_class",
    "scale_factor",
    "input_scale",
    "eval_basic",
    "eval_weighted",
    "eval_nested",
    "eval_raw",
]

BASIC_IDS = tuple(range(1, 23))
WEIGHTED_IDS = tuple(range(23, 27))
NESTED_IDS = tuple(range(27, 31))
ALL_IDS = BASIC_IDS + WEIGHTED_IDS + NESTED_IDS

# Input scale factors c (z = c/100 * y).  Ids not listed use c = 100, i.e.
# identity.  f3 is special-cased below: its factor is D**2 and therefore
# depends on the dimension the kernel is evaluated at.
_SCALE = {
    6: 30.0,
    7: 10.0,
    9: 1.0,
    10: 600.0,
    11: 5.12,
    12: 5.0,
    16: 10.0,
    18: 500.0,
    19: 50.0,
}

_TWO_PI = 2.0 * np.pi


def check_function_id(fid) -> int:
    """Return fid as int, rejecting anything outside 1..30."""
    f = int(fid)
    if f != fid or not 1 <= f <= 30:
        raise ValueError(f"unknown function id {fid!r}: expected an integer in 1..30")
    return f


def function_class(fid) -> str:
    """Classify a function id as "basic", "weighted", or "nested"."""
    f = check_function_id(fid)
    if f <= 22:
        return "basic"
    if f <= 26:
        return "weighted"
    return "nested"


def _as_batch(y) -> tuple[np.ndarray, bool]:
    """Coerce a point or batch to a validated (N, D) float array."""
    z = np.asarray(y, dtype=np.float64)
    single = z.ndim == 1
    if single:
        z = z[np.newaxis, :]
    if z.ndim != 2:
        raise ValueError(f"expected a length-D point or an (N, D) batch, got shape {np.shape(y)}")
    if z.shape[1] < 2:
        raise ValueError(f"points need at least 2 coordinates, got {z.shape[1]}")
    if z.shape[0] == 0:
        raise ValueError("empty batch")
    if not np.isfinite(z).all():
        raise ValueError("points must be finite")
    return z, single


def scale_factor(fid, dim) -> float:
    """Input scale factor c for a basic function at dimension `dim`."""
    f = check_function_id(fid)
    if f > 22:
        raise ValueError(f"f{f} has no input scaling of its own; only f1..f22 do")
    if f == 3:
        return float(dim) ** 2
    return _SCALE.get(f, 100.0)


def input_scale(fid, y):
    """Apply the per-function input scaling z = (c/100) * y."""
    z, single = _as_batch(y)
    out = (scale_factor(fid, z.shape[1]) / 100.0) * z
    return out[0] if single else out


# --- basic kernels (operate on already-scaled (N, D) arrays) ---------------


def _bent_cigar(z):
    return z[:, 0] ** 2 + 1e6 * np.sum(z[:, 1:] ** 2, axis=1)


def _elliptic(z):
    d = z.shape[1]
    weights = 10.0 ** (6.0 * np.arange(d) / (d - 1))
    return np.sum(weights * z**2, axis=1)


def _neumaier3(z):
    # The cross-product sum runs over adjacent pairs i = 2..D and keeps the
    # plus sign; at D = 2 the minimum is then 5/3.
    d = z.shape[1]
    tail = d * (d + 1) * (d - 1) / 6.0
    return np.sum((z - 1.0) ** 2, axis=1) + np.sum(z[:, 1:] * z[:, :-1], axis=1) + tail


def _discus(z):
    return 1e6 * z[:, 0] ** 2 + np.sum(z[:, 1:] ** 2, axis=1)


def _different_powers(z):
    d = z.shape[1]
    exponents = 2.0 + 4.0 * np.arange(d) / (d - 1)
    return np.sqrt(np.sum(np.abs(z) ** exponents, axis=1))


def _rosenbrock(z):
    a, b = z[:, :-1], z[:, 1:]
    return np.sum(100.0 * (a**2 - b) ** 2 + (a - 1.0) ** 2, axis=1)


def _alpine(z):
    return np.sum(np.abs(z * np.sin(z) + 0.1 * z), axis=1)


def _ackley(z):
    d = z.shape[1]
    rms = np.sqrt(np.sum(z**2, axis=1) / d)
    mean_cos = np.sum(np.cos(_TWO_PI * z), axis=1) / d
    return -20.0 * np.exp(-0.2 * rms) - np.exp(mean_cos) + 20.0 + np.e


_W_COEF = 0.5 ** np.arange(21)
_W_FREQ = 3.0 ** np.arange(21)
_W_AT_HALF = float(np.sum(_W_COEF * np.cos(_TWO_PI * _W_FREQ * 0.5)))


def _weierstrass(z):
    d = z.shape[1]
    total = np.zeros(z.shape[0])
    for a, b in zip(_W_COEF, _W_FREQ):
        total += np.sum(a * np.cos(_TWO_PI * b * (z + 0.5)), axis=1)
    return total - d * _W_AT_HALF


def _griewank(z):
    d = z.shape[1]
    roots = np.sqrt(np.arange(1.0, d + 1.0))
    return np.sum(z**2, axis=1) / 4000.0 - np.prod(np.cos(z / roots), axis=1) + 1.0


def _rastrigin(z):
    return np.sum(z**2 - 10.0 * np.cos(_TWO_PI * z) + 10.0, axis=1)


def _katsuura(z):
    # floor, not round: the fractional parts sit in [0, 1), so the product
    # is >= 1 and the function is >= 0 everywhere.
    n, d = z.shape
    frac_sum = np.zeros((n, d))
    for j in range(1, 33):
        p = 2.0**j
        t = p * z
        frac_sum += np.abs(t - np.floor(t)) / p
    coef = 10.0 / d**2
    prod = np.prod((1.0 + np.arange(1, d + 1) * frac_sum) ** (10.0 / d**1.2), axis=1)
    return coef * prod - coef


def _scaffer_g(a, b):
    q = a**2 + b**2
    return 0.5 + (np.sin(np.sqrt(q)) ** 2 - 0.5) / (1.0 + 0.001 * q) ** 2


def _expanded_scaffer6(z):
    # Includes the wrap-around pair g(z_D, z_1).
    return np.sum(_scaffer_g(z[:, :-1], z[:, 1:]), axis=1) + _scaffer_g(z[:, -1], z[:, 0])


def _happycat(z):
    d = z.shape[1]
    r2 = np.sum(z**2, axis=1)
    s = np.sum(z, axis=1)
    return np.abs(r2 - d) ** 0.25 + (0.5 * r2 + s) / d + 0.5


def _hgbat(z):
    d = z.shape[1]
    r2 = np.sum(z**2, axis=1)
    s = np.sum(z, axis=1)
    return np.sqrt(np.abs(r2**2 - s**2)) + (0.5 * r2 + s) / d + 0.5


def _schwefel_2_22(z):
    az = np.abs(z)
    return np.sum(az, axis=1) + np.prod(az, axis=1)


def _schwefel_1_2(z):
    return np.sum(np.cumsum(z, axis=1) ** 2, axis=1)


def _schwefel_2_26(z):
    return np.sum(z * np.sin(np.sqrt(np.abs(z))), axis=1)


def _bound_penalty(z, a=5.0, k=100.0):
    return np.where(z > a, k * (z - a) ** 4, 0.0) + np.where(z < -a, k * (-z - a) ** 4, 0.0)


def _penalized(z):
    # The (z_D - 1)^2 [1 + sin^2(2 pi z_D)] term sits inside the 0.1 bracket.
    head = np.sin(3.0 * np.pi * z[:, 0]) ** 2
    body = np.sum((z[:, :-1] - 1.0) ** 2 * (1.0 + np.sin(3.0 * np.pi * z[:, 1:]) ** 2), axis=1)
    tail = (z[:, -1] - 1.0) ** 2 * (1.0 + np.sin(_TWO_PI * z[:, -1]) ** 2)
    return 0.1 * (head + body + tail) + np.sum(_bound_penalty(z), axis=1)


def _scaffer_f7(z):
    # 1/(D-1) scales the whole sum; both terms are inside it and no outer
    # square is applied.
    d = z.shape[1]
    q = z[:, :-1] ** 2 + z[:, 1:] ** 2
    root = q**0.25
    return np.sum(root + root * np.sin(50.0 * q**0.1) ** 2, axis=1) / (d - 1)


def _salomon(z):
    # The cosine argument is the plain coordinate sum, not the norm.
    return 1.0 - np.cos(_TWO_PI * np.sum(z, axis=1)) + 0.1 * np.sum(z**2, axis=1)


def _well(z):
    # The branch tests max_i z_i, not max_i |z_i|.
    d = z.shape[1]
    return np.where(np.max(z, axis=1) < 20.0, np.sum(z**2, axis=1), 400.0 * d)


_BASIC_KERNELS = {
    1: _bent_cigar,
    2: _elliptic,
    3: _neumaier3,
    4: _discus,
    5: _different_powers,
    6: _rosenbrock,
    7: _alpine,
    8: _ackley,
    9: _weierstrass,
    10: _griewank,
    11: _rastrigin,
    12: _katsuura,
    13: _expanded_scaffer6,
    14: _happycat,
    15: _hgbat,
    16: _schwefel_2_22,
    17: _schwefel_1_2,
    18: _schwefel_2_26,
    19: _penalized,
    20: _scaffer_f7,
    21: _salomon,
    22: _well,
}

# Weighted sums: each inner kernel is evaluated on the shared point with its
# own input scaling, term order as defined.
_WEIGHTED_TERMS = {
    23: ((8, 1.0), (13, 10.0), (21, 1e-2)),
    24: ((2, 1e-9), (9, 2.0), (15, 1e-1), (16, 5e-2)),
    25: ((3, 0.25), (4, 1e-9), (7, 1.0), (18, 1e-2)),
    26: ((5, 1e-5), (6, 1e-7), (12, 1e-2)),
}

# Nested compositions: (inner triple) fed as a 3-vector into the outer kernel.
_NESTED_TERMS = {
    27: ((10, 14, 20), 18),
    28: ((19, 17, 1), 9),
    29: ((3, 12, 15), 8),
    30: ((6, 21, 14), 13),
}


def eval_basic(fid, y):
    """Evaluate a basic function f1..f22 (scaling included)."""
    f = check_function_id(fid)
    if f > 22:
        raise ValueError(f"f{f} is not a basic function")
    z, single = _as_batch(y)
    z = (scale_factor(f, z.shape[1]) / 100.0) * z
    out = _BASIC_KERNELS[f](z)
    return float(out[0]) if single else out


def eval_weighted(fid, y):
    """Evaluate a weighted composition f23..f26."""
    f = check_function_id(fid)
    if f not in _WEIGHTED_TERMS:
        raise ValueError(f"f{f} is not a weighted composition")
    z, single = _as_batch(y)
    total = np.zeros(z.shape[0])
    for inner, weight in _WEIGHTED_TERMS[f]:
        total += weight * eval_basic(inner, z)
    return float(total[0]) if single else total


def eval_nested(fid, y):
    """Evaluate a nested composition f27..f30.

    The three inner kernels run at the full input dimension; their values
    form a 3-vector handed to the outer kernel, which therefore runs at
    dimension 3 (non-finite inner values are rejected there).
    """
    f = check_function_id(fid)
    if f not in _NESTED_TERMS:
        raise ValueError(f"f{f} is not a nested composition")
    z, single = _as_batch(y)
    inner_ids, outer = _NESTED_TERMS[f]
    inner = np.column_stack([eval_basic(i, z) for i in inner_ids])
    out = eval_basic(outer, inner)
    return float(out[0]) if single else out


def eval_raw(fid, y):
    """Evaluate any of the 30 functions on untransformed coordinates."""
    cls = function_class(fid)
    if cls == "basic":
        return eval_basic(fid, y)
    if cls == "weighted":
        return eval_weighted(fid, y)
    return eval_nested(fid, y)
