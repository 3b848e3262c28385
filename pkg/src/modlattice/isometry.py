"""Exact isometry search between lattices given by Gram matrices.

Backtracking over short vectors: the image of the i-th basis vector must
be a vector of the right norm with the right inner products against the
images already chosen.  Both forms are LLL reduced first so the needed
layers stay small.  Candidate filtering runs on int64 arrays (with an a
priori overflow check); any isometry found is re-verified in exact
rational arithmetic before it is reported.
"""

from fractions import Fraction

import numpy as np

from . import linalg
from .enumeration import enumerate_vectors
from .lattice import Lattice

DEFAULT_BUDGET = 10 ** 6
DEFAULT_DIM_CAP = 16

ISOMETRIC = "isometric"
NOT_ISOMETRIC = "not-isometric"
INCONCLUSIVE = "inconclusive"


def _common_integer_grams(a: Lattice, b: Lattice):
    """Scale both grams by one factor so they become integer matrices."""
    ga, ca = linalg.clear_denominators(a.gram)
    gb, cb = linalg.clear_denominators(b.gram)
    if ca != cb:
        ga = [[x * cb for x in row] for row in ga]
        gb = [[x * ca for x in row] for row in gb]
    return ga, gb


def _check(u_rows, ga, gb):
    u = [[Fraction(x) for x in row] for row in u_rows]
    g = linalg.mat_mul(u, linalg.mat_mul(
        [[Fraction(x) for x in row] for row in gb], linalg.mat_transpose(u)))
    return linalg.mat_eq(g, [[Fraction(x) for x in row] for row in ga])


def _int_mat_mul(a, b):
    n, k, m = len(a), len(b), len(b[0])
    return [[sum(a[i][l] * b[l][j] for l in range(k)) for j in range(m)]
            for i in range(n)]


def find_isometry(a: Lattice, b: Lattice, budget=DEFAULT_BUDGET,
                  dim_cap=DEFAULT_DIM_CAP):
    """Search for U with U G_b U^T = G_a.

    Returns (status, u, nodes): u rows are the b-coordinates of the images
    of a's basis vectors.  `not-isometric` is a proof (invariant mismatch
    or exhausted search), `inconclusive` means the node budget or the
    dimension cap was hit.
    """
    if a.dim != b.dim or a.det != b.det:
        return NOT_ISOMETRIC, None, 0
    n = a.dim
    if linalg.mat_eq(a.gram, b.gram):
        ident = [[int(i == j) for j in range(n)] for i in range(n)]
        return ISOMETRIC, ident, 0
    if n > dim_cap:
        return INCONCLUSIVE, None, 0

    ga0, gb0 = _common_integer_grams(a, b)
    ga, ua = linalg.gram_lll(ga0)
    gb, ub = linalg.gram_lll(gb0)
    a_s, b_s = Lattice(ga), Lattice(gb)

    bound = max(max(ga[i][i] for i in range(n)),
                max(gb[i][i] for i in range(n)))
    ta = enumerate_vectors(a_s, bound, reduce_first=False)
    tb = enumerate_vectors(b_s, bound, reduce_first=False, collect=True)
    if ta.counts != tb.counts:
        return NOT_ISOMETRIC, None, 0

    gb_np = np.array(gb, dtype=np.int64)
    layers, dots = {}, {}
    for norm, layer in tb.layers.items():
        arr = np.array(layer.vectors, dtype=np.int64)
        layers[norm] = arr
        dots[norm] = arr @ gb_np

    vmax = max(int(np.abs(arr).max()) for arr in layers.values() if arr.size)
    gmax = max(abs(x) for row in gb for x in row)
    if n * vmax * vmax * gmax >= 2 ** 62:
        return INCONCLUSIVE, None, 0

    need = [ga[i][i] for i in range(n)]
    chosen = np.zeros((n, n), dtype=np.int64)
    nodes = 0

    def candidates(i):
        arr = layers[need[i]]
        d = dots[need[i]]
        mask = np.ones(len(arr), dtype=bool)
        for j in range(i):
            mask &= (d @ chosen[j]) == ga[i][j]
            if not mask.any():
                break
        return arr[mask]

    cand_stack = [None] * n
    pos = [0] * n
    cand_stack[0] = candidates(0)
    i = 0
    while True:
        cands = cand_stack[i]
        if pos[i] >= len(cands):
            i -= 1
            if i < 0:
                return NOT_ISOMETRIC, None, nodes
            pos[i] += 1
            continue
        nodes += 1
        if nodes > budget:
            return INCONCLUSIVE, None, nodes
        chosen[i] = cands[pos[i]]
        if i == n - 1:
            v = [[int(x) for x in row] for row in chosen]
            if _check(v, ga, gb):
                # compose back to the original bases: u = ua^-1 v ub
                ua_inv = [[int(x) for x in row] for row in linalg.inverse(ua)]
                u = _int_mat_mul(_int_mat_mul(ua_inv, v), ub)
                assert _check(u, ga0, gb0)
                return ISOMETRIC, u, nodes
            pos[i] += 1
            continue
        i += 1
        cand_stack[i] = candidates(i)
        pos[i] = 0
