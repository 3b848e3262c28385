"""Build and validate the bundled lattice catalogue.

Every Gram matrix is constructed from scratch (root system data, binary
codes, the hexacode, glue vectors, or direct search) and then validated:
determinant, parity, level, minimum and kissing number by exact
enumeration, and strong modularity via theta windows plus exact isometry
certificates for every exact divisor of the level.  Only a fully
validated set is written to src/modlattice/data/lattices.json.

Run from the repository root with the package importable.
"""

import itertools
import json
import sys
import time
from fractions import Fraction
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from modlattice import linalg
from modlattice.arith import exact_divisors
from modlattice.enumeration import enumerate_vectors, minimum, theta_series
from modlattice.isometry import ISOMETRIC, find_isometry
from modlattice.lattice import (
    Lattice, level, integral_dual_scale, partial_dual, rescale, dual)


def basis_from_generators(rows, ncols):
    """Row span of the generators as a square basis matrix (exact)."""
    mat = [[Fraction(x) for x in row] for row in rows]
    cleared, c = linalg.clear_denominators(mat)
    h = linalg.hnf(cleared)
    assert len(h) == ncols, "generators do not span: rank %d" % len(h)
    return [[Fraction(x, c) for x in row] for row in h]


def gram_of_rows(rows, form=None, scale=1):
    n = len(rows[0])
    if form is None:
        form = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    b = [[Fraction(x) for x in row] for row in rows]
    g = linalg.mat_mul(b, linalg.mat_mul(form, linalg.mat_transpose(b)))
    out = []
    for row in g:
        out_row = []
        for x in row:
            v = Fraction(x) * scale
            assert v.denominator == 1, "non-integral gram entry %s" % v
            out_row.append(int(v))
        out.append(out_row)
    return out


# -- root lattices ----------------------------------------------------------

def simply_laced_gram(n, edges):
    g = [[2 * int(i == j) for j in range(n)] for i in range(n)]
    for i, j in edges:
        g[i - 1][j - 1] = g[j - 1][i - 1] = -1
    return g


A2 = [[2, 1], [1, 2]]
D4 = simply_laced_gram(4, [(1, 2), (2, 3), (2, 4)])
E6 = simply_laced_gram(6, [(1, 3), (3, 4), (4, 5), (5, 6), (2, 4)])
E7 = simply_laced_gram(7, [(1, 3), (3, 4), (4, 5), (5, 6), (6, 7), (2, 4)])
E8 = simply_laced_gram(8, [(1, 3), (3, 4), (4, 5), (5, 6), (6, 7), (7, 8),
                           (2, 4)])


def dn_rows(n):
    """Generators of the checkerboard lattice in standard coordinates."""
    rows = [[0] * n for _ in range(n)]
    for i in range(n - 1):
        rows[i][i], rows[i][i + 1] = 1, -1
    rows[n - 1][0] = rows[n - 1][1] = 1
    return rows


# -- binary codes -----------------------------------------------------------

GOLAY_A = [
    [1, 0, 0, 1, 1, 1, 1, 1, 0, 0, 0, 1],
    [0, 1, 0, 0, 1, 1, 1, 1, 1, 0, 1, 0],
    [0, 0, 1, 0, 0, 1, 1, 1, 1, 1, 0, 1],
    [1, 0, 0, 1, 0, 0, 1, 1, 1, 1, 1, 0],
    [1, 1, 0, 0, 1, 0, 0, 1, 1, 1, 0, 1],
    [1, 1, 1, 0, 0, 1, 0, 0, 1, 1, 1, 0],
    [1, 1, 1, 1, 0, 0, 1, 0, 0, 1, 0, 1],
    [1, 1, 1, 1, 1, 0, 0, 1, 0, 0, 1, 0],
    [0, 1, 1, 1, 1, 1, 0, 0, 1, 0, 0, 1],
    [0, 0, 1, 1, 1, 1, 1, 0, 0, 1, 1, 0],
    [0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 1, 1],
    [1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 1],
]


def golay_generators():
    rows = []
    for i in range(12):
        row = [int(i == j) for j in range(12)] + GOLAY_A[i]
        rows.append(row)
    dist = {}
    for sel in itertools.product((0, 1), repeat=12):
        w = sum((sum(s * r for s, r in zip(sel, col)) % 2)
                for col in zip(*rows))
        dist[w] = dist.get(w, 0) + 1
    assert sorted(dist.items()) == [
        (0, 1), (8, 759), (12, 2576), (16, 759), (24, 1)], dist
    return rows


def rm_1_4_generators():
    rows = [[1] * 16]
    for bit in range(4):
        rows.append([(i >> bit) & 1 for i in range(16)])
    count = {}
    for sel in itertools.product((0, 1), repeat=5):
        w = sum((sum(s * r[i] for s, r in zip(sel, rows)) % 2)
                for i in range(16))
        count[w] = count.get(w, 0) + 1
    assert sorted(count.items()) == [(0, 1), (8, 30), (16, 1)], count
    return rows


def leech_gram():
    """Scaled code lattice: congruence conditions mod 8 on Z^24.

    Generators: doubled Golay lifts, 4 D24, and one odd-class vector;
    inner products divided by 8.
    """
    gens = []
    for row in golay_generators():
        gens.append([2 * x for x in row])
    for row in dn_rows(24):
        gens.append([4 * x for x in row])
    gens.append([-3] + [1] * 23)
    basis = basis_from_generators(gens, 24)
    return gram_of_rows(basis, scale=Fraction(1, 8))


def bw16_gram():
    """Construction B on the [16,5,8] first order Reed-Muller code."""
    gens = [row[:] for row in rm_1_4_generators()]
    for row in dn_rows(16):
        gens.append([2 * x for x in row])
    basis = basis_from_generators(gens, 16)
    return gram_of_rows(basis, scale=Fraction(1, 2))


# -- hexacode / Eisenstein construction -------------------------------------

# F4 = {0, 1, w, w^2} encoded as pairs over F2 with w^2 = w + 1
F4 = [(0, 0), (1, 0), (0, 1), (1, 1)]


def f4_mul(a, b):
    (a0, a1), (b0, b1) = a, b
    # (a0 + a1 w)(b0 + b1 w) with w^2 = w + 1
    c0 = (a0 * b0 + a1 * b1) % 2
    c1 = (a0 * b1 + a1 * b0 + a1 * b1) % 2
    return (c0, c1)


def f4_add(a, b):
    return ((a[0] + b[0]) % 2, (a[1] + b[1]) % 2)


W = (0, 1)
W2 = (1, 1)
ONE = (1, 0)


def hexacode_basis():
    """Codewords (a, b, c, f(1), f(w), f(w^2)) for f = x^2, x, 1."""
    words = []
    for a, b, c in ((ONE, (0, 0), (0, 0)),
                    ((0, 0), ONE, (0, 0)),
                    ((0, 0), (0, 0), ONE)):
        word = [a, b, c]
        for p in (ONE, W, W2):
            p2 = f4_mul(p, p)
            word.append(f4_add(f4_add(f4_mul(a, p2), f4_mul(b, p)), c))
        words.append(word)
    for word in words:
        assert sum(1 for s in word if s != (0, 0)) >= 4
    return words


def eis_lift(sym):
    """A residue representative in Z[w] (as a pair p + q w) mod 2."""
    return {(0, 0): (0, 0), (1, 0): (1, 0),
            (0, 1): (0, 1), (1, 1): (-1, -1)}[sym]


def eis_mul_w(pair):
    p, q = pair
    # w (p + q w) = -q + (p - q) w
    return (-q, p - q)


def k12_gram():
    """Preimage of the hexacode in the sixth power of the Eisenstein ring."""
    # real form of the hermitian inner product on one Eisenstein slot
    phi_block = [[Fraction(1), Fraction(-1, 2)], [Fraction(-1, 2), Fraction(1)]]
    phi = [[Fraction(0)] * 12 for _ in range(12)]
    for s in range(6):
        for i in range(2):
            for j in range(2):
                phi[2 * s + i][2 * s + j] = phi_block[i][j]
    gens = []
    for s in range(6):
        for vec in ((2, 0), (0, 2)):
            row = [0] * 12
            row[2 * s], row[2 * s + 1] = vec
            gens.append(row)
    for word in hexacode_basis():
        lifted = [eis_lift(sym) for sym in word]
        for mult in (False, True):
            row = []
            for pair in lifted:
                row.extend(eis_mul_w(pair) if mult else pair)
            gens.append(row)
    basis = basis_from_generators(gens, 12)
    return gram_of_rows(basis, form=phi)


# -- glued lattices ---------------------------------------------------------

def d_plus_gram(n):
    """Checkerboard plus the all-halves glue vector (n divisible by 4)."""
    gens = [row[:] for row in dn_rows(n)]
    gens.append([Fraction(1, 2)] * n)
    basis = basis_from_generators(gens, n)
    return gram_of_rows(basis)


# -- base lattices for the admissible levels --------------------------------

def scaled_sum(g1, g2, c):
    """g1 perp c*g2 as a block diagonal integer matrix."""
    n1, n2 = len(g1), len(g2)
    out = [[0] * (n1 + n2) for _ in range(n1 + n2)]
    for i in range(n1):
        for j in range(n1):
            out[i][j] = g1[i][j]
    for i in range(n2):
        for j in range(n2):
            out[n1 + i][n1 + j] = c * g2[i][j]
    return out


P7 = [[2, 1], [1, 4]]

BASE_GRAMS = {
    6: scaled_sum(A2, A2, 2),
    7: P7,
    11: [[2, 1], [1, 6]],
    14: scaled_sum(P7, P7, 2),
    15: scaled_sum(A2, A2, 5),
    23: [[2, 1], [1, 12]],
}


def strongly_modular_ok(lat, n_level, window=12, budget=2 * 10 ** 6):
    """Theta window equality and an exact isometry for every exact divisor."""
    base_theta = None
    for m in exact_divisors(n_level):
        pd = rescale(partial_dual(lat, m), m)
        if linalg.mat_eq(pd.gram, lat.gram):
            continue
        if base_theta is None:
            base_theta = theta_series(lat, window)
        if theta_series(pd, window) != base_theta:
            return False, "theta mismatch at m=%d" % m
        if lat.dim <= 16:
            st, _, _ = find_isometry(lat, pd, budget=budget)
            if st != ISOMETRIC:
                return False, "isometry %s at m=%d" % (st, m)
    return True, ""


def search_level5_base():
    """Complete search for an even 4-dim lattice with det 25, level 5,
    strongly 5-modular.

    Any such lattice has min 2 (Hermite bound forces it) and a reduced
    basis with ascending even diagonal d, |2 g_ij| <= d_i for i < j, and
    d1 d2 d3 d4 <= 4 det = 100.  Scanning that finite box is therefore
    exhaustive.  All finds must be isometric (the genus for prime level
    in this dimension contains one class); this is asserted.
    """
    diags = []
    for d2 in range(2, 51, 2):
        for d3 in range(d2, 51, 2):
            for d4 in range(d3, 51, 2):
                if 2 * d2 * d3 * d4 <= 100:
                    diags.append((2, d2, d3, d4))
    found = []
    for d in diags:
        r1 = range(-1, 2)
        r2 = range(-(d[1] // 2), d[1] // 2 + 1)
        r3 = range(-(d[2] // 2), d[2] // 2 + 1)
        for b01, b02, b03 in itertools.product(r1, repeat=3):
            for b12, b13 in itertools.product(r2, repeat=2):
                for b23 in r3:
                    g = [[d[0], b01, b02, b03],
                         [b01, d[1], b12, b13],
                         [b02, b12, d[2], b23],
                         [b03, b13, b23, d[3]]]
                    try:
                        lat = Lattice(g)
                    except Exception:
                        continue
                    if lat.det != 25 or level(lat) != 5:
                        continue
                    ok, _ = strongly_modular_ok(lat, 5)
                    if ok:
                        found.append(lat)
    if not found:
        raise RuntimeError("no level 5 base lattice found in the search box")
    first = found[0]
    for other in found[1:]:
        st, _, _ = find_isometry(first, other)
        assert st == ISOMETRIC, "level 5 search found non-isometric lattices"
    return first.gram


# -- assembly ---------------------------------------------------------------

def entry(name, lvl, gram, note, **claims):
    return {"name": name, "level": lvl, "gram": gram, "note": note,
            "claims": claims}


def validate(e):
    lat = Lattice(e["gram"])
    c = e["claims"]
    t0 = time.time()
    assert lat.det == c["det"], (e["name"], lat.det)
    assert lat.is_even == c["even"], e["name"]
    lvl = level(lat) if lat.is_even else integral_dual_scale(lat)
    assert lvl == e["level"], (e["name"], lvl)
    rep = minimum(lat)
    assert rep.minimum == c["min"], (e["name"], rep.minimum)
    assert rep.kissing == c["kissing"], (e["name"], rep.kissing)
    if c.get("strongly_modular"):
        window = 12 if lat.dim <= 12 else 10
        ok, why = strongly_modular_ok(lat, lvl, window=window)
        assert ok, (e["name"], why)
    print("  %-10s dim %2d det %-6s min %s kissing %-6d level %-2d  %.1fs"
          % (e["name"], lat.dim, lat.det, rep.minimum, rep.kissing, lvl,
             time.time() - t0))


def main():
    print("constructing lattices ...")
    leech = leech_gram()
    bw16 = bw16_gram()
    k12 = k12_gram()
    d16p = d_plus_gram(16)
    d12p = d_plus_gram(12)
    print("searching for the level 5 base ...")
    t0 = time.time()
    n5 = search_level5_base()
    print("  found", n5, "in %.1fs" % (time.time() - t0))

    entries = [
        entry("A2", 3, A2,
              "Hexagonal root lattice; base for level 3.",
              det=3, min=2, kissing=6, even=True, strongly_modular=True,
              strongly_perfect=True, extremal=True, theta_base=True),
        entry("D4", 2, D4,
              "Checkerboard root lattice in dimension 4; base for level 2.",
              det=4, min=2, kissing=24, even=True, strongly_modular=True,
              strongly_perfect=True, extremal=True, theta_base=True),
        entry("E6", 3, E6,
              "Root lattice from the E6 diagram.",
              det=3, min=2, kissing=72, even=True),
        entry("E7", 4, E7,
              "Root lattice from the E7 diagram.",
              det=2, min=2, kissing=126, even=True),
        entry("E8", 1, E8,
              "Even unimodular root lattice in dimension 8; "
              "base for level 1.",
              det=1, min=2, kissing=240, even=True, strongly_modular=True,
              strongly_perfect=True, extremal=True, theta_base=True),
        entry("K12", 3, k12,
              "Coxeter-Todd lattice: preimage of the hexacode under "
              "reduction of the sixth power of the Eisenstein integers "
              "modulo 2.",
              det=729, min=4, kissing=756, even=True, strongly_modular=True,
              strongly_perfect=True, extremal=True),
        entry("BW16", 2, bw16,
              "Barnes-Wall lattice: construction B on the first order "
              "Reed-Muller code of length 16, rescaled.",
              det=256, min=4, kissing=4320, even=True, strongly_modular=True,
              strongly_perfect=True, extremal=True),
        entry("Leech", 1, leech,
              "Leech lattice: congruence conditions modulo 8 from the "
              "binary Golay code on standard coordinates, rescaled.",
              det=1, min=4, kissing=196560, even=True, strongly_modular=True,
              strongly_perfect=True, extremal=True),
        entry("D16plus", 1, d16p,
              "Checkerboard lattice of dimension 16 glued by the "
              "all-halves vector; even unimodular, not isometric to "
              "E8 perp E8 but with the same theta series.",
              det=1, min=2, kissing=480, even=True, strongly_modular=True,
              extremal=True),
        entry("D12plus", 1, d12p,
              "Checkerboard lattice of dimension 12 glued by the "
              "all-halves vector (norm 3): odd unimodular with no "
              "vectors of norm 1; shadow parameter m = 1.",
              det=1, min=2, kissing=264, even=False, shadow_m=1),
        entry("N5base", 5, n5,
              "Smallest even strongly 5-modular lattice (dimension 4, "
              "determinant 25), found by exhaustive search over small "
              "Gram matrices; the genus is unique.",
              det=25, min=2, kissing=None, even=True, strongly_modular=True,
              theta_base=True),
        entry("N6base", 6, BASE_GRAMS[6],
              "A2 perp sqrt(2) A2: even strongly 6-modular of dimension "
              "4 and determinant 36.  The dimension 4 genus for level 6 "
              "is not unique; this representative fixes the theta series "
              "used for level 6.",
              det=36, min=2, kissing=6, even=True, strongly_modular=True,
              theta_base=True),
        entry("N7base", 7, BASE_GRAMS[7],
              "Binary quadratic form of discriminant 7; base for level 7.",
              det=7, min=2, kissing=2, even=True, strongly_modular=True,
              theta_base=True),
        entry("N11base", 11, BASE_GRAMS[11],
              "Binary quadratic form of discriminant 11; base for "
              "level 11.",
              det=11, min=2, kissing=2, even=True, strongly_modular=True,
              theta_base=True),
        entry("N14base", 14, BASE_GRAMS[14],
              "P7 perp sqrt(2) P7 for the discriminant 7 form P7; even "
              "strongly 14-modular of dimension 4, determinant 196.",
              det=196, min=2, kissing=2, even=True, strongly_modular=True,
              theta_base=True),
        entry("N15base", 15, BASE_GRAMS[15],
              "A2 perp sqrt(5) A2: even strongly 15-modular of dimension "
              "4, determinant 225.",
              det=225, min=2, kissing=6, even=True, strongly_modular=True,
              theta_base=True),
        entry("N23base", 23, BASE_GRAMS[23],
              "Binary quadratic form of discriminant 23; base for "
              "level 23.",
              det=23, min=2, kissing=2, even=True, strongly_modular=True,
              theta_base=True),
    ]

    # fill measured kissing for the searched entry
    for e in entries:
        if e["claims"].get("kissing") is None:
            rep = minimum(Lattice(e["gram"]))
            e["claims"]["min"] = (rep.minimum.numerator
                                  if isinstance(rep.minimum, Fraction)
                                  else int(rep.minimum))
            e["claims"]["kissing"] = rep.kissing

    print("validating ...")
    for e in entries:
        validate(e)

    out = Path(__file__).resolve().parent.parent / "src" / "modlattice" / \
        "data" / "lattices.json"
    with open(out, "w") as fh:
        json.dump(entries, fh, indent=1)
        fh.write("\n")
    print("wrote", out)


if __name__ == "__main__":
    main()
