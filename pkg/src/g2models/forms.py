"""Alternating forms on F^7: classification of generic 3-forms and witnesses.

A 3-form stores sorted 1-based index triples with rational coefficients.  The
symmetric Gram form attached to a 3-form and a basis {b_1..b_7},

    n(X, Y) = sum over S7 of sign(s) W(X, b_s1, b_s2) W(Y, b_s3, b_s4)
              W(b_s5, b_s6, b_s7),

is computed by grouping the 5040 permutations into 210 representatives with
s1 < s2, s3 < s4, s5 < s6 < s7 (each representative stands for 24 equal
terms); tests compare against the literal 5040-term sum.  Classification is a
signature computation over Q: nondegenerate Gram of signature {(4,3), (3,4)}
means the split orbit, definite means the compact orbit, anything degenerate
is not generic.  Scaling the Gram form by the real cube root of the exact
rational constant alpha (from X ^ (X ^ Y) = alpha (n(X,Y)X - n(X)Y)) turns
the wedge multiplication into a genuine cross product; that cube root is the
only irrational step, so witnesses live in BigFloat while orbits stay exact.

Conventions fixed here once:
  * orientation form e^{1234567};
  * hodge_star(a, signs) multiplies by prod(signs[i] for i in I) and the
    shuffle parity sign, so star(1) = e^{1234567} and star is an involution
    for the all-plus metric in dimension 7.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from .bigfloat import BigFloat, DEFAULT_DIGITS, real_cube_root, tolerance
from .linalg import SingularMatrix, inverse, mat_vec, rref, solve, sym_diagonalize
from .scalars import fmt_q, parse_q

Q0 = Fraction(0)
Q1 = Fraction(1)
Idx = Tuple[int, ...]


class DegreeOverflow(Exception):
    """Wedge product would exceed the ambient degree 7."""


class PrecisionExhausted(Exception):
    """Witness residual exceeded 10^(-P/2); retry with a higher precision."""


def _perm_sign(p: Sequence[int]) -> int:
    inv = 0
    for i in range(len(p)):
        for j in range(i + 1, len(p)):
            if p[i] > p[j]:
                inv += 1
    return -1 if inv & 1 else 1


def _det_small(rows: Sequence[Sequence]) -> object:
    """Leibniz determinant; division-free so it works over BigFloat too."""
    k = len(rows)
    total = None
    for p in itertools.permutations(range(k)):
        term = rows[0][p[0]]
        for r in range(1, k):
            term = term * rows[r][p[r]]
        if _perm_sign(p) < 0:
            term = -term
        total = term if total is None else total + term
    return 0 if total is None else total


class KForm:
    """Alternating k-form as a sorted-index coefficient map (1-based indices)."""

    __slots__ = ("degree", "coeffs")

    def __init__(self, degree: int, coeffs: Optional[Dict[Idx, Fraction]] = None):
        if not 0 <= degree <= 7:
            raise ValueError("degree must lie in 0..7")
        self.degree = degree
        clean: Dict[Idx, Fraction] = {}
        for idx, c in (coeffs or {}).items():
            idx = tuple(idx)
            if len(idx) != degree or list(idx) != sorted(idx) or len(set(idx)) != degree:
                raise ValueError(f"bad index tuple {idx} for degree {degree}")
            if any(i < 1 or i > 7 for i in idx):
                raise ValueError("indices are 1..7")
            c = Fraction(c)
            if c:
                clean[idx] = c
        self.coeffs = clean

    # -- ring-ish operations ------------------------------------------------
    def __add__(self, other: "KForm") -> "KForm":
        if self.degree != other.degree:
            raise ValueError("degree mismatch")
        out = dict(self.coeffs)
        for idx, c in other.coeffs.items():
            out[idx] = out.get(idx, Q0) + c
        return KForm(self.degree, out)

    def __neg__(self) -> "KForm":
        return KForm(self.degree, {i: -c for i, c in self.coeffs.items()})

    def __sub__(self, other: "KForm") -> "KForm":
        return self + (-other)

    def scale(self, t) -> "KForm":
        t = Fraction(t)
        return KForm(self.degree, {i: t * c for i, c in self.coeffs.items()})

    def __eq__(self, other):
        if not isinstance(other, KForm):
            return NotImplemented
        return self.degree == other.degree and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.degree, tuple(sorted(self.coeffs.items()))))

    def is_zero(self) -> bool:
        return not self.coeffs

    def __repr__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for idx, c in sorted(self.coeffs.items()):
            name = "e^{" + "".join(str(i) for i in idx) + "}" if idx else "1"
            parts.append(f"{fmt_q(c)}*{name}")
        return " + ".join(parts)

    # -- evaluation ----------------------------------------------------------
    def evaluate(self, vectors: Sequence[Sequence]) -> object:
        """Value on k vectors (0-based coordinates); alternating multilinear."""
        if len(vectors) != self.degree:
            raise ValueError("wrong number of arguments")
        total = None
        for idx, c in self.coeffs.items():
            block = [[v[i - 1] for i in idx] for v in vectors]
            term = c * _det_small(block)
            total = term if total is None else total + term
        return Q0 if total is None else total

    def coeff(self, idx: Sequence[int]) -> Fraction:
        s = tuple(sorted(idx))
        sign = _perm_sign(tuple(idx))
        return sign * self.coeffs.get(s, Q0)

    def basis_table3(self) -> Tuple[Tuple[Tuple[Fraction, ...], ...], ...]:
        """Full 7x7x7 table of values on basis triples (0-based), for solvers."""
        if self.degree != 3:
            raise ValueError("only defined for 3-forms")
        t = [[[Q0] * 7 for _ in range(7)] for _ in range(7)]
        for (i, j, k), c in self.coeffs.items():
            base = (i - 1, j - 1, k - 1)
            for perm in itertools.permutations(range(3)):
                tgt = (base[perm[0]], base[perm[1]], base[perm[2]])
                t[tgt[0]][tgt[1]][tgt[2]] = _perm_sign(perm) * c
        return tuple(tuple(tuple(row) for row in plane) for plane in t)

    # -- serialization ---------------------------------------------------------
    def to_json(self) -> dict:
        return {
            "dim": 7,
            "degree": self.degree,
            "terms": [{"idx": list(idx), "c": fmt_q(c)} for idx, c in sorted(self.coeffs.items())],
        }

    @staticmethod
    def from_json(d: dict) -> "KForm":
        if d.get("dim", 7) != 7:
            raise ValueError("only dimension 7 is supported")
        coeffs = {}
        for term in d["terms"]:
            idx = tuple(term["idx"])
            coeffs[idx] = coeffs.get(idx, Q0) + parse_q(term["c"])
        return KForm(d["degree"], coeffs)


def form(degree: int, terms: Dict[Idx, object]) -> KForm:
    return KForm(degree, {tuple(i): Fraction(c) for i, c in terms.items()})


# canonical orbit representatives, index order (E0,E1,E2,E3,F1,F2,F3) resp. (e1..e7)
OMEGA0 = form(3, {(1, 2, 5): -2, (1, 3, 6): -2, (1, 4, 7): -2, (2, 3, 4): -4, (5, 6, 7): 4})
OMEGA1 = form(3, {(1, 4, 7): 1, (2, 5, 7): 1, (3, 6, 7): 1, (1, 2, 3): 1,
                  (1, 5, 6): -1, (2, 4, 6): 1, (3, 4, 5): -1})

VOLUME_IDX = (1, 2, 3, 4, 5, 6, 7)


# ---------------------------------------------------------------------------
# exterior calculus
# ---------------------------------------------------------------------------

def wedge(a: KForm, b: KForm) -> KForm:
    if a.degree + b.degree > 7:
        raise DegreeOverflow(f"degree {a.degree} + {b.degree} > 7")
    out: Dict[Idx, Fraction] = {}
    for ia, ca in a.coeffs.items():
        sa = set(ia)
        for ib, cb in b.coeffs.items():
            if sa & set(ib):
                continue
            merged = ia + ib
            key = tuple(sorted(merged))
            out[key] = out.get(key, Q0) + _perm_sign(merged) * ca * cb
    return KForm(a.degree + b.degree, out)


def hodge_star(a: KForm, signs: Sequence[int] = (1,) * 7) -> KForm:
    """Hodge dual for a diagonal +-1 metric, orientation e^{1234567}.

    star(e^I) = (prod of signs over I) * sgn(I, I^c) * e^{I^c}.
    """
    out: Dict[Idx, Fraction] = {}
    for idx, c in a.coeffs.items():
        comp = tuple(i for i in VOLUME_IDX if i not in idx)
        sgn = _perm_sign(idx + comp)
        eps = 1
        for i in idx:
            eps *= signs[i - 1]
        out[comp] = out.get(comp, Q0) + c * sgn * eps
    return KForm(7 - a.degree, out)


def interior_product(u: Sequence, a: KForm) -> KForm:
    """(u . a)(v2..vk) = a(u, v2, .., vk)."""
    out: Dict[Idx, Fraction] = {}
    for idx, c in a.coeffs.items():
        for pos, i in enumerate(idx):
            ui = u[i - 1]
            if not ui:
                continue
            rest = idx[:pos] + idx[pos + 1:]
            sign = -1 if pos & 1 else 1
            out[rest] = out.get(rest, Q0) + sign * ui * c
    return KForm(a.degree - 1, out)


def transform(g: Sequence[Sequence[Fraction]], a: KForm) -> KForm:
    """The form X .. -> a(gX, ..); exact for rational g."""
    cols = [[g[r][c] for r in range(7)] for c in range(7)]
    out: Dict[Idx, Fraction] = {}
    for idx in itertools.combinations(range(1, 8), a.degree):
        val = a.evaluate([cols[i - 1] for i in idx])
        if val:
            out[idx] = Fraction(val)
    return KForm(a.degree, out)


def pullback(g: Sequence[Sequence[Fraction]], a: KForm) -> KForm:
    """The GL(7) action (g, a) -> a(g^{-1} ., .., g^{-1} .); contravariant."""
    return transform(inverse(g), a)


# ---------------------------------------------------------------------------
# the Gram form of a 3-form
# ---------------------------------------------------------------------------

def _patterns() -> List[Tuple[int, Tuple[int, ...]]]:
    pats = []
    for s3 in itertools.combinations(range(7), 3):
        rest = [i for i in range(7) if i not in s3]
        for pair_a in itertools.combinations(rest, 2):
            pair_b = tuple(i for i in rest if i not in pair_a)
            p = pair_a + pair_b + s3
            pats.append((_perm_sign(p), p))
    return pats


_PATTERNS = _patterns()


def _table_under_basis(a: KForm, basis: Optional[Sequence[Sequence[Fraction]]]):
    if basis is None:
        return a.basis_table3()
    # basis is a list of 7 vectors; make them the columns of the frame matrix
    frame = [[basis[c][r] for c in range(7)] for r in range(7)]
    return transform(frame, a).basis_table3()


def norm_from_form(a: KForm, basis: Optional[Sequence[Sequence[Fraction]]] = None) -> List[List[Fraction]]:
    """Gram matrix of the S7-sum bilinear form over the given basis (columns).

    basis=None means the canonical basis.  The result is symmetric and scales
    by det(P) under a change of basis P.
    """
    t = _table_under_basis(a, basis)
    # third factor of each representative term is (i, j)-independent
    pats = [(sg, p, t[p[4]][p[5]][p[6]]) for sg, p in _PATTERNS]
    pats = [(sg, p, v) for sg, p, v in pats if v]
    g = [[Q0] * 7 for _ in range(7)]
    for i in range(7):
        ti = t[i]
        for j in range(i, 7):
            tj = t[j]
            acc = Q0
            for sg, p, v3 in pats:
                v1 = ti[p[0]][p[1]]
                if not v1:
                    continue
                v2 = tj[p[2]][p[3]]
                if not v2:
                    continue
                acc += (v1 * v2 * v3) if sg > 0 else -(v1 * v2 * v3)
            acc *= 24
            g[i][j] = acc
            g[j][i] = acc
    return g


def norm_from_form_brute(a: KForm, basis: Optional[Sequence[Sequence[Fraction]]] = None) -> List[List[Fraction]]:
    """Literal 5040-term sum; the independent oracle for norm_from_form."""
    t = _table_under_basis(a, basis)
    g = [[Q0] * 7 for _ in range(7)]
    perms = [(Fraction(_perm_sign(p)), p) for p in itertools.permutations(range(7))]
    for i in range(7):
        for j in range(i, 7):
            acc = Q0
            for sg, p in perms:
                acc += sg * t[i][p[0]][p[1]] * t[j][p[2]][p[3]] * t[p[4]][p[5]][p[6]]
            g[i][j] = acc
            g[j][i] = acc
    return g


class OrbitTag(Enum):
    SPLIT = "split"
    COMPACT = "compact"
    NOT_GENERIC = "not-generic"


def gram_signature(a: KForm) -> Optional[Tuple[int, int]]:
    """Signature of the canonical-basis Gram form, or None if degenerate."""
    _, d = sym_diagonalize(norm_from_form(a))
    n_minus = sum(1 for x in d if x < 0)
    n_plus = sum(1 for x in d if x > 0)
    if n_minus + n_plus < 7:
        return None
    return (n_minus, n_plus)


def classify_orbit(a: KForm) -> OrbitTag:
    """Exact two-orbit classification of a rational 3-form."""
    sig = gram_signature(a)
    if sig is None:
        return OrbitTag.NOT_GENERIC
    if sig in ((4, 3), (3, 4)):
        return OrbitTag.SPLIT
    if sig in ((0, 7), (7, 0)):
        return OrbitTag.COMPACT
    raise AssertionError(f"impossible Gram signature {sig} for a 3-form")


# ---------------------------------------------------------------------------
# the wedge multiplication attached to a nondegenerate Gram form
# ---------------------------------------------------------------------------

def _wedge_table_for_gram(a: KForm, gram: Sequence[Sequence[Fraction]]) -> List[List[Tuple[Fraction, ...]]]:
    """Products e_i ^ e_j defined by gram(e_i ^ e_j, z) = a(e_i, e_j, z), exact."""
    t = a.basis_table3()
    ginv = inverse([list(r) for r in gram])
    tab: List[List[Tuple[Fraction, ...]]] = []
    for i in range(7):
        row = []
        for j in range(7):
            w = [t[i][j][k] for k in range(7)]
            row.append(mat_vec(ginv, w))
        tab.append(row)
    return tab


def normalization_constant(a: KForm) -> Fraction:
    """The exact rational alpha with X ^ (X ^ Y) = alpha (n(X,Y) X - n(X) Y).

    n is the canonical Gram form and ^ its wedge multiplication.  Rescaling n
    by the real cube root of alpha produces a cross product; in particular
    sign(alpha) tells how the normalized norm is oriented.
    """
    gram = norm_from_form(a)
    p, d = sym_diagonalize(gram)
    if any(x == 0 for x in d):
        raise ValueError("form is not generic")
    tab = _wedge_table_for_gram(a, gram)

    def wedge_vec(u, v):
        out = [Q0] * 7
        for i, ui in enumerate(u):
            if not ui:
                continue
            for j, vj in enumerate(v):
                if not vj:
                    continue
                s = ui * vj
                for k in range(7):
                    if tab[i][j][k]:
                        out[k] += s * tab[i][j][k]
        return out

    cols = [[p[r][c] for r in range(7)] for c in range(7)]
    x = cols[0]
    nx = d[0]
    alpha = None
    for y in cols[1:3]:
        w = wedge_vec(x, wedge_vec(x, y))
        # y is gram-orthogonal to x, so w must equal -alpha n(x) y
        k = next(i for i in range(7) if y[i])
        cand = -w[k] / (nx * y[k])
        if any(w[i] != -cand * nx * y[i] for i in range(7)):
            raise AssertionError("wedge square is not scalar; form cannot be generic")
        if alpha is None:
            alpha = cand
        elif alpha != cand:
            raise AssertionError("normalization constant depends on probe")
    return alpha


def normalized_signature(a: KForm) -> Optional[Tuple[int, int]]:
    """Signature of the cross-product-normalized norm: (4,3) split, (0,7) compact."""
    sig = gram_signature(a)
    if sig is None:
        return None
    alpha = normalization_constant(a)
    if alpha < 0:
        sig = (sig[1], sig[0])
    return sig


# ---------------------------------------------------------------------------
# constructive orbit witnesses
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Witness:
    """Invertible frame phi with a(phi u, phi v, phi w) = rep(u, v, w) up to residual."""

    phi: Tuple[Tuple[BigFloat, ...], ...]
    target: OrbitTag
    residual: BigFloat
    digits: int

    def to_json(self) -> dict:
        return {
            "phi": [[str(x) for x in row] for row in self.phi],
            "residual": f"{self.residual.val:E}",
            "target": self.target.value,
        }


def _bf_mat(m: Sequence[Sequence], digits: int) -> List[List[BigFloat]]:
    return [[BigFloat.of(x, digits) for x in row] for row in m]


def _bf_bilinear(gram, u, v):
    acc = None
    for i, ui in enumerate(u):
        for j, vj in enumerate(v):
            t = ui * gram[i][j] * vj
            acc = t if acc is None else acc + t
    return acc


def _bf_wedge(tab, u, v):
    out = [None] * 7
    for i, ui in enumerate(u):
        for j, vj in enumerate(v):
            s = ui * vj
            for k in range(7):
                t = s * tab[i][j][k]
                out[k] = t if out[k] is None else out[k] + t
    return [x for x in out]


def _residual_against(a: KForm, rep: KForm, cols: Sequence[Sequence[BigFloat]], digits: int) -> BigFloat:
    worst = BigFloat.of(0, digits)
    for idx in itertools.combinations(range(1, 8), 3):
        val = a.evaluate([cols[i - 1] for i in idx])
        want = rep.coeffs.get(idx, Q0)
        diff = abs(BigFloat.of(val, digits) - BigFloat.of(want, digits))
        if worst < diff:
            worst = diff
    return worst


def orbit_witness(a: KForm, digits: int = DEFAULT_DIGITS) -> Witness:
    """Constructive change of frame onto the orbit representative.

    Exactly-representative inputs short-circuit to the identity witness.  The
    irrational steps (one real cube root, a few square roots) run in BigFloat
    at the requested precision; the residual bound is 10^(-digits/2) and
    PrecisionExhausted reports a miss.
    """
    tag = classify_orbit(a)
    if tag is OrbitTag.NOT_GENERIC:
        raise ValueError("cannot build a witness for a non-generic form")
    ident = tuple(tuple(BigFloat.of(1 if i == j else 0, digits) for j in range(7)) for i in range(7))
    if a == OMEGA0:
        return Witness(ident, OrbitTag.SPLIT, BigFloat.of(0, digits), digits)
    if a == OMEGA1:
        return Witness(ident, OrbitTag.COMPACT, BigFloat.of(0, digits), digits)

    gram = norm_from_form(a)
    p, d = sym_diagonalize(gram)
    alpha = normalization_constant(a)
    s = real_cube_root(alpha, digits)
    tol = tolerance(digits)

    tab_q = _wedge_table_for_gram(a, gram)
    inv_s = BigFloat.of(1, digits) / s
    tab = [[[inv_s * BigFloat.of(tab_q[i][j][k], digits) for k in range(7)] for j in range(7)]
           for i in range(7)]
    ngram = [[s * BigFloat.of(gram[i][j], digits) for j in range(7)] for i in range(7)]
    cols_p = [[Fraction(p[r][c]) for r in range(7)] for c in range(7)]

    def bwedge(u, v):
        return _bf_wedge(tab, u, v)

    def nb(u, v):
        return _bf_bilinear(ngram, u, v)

    if tag is OrbitTag.SPLIT:
        idx0 = next(i for i in range(7) if d[i] != 0 and (d[i] > 0) == (alpha < 0))
        x0 = [BigFloat.of(v, digits) for v in cols_p[idx0]]
        scale = (-nb(x0, x0)).sqrt()
        x = [v / scale for v in x0]
        fhat = [[None] * 7 for _ in range(7)]
        for j in range(7):
            ej = [BigFloat.of(1 if r == j else 0, digits) for r in range(7)]
            col = bwedge(x, ej)
            for r in range(7):
                fhat[r][j] = col[r]
        for r in range(7):
            fhat[r][r] = fhat[r][r] - BigFloat.of(1, digits)
        null = _bf_nullspace(rref(fhat, tol=tol), digits)
        if len(null) != 3:
            raise PrecisionExhausted(f"plus-eigenspace dimension {len(null)} at {digits} digits")
        y1, y2, y3 = null
        t = BigFloat.of(a.evaluate([y1, y2, y3]), digits)
        if abs(t) <= tol:
            raise PrecisionExhausted("top form degenerates on the plus-eigenspace")
        y1 = [v * (BigFloat.of(-4, digits) / t) for v in y1]
        ys = [y1, y2, y3]
        zs = [[v * BigFloat.of(Fraction(1, 2), digits) for v in bwedge(ys[(i + 1) % 3], ys[(i + 2) % 3])]
              for i in range(3)]
        cols = [x, ys[0], ys[1], ys[2], zs[0], zs[1], zs[2]]
        rep = OMEGA0
    else:
        idx0 = 0
        x0 = [BigFloat.of(v, digits) for v in cols_p[idx0]]
        scale = nb(x0, x0)
        if scale <= tol:
            raise PrecisionExhausted("no positive direction found")
        x = [v / scale.sqrt() for v in x0]

        def ortho_unit(cands, fixed):
            for cand in cands:
                u = [BigFloat.of(v, digits) for v in cand]
                for f in fixed:
                    c = nb(u, f)
                    u = [a_ - c * b_ for a_, b_ in zip(u, f)]
                nu = nb(u, u)
                if tol < nu:
                    r = nu.sqrt()
                    return [v / r for v in u]
            raise PrecisionExhausted("orthonormal frame construction stalled")

        cands = cols_p[1:] + [tuple(Q1 if r == j else Q0 for r in range(7)) for j in range(7)]
        x1 = ortho_unit(cands, [x])
        fy1 = bwedge(x, x1)
        x2 = ortho_unit(cands, [x, x1, fy1])
        fy2 = bwedge(x, x2)
        x3 = bwedge(x1, x2)
        fy3 = bwedge(x, x3)
        cols = [x1, x2, x3, fy1, fy2, fy3, x]
        rep = OMEGA1

    res = _residual_against(a, rep, cols, digits)
    if tolerance(digits) < res:
        raise PrecisionExhausted(f"residual {res.val:E} exceeds tolerance at {digits} digits")
    phi = tuple(tuple(cols[c][r] for c in range(7)) for r in range(7))
    return Witness(phi, tag, res, digits)


def _bf_nullspace(rref_result, digits: int) -> List[List[BigFloat]]:
    r, piv = rref_result
    cols = 7
    piv_set = set(piv)
    basis = []
    for free in range(cols):
        if free in piv_set:
            continue
        v = [BigFloat.of(0, digits)] * cols
        v[free] = BigFloat.of(1, digits)
        for row_idx, pc in enumerate(piv):
            v[pc] = -r[row_idx][free]
        basis.append(v)
    return basis


# ---------------------------------------------------------------------------
# the operator F(alpha) = star(OMEGA1 ^ alpha) on 2-forms
# ---------------------------------------------------------------------------

TWO_FORM_INDEX: Tuple[Idx, ...] = tuple(itertools.combinations(range(1, 8), 2))


def two_form_from_coords(v: Sequence[Fraction]) -> KForm:
    return KForm(2, {idx: c for idx, c in zip(TWO_FORM_INDEX, v) if c})


def two_form_coords(a: KForm) -> Tuple[Fraction, ...]:
    return tuple(a.coeffs.get(idx, Q0) for idx in TWO_FORM_INDEX)


def bivector_to_matrix(a: KForm) -> List[List[Fraction]]:
    """e^{ij} -> E_ji - E_ij; identifies 2-forms with skew 7x7 matrices."""
    m = [[Q0] * 7 for _ in range(7)]
    for (i, j), c in a.coeffs.items():
        m[j - 1][i - 1] += c
        m[i - 1][j - 1] -= c
    return m


def matrix_to_bivector(m: Sequence[Sequence[Fraction]]) -> KForm:
    out = {}
    for i in range(7):
        for j in range(i + 1, 7):
            if m[j][i] != -m[i][j]:
                raise ValueError("matrix is not skew-symmetric")
            if m[j][i]:
                out[(i + 1, j + 1)] = m[j][i]
    return KForm(2, out)


def f_operator_matrix(a: KForm = OMEGA1) -> List[List[Fraction]]:
    """21x21 matrix of alpha -> star(a ^ alpha) on the lexicographic e^{ij} basis."""
    cols = []
    for idx in TWO_FORM_INDEX:
        img = hodge_star(wedge(a, KForm(2, {idx: Q1})))
        cols.append(two_form_coords(img))
    return [[cols[j][i] for j in range(21)] for i in range(21)]


def f_operator_spectrum(a: KForm = OMEGA1) -> Dict[Fraction, List[Tuple[Fraction, ...]]]:
    """Exact eigenspaces of F: +1 with multiplicity 14 and -2 with multiplicity 7."""
    from .linalg import nullspace

    m = f_operator_matrix(a)
    out: Dict[Fraction, List[Tuple[Fraction, ...]]] = {}
    for lam in (Q1, Fraction(-2)):
        shifted = [[m[i][j] - (lam if i == j else Q0) for j in range(21)] for i in range(21)]
        out[lam] = nullspace(shifted)
    return out


def coassociative_form() -> KForm:
    """The 4-form L(x,y,z,u) = -1/2 n(x, associator(y,z,u)) of the division octonions."""
    from .octonions import DIVISION, Octonion, associator

    coeffs: Dict[Idx, Fraction] = {}
    basis = [DIVISION.basis_octonion(i) for i in range(1, 8)]
    for idx in itertools.combinations(range(1, 8), 4):
        x, y, z, u = (basis[i - 1] for i in idx)
        asc = associator(y, z, u)
        val = Fraction(-1, 2) * x.norm_b(asc)
        if val:
            coeffs[idx] = val
    return KForm(4, coeffs)
