"""The split form of G2 as explicit 7x7 matrices.

Elements are parametrized by (a, x, y) with a traceless 3x3 and x, y column
vectors, realized as the block matrix

    [ 0    -2y^t  -2x^t ]
    [ x      a     l_y  ]
    [ y     l_x   -a^t  ],

where l_x is the coordinate matrix of the 3-dimensional cross product x x (-).
The commutator of two realizations lands back in this block shape; the
decomposition is checked on every bracket, so a closure failure raises
immediately instead of corrupting downstream tables.

The diagonal part a = diag{s1, s2, s3} (sum zero) spans the Cartan subalgebra;
ad-eigenvalues are the functionals s_i - s_j and +-s_i, which is why every
root and weight space here is computable by exact rational kernels.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from .algebra import AlgebraTable, killing_signature as _table_killing_signature
from .linalg import mat_mul, mat_sub, mat_vec, nullspace

Q0 = Fraction(0)
Q1 = Fraction(1)
Mat3 = Tuple[Tuple[Fraction, ...], ...]
Vec3 = Tuple[Fraction, ...]


class ClosureViolation(Exception):
    """A matrix expected to live in the model failed the block-shape test."""


class NotSimultaneouslyDiagonalizable(Exception):
    """Probe elements do not commute, so no joint eigenspace decomposition exists."""


def _l_of(x: Vec3) -> Mat3:
    return (
        (Q0, -x[2], x[1]),
        (x[2], Q0, -x[0]),
        (-x[1], x[0], Q0),
    )


def _mat3(rows) -> Mat3:
    return tuple(tuple(Fraction(v) for v in row) for row in rows)


def _vec3(v) -> Vec3:
    return tuple(Fraction(t) for t in v)


@dataclass(frozen=True)
class SplitElement:
    a: Mat3
    x: Vec3
    y: Vec3

    def __post_init__(self):
        if sum(self.a[i][i] for i in range(3)) != 0:
            raise ClosureViolation("sl3 part must be traceless")

    @staticmethod
    def of(a, x, y) -> "SplitElement":
        return SplitElement(_mat3(a), _vec3(x), _vec3(y))

    @staticmethod
    def zero() -> "SplitElement":
        z3 = ((Q0,) * 3,) * 3
        return SplitElement(z3, (Q0,) * 3, (Q0,) * 3)

    def realize(self) -> List[List[Fraction]]:
        a, x, y = self.a, self.x, self.y
        ly, lx = _l_of(y), _l_of(x)
        m = [[Q0] * 7 for _ in range(7)]
        for i in range(3):
            m[0][1 + i] = -2 * y[i]
            m[0][4 + i] = -2 * x[i]
            m[1 + i][0] = x[i]
            m[4 + i][0] = y[i]
            for j in range(3):
                m[1 + i][1 + j] = a[i][j]
                m[1 + i][4 + j] = ly[i][j]
                m[4 + i][1 + j] = lx[i][j]
                m[4 + i][4 + j] = -a[j][i]
        return m

    @staticmethod
    def from_matrix(m: Sequence[Sequence[Fraction]]) -> "SplitElement":
        x = tuple(m[1 + i][0] for i in range(3))
        y = tuple(m[4 + i][0] for i in range(3))
        a = tuple(tuple(m[1 + i][1 + j] for j in range(3)) for i in range(3))
        elem = SplitElement(a, x, y)
        if elem.realize() != [list(row) for row in m]:
            raise ClosureViolation("matrix does not have the model's block shape")
        return elem

    def __add__(self, other: "SplitElement") -> "SplitElement":
        return SplitElement(
            tuple(tuple(p + q for p, q in zip(r1, r2)) for r1, r2 in zip(self.a, other.a)),
            tuple(p + q for p, q in zip(self.x, other.x)),
            tuple(p + q for p, q in zip(self.y, other.y)),
        )

    def scale(self, c) -> "SplitElement":
        c = Fraction(c)
        return SplitElement(
            tuple(tuple(c * p for p in r) for r in self.a),
            tuple(c * p for p in self.x),
            tuple(c * p for p in self.y),
        )

    def __neg__(self) -> "SplitElement":
        return self.scale(-1)

    def __sub__(self, other: "SplitElement") -> "SplitElement":
        return self + (-other)

    def is_zero(self) -> bool:
        return not any(v for row in self.a for v in row) and not any(self.x) and not any(self.y)

    def act(self, v: Sequence[Fraction]) -> Tuple[Fraction, ...]:
        """Natural action on F^7 by matrix multiplication."""
        return mat_vec(self.realize(), v)

    def coords(self) -> Tuple[Fraction, ...]:
        """Coordinates in the 14-element basis (Eij order, H1, H2, x1..x3, y1..y3)."""
        a = self.a
        off = (a[0][1], a[0][2], a[1][0], a[1][2], a[2][0], a[2][1])
        h = (a[0][0], a[0][0] + a[1][1])
        return off + h + self.x + self.y


def bracket(u: SplitElement, v: SplitElement) -> SplitElement:
    """Matrix commutator, decomposed back into (a, x, y) coordinates."""
    mu, mv = u.realize(), v.realize()
    return SplitElement.from_matrix(mat_sub(mat_mul(mu, mv), mat_mul(mv, mu)))


def _eij(i: int, j: int) -> Mat3:
    return tuple(tuple(Q1 if (r, c) == (i, j) else Q0 for c in range(3)) for r in range(3))


def _diag(s1, s2, s3) -> Mat3:
    return (
        (Fraction(s1), Q0, Q0),
        (Q0, Fraction(s2), Q0),
        (Q0, Q0, Fraction(s3)),
    )


def _e3(i: int) -> Vec3:
    return tuple(Q1 if j == i else Q0 for j in range(3))


_Z3 = ((Q0,) * 3,) * 3
_V0 = (Q0,) * 3

BASIS_NAMES = ("E12", "E13", "E21", "E23", "E31", "E32", "H1", "H2",
               "x1", "x2", "x3", "y1", "y2", "y3")

SPLIT_BASIS: Tuple[SplitElement, ...] = (
    SplitElement(_eij(0, 1), _V0, _V0),
    SplitElement(_eij(0, 2), _V0, _V0),
    SplitElement(_eij(1, 0), _V0, _V0),
    SplitElement(_eij(1, 2), _V0, _V0),
    SplitElement(_eij(2, 0), _V0, _V0),
    SplitElement(_eij(2, 1), _V0, _V0),
    SplitElement(_diag(1, -1, 0), _V0, _V0),
    SplitElement(_diag(0, 1, -1), _V0, _V0),
    SplitElement(_Z3, _e3(0), _V0),
    SplitElement(_Z3, _e3(1), _V0),
    SplitElement(_Z3, _e3(2), _V0),
    SplitElement(_Z3, _V0, _e3(0)),
    SplitElement(_Z3, _V0, _e3(1)),
    SplitElement(_Z3, _V0, _e3(2)),
)


def from_coords(coords: Sequence[Fraction]) -> SplitElement:
    out = SplitElement.zero()
    for c, b in zip(coords, SPLIT_BASIS):
        if c:
            out = out + b.scale(c)
    return out


_TABLE: Optional[AlgebraTable] = None


def structure_table() -> AlgebraTable:
    """14x14 bracket structure constants in the fixed basis (computed once)."""
    global _TABLE
    if _TABLE is None:
        _TABLE = AlgebraTable.from_function(
            14,
            lambda i, j: bracket(SPLIT_BASIS[i], SPLIT_BASIS[j]).coords(),
            BASIS_NAMES,
        )
    return _TABLE


def killing_signature(table: AlgebraTable = None) -> Tuple[int, int]:
    """(n_minus, n_plus) of the Killing form; split model gives (6, 8)."""
    return _table_killing_signature(table if table is not None else structure_table())


@dataclass(frozen=True)
class CartanElement:
    s: Tuple[Fraction, Fraction, Fraction]

    def __post_init__(self):
        if sum(self.s) != 0:
            raise ValueError("Cartan coordinates must sum to zero")

    @staticmethod
    def of(s1, s2, s3) -> "CartanElement":
        return CartanElement((Fraction(s1), Fraction(s2), Fraction(s3)))

    def to_element(self) -> SplitElement:
        return SplitElement(_diag(*self.s), _V0, _V0)


CARTAN_PROBES = (CartanElement.of(1, -1, 0), CartanElement.of(0, 1, -1))

ROOT_TAGS: Tuple[str, ...] = tuple(
    f"e{i}-e{j}" for i in (1, 2, 3) for j in (1, 2, 3) if i != j
) + ("e1", "e2", "e3", "-e1", "-e2", "-e3", "0")

WEIGHT_TAGS: Tuple[str, ...] = ("0", "e1", "e2", "e3", "-e1", "-e2", "-e3")


def tag_value(tag: str, s: Sequence[Fraction]) -> Fraction:
    """Evaluate a root/weight label at a Cartan element diag{0, s, -s}."""
    if tag == "0":
        return Q0
    if "-" in tag[1:]:
        a, b = tag.split("-")
        return s[int(a[1]) - 1] - s[int(b[1]) - 1]
    if tag.startswith("-"):
        return -s[int(tag[2]) - 1]
    return s[int(tag[1]) - 1]


def _joint_kernel(mats: List[List[List[Fraction]]], lambdas: List[Fraction], dim: int):
    stacked = []
    for m, lam in zip(mats, lambdas):
        for r in range(dim):
            row = list(m[r])
            row[r] = row[r] - lam
            stacked.append(row)
    return nullspace(stacked)


def root_decomposition(probes: Sequence[CartanElement] = CARTAN_PROBES) -> Dict[str, List[SplitElement]]:
    """Simultaneous ad-eigenspaces: 12 one-dimensional root spaces plus the 2-dim zero space."""
    t = structure_table()
    elems = [p.to_element() for p in probes]
    for i, u in enumerate(elems):
        for v in elems[i + 1:]:
            if not bracket(u, v).is_zero():
                raise NotSimultaneouslyDiagonalizable("probe elements do not commute")
    ads = [[list(r) for r in zip(*[t.mul(e.coords(), b.coords()) for b in SPLIT_BASIS])]
           for e in elems]
    # ads built column-by-column: column j is [e, basis_j]
    out: Dict[str, List[SplitElement]] = {}
    total = 0
    for tag in ROOT_TAGS:
        lams = [tag_value(tag, p.s) for p in probes]
        vecs = _joint_kernel(ads, lams, 14)
        out[tag] = [from_coords(v) for v in vecs]
        total += len(vecs)
        expect = 2 if tag == "0" else 1
        if len(vecs) != expect:
            raise NotSimultaneouslyDiagonalizable(
                f"root space {tag} has dimension {len(vecs)}, expected {expect}")
    assert total == 14
    return out


def weight_decomposition(probes: Sequence[CartanElement] = CARTAN_PROBES) -> Dict[str, List[Tuple[Fraction, ...]]]:
    """Weights of the natural 7-dimensional module: {0, +-e1, +-e2, +-e3}, all 1-dim."""
    elems = [p.to_element() for p in probes]
    for i, u in enumerate(elems):
        for v in elems[i + 1:]:
            if not bracket(u, v).is_zero():
                raise NotSimultaneouslyDiagonalizable("probe elements do not commute")
    mats = [e.realize() for e in elems]
    out: Dict[str, List[Tuple[Fraction, ...]]] = {}
    total = 0
    for tag in WEIGHT_TAGS:
        lams = [tag_value(tag, p.s) for p in probes]
        vecs = _joint_kernel(mats, lams, 7)
        out[tag] = vecs
        total += len(vecs)
    assert total == 7, "weight spaces must exhaust F^7"
    return out


# ---------------------------------------------------------------------------
# Z3-graded presentation: sl3 + U + U*, with U = F^3
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Z3Element:
    """Element of the graded model; w stands for the row vector w^t in U*."""

    a: Mat3
    u: Vec3
    w: Vec3

    @staticmethod
    def of(a, u, w) -> "Z3Element":
        return Z3Element(_mat3(a), _vec3(u), _vec3(w))

    def degrees(self) -> Tuple[int, ...]:
        out = []
        if any(v for row in self.a for v in row):
            out.append(0)
        if any(self.u):
            out.append(1)
        if any(self.w):
            out.append(2)
        return tuple(out)


def _cross3(a, b):
    return (a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0])


def _pr_sl3(m: Mat3) -> Mat3:
    tr = (m[0][0] + m[1][1] + m[2][2]) / 3
    return tuple(tuple(m[i][j] - (tr if i == j else 0) for j in range(3)) for i in range(3))


def _outer(u: Vec3, v: Vec3) -> Mat3:
    return tuple(tuple(u[i] * v[j] for j in range(3)) for i in range(3))


def z3_bracket(p: Z3Element, q: Z3Element) -> Z3Element:
    """Graded bracket: degree adds mod 3 piece by piece.

    sl3 acts naturally on U and dually on U*; [x, y] = (2 x cross y)^t for
    x, y in U; [x^t, y^t] = 2 x cross y; [x, y^t] = -3 pr_sl3(x y^t).
    """
    a, u, w = p.a, p.u, p.w
    b, x, z = q.a, q.u, q.w
    comm = mat_sub(mat_mul(a, b), mat_mul(b, a))
    puz = _pr_sl3(_outer(u, z))
    pxw = _pr_sl3(_outer(x, w))
    a_part = tuple(
        tuple(comm[i][j] - 3 * puz[i][j] + 3 * pxw[i][j] for j in range(3))
        for i in range(3)
    )
    au = mat_vec(a, x)
    bu = mat_vec(b, u)
    wz = _cross3(w, z)
    u_part = tuple(au[i] - bu[i] + 2 * wz[i] for i in range(3))
    atz = mat_vec([list(r) for r in zip(*a)], z)
    btw = mat_vec([list(r) for r in zip(*b)], w)
    ux = _cross3(u, x)
    w_part = tuple(-atz[i] + btw[i] + 2 * ux[i] for i in range(3))
    return Z3Element(_mat3(a_part), u_part, w_part)


def z3_to_split(p: Z3Element) -> SplitElement:
    """The identification with the matrix model: (a, u, w^t) -> M_(a, u, w)."""
    return SplitElement(p.a, p.u, p.w)


def root_space_report() -> Dict[str, List[List[str]]]:
    """Root spaces keyed by tag strings ("e1-e2", "-e3", ...), JSON-ready.

    Each entry lists the 14-coordinate vectors (rational strings) of the
    eigenvectors in the fixed basis.
    """
    from .scalars import fmt_q

    rd = root_decomposition()
    return {tag: [[fmt_q(c) for c in el.coords()] for el in els]
            for tag, els in rd.items()}
