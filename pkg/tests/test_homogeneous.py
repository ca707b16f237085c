import random
from fractions import Fraction

import pytest

from g2models import homogeneous as hg
from g2models import octonions as oc
from g2models.derivations import derivations_of_form
from g2models.forms import OMEGA0, OMEGA1, transform
from g2models.linalg import coords_in_basis, det, mat_mul, mat_vec

Q = Fraction
rng = random.Random(99)


def e(i):
    return tuple(Q(1 if j == i else 0) for j in range(7))


def rand_perp(space, x):
    while True:
        y = tuple(Q(rng.randint(-3, 3)) for _ in range(7))
        c = Q(space.norm_b(y, x))
        nx = space.norm_q(x)
        y = tuple(yi - c * xi / nx for yi, xi in zip(y, x))
        if any(y):
            return y


@pytest.fixture(scope="module")
def reductive():
    return hg.reductive_decomposition()


def test_phi_examples(reductive):
    y = e(0)
    phi = hg.phi_derivation(y)
    assert tuple(mat_vec(phi, hg.E7)) == tuple(2 * t for t in y)
    zero = hg.phi_derivation((Q(0),) * 7)
    assert all(not v for row in zero for v in row)
    with pytest.raises(hg.NotOrthogonal):
        hg.phi_derivation(hg.E7)


def test_phi_is_a_derivation_membership(reductive):
    # oracle: membership in the solved derivation algebra of the 3-form
    gc = derivations_of_form(OMEGA1)
    for i in range(6):
        assert gc.contains(hg.phi_derivation(e(i)))


def test_reductive_dims_and_orthogonality(reductive):
    rd = reductive
    assert rd.h.dim == 8 and len(rd.m) == 6
    kg = hg.combined_killing_gram(rd)
    assert all(kg[i][8 + j] == 0 for i in range(8) for j in range(6))


def test_kappa_on_m_is_minus_48_n(reductive):
    rd = reductive
    kg = hg.combined_killing_gram(rd)
    for i in range(6):
        for j in range(6):
            nij = oc.DIVISION.norm_b(rd.perp_basis[i], rd.perp_basis[j])
            assert kg[8 + i][8 + j] == -48 * nij


def test_m_bracket_rule_with_j_twist(reductive):
    rd = reductive
    space = oc.DIVISION
    x = hg.E7
    full = rd.h.matrices() + rd.m_matrices
    flat = [tuple(v for row in b for v in row) for b in full]
    for _ in range(20):
        y1 = rand_perp(space, x)
        y2 = rand_perp(space, x)
        p1 = hg.phi_derivation(y1)
        p2 = hg.phi_derivation(y2)
        comm = mat_mul(p1, p2)
        c2 = mat_mul(p2, p1)
        comm = [[comm[i][j] - c2[i][j] for j in range(7)] for i in range(7)]
        coords = coords_in_basis(flat, tuple(v for row in comm for v in row))
        w = oc.commutator(space.octonion(0, y1), space.octonion(0, y2))
        pr = tuple(w.vec[i] - Q(space.norm_b(w.vec, x)) * x[i] for i in range(7))
        want = hg.phi_derivation(space.cross(x, pr))
        want_coords = coords_in_basis(flat, tuple(v for row in want for v in row))
        assert coords[8:] == want_coords[8:]


def test_plain_identification_bracket_is_2j_cross(reductive):
    rd = reductive
    space = oc.DIVISION
    x = hg.E7
    full = rd.h.matrices() + rd.m_matrices
    flat = [tuple(v for row in b for v in row) for b in full]

    def m_part(mat):
        return coords_in_basis(flat, tuple(v for row in mat for v in row))[8:]

    for _ in range(20):
        y1 = rand_perp(space, x)
        y2 = rand_perp(space, x)
        p1, p2 = hg.phi_derivation(y1), hg.phi_derivation(y2)
        comm = mat_mul(p1, p2)
        c2 = mat_mul(p2, p1)
        comm = [[comm[i][j] - c2[i][j] for j in range(7)] for i in range(7)]
        target = tuple(2 * t for t in space.cross(x, space.cross(y1, y2)))
        assert m_part(comm) == m_part(hg.phi_derivation(target))


def test_naturally_reductive_identity(reductive):
    rd = reductive
    space = oc.DIVISION
    x = hg.E7
    kg = hg.combined_killing_gram(rd)
    full = rd.h.matrices() + rd.m_matrices
    flat = [tuple(v for row in b for v in row) for b in full]

    def m_coords(mat):
        return coords_in_basis(flat, tuple(v for row in mat for v in row))[8:]

    def kappa_m(a_coords, b_coords):
        return sum(a_coords[i] * kg[8 + i][8 + j] * b_coords[j]
                   for i in range(6) for j in range(6))

    for _ in range(15):
        ys = [rand_perp(space, x) for _ in range(3)]
        ps = [hg.phi_derivation(y) for y in ys]

        def brk(a, b):
            m = mat_mul(a, b)
            m2 = mat_mul(b, a)
            return [[m[i][j] - m2[i][j] for j in range(7)] for i in range(7)]

        lhs = kappa_m(m_coords(brk(ps[0], ps[1])), m_coords(ps[2]))
        rhs = kappa_m(m_coords(ps[1]), m_coords(brk(ps[0], ps[2])))
        assert lhs + rhs == 0


def test_unitary_data(reductive):
    ud = hg.unitary_stabilizer_data()
    j = [list(r) for r in ud.j_matrix]
    for b in hg.orthogonal_complement(oc.DIVISION, hg.E7):
        assert tuple(mat_vec(j, mat_vec(j, b))) == tuple(-t for t in b)
    assert ud.sigma(e(0), e(0)) == 1
    for _ in range(15):
        y1 = rand_perp(oc.DIVISION, hg.E7)
        y2 = rand_perp(oc.DIVISION, hg.E7)
        s = ud.sigma(y1, y2)
        assert s.conjugate() == ud.sigma(y2, y1)
        assert ud.sigma(y1, y1) == oc.DIVISION.norm_q(y1)
        jy = tuple(mat_vec(j, y1))
        assert ud.sigma(jy, y2) == ud.sigma(y1, y2) * __import__(
            "g2models.scalars", fromlist=["I_GAUSS"]).I_GAUSS
        y3 = rand_perp(oc.DIVISION, hg.E7)
        lhs = oc.DIVISION.norm_b(tuple(mat_vec(j, oc.DIVISION.cross(y1, y2))), y3)
        rhs = oc.DIVISION.norm_b(hg.E7, oc.DIVISION.cross(oc.DIVISION.cross(y1, y2), y3))
        assert lhs == rhs
    for d in reductive.h.matrices():
        assert mat_mul(d, j) == mat_mul(j, d)
        c = ud.complex_matrix(d)
        assert c[0][0] + c[1][1] + c[2][2] == 0
        for a in range(3):
            for b2 in range(3):
                assert c[a][b2] + c[b2][a].conjugate() == 0


def test_unitary_needs_unit_norm():
    with pytest.raises(oc.NotUnitNorm):
        hg.unitary_stabilizer_data(x=tuple(2 * t for t in hg.E7))


def test_split_stabilizer_data():
    sd = hg.split_stabilizer_data()
    s = oc.SPLIT
    assert len(sd.w_plus) == 3 and len(sd.w_minus) == 3 and sd.h.dim == 8
    for w in sd.w_plus:
        for w2 in sd.w_plus:
            assert s.norm_b(w, w2) == 0
    for w in sd.w_minus:
        for w2 in sd.w_minus:
            assert s.norm_b(w, w2) == 0
    pairing = [[s.norm_b(a, b) for b in sd.w_minus] for a in sd.w_plus]
    assert det(pairing) != 0
    for d in sd.h.matrices():
        cols = [coords_in_basis([list(v) for v in sd.w_plus], mat_vec(d, w))
                for w in sd.w_plus]
        assert all(c is not None for c in cols)
        assert sum(cols[i][i] for i in range(3)) == 0
    for a in sd.w_plus:
        for b in sd.w_minus:
            assert s.cross(a, b) == tuple(-s.norm_b(a, b) * t for t in sd.base_point)


def test_split_stabilizer_requires_norm_minus_one():
    with pytest.raises(hg.WrongNorm):
        hg.split_stabilizer_data(x=e(1))


def test_split_transitivity_witness_recipe():
    s = oc.SPLIT
    base = tuple(Q(v, 2) for v in (0, 1, 0, 0, 1, 0, 0))  # (E1 + F1)/2
    targets = [base, tuple(Q(v, 2) for v in (0, 0, 1, 0, 0, 1, 0)),
               tuple(Q(v, 2) for v in (0, 0, 0, 1, 0, 0, 1))]
    for _ in range(4):
        # rational points of {n = -1} orthogonal to E0: n(0,u,v) = -4 u.v
        u = (Q(1), Q(rng.randint(-3, 3)), Q(rng.randint(-3, 3)))
        w2, w3 = Q(rng.randint(-3, 3)), Q(rng.randint(-3, 3))
        v = (1 - u[1] * w2 - u[2] * w3, w2, w3)
        assert sum(a * b for a, b in zip(u, v)) == 1
        targets.append((Q(0),) + u + tuple(t / 4 for t in v))
    for y in targets:
        g = hg.split_transitivity_witness(y)
        assert transform(g, OMEGA0) == OMEGA0
        assert tuple(mat_vec(g, base)) == tuple(y)
        assert det(g) == 1
        fy = s.cross(hg.E0_SPLIT, y)
        z1 = tuple(a - b for a, b in zip(y, fy))
        y1 = tuple(a + b for a, b in zip(y, fy))
        assert tuple(a + b for a, b in zip(y1, z1)) == tuple(2 * t for t in y)


def test_basic_triples():
    ident = [[Q(1 if i == j else 0) for j in range(7)] for i in range(7)]
    assert hg.basic_triple_to_g2(e(0), e(1), e(6)) == ident
    with pytest.raises(hg.NotBasicTriple):
        hg.basic_triple_to_g2(e(0), e(1), e(2))  # Omega1(e1,e2,e3) = 1
    with pytest.raises(hg.NotBasicTriple):
        hg.basic_triple_to_g2(e(0), e(0), e(6))
    g = hg.basic_triple_to_g2(e(1), e(0), e(6))
    assert transform(g, OMEGA1) == OMEGA1
    assert det(g) == 1


def test_frame_of_canonical_triple():
    frame = hg.frame_of_triple(e(0), e(1), e(6))
    assert frame[0] == e(0) and frame[1] == e(1) and frame[2] == e(6)
    assert frame[3] == e(2)                       # e1 x e2 = e3
    assert frame[4] == tuple(-t for t in e(3))    # e1 x e7 = -e4
    assert frame[5] == tuple(-t for t in e(4))    # e2 x e7 = -e5
    assert frame[6] == e(5)                       # e1 x (e2 x e7) = e6
