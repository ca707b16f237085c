import itertools
import random
from fractions import Fraction

import pytest

from g2models import compactmodel as cm
from g2models import homogeneous as hg
from g2models.algebra import anticommutative, jacobi_holds_everywhere
from g2models.derivations import DerivationAlgebra, derivations_of_form
from g2models.forms import OrbitTag, classify_orbit
from g2models.linalg import mat_mul, mat_vec
from g2models.scalars import GaussianRational as GR

Q = Fraction
rng = random.Random(7)


def w(k):
    return cm._w_basis_vec(k)


def test_bracket_phi_on_u_is_application():
    phi = cm.SU_BASIS[2]  # E12 - E21
    a = cm.CompactElement(phi, (cm.GR0,) * 3)
    b = cm.CompactElement(((cm.GR0,) * 3,) * 3, w(0))
    out = cm.bracket_L(a, b)
    assert all(not x for row in out.phi for x in row)
    assert out.w == tuple(sum((phi[i][k] * w(0)[k] for k in range(3)), cm.GR0)
                          for i in range(3))


def test_bracket_u_u_is_zero():
    b = cm.CompactElement(((cm.GR0,) * 3,) * 3, w(1))
    assert cm.bracket_L(b, b).is_zero()


def test_bracket_w_pair_formula():
    # [e1, e2] has su-part 3 sigma_{e1,e2} - tr(...) and W-part 2 conj(e1 x e2)
    a = cm.CompactElement(((cm.GR0,) * 3,) * 3, w(0))
    b = cm.CompactElement(((cm.GR0,) * 3,) * 3, w(1))
    out = cm.bracket_L(a, b)
    suv = cm.sigma_op(w(0), w(1))
    tr = suv[0][0] + suv[1][1] + suv[2][2]
    want_phi = tuple(tuple(3 * Q(1) * suv[i][j] - (tr if i == j else cm.GR0)
                           for j in range(3)) for i in range(3))
    assert out.phi == want_phi
    cr = cm.cross3c(w(0), w(1))
    assert out.w == tuple(2 * Q(1) * c.conjugate() for c in cr)
    assert out.w == (cm.GR0, cm.GR0, 2 * Q(1) * cm.GR1)  # 2 conj(e3)


def test_trace_sigma_identity():
    for _ in range(10):
        u = tuple(GR(Q(rng.randint(-2, 2)), Q(rng.randint(-2, 2))) for _ in range(3))
        v = tuple(GR(Q(rng.randint(-2, 2)), Q(rng.randint(-2, 2))) for _ in range(3))
        suv = cm.sigma_op(u, v)
        tr = suv[0][0] + suv[1][1] + suv[2][2]
        assert tr == cm.sigma(v, u) - cm.sigma(u, v)
        assert tr == GR(Q(0), -2 * cm.sigma(u, v).im)


def test_action_examples():
    phi = cm.CompactElement(cm.SU_BASIS[0], (cm.GR0,) * 3)
    one = cm.CompactVector(Q(1), (cm.GR0,) * 3)
    assert cm.action_on_V(phi, one) == cm.CompactVector(Q(0), (cm.GR0,) * 3)
    u = cm.CompactElement(((cm.GR0,) * 3,) * 3, w(0))
    out = cm.action_on_V(u, one)
    assert out == cm.CompactVector(Q(0), (GR(Q(0), Q(-2)), cm.GR0, cm.GR0))
    # u . v = -2 Im sigma(u, v) - conj(u x v)
    v = cm.CompactElement(((cm.GR0,) * 3,) * 3, w(4))  # i e2
    got = cm.action_on_V(u, cm.CompactVector(Q(0), w(4)))
    suv = cm.sigma(w(0), w(4))
    assert got.s == -2 * suv.im
    cr = cm.cross3c(w(0), w(4))
    assert got.u == tuple(-c.conjugate() for c in cr)


def test_action_is_representation():
    idx = list(range(14))
    acts = [cm.real_action_matrix(b) for b in cm.COMPACT_BASIS]
    for i, j in itertools.combinations(idx, 2):
        lhs = cm.real_action_matrix(cm.bracket_L(cm.COMPACT_BASIS[i], cm.COMPACT_BASIS[j]))
        ab = mat_mul(acts[i], acts[j])
        ba = mat_mul(acts[j], acts[i])
        assert lhs == [[ab[r][c] - ba[r][c] for c in range(7)] for r in range(7)]


def test_jacobi_and_anticommutativity():
    t = cm.structure_table()
    assert anticommutative(t)
    assert jacobi_holds_everywhere(t)


def test_killing_signature_negative_definite():
    assert cm.killing_signature() == (14, 0)


def test_model_norm_and_form():
    assert cm.model_norm_matrix() == [[Q(1 if i == j else 0) for j in range(7)]
                                      for i in range(7)]
    om = cm.model_three_form()
    assert classify_orbit(om) is OrbitTag.COMPACT
    for v in cm.MODULE_BASIS:
        assert v.norm() == 1


def test_model_cross_matches_form():
    for i, j, k in itertools.product(range(7), repeat=3):
        x, y, z = cm.MODULE_BASIS[i], cm.MODULE_BASIS[j], cm.MODULE_BASIS[k]
        lhs = cm._omega_value(x, y, z)
        c = cm.model_cross(x, y)
        rhs = sum(a * b for a, b in zip(cm.vector_coords(c), cm.vector_coords(z)))
        assert lhs == rhs
    # scalar part of (s+u) x (t+v) is -Im sigma(u, v)
    x = cm.CompactVector(Q(2), w(0))
    y = cm.CompactVector(Q(-1), w(3))
    assert cm.model_cross(x, y).s == -cm.sigma(w(0), w(3)).im


def test_action_image_is_derivation_algebra_of_model_form():
    om = cm.model_three_form()
    acts = [cm.real_action_matrix(b) for b in cm.COMPACT_BASIS]
    img = DerivationAlgebra.from_matrices(acts, 7)
    assert img.same_space(derivations_of_form(om))


def test_psi_transport_full():
    gc = hg.compact_derivations()
    assert cm.transport_check(gc.matrices())


def test_psi_examples():
    assert cm.psi(cm.mu_matrix((0, 0, 0), (0, 0, 0))).is_zero()
    # h-block [[a, b, 0], [-b^t, a, 0], [0, 0, 0]] maps to a + ib
    a = [[0, 1, 0], [-1, 0, 0], [0, 0, 0]]
    b = [[1, 0, 0], [0, -1, 0], [0, 0, 0]]
    h = [[Q(0)] * 7 for _ in range(7)]
    for i in range(3):
        for j in range(3):
            h[i][j] = Q(a[i][j])
            h[i][3 + j] = Q(b[i][j])
            h[3 + i][j] = Q(-b[j][i])
            h[3 + i][3 + j] = Q(a[i][j])
    out = cm.psi(h)
    assert out.w == (cm.GR0,) * 3
    assert out.phi == tuple(tuple(GR(Q(a[i][j]), Q(b[i][j])) for j in range(3))
                            for i in range(3))
    # mu_{x,y} maps to -y - ix
    mu = cm.mu_matrix((1, 0, 0), (0, 2, 0))
    out = cm.psi(mu)
    assert all(not x for row in out.phi for x in row)
    assert out.w == (GR(Q(0), Q(-1)), GR(Q(-2), Q(0)), cm.GR0)


def test_psi_prime():
    v = [Q(1), Q(0), Q(0), Q(0), Q(2), Q(0), Q(5)]
    out = cm.psi_prime(v)
    assert out.s == 5
    assert out.u == (GR(Q(-1), Q(0)), GR(Q(0), Q(2)), cm.GR0)


def test_transport_mismatch_raised():
    bad = [[Q(0)] * 7 for _ in range(7)]
    bad[0][1] = Q(1)  # not skew-splittable into the stabilizer shape
    with pytest.raises(cm.TransportMismatch):
        cm.split_h_mu(bad)


def test_mu_bracket_formulas():
    for _ in range(12):
        x = tuple(Q(rng.randint(-2, 2)) for _ in range(3))
        y = tuple(Q(rng.randint(-2, 2)) for _ in range(3))
        u = tuple(Q(rng.randint(-2, 2)) for _ in range(3))
        v = tuple(Q(rng.randint(-2, 2)) for _ in range(3))
        m1, m2 = cm.mu_matrix(x, y), cm.mu_matrix(u, v)
        comm = mat_mul(m1, m2)
        c2 = mat_mul(m2, m1)
        comm = [[comm[i][j] - c2[i][j] for j in range(7)] for i in range(7)]
        h, xx, yy = cm.split_h_mu(comm)
        from g2models.splitmodel import _cross3 as c3
        assert xx == tuple(2 * (c3(y, u)[i] + c3(x, v)[i]) for i in range(3))
        assert yy == tuple(2 * (c3(x, u)[i] - c3(y, v)[i]) for i in range(3))
        lx = cm._l3([c3(y, v)[i] + c3(x, u)[i] for i in range(3)])
        outer = [[u[i] * y[j] + y[i] * u[j] - v[i] * x[j] - x[i] * v[j] for j in range(3)]
                 for i in range(3)]
        tr = sum(outer[i][i] for i in range(3)) / 3
        want = tuple(tuple(GR(3 * lx[i][j], 3 * (outer[i][j] - (tr if i == j else 0)))
                           for j in range(3)) for i in range(3))
        assert cm.psi(h).phi == want


def test_compact_vector_norm_positive():
    for _ in range(20):
        v = cm.CompactVector(Q(rng.randint(-3, 3)),
                             tuple(GR(Q(rng.randint(-3, 3)), Q(rng.randint(-3, 3)))
                                   for _ in range(3)))
        n = v.norm()
        assert n >= 0
        if n == 0:
            assert v.s == 0 and all(not x for x in v.u)


def test_model_forms_bundle():
    om, n, cross = cm.model_forms()
    assert classify_orbit(om) is OrbitTag.COMPACT
    assert n == [[Q(1 if i == j else 0) for j in range(7)] for i in range(7)]
    e1 = tuple(Q(1 if i == 1 else 0) for i in range(7))
    e2 = tuple(Q(1 if i == 2 else 0) for i in range(7))
    out = cross(e1, e2)
    # omega(e1, e2, z) = n(e1 x e2, z) for all basis z
    for k in range(7):
        z = tuple(Q(1 if i == k else 0) for i in range(7))
        assert om.evaluate([list(e1), list(e2), list(z)]) == out[k]


def test_psi_transport_wrapper():
    psi_fn, psip_fn = cm.psi_transport(hg.compact_derivations().matrices())
    assert psi_fn is cm.psi and psip_fn is cm.psi_prime
    bad = [[[Q(1 if i == j else 0) for j in range(7)] for i in range(7)]]
    with pytest.raises(cm.TransportMismatch):
        cm.psi_transport(bad)
