import random
from fractions import Fraction

import pytest

from g2models import splitmodel as sm
from g2models.algebra import (AlgebraTable, anticommutative, generated_ideal_dim,
                              jacobi_holds_everywhere, killing_signature)
from g2models.derivations import skew_adjoint_ok
from g2models.linalg import DegenerateForm
from g2models.octonions import SPLIT

Q = Fraction
Z3 = ((Q(0),) * 3,) * 3
V0 = (Q(0),) * 3


def e3(i):
    return tuple(Q(1 if j == i else 0) for j in range(3))


def test_bracket_vector_pairs_give_cross_products():
    # [M_(0,e1,0), M_(0,e2,0)] = M_(0,0,2e3)
    u = sm.SplitElement(Z3, e3(0), V0)
    v = sm.SplitElement(Z3, e3(1), V0)
    out = sm.bracket(u, v)
    assert out.a == Z3 and out.x == V0
    assert out.y == (Q(0), Q(0), Q(2))


def test_bracket_footnote_cartan_element():
    # [M_(0,e_i,0), M_(0,0,e_i)] = M_(-2E_ii + E_jj + E_kk, 0, 0)
    for i in range(3):
        u = sm.SplitElement(Z3, e3(i), V0)
        v = sm.SplitElement(Z3, V0, e3(i))
        out = sm.bracket(u, v)
        want = [[Q(1 if r == c else 0) for c in range(3)] for r in range(3)]
        want[i][i] = Q(-2)
        assert out.a == tuple(tuple(r) for r in want)
        assert out.x == V0 and out.y == V0


def test_bracket_block_rules():
    rng = random.Random(4)
    c3 = sm._cross3
    for _ in range(12):
        a = [[Q(rng.randint(-2, 2)) for _ in range(3)] for _ in range(3)]
        a[2][2] = -a[0][0] - a[1][1]
        u = tuple(Q(rng.randint(-2, 2)) for _ in range(3))
        v = tuple(Q(rng.randint(-2, 2)) for _ in range(3))
        ma = sm.SplitElement.of(a, V0, V0)
        mu = sm.SplitElement(Z3, u, V0)
        mv = sm.SplitElement(Z3, V0, v)
        # [M(a,0,0), M(0,u,0)] = M(0, au, 0)
        out = sm.bracket(ma, mu)
        assert out.a == Z3 and out.y == V0
        assert out.x == tuple(sum(Q(a[i][j]) * u[j] for j in range(3)) for i in range(3))
        # [M(a,0,0), M(0,0,v)] = M(0, 0, -a^t v)
        out = sm.bracket(ma, mv)
        assert out.a == Z3 and out.x == V0
        assert out.y == tuple(-sum(Q(a[j][i]) * v[j] for j in range(3)) for i in range(3))
        # [M(0,u,0), M(0,0,v)] = M(pr_sl3(-3 u v^t), 0, 0)
        out = sm.bracket(mu, mv)
        tr = sum(u[i] * v[i] for i in range(3))
        want = tuple(tuple(-3 * u[i] * v[j] + (tr if i == j else 0) for j in range(3))
                     for i in range(3))
        assert out.a == want and out.x == V0 and out.y == V0
        # [M(0,0,u), M(0,0,v)] = M(0, 2 u x v, 0)
        out = sm.bracket(sm.SplitElement(Z3, V0, u), sm.SplitElement(Z3, V0, v))
        assert out.a == Z3 and out.y == V0
        assert out.x == tuple(2 * t for t in c3(u, v))


def test_lagrange_triple_expansion_r3():
    rng = random.Random(8)
    c3 = sm._cross3
    for _ in range(40):
        x, y, z = (tuple(Q(rng.randint(-4, 4)) for _ in range(3)) for _ in range(3))
        dot = lambda a, b: sum(p * q for p, q in zip(a, b))
        lhs = c3(c3(x, y), z)
        assert lhs == tuple(dot(x, z) * y[i] - dot(y, z) * x[i] for i in range(3))


def test_bracket_self_is_zero():
    rng = random.Random(0)
    for _ in range(10):
        a = [[Q(rng.randint(-2, 2)) for _ in range(3)] for _ in range(3)]
        a[2][2] = -a[0][0] - a[1][1]
        u = sm.SplitElement.of(a, [rng.randint(-2, 2) for _ in range(3)],
                               [rng.randint(-2, 2) for _ in range(3)])
        assert sm.bracket(u, u).is_zero()


def test_realize_roundtrip_and_closure_check():
    u = sm.SPLIT_BASIS[3]
    assert sm.SplitElement.from_matrix(u.realize()) == u
    bad = u.realize()
    bad[0][0] = Q(1)
    with pytest.raises(sm.ClosureViolation):
        sm.SplitElement.from_matrix(bad)


def test_structure_constants_closure_and_jacobi():
    t = sm.structure_table()
    assert anticommutative(t)
    assert jacobi_holds_everywhere(t)


def test_root_decomposition_tags():
    rd = sm.root_decomposition()
    assert sum(len(v) for v in rd.values()) == 14
    assert len(rd["0"]) == 2
    e12 = rd["e1-e2"][0]
    assert e12.x == V0 and e12.y == V0
    assert e12.a[0][1] != 0 and all(e12.a[i][j] == 0 for i in range(3) for j in range(3)
                                    if (i, j) != (0, 1))
    m3 = rd["-e3"][0]
    assert m3.a == Z3 and m3.x == V0 and m3.y[2] != 0
    p3 = rd["e3"][0]
    assert p3.a == Z3 and p3.x[2] != 0 and p3.y == V0


def test_root_decomposition_rejects_noncommuting_probes():
    probe = sm.CartanElement.of(1, -1, 0)
    with pytest.raises(sm.NotSimultaneouslyDiagonalizable):
        # sneak in a non-Cartan "probe" by monkeypatching its element
        class Fake(sm.CartanElement):
            def to_element(self):
                return sm.SPLIT_BASIS[0]
        sm.root_decomposition([Fake.of(1, -1, 0), probe])


def test_weight_decomposition():
    wd = sm.weight_decomposition()
    assert set(wd) == {"0", "e1", "e2", "e3", "-e1", "-e2", "-e3"}
    assert all(len(v) == 1 for v in wd.values())
    assert wd["0"][0] == (Q(1),) + (Q(0),) * 6
    assert wd["e1"][0] == (Q(0), Q(1)) + (Q(0),) * 5
    assert wd["-e3"][0][6] == Q(1)


def test_maximal_weight_is_minus_e3():
    # -e3 = 2 alpha1 + alpha2 stays maximal: adding any positive root functional
    # leaves the weight set
    wd = sm.weight_decomposition()
    weights = {}
    for tag in wd:
        s1 = sm.tag_value(tag, (Q(1), Q(-1), Q(0)))
        s2 = sm.tag_value(tag, (Q(0), Q(1), Q(-1)))
        weights[(s1, s2)] = tag
    top = (sm.tag_value("-e3", (Q(1), Q(-1), Q(0))), sm.tag_value("-e3", (Q(0), Q(1), Q(-1))))
    positive_roots = [("e2", "e1-e2"), ]
    for ptag in ("e2", "e1-e2", "e1", "-e3", "e2-e3", "e1-e3"):
        pv = (sm.tag_value(ptag, (Q(1), Q(-1), Q(0))), sm.tag_value(ptag, (Q(0), Q(1), Q(-1))))
        assert (top[0] + pv[0], top[1] + pv[1]) not in weights


def test_killing_signatures():
    assert sm.killing_signature() == (6, 8)
    abelian = AlgebraTable.from_function(1, lambda i, j: [Q(0)])
    with pytest.raises(DegenerateForm):
        killing_signature(abelian)


def test_model_inside_so_v_n():
    n = [list(r) for r in SPLIT.norm_matrix]
    for b in sm.SPLIT_BASIS:
        assert skew_adjoint_ok(b.realize(), n)


def test_simplicity_witness():
    t = sm.structure_table()
    for i in range(14):
        assert generated_ideal_dim(t, i) == 14


def test_z3_bracket_rules():
    a = sm.Z3Element.of([[1, 0, 0], [0, -1, 0], [0, 0, 0]], V0, V0)
    x = sm.Z3Element.of(Z3, e3(0), V0)
    yt = sm.Z3Element.of(Z3, V0, e3(1))
    # [a, u] = au
    out = sm.z3_bracket(a, x)
    assert out.u == (Q(1), Q(0), Q(0)) and out.w == V0
    # [x, y^t] = -3 pr(x y^t): x = e1, y = e2 -> -3 E12 (already traceless)
    out = sm.z3_bracket(x, yt)
    assert out.a == ((Q(0), Q(-3), Q(0)), (Q(0),) * 3, (Q(0),) * 3)
    # [u, u] = 0
    assert sm.z3_bracket(x, x).a == Z3
    assert sm.z3_bracket(x, x).u == V0 and sm.z3_bracket(x, x).w == V0
    # degree additivity: U x U lands in U*
    u2 = sm.Z3Element.of(Z3, e3(1), V0)
    br = sm.z3_bracket(x, u2)
    assert br.degrees() in ((), (2,))


def test_z3_model_isomorphic_to_matrix_model():
    basis = []
    for i in range(3):
        for j in range(3):
            if i != j:
                m = [[Q(0)] * 3 for _ in range(3)]
                m[i][j] = Q(1)
                basis.append(sm.Z3Element.of(m, V0, V0))
    basis.append(sm.Z3Element.of([[1, 0, 0], [0, -1, 0], [0, 0, 0]], V0, V0))
    basis.append(sm.Z3Element.of([[0, 0, 0], [0, 1, 0], [0, 0, -1]], V0, V0))
    for k in range(3):
        basis.append(sm.Z3Element.of(Z3, e3(k), V0))
    for k in range(3):
        basis.append(sm.Z3Element.of(Z3, V0, e3(k)))
    for p in basis:
        for q in basis:
            lhs = sm.z3_to_split(sm.z3_bracket(p, q))
            rhs = sm.bracket(sm.z3_to_split(p), sm.z3_to_split(q))
            assert (lhs - rhs).is_zero()


def test_natural_action_block_formula():
    rng = random.Random(1)
    for _ in range(20):
        a = [[Q(rng.randint(-2, 2)) for _ in range(3)] for _ in range(3)]
        a[2][2] = -a[0][0] - a[1][1]
        x = [Q(rng.randint(-2, 2)) for _ in range(3)]
        y = [Q(rng.randint(-2, 2)) for _ in range(3)]
        elem = sm.SplitElement.of(a, x, y)
        s = Q(rng.randint(-2, 2))
        u = [Q(rng.randint(-2, 2)) for _ in range(3)]
        v = [Q(rng.randint(-2, 2)) for _ in range(3)]
        got = elem.act((s,) + tuple(u) + tuple(v))
        c3 = sm._cross3
        first = -2 * sum(y[i] * u[i] for i in range(3)) - 2 * sum(x[i] * v[i] for i in range(3))
        mid = tuple(s * x[i] + sum(a[i][j] * u[j] for j in range(3)) + c3(y, v)[i]
                    for i in range(3))
        last = tuple(s * y[i] + c3(x, u)[i] - sum(a[j][i] * v[j] for j in range(3))
                     for i in range(3))
        assert got == (first,) + mid + last


def test_root_space_report_json():
    r = sm.root_space_report()
    assert set(r) == set(sm.ROOT_TAGS)
    assert len(r["0"]) == 2 and all(len(v) == 1 for t, v in r.items() if t != "0")
    assert all(isinstance(c, str) for vs in r.values() for v in vs for c in v)
