from bowcalc.chevalley import (
    CMMatrix,
    check_congruence,
    check_divisibility,
    check_hw_matrix_transport,
    check_orthogonality,
    cm_matrix,
    cm_matrix_oracle,
    fixed_points,
    gram_matrix,
    normalized_cm,
    verify,
    virtual_pairing,
)
from bowcalc.diagrams import BraneDiagram, TieDiagram, flag_diagram
from bowcalc.exactalg import MultiPoly
from bowcalc.permcalc import Permutation
from bowcalc.stabloc import opposite_chamber, stab_grid

W = Permutation.parse

RES_DIAGRAM = "0/1/3/5\\3\\2\\0"


def test_orthogonality_small():
    d = BraneDiagram.parse(RES_DIAGRAM)
    for z in (Permutation.identity(3), Permutation.longest(3), W("231")):
        assert not check_orthogonality(d, z)


def test_pairing_bilinearity():
    d = BraneDiagram.parse(RES_DIAGRAM)
    zid = Permutation.identity(3)
    pts = fixed_points(d)
    grid = stab_grid(d, zid)
    grid_op = stab_grid(d, opposite_chamber(zid))
    a1 = {T.key(): grid[(T.key(), pts[0].key())] for T in pts}
    a2 = {T.key(): grid[(T.key(), pts[1].key())] for T in pts}
    b = {T.key(): grid_op[(T.key(), pts[2].key())] for T in pts}
    combo = {k: 3 * a1[k] + a2[k] * MultiPoly.t(1, 3) for k in a1}
    lhs = virtual_pairing(d, zid, combo, b)
    rhs = (
        virtual_pairing(d, zid, a1, b) * 3
        + virtual_pairing(d, zid, a2, b) * MultiPoly.t(1, 3)
    )
    assert lhs == rhs


def test_cm_column_golden():
    d = BraneDiagram.parse("0/1/3/4/5\\4\\3\\1\\0")
    D = TieDiagram(
        d,
        [
            (("V", 4), ("U", 3)),
            (("V", 3), ("U", 2)),
            (("V", 3), ("U", 4)),
            (("V", 2), ("U", 1)),
            (("V", 1), ("U", 3)),
        ],
    )
    C = cm_matrix(d, Permutation.identity(4), 3)
    t2, t3, t4 = (MultiPoly.t(i, 4) for i in (2, 3, 4))
    h = MultiPoly.h(4)
    diag = C.entry(D.key(), D.key())
    assert diag == t2 + t3 + t4 - 6 * h
    assert (diag - (t2 + t3 + t4)).h_valuation() >= 1
    column = {
        row: val for (row, col), val in C.entries.items() if col == D.key() and row != D.key()
    }
    assert len(column) == 4
    assert sorted(str(v) for v in column.values()) == ["-h", "h", "h", "h"]


def test_cm_equals_oracle_small():
    d = BraneDiagram.parse(RES_DIAGRAM)
    zid = Permutation.identity(3)
    for j in range(1, d.num_black + 1):
        assert cm_matrix(d, zid, j) == cm_matrix_oracle(d, zid, j)


def test_rank_zero_bundles_give_zero_matrix():
    d = BraneDiagram.parse(RES_DIAGRAM)
    zid = Permutation.identity(3)
    C = cm_matrix(d, zid, 1)
    assert not C.entries
    C_last = cm_matrix(d, zid, d.num_black)
    assert not C_last.entries


def test_constant_bundles_are_diagonal():
    d = BraneDiagram.parse(RES_DIAGRAM)
    zid = Permutation.identity(3)
    for j in range(d.M + 1, d.num_black + 1):
        C = cm_matrix(d, zid, j)
        assert all(r == c for (r, c) in C.entries)


def test_cm_matrices_commute():
    d = BraneDiagram.parse(RES_DIAGRAM)
    zid = Permutation.identity(3)
    A = cm_matrix_oracle(d, zid, 2)
    B = cm_matrix_oracle(d, zid, 3)
    assert A.compose(B) == B.compose(A)


def test_off_diagonal_vanishes_at_h_zero():
    d = BraneDiagram.parse(RES_DIAGRAM)
    C = cm_matrix_oracle(d, Permutation.identity(3), 3)
    for (r, c), v in C.entries.items():
        if r != c:
            assert v.h_valuation() >= 1


def test_divisibility_and_congruence_small():
    d = BraneDiagram.parse(RES_DIAGRAM)
    assert not check_divisibility(d)
    assert not check_congruence(d)


def test_normalized_cm():
    # with unit column margins the sign conjugation makes every off-diagonal -h
    fd = flag_diagram([1, 2], 3)
    h = MultiPoly.h(3)
    for j in range(1, 4):
        C = normalized_cm(fd, j)
        for (r, c), v in C.entries.items():
            if r != c:
                assert v == -h
    # diagonal unchanged, double conjugation is the identity
    d = BraneDiagram.parse(RES_DIAGRAM)
    base = cm_matrix(d, Permutation.identity(3), 2)
    conj = normalized_cm(d, 2)
    for key in conj.basis:
        assert conj.entry(key, key) == base.entry(key, key)
    for (r, c), v in conj.entries.items():
        if r != c:
            assert v == h or v == -h


def test_hw_matrix_transport():
    dns = BraneDiagram.parse("0/1/3\\2/3\\2\\0")
    assert not check_hw_matrix_transport(dns, Permutation.identity(3))
    assert not check_hw_matrix_transport(dns, W("312"))


def test_verify_passes_and_detects_corruption():
    fd = flag_diagram([1, 2], 3)
    report = verify(fd, seed=5)
    assert report["ok"]
    assert all(entry["ok"] for name, entry in report.items() if isinstance(entry, dict))

    # negative control: a flipped off-diagonal sign breaks the oracle match
    zid = Permutation.identity(3)
    good = cm_matrix(fd, zid, 2)
    oracle = cm_matrix_oracle(fd, zid, 2)
    assert good == oracle
    off = next(k for k in good.entries if k[0] != k[1])
    corrupted = dict(good.entries)
    corrupted[off] = -corrupted[off]
    bad = CMMatrix(fd, zid, 2, good.basis, corrupted)
    assert not bad == oracle


def test_gram_is_identity_on_tiny_diagram():
    d = BraneDiagram.parse("0\\1/1\\1/0")
    # fully non-separated two-point variety
    for z in (Permutation.identity(2), Permutation.longest(2)):
        gram = gram_matrix(d, z)
        for (a, b), v in gram.items():
            assert v == (1 if a == b else 0)
