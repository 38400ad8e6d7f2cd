"""Chevalley-Monk multiplication matrices in the stable basis, the virtual
pairing oracle, and the theorem verification suite.

The matrix of multiplication by c_1(xi_j) has entry[row D'][col D] equal to
the coefficient of Stab(D') in c_1(xi_j) cup Stab(D).  Two independent routes
compute it: the combinatorial formula (diagonal = tautological Chern
restriction, off-diagonal = signed h on twisted simple moves) and the
orthogonality oracle (pairing against the opposite-chamber basis).
"""

from .diagrams import (
    TieDiagram,
    enumerate_bct,
    hanany_witten,
)
from fractions import Fraction

from .exactalg import (
    LocalizedScalar,
    MultiPoly,
    NonPolynomialError,
    RingMap,
    factor_s_forms,
)
from .permcalc import Permutation
from .stabloc import (
    opposite_chamber,
    stab_grid,
    taut_chern,
)


def fixed_points(diagram):
    return [TieDiagram.from_bct(diagram, A) for A in enumerate_bct(diagram)]


_TANGENT_CACHE = {}


def _tangent_factors(diagram, z, points):
    """Tangent Euler classes, factored into S forms for localized division.

    Each tangent class is the product of the two opposite-chamber diagonal
    stable multiplicities; both are Euler classes, so they factor completely.
    """
    ckey = (diagram.key(), z.one_line)
    if ckey in _TANGENT_CACHE:
        return _TANGENT_CACHE[ckey]
    grid_c = stab_grid(diagram, z)
    grid_op = stab_grid(diagram, opposite_chamber(z))
    bound = max(diagram.labels) + 2
    out = {}
    for D in points:
        key = D.key()
        c1, h1, f1 = factor_s_forms(grid_c[(key, key)], max_abs_m=bound)
        c2, h2, f2 = factor_s_forms(grid_op[(key, key)], max_abs_m=bound)
        out[key] = (c1 * c2, h1 + h2, sorted(f1 + f2))
    _TANGENT_CACHE[ckey] = out
    return out


_PAIR_TERMS_CACHE = {}


def _pairing_terms(diagram, z):
    """Reduced localized summands Stab(D)|_T * Stab_op(D')|_T / e(T_T).

    Returns {(D key, D' key): [(T key, LocalizedScalar)]}, shared by the Gram
    matrix and every multiplication oracle on this diagram and chamber.
    """
    ckey = (diagram.key(), z.one_line)
    if ckey in _PAIR_TERMS_CACHE:
        return _PAIR_TERMS_CACHE[ckey]
    points = fixed_points(diagram)
    grid_c = stab_grid(diagram, z)
    grid_op = stab_grid(diagram, opposite_chamber(z))
    tangent = _tangent_factors(diagram, z, points)
    h = MultiPoly.h(diagram.N)
    out = {}
    for D in points:
        for Dp in points:
            terms = []
            for T in points:
                a = grid_c[(T.key(), D.key())]
                if a.is_zero():
                    continue
                b = grid_op[(T.key(), Dp.key())]
                if b.is_zero():
                    continue
                const, hpow, forms = tangent[T.key()]
                if hpow:
                    raise NonPolynomialError("tangent Euler class has a pure h factor")
                num = a * b * (Fraction(1) / const)
                terms.append((T.key(), LocalizedScalar(num, forms)))
            out[(D.key(), Dp.key())] = terms
    _PAIR_TERMS_CACHE[ckey] = out
    return out


def virtual_pairing(diagram, z, vec_a, vec_b, tangent=None):
    """sum over fixed points of a_p * b_p / e(T_p), as a LocalizedScalar.

    ``vec_a`` and ``vec_b`` map fixed point keys to polynomials (the
    equivariant multiplicities of the two classes).
    """
    points = fixed_points(diagram)
    if tangent is None:
        tangent = _tangent_factors(diagram, z, points)
    N = diagram.N
    h = MultiPoly.h(N)
    total = LocalizedScalar.from_poly(MultiPoly.zero(N))
    for D in points:
        key = D.key()
        num = vec_a[key] * vec_b[key]
        if num.is_zero():
            continue
        const, hpow, forms = tangent[key]
        num = num * (Fraction(1) / const)
        val = num.h_valuation()
        if hpow:
            if val < hpow:
                raise NonPolynomialError("tangent h power does not cancel")
            num = num.exact_div(h ** hpow)
        total = total + LocalizedScalar(num, forms)
    return total


class CMMatrix:
    """Sparse multiplication matrix indexed by tie diagram keys."""

    __slots__ = ("diagram", "chamber", "bundle", "basis", "entries")

    def __init__(self, diagram, chamber, bundle, basis, entries):
        self.diagram = diagram
        self.chamber = chamber
        self.bundle = bundle
        self.basis = list(basis)
        self.entries = {k: v for k, v in entries.items() if not v.is_zero()}

    def entry(self, row_key, col_key):
        zero = MultiPoly.zero(self.diagram.N)
        return self.entries.get((row_key, col_key), zero)

    def __eq__(self, other):
        if not isinstance(other, CMMatrix):
            return NotImplemented
        if self.basis != other.basis:
            return False
        keys = set(self.entries) | set(other.entries)
        return all(self.entry(*k) == other.entry(*k) for k in keys)

    def map_values(self, fn):
        return CMMatrix(
            self.diagram,
            self.chamber,
            self.bundle,
            self.basis,
            {k: fn(v) for k, v in self.entries.items()},
        )

    def add_scalar_diagonal(self, scalar):
        entries = dict(self.entries)
        for key in self.basis:
            entries[(key, key)] = self.entry(key, key) + scalar
        return CMMatrix(self.diagram, self.chamber, self.bundle, self.basis, entries)

    def __add__(self, other):
        keys = set(self.entries) | set(other.entries)
        return CMMatrix(
            self.diagram,
            self.chamber,
            self.bundle,
            self.basis,
            {k: self.entry(*k) + other.entry(*k) for k in keys},
        )

    def __sub__(self, other):
        keys = set(self.entries) | set(other.entries)
        return CMMatrix(
            self.diagram,
            self.chamber,
            self.bundle,
            self.basis,
            {k: self.entry(*k) - other.entry(*k) for k in keys},
        )

    def compose(self, other):
        """Matrix product (entries are polynomials)."""
        entries = {}
        for (i, k), a in self.entries.items():
            for (k2, j), b in other.entries.items():
                if k == k2:
                    key = (i, j)
                    cur = entries.get(key)
                    entries[key] = a * b if cur is None else cur + a * b
        return CMMatrix(self.diagram, self.chamber, self.bundle, self.basis, entries)

    def to_json(self):
        triplets = [
            {"row": r, "col": c, "value": str(v)}
            for (r, c), v in sorted(self.entries.items())
        ]
        return {
            "diagram": self.diagram.format(),
            "chamber": str(self.chamber),
            "bundle": self.bundle,
            "basis": self.basis,
            "entries": triplets,
        }


def cm_matrix(diagram, z, j):
    """The Chevalley-Monk matrix of c_1(xi_j) from the combinatorial formula:
    interval-indexed twisted simple moves off the diagonal, tautological Chern
    restrictions on it."""
    from .diagrams import simple_moves_rel

    points = fixed_points(diagram)
    basis = [D.key() for D in points]
    i = diagram.interval_index(j)
    h = MultiPoly.h(diagram.N)
    entries = {}
    for D in points:
        col = D.key()
        entries[(col, col)] = taut_chern(D, j)
        for D_moved, sgn in simple_moves_rel(D, z, i):
            entries[(D_moved.key(), col)] = h * sgn
    return CMMatrix(diagram, z, j, basis, entries)


_CHERN_CACHE = {}


def _chern_table(diagram, j):
    ckey = (diagram.key(), j)
    if ckey not in _CHERN_CACHE:
        _CHERN_CACHE[ckey] = {
            D.key(): taut_chern(D, j) for D in fixed_points(diagram)
        }
    return _CHERN_CACHE[ckey]


def cm_matrix_oracle(diagram, z, j):
    """The same matrix from orthogonality: entry[D'][D] is the virtual pairing
    of c_1(xi_j) cup Stab_c(D) with Stab_{c^op}(D'); certified polynomial."""
    points = fixed_points(diagram)
    basis = [D.key() for D in points]
    pair_terms = _pairing_terms(diagram, z)
    chern = _chern_table(diagram, j)
    zero = LocalizedScalar.from_poly(MultiPoly.zero(diagram.N))
    entries = {}
    for D in points:
        for Dp in points:
            total = zero
            for tkey, scalar in pair_terms[(D.key(), Dp.key())]:
                total = total + scalar * chern[tkey]
            entries[(Dp.key(), D.key())] = total.to_poly()
    return CMMatrix(diagram, z, j, basis, entries)


def normalized_cm(diagram, j):
    """Conjugate the antidominant matrix by the signs (-1)^(l(tilde_w)); all
    off-diagonal entries become -h."""
    from .permcalc import Composition, tilde_w
    from .diagrams import parse_bct_key

    m = diagram.margins()
    comp_r, comp_c = Composition(m.r), Composition(m.c)
    base = cm_matrix(diagram, Permutation.identity(diagram.N), j)
    signs = {}
    for key in base.basis:
        A = parse_bct_key(key, diagram.M, diagram.N)
        signs[key] = -1 if tilde_w(A, comp_r, comp_c).length() % 2 else 1
    entries = {
        (r, c): v * (signs[r] * signs[c]) for (r, c), v in base.entries.items()
    }
    return CMMatrix(diagram, base.chamber, j, base.basis, entries)


# -- verification suite ---------------------------------------------------------


def gram_matrix(diagram, z):
    """Pairings of the chamber-z stable basis against the opposite one."""
    pair_terms = _pairing_terms(diagram, z)
    zero = LocalizedScalar.from_poly(MultiPoly.zero(diagram.N))
    out = {}
    for pair, terms in pair_terms.items():
        total = zero
        for _, scalar in terms:
            total = total + scalar
        out[pair] = total
    return out


def check_orthogonality(diagram, z):
    """Thm: the Gram matrix of (Stab_c, Stab_c_op) is the identity."""
    gram = gram_matrix(diagram, z)
    failures = []
    for (a, b), val in gram.items():
        want = 1 if a == b else 0
        if not val == want:
            failures.append({"row": a, "col": b, "value": str(val)})
    return failures


def check_divisibility(diagram):
    """h^2 divides the antidominant multiplicity at D' of Stab(D) whenever D'
    is neither D nor a simple move of D."""
    from .diagrams import simple_moves

    z = Permutation.identity(diagram.N)
    points = fixed_points(diagram)
    grid = stab_grid(diagram, z)
    failures = []
    for D in points:
        moves = {Dp.key() for Dp, _ in simple_moves(D)}
        for Dp in points:
            if Dp.key() == D.key() or Dp.key() in moves:
                continue
            val = grid[(Dp.key(), D.key())]
            if val.h_valuation() < 2:
                failures.append({"arg": D.key(), "eval": Dp.key(), "value": str(val)})
    return failures


def check_congruence(diagram):
    """Denominator-cleared h^2 approximation on every simple move pair:
    (t_{j1} - t_{j2}) iota_{D'} Stab(D) = sgn * h * iota_{D'} Stab(D') mod h^2."""
    from .diagrams import move_sign, simple_moves

    z = Permutation.identity(diagram.N)
    N = diagram.N
    grid = stab_grid(diagram, z)
    failures = []
    for D in fixed_points(diagram):
        for Dp, move in simple_moves(D):
            i1, i2, j1, j2 = move
            sgn = move_sign(D.bct, move)
            lhs = MultiPoly.linear(N, {j1: 1, j2: -1}) * grid[(Dp.key(), D.key())]
            rhs = MultiPoly.h(N) * sgn * grid[(Dp.key(), Dp.key())]
            if (lhs - rhs).h_valuation() < 2:
                failures.append(
                    {"arg": D.key(), "eval": Dp.key(), "move": move, "delta": str(lhs - rhs)}
                )
    return failures


def check_hw_matrix_transport(diagram, z, bundles=None):
    """One Hanany-Witten step: the multiplication matrices of the transformed
    diagram pull back to those of the original, with the affine correction at
    the transformed bundle."""
    d = diagram
    for k in range(2, d.num_black):
        if d.colors[k - 2] == "\\" and d.colors[k - 1] == "/":
            break
    else:
        return []  # already separated
    d2, j0, i0 = hanany_witten(d, k)
    phi = RingMap.h_shift(d.N, {j0: 1})
    failures = []
    if bundles is None:
        bundles = range(1, d.num_black + 1)
    for j in bundles:
        ours = cm_matrix_oracle(d, z, j)
        theirs = cm_matrix_oracle(d2, z, j).map_values(phi)
        if j != k:
            ok = ours == theirs
        else:
            combo = (
                cm_matrix_oracle(d, z, k + 1)
                + cm_matrix_oracle(d, z, k - 1)
                - ours
            ).add_scalar_diagonal(MultiPoly.t(j0, d.N) + MultiPoly.h(d.N))
            ok = combo == theirs
        if not ok:
            failures.append({"bundle": j, "move_at": k})
    return failures


def verify(diagram, chambers=None, bundles=None, seed=0):
    """Machine check of the main identities on one diagram.

    Returns a report dict with one entry per check; each entry carries a
    boolean ``ok`` and a list of counterexample payloads.
    """
    import random

    rng = random.Random(seed)
    N = diagram.N
    if chambers is None:
        ol = list(range(1, N + 1))
        rng.shuffle(ol)
        chambers = [Permutation.identity(N), Permutation.longest(N), Permutation(ol)]
        if N <= 1:
            chambers = [Permutation.identity(N)]
    if bundles is None:
        bundles = list(range(1, diagram.num_black + 1))
    report = {}

    failures = []
    for z in chambers:
        failures.extend(
            dict(chamber=str(z), **f) for f in check_orthogonality(diagram, z)
        )
    report["orthogonality"] = {"ok": not failures, "failures": failures}

    failures = check_divisibility(diagram)
    report["h2_divisibility"] = {"ok": not failures, "failures": failures}

    failures = check_congruence(diagram)
    report["h2_approximation"] = {"ok": not failures, "failures": failures}

    failures = []
    for z in chambers:
        for j in bundles:
            formula = cm_matrix(diagram, z, j)
            oracle = cm_matrix_oracle(diagram, z, j)
            if not formula == oracle:
                failures.append({"chamber": str(z), "bundle": j})
    report["chevalley_monk"] = {"ok": not failures, "failures": failures}

    failures = []
    for z in chambers[:2]:
        failures.extend(check_hw_matrix_transport(diagram, z, bundles=bundles))
    report["hw_transport"] = {"ok": not failures, "failures": failures}

    report["ok"] = all(entry["ok"] for entry in report.values() if isinstance(entry, dict))
    return report
