"""Fixed-point data of bow varieties: tautological restrictions and stable
envelope equivariant multiplicities.

The stable basis values are computed by a resolution pipeline:

1. Hanany-Witten transitions move the diagram to separated form; multiplicities
   transport through each move by the substitution t_{j0} -> t_{j0} + h.
2. Chargeless lines are dropped; multiplicities pick up the Euler class of the
   negative part of the constant normal character of the embedding.
3. A chamber z^-1.C_- is moved to the antidominant chamber by letting z act on
   the diagram, its ties and the variables.
4. On a separated essential diagram the normalized antidominant multiplicities
   come from cotangent bundles of partial flag varieties: a localization
   formula over reduced-word subwords, summed over a Young-subgroup coset,
   pushed through the dimension-collapsing substitution and divided by a pure
   h normalization factor.

All results are exact polynomials in Q[t_1..t_N, h].
"""

from .diagrams import (
    DiagramError,
    TieDiagram,
    bct_key,
    enumerate_bct,
    essential,
    essential_tie,
    permute_bct_columns,
    separate,
    sn_act,
)
from .exactalg import (
    Character,
    LinearForm,
    LocalizedScalar,
    MultiPoly,
    RingMap,
)
from .permcalc import (
    Composition,
    Permutation,
    beta_poly,
    beta_sequence,
    coset_length,
    reduced_word,
    subword_sums,
    tilde_w,
    w_distinguished,
    young_elements,
)


# -- tautological restrictions ------------------------------------------------


def taut_tables(D, blue_index):
    """The counting tables of one blue line U: d-values per black line and the
    recursively defined c-values.

    d[x] counts the ties at U covering the black line X_x.  For black lines
    right of U, c[x] = d[right of U] - d[x]; to the left c is propagated right
    to left, dropping by one across a red separator whose two neighbor d
    values agree and staying constant otherwise.
    Returns (d, c) as dicts over black line indices 1..M+N+1.
    """
    d = D.diagram
    blues = d.blue_positions()
    reds = d.red_positions()
    pos_u = blues[blue_index - 1]
    pos = {("V", i + 1): p for i, p in enumerate(reds)}
    ends = []
    for left, right in D.ties:
        if left == ("U", blue_index):
            ends.append(pos[right])
        elif right == ("U", blue_index):
            ends.append(pos[left])

    dvals = {}
    for x in range(1, d.num_black + 1):
        if x <= pos_u:
            dvals[x] = sum(1 for p in ends if p < x)
        else:
            dvals[x] = sum(1 for p in ends if p >= x)

    cvals = {}
    d_plus = dvals[pos_u + 1]
    for x in range(d.num_black, pos_u, -1):
        cvals[x] = d_plus - dvals[x]
    for x in range(pos_u, 0, -1):
        nxt = cvals[x + 1]
        right_color = d.colors[x - 1]
        if right_color == "\\":
            cvals[x] = nxt
        elif dvals[x] + 1 == dvals[x + 1]:
            cvals[x] = nxt
        elif dvals[x] == dvals[x + 1]:
            cvals[x] = nxt - 1
        else:
            raise DiagramError("tie covering counts jump by more than one")
    return dvals, cvals


def restrict_taut(D, i):
    """The character of the tautological bundle of black line X_i at the fixed
    point D: for every blue line U the weights t_U + (c - d_minus + 1 + k) h,
    k = 0..d[X_i]-1, where d_minus is the d-value just left of U.
    """
    d = D.diagram
    if not 1 <= i <= d.num_black:
        raise DiagramError("black line index out of range")
    blues = d.blue_positions()
    out = Character(d.N)
    for j in range(1, d.N + 1):
        dvals, cvals = taut_tables(D, j)
        mult = dvals[i]
        if not mult:
            continue
        d_minus = dvals[blues[j - 1]]
        base = cvals[i] - d_minus + 1
        for k in range(mult):
            out = out.plus(Character.weight(d.N, {j: 1}, base + k))
    return out


def taut_chern(D, i):
    """Equivariant first Chern class restriction: the sum of the weights."""
    return restrict_taut(D, i).weight_sum()


# -- localization formula for cotangent bundles of flag varieties -------------


def loop_free_prefactor(n, word):
    """Product of (alpha + h) over positive roots alpha not among the betas."""
    betas = set(beta_sequence(n, word))
    out = MultiPoly.one(n)
    h = MultiPoly.h(n)
    for a in range(1, n + 1):
        for b in range(a + 1, n + 1):
            if (a, b) not in betas:
                out = out * (beta_poly(n, (a, b)) + h)
    return out


def stab_full_flag(n, w, w_prime, word=None):
    """Equivariant multiplicity of the antidominant stable envelope of w' at
    the fixed point w on the cotangent bundle of the full flag variety:
    prefactor times the subword sum; zero unless w' <= w in Bruhat order.
    """
    if word is None:
        word = reduced_word(w)
    return loop_free_prefactor(n, word) * subword_sums(word, n, [w_prime])[w_prime]


def _block_root_denominator(delta, z):
    """The forms z.(t_a - t_b) over positive roots inside delta blocks.

    Returns (sign, [LinearForm]) with the overall sign of normalization.
    """
    forms = []
    sgn = 1
    for k in range(1, len(delta) + 1):
        block = list(delta.block(k))
        for x in range(len(block)):
            for y in range(x + 1, len(block)):
                form, s = LinearForm.normalized(z(block[x]), z(block[y]))
                forms.append(form)
                sgn *= s
    return sgn, forms


def stab_partial_flag(delta, w, w_prime):
    """Partial flag multiplicity via the full flag one.

    Sums sign * stab_full_flag(z, w') / prod(z.alpha) over the coset w S_delta
    with sign (-1)^(l(w'S_delta) + l(w')); the result is certified to be a
    polynomial.
    """
    if not isinstance(delta, Composition):
        delta = Composition(delta)
    n = delta.total
    sign = -1 if (coset_length(w_prime, delta) + w_prime.length()) % 2 else 1
    total = LocalizedScalar.from_poly(MultiPoly.zero(n))
    for v in young_elements(delta):
        z = w * v
        word = reduced_word(z)
        num = subword_sums(word, n, [w_prime])[w_prime]
        if num.is_zero():
            continue
        num = loop_free_prefactor(n, word) * num
        dsgn, forms = _block_root_denominator(delta, z)
        total = total + LocalizedScalar(num * (sign * dsgn), forms)
    return total.to_poly()


# -- resolution pipeline -------------------------------------------------------


def resolution_normalizer(diagram):
    """prod over blue lines of prod_{j=1}^{c-1} (j h)^(c-j)."""
    m = diagram.margins()
    out = MultiPoly.one(diagram.N)
    h = MultiPoly.h(diagram.N)
    for c in m.c:
        for j in range(1, c):
            out = out * (h * j) ** (c - j)
    return out


def psi_map(diagram):
    """The substitution t_{C_{i-1}+k} -> t_i - (k-1) h collapsing the resolved
    torus onto the torus of the diagram."""
    m = diagram.margins()
    N = diagram.N
    images = []
    for i in range(1, N + 1):
        for k in range(1, m.c[i - 1] + 1):
            im = MultiPoly.t(i, N) - MultiPoly.h(N) * (k - 1)
            images.append(im)
    return RingMap(m.n, N, images)


_TILDE_GRID_CACHE = {}


def stab_tilde_grid(diagram):
    """Normalized antidominant multiplicities on a separated essential diagram.

    Returns {(eval key, arg key): MultiPoly} over all pairs of fixed points
    (keys are row-major BCT bit strings).
    """
    ckey = diagram.key()
    if ckey in _TILDE_GRID_CACHE:
        return _TILDE_GRID_CACHE[ckey]
    if not diagram.is_separated() or not diagram.is_essential():
        raise DiagramError("stable grid expects a separated essential diagram")
    m = diagram.margins()
    N = diagram.N
    bcts = enumerate_bct(diagram)
    grid = {}
    if m.n == 0:
        grid[(bct_key(bcts[0]), bct_key(bcts[0]))] = MultiPoly.one(N)
        _TILDE_GRID_CACHE[ckey] = grid
        return grid
    comp_r, comp_c = Composition(m.r), Composition(m.c)
    targets = {bct_key(A): tilde_w(A, comp_r, comp_c) for A in bcts}
    target_perms = list(targets.values())
    norm = resolution_normalizer(diagram)
    psi = psi_map(diagram)
    n = m.n
    zero = LocalizedScalar.from_poly(MultiPoly.zero(n))
    for A in bcts:
        ekey = bct_key(A)
        w_eval = w_distinguished(A, comp_r, comp_c)
        acc = {akey: zero for akey in targets}
        for v in young_elements(comp_r):
            z = w_eval * v
            word = reduced_word(z)
            sums = subword_sums(word, n, target_perms)
            prefac = None
            dsgn, forms = _block_root_denominator(comp_r, z)
            for akey, tgt in targets.items():
                num = sums[tgt]
                if num.is_zero():
                    continue
                if prefac is None:
                    prefac = loop_free_prefactor(n, word)
                acc[akey] = acc[akey] + LocalizedScalar(prefac * num * dsgn, forms)
        for akey, val in acc.items():
            poly = val.to_poly()  # Polynomiality is a theorem; failure is a bug.
            grid[(ekey, akey)] = psi(poly).exact_div(norm)
    _TILDE_GRID_CACHE[ckey] = grid
    return grid


def stab_tilde_antidominant(diagram, D_eval, D_arg):
    """Normalized antidominant stable multiplicity on a separated essential
    diagram, straight from the resolution pipeline."""
    grid = stab_tilde_grid(diagram)
    return grid[(D_eval.key(), D_arg.key())]


# -- constant normal characters -------------------------------------------------


def stack_character(diagram):
    """The constant character controlling the normalized stable basis of a
    separated diagram (pure-h weights cancel and are omitted)."""
    m = diagram.margins()
    N = diagram.N
    out = Character(N)
    for j in range(1, N + 1):
        for l in range(1, m.c[j - 1]):
            for k in range(j + 1, N + 1):
                for i in range(m.c[k - 1]):
                    out = out.plus(Character.weight(N, {k: 1, j: -1}, l - i))
                    out = out.plus(Character.weight(N, {j: 1, k: -1}, 1 - l + i))
    return out


def n_euler(diagram, z, part):
    """Euler class of the positive ('+') or negative ('-') part of the
    constant normal character, split by the chamber z^-1.C_-."""
    char = stack_character(diagram)
    pos, neg = char.split_by_chamber(z)
    return (neg if part == "-" else pos).euler()


def chargeless_character(diagram):
    """Constant normal character of dropping the chargeless blue lines of a
    separated diagram."""
    m = diagram.margins()
    N = diagram.N
    out = Character(N)
    for j in range(1, N + 1):
        if m.c[j - 1] != 0:
            continue
        for k in range(j + 1, N + 1):
            for i in range(m.c[k - 1]):
                out = out.plus(Character.weight(N, {k: 1, j: -1}, -i))
                out = out.plus(Character.weight(N, {j: 1, k: -1}, i + 1))
    return out


def chargeless_euler(diagram, z):
    """Euler class of the negative part of the chargeless reduction character."""
    char = chargeless_character(diagram)
    if not char.weights:
        return MultiPoly.one(diagram.N)
    pos, neg = char.split_by_chamber(z)
    return neg.euler()


# -- chamber transport and the full pipeline -------------------------------------


def _standardize(values):
    """The permutation with the same relative order as the given values."""
    order = sorted(range(len(values)), key=lambda k: values[k])
    ol = [0] * len(values)
    for rank, k in enumerate(order, start=1):
        ol[k] = rank
    return Permutation(ol)


def stab_tilde_chamber(diagram, z, ekey, akey):
    """Normalized multiplicity for the chamber z^-1.C_- on a separated
    essential diagram, via the symmetric group action."""
    if z.is_identity():
        grid = stab_tilde_grid(diagram)
        return grid[(ekey, akey)]
    zd = sn_act(z, diagram)
    m = diagram.margins()
    M, N = diagram.M, diagram.N
    from .diagrams import parse_bct_key

    A_e = parse_bct_key(ekey, M, N)
    A_a = parse_bct_key(akey, M, N)
    grid = stab_tilde_grid(zd)
    value = grid[
        (bct_key(permute_bct_columns(A_e, z)), bct_key(permute_bct_columns(A_a, z)))
    ]
    return value.act_perm(z.inverse())


class StabValue:
    """A stable multiplicity together with its normalization flag."""

    __slots__ = ("value", "normalized")

    def __init__(self, value, normalized):
        self.value = value
        self.normalized = normalized

    def __repr__(self):
        return "StabValue(%s, normalized=%s)" % (self.value, self.normalized)


_STAB_GRID_CACHE = {}


def stab_grid(diagram, z, normalized=False):
    """All multiplicities {(eval key, arg key): MultiPoly} for the chamber
    z^-1.C_-, for any admissible diagram.

    Pipeline: Hanany-Witten separation (transporting by t_{j0} -> t_{j0}+h per
    move), chargeless reduction (Euler factor of the constant normal
    character), chamber transport to antidominant via the symmetric group
    action, the resolution formula, and finally division by the normalization
    Euler class unless ``normalized``.
    """
    d = diagram
    if z.n != d.N:
        raise DiagramError("chamber window %d, diagram has %d blue lines" % (z.n, d.N))
    ckey = (d.key(), z.one_line, normalized)
    if ckey in _STAB_GRID_CACHE:
        return _STAB_GRID_CACHE[ckey]
    d_sep, moves = separate(d)
    m = d_sep.margins()
    N = d.N
    bcts = enumerate_bct(d_sep)
    keys = [bct_key(A) for A in bcts]

    if m.n == 0:
        grid = {(keys[0], keys[0]): MultiPoly.one(N)}
        _STAB_GRID_CACHE[ckey] = grid
        return grid

    sample = TieDiagram.from_bct(d_sep, bcts[0])
    _, kept_rows, kept_cols = essential_tie(sample)
    d_ess = essential(d_sep)[0]
    n_ess = d_ess.N
    z_ess = _standardize([z(k) for k in kept_cols])
    embed_map = RingMap.renumber(
        n_ess, N, {j: kept_cols[j - 1] for j in range(1, n_ess + 1)}
    )
    iota = chargeless_euler(d_sep, z)
    norm_euler = embed_map(n_euler(d_ess, z_ess, "-"))
    post = None
    if moves:
        shifts = {}
        for _, j0, _ in moves:
            shifts[j0] = shifts.get(j0, 0) + 1
        post = RingMap.h_shift(N, shifts)

    def ess_key(A):
        rows = [i - 1 for i in kept_rows]
        cols = [j - 1 for j in kept_cols]
        return bct_key(tuple(tuple(A[i][j] for j in cols) for i in rows))

    from .diagrams import parse_bct_key

    if z_ess.is_identity():
        base = stab_tilde_grid(d_ess)
        transport = None
    else:
        base = stab_tilde_grid(sn_act(z_ess, d_ess))
        transport = z_ess.inverse()

    def base_key(A):
        key = ess_key(A)
        if transport is None:
            return key
        return bct_key(permute_bct_columns(parse_bct_key(key, d_ess.M, n_ess), z_ess))

    grid = {}
    for Ae, ekey in zip(bcts, keys):
        eperm = base_key(Ae)
        for Aa, akey in zip(bcts, keys):
            core = base[(eperm, base_key(Aa))]
            if transport is not None:
                core = core.act_perm(transport)
            core = embed_map(core)
            if normalized:
                value = core * iota
            else:
                value = core.exact_div(norm_euler) * iota
            if post is not None:
                value = post(value)
            grid[(ekey, akey)] = value
    _STAB_GRID_CACHE[ckey] = grid
    return grid


def stab_restriction(diagram, z, D_eval, D_arg, normalized=False):
    """Equivariant multiplicity of Stab_{z^-1.C_-}(D_arg) at D_eval."""
    grid = stab_grid(diagram, z, normalized=normalized)
    return grid[(D_eval.key(), D_arg.key())]


def opposite_chamber(z):
    """The permutation labeling the opposite chamber: w_0 composed after z."""
    return Permutation.longest(z.n) * z


def tangent_euler(diagram, z, D):
    """Euler class of the full tangent space at the fixed point D: the product
    of the two diagonal stable multiplicities for a chamber and its opposite.
    Independent of the chamber."""
    a = stab_restriction(diagram, z, D, D, normalized=False)
    b = stab_restriction(diagram, opposite_chamber(z), D, D, normalized=False)
    return a * b
