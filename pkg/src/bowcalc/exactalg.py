"""Exact multivariate polynomial arithmetic over the rationals.

Polynomials live in Q[t_1, ..., t_N, h] for an explicit window N.  On top of
the plain ring we provide the pieces the localization calculus needs:

* ``LinearForm`` -- the forms t_i - t_j + m*h that generate the multiplicative
  set used for localized denominators,
* ``LocalizedScalar`` -- fractions whose denominator is a multiset of linear
  forms, kept factored,
* ``RingMap`` -- Q[h]-algebra homomorphisms sending each t variable to a
  degree <= 1 polynomial,
* ``Character`` -- finite multisets of torus weights with Euler classes and
  chamber splitting.

Everything is immutable after construction and all arithmetic is exact.
"""

import heapq
from collections import Counter
from fractions import Fraction
from functools import reduce


class WindowMismatchError(ValueError):
    pass


class NotDivisibleError(ArithmeticError):
    pass


class ZeroWeightError(ValueError):
    pass


class PureHWeightError(ValueError):
    pass


class NonPolynomialError(ArithmeticError):
    pass


INF = float("inf")


def _mono_key(mono):
    # graded lexicographic, h (last slot) least significant
    return (sum(mono), mono)


class MultiPoly:
    """Polynomial in t_1..t_window and h with rational coefficients.

    Terms are stored as a dict mapping exponent tuples of length window+1
    (t exponents first, h exponent last) to nonzero ints or Fractions.
    """

    __slots__ = ("window", "terms", "_hash")

    def __init__(self, window, terms=None):
        self.window = window
        clean = {}
        if terms:
            for mono, coef in terms.items():
                if coef:
                    if len(mono) != window + 1:
                        raise WindowMismatchError(
                            "monomial %r does not fit window %d" % (mono, window)
                        )
                    # plain ints keep the hot loops fast; Fractions only when needed
                    if type(coef) is not int:
                        if isinstance(coef, Fraction) and coef.denominator == 1:
                            coef = coef.numerator
                        elif isinstance(coef, float):
                            raise TypeError("floating point coefficients are not allowed")
                    clean[mono] = coef
        self.terms = clean
        self._hash = None

    # -- constructors ------------------------------------------------------

    @classmethod
    def _raw(cls, window, terms):
        # internal: terms must be clean (no zeros, int/Fraction coefficients)
        self = cls.__new__(cls)
        self.window = window
        self.terms = terms
        self._hash = None
        return self

    @classmethod
    def zero(cls, window):
        return cls(window, {})

    @classmethod
    def const(cls, value, window):
        value = Fraction(value)
        if not value:
            return cls.zero(window)
        return cls(window, {(0,) * (window + 1): value})

    @classmethod
    def one(cls, window):
        return cls.const(1, window)

    @classmethod
    def t(cls, i, window):
        if not 1 <= i <= window:
            raise WindowMismatchError("t_%d outside window %d" % (i, window))
        mono = [0] * (window + 1)
        mono[i - 1] = 1
        return cls(window, {tuple(mono): Fraction(1)})

    @classmethod
    def h(cls, window):
        mono = [0] * window + [1]
        return cls(window, {tuple(mono): Fraction(1)})

    @classmethod
    def linear(cls, window, t_coeffs, h_coeff=0, constant=0):
        """Sum of c_i*t_i (t_coeffs maps index -> c_i) plus h_coeff*h + constant."""
        terms = {}
        for i, c in t_coeffs.items():
            if c:
                mono = [0] * (window + 1)
                mono[i - 1] = 1
                terms[tuple(mono)] = Fraction(c)
        if h_coeff:
            mono = [0] * window + [1]
            terms[tuple(mono)] = Fraction(h_coeff)
        if constant:
            terms[(0,) * (window + 1)] = Fraction(constant)
        return cls(window, terms)

    # -- ring structure ----------------------------------------------------

    def _check(self, other):
        if self.window != other.window:
            raise WindowMismatchError(
                "window mismatch: %d vs %d" % (self.window, other.window)
            )

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = MultiPoly.const(other, self.window)
        self._check(other)
        terms = dict(self.terms)
        for mono, coef in other.terms.items():
            s = terms.get(mono, 0) + coef
            if s:
                terms[mono] = s
            else:
                terms.pop(mono, None)
        return MultiPoly._raw(self.window, terms)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly._raw(self.window, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = MultiPoly.const(other, self.window)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                return MultiPoly.zero(self.window)
            if type(other) is not int and other.denominator == 1:
                other = other.numerator
            return MultiPoly._raw(
                self.window, {m: c * other for m, c in self.terms.items()}
            )
        self._check(other)
        a, b = self.terms, other.terms
        if len(a) < len(b):
            a, b = b, a
        prod = {}
        for m1, c1 in a.items():
            for m2, c2 in b.items():
                mono = tuple(x + y for x, y in zip(m1, m2))
                s = prod.get(mono, 0) + c1 * c2
                if s:
                    prod[mono] = s
                else:
                    prod.pop(mono, None)
        return MultiPoly._raw(self.window, prod)

    __rmul__ = __mul__

    def __pow__(self, k):
        if k < 0:
            raise ValueError("negative power")
        result = MultiPoly.one(self.window)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base if k > 1 else base
            k >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = MultiPoly.const(other, self.window)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self.window == other.window and self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.window, frozenset(self.terms.items())))
        return self._hash

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self):
        return not self.terms

    # -- queries -----------------------------------------------------------

    def degree(self):
        """Total degree with deg t_i = deg h = 1; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(sum(m) for m in self.terms)

    def h_valuation(self):
        """Largest m with h^m dividing self; INF for the zero polynomial."""
        if not self.terms:
            return INF
        return min(m[-1] for m in self.terms)

    def constant_value(self):
        if not self.terms:
            return Fraction(0)
        if len(self.terms) == 1:
            (mono, coef), = self.terms.items()
            if not any(mono):
                return coef
        raise ValueError("not a constant polynomial")

    def leading(self):
        mono = max(self.terms, key=_mono_key)
        return mono, self.terms[mono]

    def evaluate(self, values, h_value):
        """Exact evaluation at integer/rational arguments (t_1..t_N, h)."""
        if len(values) != self.window:
            raise WindowMismatchError("need %d values" % self.window)
        point = list(values) + [h_value]
        total = 0
        for mono, coef in self.terms.items():
            term = coef
            for v, e in zip(point, mono):
                if e:
                    term *= v ** e
            total += term
        return total

    # -- division ----------------------------------------------------------

    def exact_div(self, q):
        """Return r with q*r == self, or raise NotDivisibleError."""
        if isinstance(q, (int, Fraction)):
            if not q:
                raise ZeroDivisionError("division by zero polynomial")
            return self * (Fraction(1) / q)
        self._check(q)
        if q.is_zero():
            raise ZeroDivisionError("division by zero polynomial")
        if self.is_zero():
            return MultiPoly.zero(self.window)

        def heap_key(m):
            return (-sum(m), tuple(-e for e in m))

        rem = dict(self.terms)
        lm, lc = q.leading()
        qterms = list(q.terms.items())
        heap = [(heap_key(m), m) for m in rem]
        heapq.heapify(heap)
        quot = {}
        while rem:
            # lazy-deletion max-heap: skip monomials no longer present
            while heap and heap[0][1] not in rem:
                heapq.heappop(heap)
            mono = heap[0][1]
            diff = tuple(a - b for a, b in zip(mono, lm))
            if any(e < 0 for e in diff):
                raise NotDivisibleError("leading term not divisible")
            rc = rem[mono]
            if isinstance(rc, int) and isinstance(lc, int):
                c = rc // lc if rc % lc == 0 else Fraction(rc, lc)
            else:
                c = rc / lc
            quot[diff] = c
            for m2, c2 in qterms:
                m = tuple(a + b for a, b in zip(diff, m2))
                old = rem.get(m)
                s = (old if old is not None else 0) - c * c2
                if s:
                    if old is None:
                        heapq.heappush(heap, (heap_key(m), m))
                    rem[m] = s
                else:
                    rem.pop(m, None)
        return MultiPoly._raw(self.window, quot)

    def divides(self, other):
        try:
            other.exact_div(self)
            return True
        except NotDivisibleError:
            return False

    def shift_h(self, m):
        """Multiply by h^m (m >= 0)."""
        return self * MultiPoly.h(self.window) ** m

    # -- substitution ------------------------------------------------------

    def act_perm(self, w):
        """Variable permutation t_i -> t_{w(i)}, h fixed (a ring automorphism)."""
        if w.n != self.window:
            raise WindowMismatchError("permutation window %d vs %d" % (w.n, self.window))
        terms = {}
        for mono, coef in self.terms.items():
            new = [0] * (self.window + 1)
            new[-1] = mono[-1]
            for i in range(self.window):
                new[w(i + 1) - 1] = mono[i]
            terms[tuple(new)] = coef
        return MultiPoly._raw(self.window, terms)

    def embed(self, window, index_map=None):
        """Re-window: t_i of self becomes t_{index_map[i]} in the larger window."""
        if index_map is None:
            index_map = {i: i for i in range(1, self.window + 1)}
        terms = {}
        for mono, coef in self.terms.items():
            new = [0] * (window + 1)
            new[-1] = mono[-1]
            for i in range(self.window):
                if mono[i]:
                    new[index_map[i + 1] - 1] = mono[i]
            terms[tuple(new)] = terms.get(tuple(new), 0) + coef
        return MultiPoly(window, terms)

    # -- serialization -----------------------------------------------------

    def _var_names(self):
        return ["t%d" % (i + 1) for i in range(self.window)] + ["h"]

    def __str__(self):
        if not self.terms:
            return "0"
        names = self._var_names()
        parts = []
        for mono in sorted(self.terms, key=_mono_key, reverse=True):
            coef = self.terms[mono]
            factors = []
            for name, e in zip(names, mono):
                if e == 1:
                    factors.append(name)
                elif e > 1:
                    factors.append("%s^%d" % (name, e))
            if not factors:
                body = str(abs(coef))
            else:
                body = "*".join(factors)
                if abs(coef) != 1:
                    body = "%s*%s" % (abs(coef), body)
            sign = "-" if coef < 0 else "+"
            parts.append((sign, body))
        first_sign, first_body = parts[0]
        out = ("-" if first_sign == "-" else "") + first_body
        for sign, body in parts[1:]:
            out += " %s %s" % (sign, body)
        return out

    def __repr__(self):
        return "MultiPoly(%d, %s)" % (self.window, str(self))

    def structured(self):
        """Canonically sorted list of {coef, exps} dicts (JSON-friendly)."""
        names = self._var_names()
        out = []
        for mono in sorted(self.terms, key=_mono_key, reverse=True):
            coef = self.terms[mono]
            exps = {n: e for n, e in zip(names, mono) if e}
            out.append({"coef": "%d/%d" % (coef.numerator, coef.denominator), "exps": exps})
        return out


def poly_product(polys, window):
    return reduce(lambda a, b: a * b, polys, MultiPoly.one(window))


class LinearForm:
    """The form t_i - t_j + m*h with i < j (an element of the set S).

    Normalization flips (i, j) and negates m when needed; the overall sign is
    the caller's to track.
    """

    __slots__ = ("i", "j", "m")

    def __init__(self, i, j, m=0):
        if i == j:
            raise ValueError("degenerate form t_i - t_i")
        if i > j:
            raise ValueError("use normalized(); require i < j")
        self.i = i
        self.j = j
        self.m = m

    @classmethod
    def normalized(cls, i, j, m=0):
        """Return (form, sign) with form.i < form.j."""
        if i < j:
            return cls(i, j, m), 1
        return cls(j, i, -m), -1

    def as_poly(self, window):
        return MultiPoly.linear(window, {self.i: 1, self.j: -1}, self.m)

    def key(self):
        return (self.i, self.j, self.m)

    def __eq__(self, other):
        return isinstance(other, LinearForm) and self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    def __lt__(self, other):
        return self.key() < other.key()

    def __str__(self):
        if self.m == 0:
            tail = ""
        elif self.m == 1:
            tail = "+h"
        elif self.m == -1:
            tail = "-h"
        else:
            tail = "%+d*h" % self.m
        return "t%d-t%d%s" % (self.i, self.j, tail)

    __repr__ = __str__


_EVAL_BASE = (1009, 2003, 3001, 4001, 5003, 6007, 7001, 8009, 9001, 10007)


def factor_s_forms(p, max_abs_m=None):
    """Factor p as constant * h^k * product of S-linear forms.

    Candidates t_i - t_j + m*h are pre-screened by evaluating p on a point of
    the corresponding hyperplane (cheap), then confirmed by trial division.
    Returns (constant, h power, sorted list of LinearForm); raises
    NotDivisibleError if a non-constant part remains.
    """
    window = p.window
    if p.is_zero():
        raise NotDivisibleError("zero polynomial has no S-form factorization")
    hpow = p.h_valuation()
    rest = p
    if hpow:
        rest = p.exact_div(MultiPoly.h(window) ** hpow)
    factors = []
    bound = max_abs_m if max_abs_m is not None else max(2, rest.degree())
    cap = max(bound, rest.degree())
    h_val = 1
    while rest.degree() > 0:
        progress = False
        base = [_EVAL_BASE[k % len(_EVAL_BASE)] * (k + 1) for k in range(window)]
        for i in range(1, window + 1):
            for j in range(i + 1, window + 1):
                for m in range(-bound, bound + 1):
                    point = list(base)
                    point[i - 1] = point[j - 1] - m * h_val
                    if rest.evaluate(point, h_val) != 0:
                        continue
                    form = LinearForm(i, j, m)
                    fp = form.as_poly(window)
                    while True:
                        try:
                            rest = rest.exact_div(fp)
                        except NotDivisibleError:
                            break
                        factors.append(form)
                        progress = True
                        if rest.degree() <= 0:
                            break
                    if rest.degree() <= 0:
                        break
                if rest.degree() <= 0:
                    break
            if rest.degree() <= 0:
                break
        if rest.degree() <= 0:
            break
        if not progress:
            if bound < cap:
                bound = min(cap, bound * 2)
                continue
            raise NotDivisibleError("not a product of S-linear forms: %s" % rest)
    return rest.constant_value(), hpow, sorted(factors)


class LocalizedScalar:
    """Fraction num / prod(denoms) with denominators a multiset of S forms.

    Common factors divisible by a denominator element are cancelled greedily;
    equality is decided by cross multiplication.
    """

    __slots__ = ("num", "denoms")

    def __init__(self, num, denoms=(), reduce_now=True):
        self.num = num
        self.denoms = tuple(sorted(denoms, key=lambda f: f.key()))
        if reduce_now:
            self._reduce()

    def _reduce(self):
        if self.num.is_zero():
            self.denoms = ()
            return
        remaining = []
        num = self.num
        window = num.window
        base = [_EVAL_BASE[k % len(_EVAL_BASE)] * (k + 1) for k in range(window)]
        for form in self.denoms:
            # a factor must vanish on its hyperplane; screen before dividing
            point = list(base)
            point[form.i - 1] = point[form.j - 1] - form.m
            if num.evaluate(point, 1) != 0:
                remaining.append(form)
                continue
            try:
                num = num.exact_div(form.as_poly(window))
            except NotDivisibleError:
                remaining.append(form)
        self.num = num
        self.denoms = tuple(remaining)

    @property
    def window(self):
        return self.num.window

    @classmethod
    def from_poly(cls, p):
        return cls(p, ())

    def denom_poly(self):
        return poly_product([f.as_poly(self.window) for f in self.denoms], self.window)

    def is_polynomial(self):
        return not self.denoms

    def to_poly(self):
        if self.denoms:
            raise NonPolynomialError("denominator survives: %s" % (self.denoms,))
        return self.num

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = LocalizedScalar.from_poly(MultiPoly.const(other, self.window))
        if isinstance(other, MultiPoly):
            other = LocalizedScalar.from_poly(other)
        mine = Counter(self.denoms)
        theirs = Counter(other.denoms)
        common = mine & theirs
        a = self.num * poly_product(
            [f.as_poly(self.window) for f in (theirs - common).elements()], self.window
        )
        b = other.num * poly_product(
            [f.as_poly(self.window) for f in (mine - common).elements()], self.window
        )
        return LocalizedScalar(a + b, list((mine | theirs).elements()))

    __radd__ = __add__

    def __neg__(self):
        return LocalizedScalar(-self.num, self.denoms, reduce_now=False)

    def __sub__(self, other):
        if isinstance(other, (int, Fraction, MultiPoly)):
            return self + (-(LocalizedScalar.from_poly(other) if isinstance(other, MultiPoly) else LocalizedScalar.from_poly(MultiPoly.const(other, self.window))))
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return LocalizedScalar(self.num * other, self.denoms, reduce_now=False)
        if isinstance(other, MultiPoly):
            return LocalizedScalar(self.num * other, self.denoms)
        return LocalizedScalar(self.num * other.num, self.denoms + other.denoms)

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = LocalizedScalar.from_poly(MultiPoly.const(other, self.window))
        if isinstance(other, MultiPoly):
            other = LocalizedScalar.from_poly(other)
        return self.num * other.denom_poly() == other.num * self.denom_poly()

    def __bool__(self):
        return not self.num.is_zero()

    def h_congruent(self, other, power):
        """Congruence mod h^power after clearing denominators.

        All S forms are invertible mod h (they are nonzero at h = 0), so
        a = b mod h^power iff h^power divides the cross-multiplied difference.
        """
        diff = self.num * other.denom_poly() - other.num * self.denom_poly()
        return diff.h_valuation() >= power

    def __str__(self):
        if not self.denoms:
            return str(self.num)
        return "(%s) / (%s)" % (self.num, " * ".join(str(f) for f in self.denoms))

    __repr__ = __str__


class RingMap:
    """Q[h]-algebra homomorphism: every t variable maps to a degree <= 1 poly."""

    __slots__ = ("source", "target", "images", "_pows", "_renumber")

    def __init__(self, source, target, images):
        if len(images) != source:
            raise WindowMismatchError("need %d images, got %d" % (source, len(images)))
        for im in images:
            if im.window != target:
                raise WindowMismatchError("image window %d, expected %d" % (im.window, target))
            if im.degree() > 1:
                raise ValueError("ring map images must have degree <= 1")
        self.source = source
        self.target = target
        self.images = tuple(images)
        self._pows = [{0: MultiPoly.one(target)} for _ in range(source)]
        # pure variable renumberings admit a monomial-level fast path
        renumber = {}
        for i, im in enumerate(self.images, start=1):
            if len(im.terms) == 1:
                (mono, coef), = im.terms.items()
                if coef == 1 and sum(mono) == 1 and mono[-1] == 0:
                    renumber[i] = mono.index(1) + 1
                    continue
            renumber = None
            break
        self._renumber = renumber

    def _power(self, i, e):
        cache = self._pows[i - 1]
        if e not in cache:
            top = max(cache)
            img = self.images[i - 1]
            while top < e:
                cache[top + 1] = cache[top] * img
                top += 1
        return cache[e]

    @classmethod
    def identity(cls, window):
        return cls(window, window, [MultiPoly.t(i, window) for i in range(1, window + 1)])

    @classmethod
    def h_shift(cls, window, shifts):
        """t_j -> t_j + shifts[j]*h (shifts maps index -> integer)."""
        images = []
        for i in range(1, window + 1):
            im = MultiPoly.t(i, window)
            m = shifts.get(i, 0)
            if m:
                im = im + MultiPoly.h(window) * m
            images.append(im)
        return cls(window, window, images)

    @classmethod
    def renumber(cls, source, target, index_map):
        """t_i -> t_{index_map[i]}."""
        return cls(source, target, [MultiPoly.t(index_map[i], target) for i in range(1, source + 1)])

    def __call__(self, p):
        if isinstance(p, LocalizedScalar):
            out = LocalizedScalar.from_poly(self(p.num))
            for form in p.denoms:
                img = self(form.as_poly(p.window))
                c, hpow, forms = factor_s_forms(img)
                if hpow or len(forms) != 1:
                    raise NonPolynomialError("denominator image is not a single S form")
                out = LocalizedScalar(out.num * (Fraction(1) / c), out.denoms + (forms[0],))
            return out
        if p.window != self.source:
            raise WindowMismatchError("window %d, map expects %d" % (p.window, self.source))
        if self._renumber is not None:
            terms = {}
            for mono, coef in p.terms.items():
                new = [0] * (self.target + 1)
                new[-1] = mono[-1]
                for i in range(self.source):
                    if mono[i]:
                        new[self._renumber[i + 1] - 1] += mono[i]
                key = tuple(new)
                s = terms.get(key, 0) + coef
                if s:
                    terms[key] = s
                else:
                    del terms[key]
            return MultiPoly._raw(self.target, terms)
        acc = {}
        for mono, coef in p.terms.items():
            term = None
            for i in range(self.source):
                e = mono[i]
                if e:
                    pw = self._power(i + 1, e)
                    term = pw if term is None else term * pw
            hexp = mono[-1]
            if term is None:
                key_terms = {(0,) * self.target + (hexp,): coef}
            else:
                key_terms = {
                    m[:-1] + (m[-1] + hexp,): c * coef for m, c in term.terms.items()
                }
            for m, c in key_terms.items():
                s = acc.get(m, 0) + c
                if s:
                    acc[m] = s
                else:
                    del acc[m]
        return MultiPoly._raw(self.target, acc)

    def compose(self, inner):
        """self after inner (source = inner.source)."""
        if inner.target != self.source:
            raise WindowMismatchError("composition windows do not match")
        return RingMap(inner.source, self.target, [self(im) for im in inner.images])


class Character:
    """Finite multiset of torus weights sum(c_i t_i) + c_h h.

    Weights are exponent tuples of length window+1 with integer entries.
    """

    __slots__ = ("window", "weights")

    def __init__(self, window, weights=()):
        self.window = window
        if isinstance(weights, Counter):
            self.weights = Counter({w: m for w, m in weights.items() if m})
        else:
            self.weights = Counter(weights)

    @classmethod
    def weight(cls, window, t_coeffs, h_coeff=0):
        vec = [0] * (window + 1)
        for i, c in t_coeffs.items():
            vec[i - 1] = c
        vec[-1] = h_coeff
        return cls(window, [tuple(vec)])

    def rank(self):
        return sum(self.weights.values())

    def plus(self, other):
        """Direct sum (multiset union)."""
        if other.window != self.window:
            raise WindowMismatchError("character windows differ")
        return Character(self.window, self.weights + other.weights)

    def dual(self):
        return Character(
            self.window,
            {tuple(-x for x in w): m for w, m in self.weights.items()},
        )

    def tensor(self, other):
        """Tensor product: all pairwise weight sums with multiplicity."""
        if other.window != self.window:
            raise WindowMismatchError("character windows differ")
        out = Counter()
        for w1, m1 in self.weights.items():
            for w2, m2 in other.weights.items():
                out[tuple(a + b for a, b in zip(w1, w2))] += m1 * m2
        return Character(self.window, out)

    def euler(self):
        """Product of linear polynomials of all weights (with multiplicity)."""
        out = MultiPoly.one(self.window)
        for w, mult in self.weights.items():
            if not any(w):
                raise ZeroWeightError("character contains a zero weight")
            p = MultiPoly.linear(
                self.window,
                {i + 1: w[i] for i in range(self.window) if w[i]},
                w[-1],
            )
            out = out * p ** mult
        return out

    def weight_sum(self):
        """First Chern class: the sum of all weights as a polynomial."""
        out = MultiPoly.zero(self.window)
        for w, mult in self.weights.items():
            out = out + MultiPoly.linear(
                self.window, {i + 1: w[i] for i in range(self.window) if w[i]}, w[-1]
            ) * mult
        return out

    def split_by_chamber(self, z):
        """Split into (positive, negative) parts for the chamber z^-1 . C_-.

        Every weight must have t part t_a - t_b; the weight goes to the
        negative side iff z(a) < z(b).
        """
        pos, neg = Counter(), Counter()
        for w, mult in self.weights.items():
            support = [(i + 1, c) for i, c in enumerate(w[:-1]) if c]
            if (
                len(support) != 2
                or support[0][1] + support[1][1] != 0
                or abs(support[0][1]) != 1
            ):
                raise PureHWeightError("weight %r is not of the form t_a - t_b + m*h" % (w,))
            (x, cx), (y, _) = support
            a, b = (x, y) if cx == 1 else (y, x)
            if z(a) < z(b):
                neg[w] += mult
            else:
                pos[w] += mult
        return Character(self.window, pos), Character(self.window, neg)

    def sorted_weights(self):
        out = []
        for w in sorted(self.weights):
            out.extend([w] * self.weights[w])
        return out

    def __eq__(self, other):
        return (
            isinstance(other, Character)
            and self.window == other.window
            and self.weights == other.weights
        )

    def __str__(self):
        names = ["t%d" % (i + 1) for i in range(self.window)] + ["h"]
        pieces = []
        for w in self.sorted_weights():
            lin = MultiPoly.linear(
                self.window, {i + 1: w[i] for i in range(self.window) if w[i]}, w[-1]
            )
            pieces.append(str(lin) if not lin.is_zero() else "0")
        return "{" + ", ".join(pieces) + "}"

    __repr__ = __str__
