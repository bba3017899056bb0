"""Exact Laurent polynomials in one variable q with integer coefficients.

This is the coefficient ring for all algebra computations in the package.
No floating point is used anywhere; rank computations are either exact
(fraction-free elimination) or probabilistic (modular evaluation at random
points, seeded).
"""

from fractions import Fraction
import random

__all__ = [
    "LaurentPoly", "ZERO", "ONE", "Q", "QINV", "QDIFF", "DELTA",
    "LaurentFrac", "CoeffMatrix", "matrix_rank", "echelon_insert",
]


class LaurentPoly:
    """An element of Z[q, q^-1], stored as a dict exponent -> coefficient."""

    __slots__ = ("c",)

    def __init__(self, coeffs=None):
        if coeffs is None:
            self.c = {}
        else:
            self.c = {e: v for e, v in coeffs.items() if v}

    @staticmethod
    def const(v):
        return LaurentPoly({0: v}) if v else LaurentPoly()

    @staticmethod
    def term(v, e):
        return LaurentPoly({e: v}) if v else LaurentPoly()

    def is_zero(self):
        return not self.c

    def __bool__(self):
        return bool(self.c)

    def __eq__(self, other):
        if isinstance(other, int):
            return self.c == ({0: other} if other else {})
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.c == other.c

    def __hash__(self):
        return hash(frozenset(self.c.items()))

    def __add__(self, other):
        if isinstance(other, int):
            other = LaurentPoly.const(other)
        out = dict(self.c)
        for e, v in other.c.items():
            w = out.get(e, 0) + v
            if w:
                out[e] = w
            else:
                out.pop(e, None)
        r = LaurentPoly.__new__(LaurentPoly)
        r.c = out
        return r

    __radd__ = __add__

    def __neg__(self):
        r = LaurentPoly.__new__(LaurentPoly)
        r.c = {e: -v for e, v in self.c.items()}
        return r

    def __sub__(self, other):
        if isinstance(other, int):
            other = LaurentPoly.const(other)
        return self + (-other)

    def __rsub__(self, other):
        return LaurentPoly.const(other) - self

    def __mul__(self, other):
        if isinstance(other, int):
            if not other:
                return LaurentPoly()
            r = LaurentPoly.__new__(LaurentPoly)
            r.c = {e: v * other for e, v in self.c.items()}
            return r
        out = {}
        for e1, v1 in self.c.items():
            for e2, v2 in other.c.items():
                e = e1 + e2
                w = out.get(e, 0) + v1 * v2
                if w:
                    out[e] = w
                else:
                    del out[e]
        r = LaurentPoly.__new__(LaurentPoly)
        r.c = out
        return r

    __rmul__ = __mul__

    def __pow__(self, k):
        if k < 0:
            raise ValueError("only nonnegative powers; use QINV for q^-1")
        out = ONE
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def min_exp(self):
        return min(self.c) if self.c else 0

    def max_exp(self):
        return max(self.c) if self.c else 0

    def to_list(self):
        """Return (low, coeffs) with coeffs[k] the coefficient of q^(low+k)."""
        if not self.c:
            return 0, []
        lo, hi = min(self.c), max(self.c)
        return lo, [self.c.get(e, 0) for e in range(lo, hi + 1)]

    @staticmethod
    def from_list(low, coeffs):
        return LaurentPoly({low + k: v for k, v in enumerate(coeffs) if v})

    def evaluate(self, x):
        """Evaluate at an exact value x (Fraction or int, nonzero)."""
        x = Fraction(x)
        if x == 0:
            raise ZeroDivisionError("cannot evaluate a Laurent polynomial at 0")
        return sum((Fraction(v) * x ** e for e, v in self.c.items()), Fraction(0))

    def evaluate_mod(self, x, p):
        """Evaluate at x modulo the prime p; x must be a unit mod p."""
        acc = 0
        xinv = pow(x, -1, p)
        for e, v in self.c.items():
            base = pow(x, e, p) if e >= 0 else pow(xinv, -e, p)
            acc = (acc + v * base) % p
        return acc

    def divexact(self, other):
        """Exact division in Z[q, q^-1]; raises ValueError if not divisible."""
        if other.is_zero():
            raise ZeroDivisionError
        if self.is_zero():
            return LaurentPoly()
        alo, a = self.to_list()
        blo, b = other.to_list()
        q, r = _list_divmod(a, b)
        if q is None or any(r):
            raise ValueError("not an exact division")
        if any(x.denominator != 1 for x in q):
            raise ValueError("not an exact division over the integers")
        return LaurentPoly.from_list(alo - blo, [int(x) for x in q])

    def __str__(self):
        if not self.c:
            return "0"
        return " + ".join(f"{self.c[e]}*q^{e}" for e in sorted(self.c, reverse=True))

    __repr__ = __str__

    @staticmethod
    def parse(text):
        """Parse the textual form produced by str(), e.g. '1*q^2 + -1*q^0'."""
        text = text.strip()
        if text == "0":
            return LaurentPoly()
        out = {}
        for piece in text.split("+"):
            piece = piece.strip()
            coeff, _, exp = piece.partition("*q^")
            if not exp:
                raise ValueError(f"bad Laurent term: {piece!r}")
            e = int(exp)
            out[e] = out.get(e, 0) + int(coeff)
        return LaurentPoly(out)


ZERO = LaurentPoly()
ONE = LaurentPoly({0: 1})
Q = LaurentPoly({1: 1})
QINV = LaurentPoly({-1: 1})
QDIFF = LaurentPoly({1: 1, -1: -1})   # q - q^-1
DELTA = LaurentPoly({1: 1, -1: 1})    # q + q^-1, the loop parameter


def _list_divmod(a, b):
    """Polynomial division of integer coefficient lists over Q.

    Returns (quotient, remainder) as Fraction lists, or (None, a) if the
    divisor is zero.
    """
    if not any(b):
        return None, a
    a = [Fraction(x) for x in a]
    b = [Fraction(x) for x in b]
    while b and b[-1] == 0:
        b.pop()
    q = [Fraction(0)] * max(0, len(a) - len(b) + 1)
    r = a[:]
    while len(r) >= len(b) and any(r):
        while r and r[-1] == 0:
            r.pop()
        if len(r) < len(b):
            break
        k = len(r) - len(b)
        f = r[-1] / b[-1]
        q[k] = f
        for i, bv in enumerate(b):
            r[k + i] -= f * bv
    return q, r


def _list_content(a):
    from math import gcd
    g = 0
    for v in a:
        g = gcd(g, abs(v))
    return g or 1


def _list_primitive(a):
    while a and a[-1] == 0:
        a.pop()
    if not a:
        return a
    g = _list_content(a)
    a = [v // g for v in a]
    if a[-1] < 0:
        a = [-v for v in a]
    return a


def _list_gcd(a, b):
    """Primitive gcd of two integer coefficient lists (subresultant-free,
    via pseudo-remainders; fine at the degrees this package reaches)."""
    a = _list_primitive(list(a))
    b = _list_primitive(list(b))
    while any(b):
        # pseudo-remainder: scale a so the division stays integral
        d = len(a) - len(b)
        if d < 0:
            a, b = b, a
            continue
        lead = b[-1]
        aa = [v * lead ** (d + 1) for v in a]
        _, r = _list_divmod(aa, b)
        r = [int(x) for x in r]
        a, b = b, _list_primitive(r)
    return a


def poly_gcd(f, g):
    """Gcd in Z[q, q^-1], normalized to lowest exponent 0, positive leading."""
    if f.is_zero():
        return _unit_normal(g)
    if g.is_zero():
        return _unit_normal(f)
    _, a = f.to_list()
    _, b = g.to_list()
    h = _list_gcd(a, b)
    ca, cb = _list_content(a), _list_content(b)
    from math import gcd as igcd
    h = [v * igcd(ca, cb) for v in _list_primitive(h)]
    # strip trailing/leading zero exponents so min exponent is 0
    lo = 0
    while h and h[0] == 0:
        h.pop(0)
        lo += 1
    return LaurentPoly.from_list(0, h)


def _unit_normal(f):
    if f.is_zero():
        return f
    lo, coeffs = f.to_list()
    if coeffs[-1] < 0:
        coeffs = [-v for v in coeffs]
    return LaurentPoly.from_list(0, coeffs)


class LaurentFrac:
    """A fraction of Laurent polynomials, reduced so equality is structural."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=ONE):
        if isinstance(num, int):
            num = LaurentPoly.const(num)
        if isinstance(den, int):
            den = LaurentPoly.const(den)
        if den.is_zero():
            raise ZeroDivisionError
        if num.is_zero():
            self.num, self.den = ZERO, ONE
            return
        g = poly_gcd(num, den)
        if not (g == ONE):
            num = num.divexact(g)
            den = den.divexact(g)
        # normalize denominator: lowest exponent 0, positive leading coeff
        lo, coeffs = den.to_list()
        sign = 1 if coeffs[-1] > 0 else -1
        shift = LaurentPoly.term(sign, -lo)
        self.num = num * shift
        self.den = den * shift

    def is_zero(self):
        return self.num.is_zero()

    def __bool__(self):
        return bool(self.num)

    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentFrac(other)
        if isinstance(other, LaurentPoly):
            other = LaurentFrac(other)
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __add__(self, other):
        if isinstance(other, (int, LaurentPoly)):
            other = LaurentFrac(other)
        return LaurentFrac(self.num * other.den + other.num * self.den,
                           self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        r = LaurentFrac.__new__(LaurentFrac)
        r.num, r.den = -self.num, self.den
        return r

    def __sub__(self, other):
        if isinstance(other, (int, LaurentPoly)):
            other = LaurentFrac(other)
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, LaurentPoly)):
            other = LaurentFrac(other)
        return LaurentFrac(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, LaurentPoly)):
            other = LaurentFrac(other)
        return LaurentFrac(self.num * other.den, self.den * other.num)

    def as_poly(self):
        """Return the Laurent polynomial value, or raise if the denominator
        is not a unit."""
        if len(self.den.c) != 1:
            raise ValueError(f"denominator {self.den} is not a unit")
        (e, v), = self.den.c.items()
        if v not in (1, -1):
            raise ValueError(f"denominator {self.den} is not a unit")
        return self.num * LaurentPoly.term(v, -e)

    def __str__(self):
        return f"({self.num}) / ({self.den})"

    __repr__ = __str__


class CoeffMatrix:
    """A sparse matrix over Z[q, q^-1]: dict (row, col) -> LaurentPoly."""

    __slots__ = ("nrows", "ncols", "data")

    def __init__(self, nrows, ncols, data=None):
        self.nrows = nrows
        self.ncols = ncols
        self.data = {}
        if data:
            for (i, j), v in data.items():
                if isinstance(v, int):
                    v = LaurentPoly.const(v)
                if v:
                    self.data[(i, j)] = v

    @staticmethod
    def identity(n):
        m = CoeffMatrix(n, n)
        for i in range(n):
            m.data[(i, i)] = ONE
        return m

    def __eq__(self, other):
        return (self.nrows == other.nrows and self.ncols == other.ncols
                and self.data == other.data)

    def __add__(self, other):
        out = CoeffMatrix(self.nrows, self.ncols)
        out.data = dict(self.data)
        for k, v in other.data.items():
            w = out.data.get(k, ZERO) + v
            if w:
                out.data[k] = w
            else:
                out.data.pop(k, None)
        return out

    def __sub__(self, other):
        return self + other.scale(-1)

    def scale(self, a):
        out = CoeffMatrix(self.nrows, self.ncols)
        for k, v in self.data.items():
            w = v * a
            if w:
                out.data[k] = w
        return out

    def rows(self):
        by_row = [dict() for _ in range(self.nrows)]
        for (i, j), v in self.data.items():
            by_row[i][j] = v
        return by_row

    def __mul__(self, other):
        if self.ncols != other.nrows:
            raise ValueError("shape mismatch")
        brows = other.rows()
        out = CoeffMatrix(self.nrows, other.ncols)
        acc = out.data
        for (i, k), v in self.data.items():
            for j, w in brows[k].items():
                key = (i, j)
                s = acc.get(key, ZERO) + v * w
                if s:
                    acc[key] = s
                else:
                    acc.pop(key, None)
        return out

    def transpose(self):
        out = CoeffMatrix(self.ncols, self.nrows)
        out.data = {(j, i): v for (i, j), v in self.data.items()}
        return out

    def is_zero(self):
        return not self.data


def _rank_modular(rows, ncols, seed, trials=3):
    """Lower bound for the rank via evaluation at random points mod a prime."""
    p = (1 << 61) - 1
    rng = random.Random(seed)
    best = 0
    for _ in range(trials):
        x = rng.randrange(2, p - 1)
        num = []
        for r in rows:
            num.append({j: v.evaluate_mod(x, p) for j, v in r.items()})
        best = max(best, _int_rank_mod(num, p))
    return best


def _int_rank_mod(rows, p):
    pivot_rows = []
    rank = 0
    for r in rows:
        r = {j: v % p for j, v in r.items() if v % p}
        for pc, prow in pivot_rows:
            if pc in r:
                f = (r[pc] * pow(prow[pc], -1, p)) % p
                for j, v in prow.items():
                    w = (r.get(j, 0) - f * v) % p
                    if w:
                        r[j] = w
                    else:
                        r.pop(j, None)
        if r:
            pivot_rows.append((min(r), r))
            rank += 1
    return rank


def _rank_exact(rows):
    """Exact rank over the fraction field of Z[q, q^-1], via elimination with
    reduced fractions (fraction-free in effect: pivots stay polynomial)."""
    pivot_rows = []
    rank = 0
    for r in rows:
        r = {j: LaurentFrac(v) for j, v in r.items() if v}
        for pc, prow in pivot_rows:
            if pc in r:
                f = r[pc] / prow[pc]
                for j, v in prow.items():
                    w = r.get(j, LaurentFrac(0)) - f * v
                    if w:
                        r[j] = w
                    else:
                        r.pop(j, None)
        if r:
            pivot_rows.append((min(r), r))
            rank += 1
    return rank


def matrix_rank(m, mode="exact", seed=0):
    """Rank of a CoeffMatrix (or list of sparse rows).

    mode='exact' uses exact elimination over the fraction field.
    mode='probabilistic' evaluates at seeded random points modulo a prime;
    the result is a lower bound that equals the rank with high probability.
    """
    if isinstance(m, CoeffMatrix):
        rows = [r for r in m.rows() if r]
        ncols = m.ncols
    else:
        rows = [dict(r) for r in m if r]
        ncols = 1 + max((j for r in rows for j in r), default=-1)
    if mode == "probabilistic":
        return _rank_modular(rows, ncols, seed)
    if mode != "exact":
        raise ValueError(f"unknown rank mode {mode!r}")
    return _rank_exact(rows)


def echelon_insert(basis, row):
    """Reduce a sparse LaurentFrac row against an echelon basis; if nonzero,
    insert it and return True. `basis` is a list of (pivot_col, row) pairs."""
    r = {}
    for j, v in row.items():
        if isinstance(v, (int, LaurentPoly)):
            v = LaurentFrac(v)
        if v:
            r[j] = v
    for pc, prow in basis:
        if pc in r:
            f = r[pc] / prow[pc]
            for j, v in prow.items():
                w = r.get(j, LaurentFrac(0)) - f * v
                if w:
                    r[j] = w
                else:
                    r.pop(j, None)
    if not r:
        return False
    basis.append((min(r), r))
    return True
