"""Algebras over Z[q, q^-1] with distinguished bases:

* HeckeAlgebra: Iwahori-Hecke algebra of S_n, basis h_w.
* TLAlgebra: Temperley-Lieb algebra, basis the planar (Jones) diagrams,
  loop parameter q + q^-1.
* BTAlgebra: the algebra of braids and ties, basis E_I g_w over all set
  partitions I of the strand set and all permutations w.
* BHAlgebra: the tied-boxed Hecke algebra, basis E_I z_w over linear
  partitions I and block-preserving permutations w.
* BTLAlgebra: the tied-boxed Temperley-Lieb algebra in its block
  decomposition: basis indexed by a composition and one Jones diagram
  per block.
"""

from functools import lru_cache

from .laurent import LaurentPoly, ZERO, ONE, Q, QINV, QDIFF, DELTA, \
    LaurentFrac, echelon_insert
from .setpartitions import SetPartition, all_partitions, linear_partitions, \
    mobius_linear, mobius_partition
from .diagrams import concat, jones_monoid, generator, perm_diagram
from .combinatorics import compositions
from . import perms

__all__ = [
    "AlgebraElement", "HeckeAlgebra", "TLAlgebra", "BTAlgebra", "BHAlgebra",
    "BTLAlgebra", "iota1", "pi2", "hecke_to_tl", "support_partition",
    "ideal_span", "reduce_against",
]


def _coeff(c):
    return LaurentPoly.const(c) if isinstance(c, int) else c


class AlgebraElement:
    """A finite linear combination of basis keys of a fixed algebra."""

    __slots__ = ("algebra", "terms")

    def __init__(self, algebra, terms=None):
        self.algebra = algebra
        self.terms = {}
        if terms:
            for k, v in terms.items():
                v = _coeff(v)
                if v:
                    self.terms[k] = v

    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, int):
            return self.terms == (self.algebra.one() * other).terms
        return self.algebra is other.algebra and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __add__(self, other):
        out = dict(self.terms)
        for k, v in other.terms.items():
            w = out.get(k, ZERO) + v
            if w:
                out[k] = w
            else:
                out.pop(k, None)
        r = AlgebraElement(self.algebra)
        r.terms = out
        return r

    def __neg__(self):
        r = AlgebraElement(self.algebra)
        r.terms = {k: -v for k, v in self.terms.items()}
        return r

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        c = _coeff(c)
        r = AlgebraElement(self.algebra)
        if c:
            r.terms = {k: v * c for k, v in self.terms.items()}
        return r

    def __mul__(self, other):
        if isinstance(other, (int, LaurentPoly)):
            return self.scale(other)
        if self.algebra is not other.algebra:
            raise ValueError("elements of different algebras")
        out = {}
        for k1, c1 in self.terms.items():
            for k2, c2 in other.terms.items():
                c = c1 * c2
                for k, v in self.algebra.mul_basis(k1, k2).items():
                    w = out.get(k, ZERO) + v * c
                    if w:
                        out[k] = w
                    else:
                        out.pop(k, None)
        r = AlgebraElement(self.algebra)
        r.terms = out
        return r

    def __rmul__(self, other):
        if isinstance(other, (int, LaurentPoly)):
            return self.scale(other)
        return NotImplemented

    def star(self):
        out = AlgebraElement(self.algebra)
        for k, v in self.terms.items():
            k2, c2 = self.algebra.star_basis(k)
            w = out.terms.get(k2, ZERO) + v * c2
            if w:
                out.terms[k2] = w
            else:
                out.terms.pop(k2, None)
        return out

    def __repr__(self):
        if not self.terms:
            return "0"
        return " + ".join(f"({v})*[{k}]" for k, v in sorted(
            self.terms.items(), key=lambda kv: repr(kv[0])))


class _Algebra:
    def element(self, terms):
        return AlgebraElement(self, terms)

    def basis_element(self, key):
        return AlgebraElement(self, {key: ONE})

    def zero(self):
        return AlgebraElement(self)

    def one(self):
        return self.basis_element(self.one_key())

    def dim(self):
        return len(self.basis())


# ---------------------------------------------------------------------------


class HeckeAlgebra(_Algebra):
    """Basis h_w, w in S_n; h_i^2 = 1 + (q - q^-1) h_i."""

    _cache = {}

    def __new__(cls, n):
        if n not in cls._cache:
            obj = super().__new__(cls)
            obj.n = n
            cls._cache[n] = obj
        return cls._cache[n]

    def one_key(self):
        return perms.identity(self.n)

    def basis(self):
        return perms.all_perms(self.n)

    def gen(self, i):
        return self.basis_element(perms.sgen(self.n, i))

    @lru_cache(maxsize=None)
    def _mul_gen(self, w, i):
        ws = perms.compose(w, perms.sgen(self.n, i))
        if perms.right_longer(w, i):
            return ((ws, ONE),)
        return ((ws, ONE), (w, QDIFF))

    def mul_basis(self, w, v):
        terms = {w: ONE}
        for i in perms.lex_least_word(v):
            out = {}
            for u, c in terms.items():
                for u2, c2 in self._mul_gen(u, i):
                    s = out.get(u2, ZERO) + c * c2
                    if s:
                        out[u2] = s
                    else:
                        out.pop(u2, None)
            terms = out
        return terms

    def star_basis(self, w):
        return perms.inverse(w), ONE

    def element_of_word(self, word):
        return self.basis_element(perms.perm_from_word(self.n, word))

    def steinberg(self, i, j):
        """1 + q h_i + q h_j + q^2 h_i h_j + q^2 h_j h_i + q^3 h_i h_j h_i,
        for |i - j| = 1."""
        hi, hj = self.gen(i), self.gen(j)
        return (self.one() + hi * Q + hj * Q + hi * hj * (Q * Q)
                + hj * hi * (Q * Q) + hi * hj * hi * (Q * Q * Q))


class TLAlgebra(_Algebra):
    """Basis the Jones diagrams; concatenation, loops become q + q^-1."""

    _cache = {}

    def __new__(cls, n):
        if n not in cls._cache:
            obj = super().__new__(cls)
            obj.n = n
            cls._cache[n] = obj
        return cls._cache[n]

    def one_key(self):
        return perm_diagram(perms.identity(self.n))

    def basis(self):
        return sorted(jones_monoid(self.n), key=lambda d: d.part.blocks)

    def hook(self, i):
        return self.basis_element(generator("t", self.n, i))

    def mul_basis(self, d1, d2):
        d, loops = concat(d1, d2)
        return {d: DELTA ** loops}

    def star_basis(self, d):
        return d.flip(), ONE


# ---------------------------------------------------------------------------


def support_partition(w):
    """Finest linear partition of {1..n} whose blocks are preserved by w."""
    n = len(w)
    blocks = []
    start = 1
    top = 0
    for i in range(1, n + 1):
        top = max(top, w[i - 1])
        if top == i:
            blocks.append(tuple(range(start, i + 1)))
            start = i + 1
    return SetPartition(blocks)


class BTAlgebra(_Algebra):
    """Algebra of braids and ties; basis E_I g_w with I any set partition
    of {1..n} and w in S_n.  Ties move through braid generators by the rule
    E_I g_w = g_w E_(I.act(w)), verified against the ramified monoid."""

    _cache = {}

    def __new__(cls, n):
        if n not in cls._cache:
            obj = super().__new__(cls)
            obj.n = n
            obj._echeck()
            cls._cache[n] = obj
        return cls._cache[n]

    def _echeck(self):
        """Assert the tie-transport convention once, at the monoid level:
        the diagram of w times a tie e_Q equals e_(Q.act(w^-1)) times w."""
        n = min(self.n, 3)
        if n < 3:
            n = 3
        from .diagrams import Diagram
        for w in perms.all_perms(n):
            wd = perm_diagram(w)
            for q_part in all_partitions(range(1, n + 1)):
                tie = _tie_diagram(n, q_part)
                lhs = wd * tie
                rhs = _tie_diagram(n, q_part.act(perms.inverse(w))) * wd
                if lhs != rhs:
                    raise AssertionError("tie transport convention failed")

    def one_key(self):
        return (SetPartition.singletons(range(1, self.n + 1)),
                perms.identity(self.n))

    @lru_cache(maxsize=None)
    def basis(self):
        return [(p, w) for p in all_partitions(range(1, self.n + 1))
                for w in perms.all_perms(self.n)]

    def e(self, i):
        return self.e_pair(i, i + 1)

    def e_pair(self, i, j):
        p = SetPartition([(i, j)], tuple(range(1, self.n + 1)))
        return self.basis_element((p, perms.identity(self.n)))

    def e_of_partition(self, p):
        return self.basis_element((p, perms.identity(self.n)))

    def g(self, i):
        return self.basis_element((SetPartition.singletons(
            range(1, self.n + 1)), perms.sgen(self.n, i)))

    def g_of(self, w):
        return self.basis_element((SetPartition.singletons(
            range(1, self.n + 1)), w))

    def mul_basis(self, key1, key2):
        (i_part, w), (j_part, v) = key1, key2
        k_part = i_part.join(j_part.act(perms.inverse(w)))
        terms = {(k_part, w): ONE}
        n = self.n
        for i in perms.lex_least_word(v):
            si = perms.sgen(n, i)
            ei = SetPartition([(i, i + 1)], tuple(range(1, n + 1)))
            out = {}

            def acc(key, c):
                s = out.get(key, ZERO) + c
                if s:
                    out[key] = s
                else:
                    out.pop(key, None)

            for (kp, u), c in terms.items():
                us = perms.compose(u, si)
                if perms.right_longer(u, i):
                    acc((kp, us), c)
                else:
                    acc((kp, us), c)
                    acc((kp.join(ei.act(perms.inverse(us))), u), c * QDIFF)
            terms = out
        return terms

    def star_basis(self, key):
        i_part, w = key
        return (i_part.act(w), perms.inverse(w)), ONE

    def mobius_idempotent(self, i_part):
        """The central idempotent attached to a set partition, by Mobius
        inversion over the full partition lattice."""
        terms = {}
        for j_part in i_part.coarsenings():
            c = mobius_partition(i_part, j_part)
            if c:
                terms[(j_part, perms.identity(self.n))] = LaurentPoly.const(c)
        return self.element(terms)

    def mobius_type_idempotent(self, alpha):
        """Sum of the Mobius idempotents over all partitions of type alpha."""
        out = self.zero()
        for p in all_partitions(range(1, self.n + 1)):
            if p.type_of() == tuple(alpha):
                out = out + self.mobius_idempotent(p)
        return out

    def steinberg(self, i, j):
        """e_i e_j (1 + q g_i + q g_j + q^2 g_i g_j + q^2 g_j g_i
        + q^3 g_i g_j g_i), for |i - j| = 1."""
        gi, gj = self.g(i), self.g(j)
        body = (self.one() + gi * Q + gj * Q + gi * gj * (Q * Q)
                + gj * gi * (Q * Q) + gi * gj * gi * (Q * Q * Q))
        return self.e(i) * self.e(j) * body


def _tie_diagram(n, p):
    blocks = [tuple(b) + tuple(n + x for x in b) for b in p.blocks]
    from .diagrams import Diagram
    return Diagram(n, blocks)


class BHAlgebra(_Algebra):
    """Tied-boxed Hecke algebra; basis E_I z_w with I a linear partition of
    {1..n} and w preserving the blocks of I."""

    _cache = {}

    def __new__(cls, n):
        if n not in cls._cache:
            obj = super().__new__(cls)
            obj.n = n
            cls._cache[n] = obj
        return cls._cache[n]

    def one_key(self):
        return (SetPartition.singletons(range(1, self.n + 1)),
                perms.identity(self.n))

    @lru_cache(maxsize=None)
    def basis(self):
        out = []
        for p in linear_partitions(self.n):
            for w in perms.young_subgroup(p.to_composition()):
                out.append((p, w))
        return out

    def _linear_with(self, i):
        blocks = [(k,) for k in range(1, i)] + [(i, i + 1)] + \
            [(k,) for k in range(i + 2, self.n + 1)]
        return SetPartition(blocks)

    def e(self, i):
        return self.basis_element((self._linear_with(i),
                                   perms.identity(self.n)))

    def e_of_partition(self, p):
        if not p.is_linear():
            raise ValueError("tie partitions here must be linear")
        return self.basis_element((p, perms.identity(self.n)))

    def z(self, i):
        return self.basis_element((self._linear_with(i),
                                   perms.sgen(self.n, i)))

    def z_of(self, w):
        """z_w as a basis element (support partition, w)."""
        return self.basis_element((support_partition(w), w))

    def mul_basis(self, key1, key2):
        (i_part, w), (j_part, v) = key1, key2
        k_part = i_part.join(j_part)
        terms = {(k_part, w): ONE}
        n = self.n
        for i in perms.lex_least_word(v):
            si = perms.sgen(n, i)
            out = {}

            def acc(key, c):
                s = out.get(key, ZERO) + c
                if s:
                    out[key] = s
                else:
                    out.pop(key, None)

            for (kp, u), c in terms.items():
                us = perms.compose(u, si)
                if perms.right_longer(u, i):
                    acc((kp, us), c)
                else:
                    acc((kp, us), c)
                    acc((kp, u), c * QDIFF)
            terms = out
        return terms

    def star_basis(self, key):
        i_part, w = key
        return (i_part, perms.inverse(w)), ONE

    def mobius_idempotent(self, i_part):
        """Mobius idempotent over the lattice of linear partitions."""
        terms = {}
        ident = perms.identity(self.n)
        for j_part in linear_partitions(self.n):
            c = mobius_linear(i_part, j_part)
            if c:
                terms[(j_part, ident)] = LaurentPoly.const(c)
        return self.element(terms)

    def steinberg(self, i, j):
        """z_{i,j} = e_i e_j (1 + q z_i + q z_j + q^2 z_i z_j + q^2 z_j z_i
        + q^3 z_i z_j z_i), for |i - j| = 1."""
        zi, zj = self.z(i), self.z(j)
        body = (self.one() + zi * Q + zj * Q + zi * zj * (Q * Q)
                + zj * zi * (Q * Q) + zi * zj * zi * (Q * Q * Q))
        return self.e(i) * self.e(j) * body

    def d(self, i):
        """d_i = q^-1 e_i + z_i."""
        return self.e(i) * QINV + self.z(i)


class BTLAlgebra(_Algebra):
    """Tied-boxed Temperley-Lieb algebra in block-decomposed form: each
    basis key is (composition mu, tuple of Jones diagrams per block), and
    keys with different compositions multiply to zero (they sit under
    orthogonal central idempotents)."""

    _cache = {}

    def __new__(cls, n):
        if n not in cls._cache:
            obj = super().__new__(cls)
            obj.n = n
            cls._cache[n] = obj
        return cls._cache[n]

    def one_key(self):
        raise ValueError("the identity is not a single basis key here")

    def one(self):
        out = {}
        for mu in compositions(self.n):
            key = (mu, tuple(perm_diagram(perms.identity(m)) for m in mu))
            out[key] = ONE
        return self.element(out)

    @lru_cache(maxsize=None)
    def basis(self):
        out = []
        for mu in compositions(self.n):
            tuples = [()]
            for m in mu:
                tuples = [t + (d,) for t in tuples
                          for d in TLAlgebra(m).basis()]
            out.extend((mu, t) for t in tuples)
        return out

    def mul_basis(self, key1, key2):
        (mu, ds), (nu, es) = key1, key2
        if mu != nu:
            return {}
        coeff = ONE
        new = []
        for d, e in zip(ds, es):
            f, loops = concat(d, e)
            new.append(f)
            if loops:
                coeff = coeff * DELTA ** loops
        return {(mu, tuple(new)): coeff}

    def star_basis(self, key):
        mu, ds = key
        return (mu, tuple(d.flip() for d in ds)), ONE


# ---------------------------------------------------------------------------
# maps between the algebras


def iota1(x, target=None):
    """Embedding of the tied-boxed Hecke algebra into braids and ties:
    E_I z_w -> E_I g_w."""
    if target is None:
        target = BTAlgebra(x.algebra.n)
    out = target.zero()
    for (i_part, w), c in x.terms.items():
        out = out + target.basis_element((i_part, w)) * c
    return out


@lru_cache(maxsize=None)
def _hecke_to_tl_basis(n, w):
    tl = TLAlgebra(n)
    out = tl.one()
    for i in perms.lex_least_word(w):
        out = out * (tl.hook(i) - tl.one() * QINV)
    return out


def hecke_to_tl(x):
    """Projection of the Hecke algebra onto Temperley-Lieb in the diagram
    basis: h_i maps to (hook diagram) - q^-1."""
    n = x.algebra.n
    tl = TLAlgebra(n)
    out = tl.zero()
    for w, c in x.terms.items():
        out = out + _hecke_to_tl_basis(n, w) * c
    return out


def _linear_coarsenings(p):
    """Linear partitions K >= p, for linear p (drop subsets of the cuts)."""
    from itertools import combinations
    mu = p.to_composition()
    cuts = []
    acc = 0
    for m in mu[:-1]:
        acc += m
        cuts.append(acc)
    n = sum(mu)
    out = []
    for k in range(len(cuts) + 1):
        for keep in combinations(cuts, k):
            comp = []
            prev = 0
            for c in list(keep) + [n]:
                comp.append(c - prev)
                prev = c
            out.append(SetPartition.from_composition(tuple(comp)))
    return out


def pi2(x, target=None):
    """Projection of the tied-boxed Hecke algebra onto the tied-boxed
    Temperley-Lieb algebra in its block decomposition."""
    n = x.algebra.n
    if target is None:
        target = BTLAlgebra(n)
    out = {}
    for (i_part, w), c in x.terms.items():
        for k_part in _linear_coarsenings(i_part):
            mu = k_part.to_composition()
            pieces = [(c, ())]
            for m, w_loc in zip(mu, perms.block_components(w, mu)):
                local = _hecke_to_tl_basis(m, w_loc)
                pieces = [(cc * cl, t + (d,))
                          for cc, t in pieces
                          for d, cl in local.terms.items()]
            for cc, t in pieces:
                key = (mu, t)
                s = out.get(key, ZERO) + cc
                if s:
                    out[key] = s
                else:
                    out.pop(key, None)
    return AlgebraElement(target, out)


# ---------------------------------------------------------------------------
# spans of two-sided ideals


def basis_index(algebra):
    return {k: i for i, k in enumerate(algebra.basis())}


def coords(x, index):
    return {index[k]: v for k, v in x.terms.items()}


def ideal_span(algebra, gens):
    """Echelonized row space of the two-sided ideal generated by `gens`.
    Returns (rank, echelon_rows, index)."""
    index = basis_index(algebra)
    rows = []
    for x in gens:
        for a in algebra.basis():
            ax = algebra.basis_element(a) * x
            for b in algebra.basis():
                axb = ax * algebra.basis_element(b)
                if axb:
                    echelon_insert(rows, coords(axb, index))
    return len(rows), rows, index


def reduce_against(rows, row):
    """Reduce a coordinate row against an echelon basis; True if it lies in
    the row space."""
    r = {}
    for j, v in row.items():
        f = LaurentFrac(v)
        if f:
            r[j] = f
    for pc, prow in rows:
        if pc in r:
            f = r[pc] / prow[pc]
            for j, v in prow.items():
                w = r.get(j, LaurentFrac(0)) - f * v
                if w:
                    r[j] = w
                else:
                    r.pop(j, None)
    return not r
