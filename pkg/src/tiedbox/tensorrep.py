"""Tensor-space representation used as an independent multiplication oracle.

V has basis v_i^a with strand index i in {1..n} and color a in {1..r}
(r >= n).  The algebra acts on V^(tensor n); operators compose left to
right, so rho(xy) = rho(x) . rho(y) with row-vector matrix products.

Matrices are sparse: dict row -> dict col -> LaurentPoly.
"""

from functools import lru_cache

from .laurent import LaurentPoly, ZERO, ONE, Q, QINV, QDIFF
from . import perms

__all__ = ["TensorRep", "mat_mul", "mat_eq", "mat_add", "mat_scale",
           "mat_identity", "flatten_matrix"]


def mat_identity(dim):
    return {i: {i: ONE} for i in range(dim)}


def mat_mul(a, b):
    out = {}
    for i, arow in a.items():
        orow = {}
        for k, v in arow.items():
            brow = b.get(k)
            if not brow:
                continue
            for j, w in brow.items():
                s = orow.get(j, ZERO) + v * w
                if s:
                    orow[j] = s
                else:
                    orow.pop(j, None)
        if orow:
            out[i] = orow
    return out


def mat_add(a, b):
    out = {i: dict(r) for i, r in a.items()}
    for i, row in b.items():
        orow = out.setdefault(i, {})
        for j, v in row.items():
            s = orow.get(j, ZERO) + v
            if s:
                orow[j] = s
            else:
                orow.pop(j, None)
        if not orow:
            del out[i]
    return out


def mat_scale(a, c):
    out = {}
    for i, row in a.items():
        orow = {j: v * c for j, v in row.items()}
        orow = {j: v for j, v in orow.items() if v}
        if orow:
            out[i] = orow
    return out


def mat_eq(a, b):
    return a == b


def flatten_matrix(m, dim):
    """Sparse row vector over columns (i * dim + j)."""
    return {i * dim + j: v for i, row in m.items() for j, v in row.items()}


class TensorRep:
    """The representation of the braids-and-ties algebra on V^(tensor n),
    restricted along iota1 to the tied-boxed Hecke algebra (z_i acts as
    E_i G_i)."""

    def __init__(self, n, r=None):
        self.n = n
        self.r = r if r is not None else n
        if self.r < n:
            raise ValueError("need r >= n")
        self.vdim = n * self.r
        self.dim = self.vdim ** n

    def _index(self, factors):
        idx = 0
        for (i, a) in factors:
            idx = idx * self.vdim + (i - 1) * self.r + (a - 1)
        return idx

    def _factors(self, idx):
        out = []
        for _ in range(self.n):
            idx, rem = divmod(idx, self.vdim)
            i, a = divmod(rem, self.r)
            out.append((i + 1, a + 1))
        return tuple(reversed(out))

    @lru_cache(maxsize=None)
    def E_pair(self, i, j):
        """Tie projector on tensor positions i and j (1-based): keeps the
        basis vectors whose two factors carry the same color."""
        out = {}
        for idx in range(self.dim):
            f = self._factors(idx)
            if f[i - 1][1] == f[j - 1][1]:
                out[idx] = {idx: ONE}
        return out

    def E(self, i):
        return self.E_pair(i, i + 1)

    @lru_cache(maxsize=None)
    def G(self, i):
        """Braid-type operator on tensor positions i, i+1."""
        out = {}
        for idx in range(self.dim):
            f = self._factors(idx)
            (a_i, a_col) = f[i - 1]
            (b_i, b_col) = f[i]
            swapped = list(f)
            swapped[i - 1], swapped[i] = f[i], f[i - 1]
            jdx = self._index(swapped)
            if a_col != b_col:
                out[idx] = {jdx: ONE}
            elif a_i == b_i:
                out[idx] = {idx: Q}
            elif a_i > b_i:
                out[idx] = {jdx: ONE}
            else:
                out[idx] = {idx: QDIFF, jdx: ONE}
        return out

    def G_inv(self, i):
        """G_i - (q - q^-1) E_i, the inverse of G_i."""
        return mat_add(self.G(i), mat_scale(self.E(i), -QDIFF))

    def Z(self, i):
        return mat_mul(self.E(i), self.G(i))

    def identity(self):
        return mat_identity(self.dim)

    @lru_cache(maxsize=None)
    def rho_perm(self, w):
        m = self.identity()
        for i in perms.lex_least_word(w):
            m = mat_mul(m, self.G(i))
        return m

    @lru_cache(maxsize=None)
    def rho_ties(self, i_part):
        """Diagonal projector keeping tensors whose colors are constant on
        each block of the tie partition."""
        out = {}
        for idx in range(self.dim):
            f = self._factors(idx)
            ok = all(len({f[x - 1][1] for x in b}) == 1
                     for b in i_part.blocks)
            if ok:
                out[idx] = {idx: ONE}
        return out

    def rho_bt(self, key):
        """Matrix of a braids-and-ties basis element E_I g_w."""
        i_part, w = key
        return mat_mul(self.rho_ties(i_part), self.rho_perm(w))

    def rho(self, x):
        """Matrix of an element of BTAlgebra or (via iota1) BHAlgebra."""
        out = {}
        for key, c in x.terms.items():
            out = mat_add(out, mat_scale(self.rho_bt(key), c))
        return out
