"""Cellular bases: the Murphy basis of the Hecke algebra, its two-column
Temperley-Lieb shadow, and the tied-boxed versions built from Mobius
idempotents and blockwise Murphy elements."""

from .laurent import LaurentPoly, ZERO, ONE, Q, LaurentFrac, matrix_rank, \
    CoeffMatrix
from .combinatorics import int_partitions, compositions, standard_tableaux, \
    d_of_tableau, multipartitions_of_composition, initial_kind_multitableaux, \
    d_of_multitableau, strictly_dominates, two_column_partitions
from .setpartitions import SetPartition
from .algebras import HeckeAlgebra, BHAlgebra, BTLAlgebra, TLAlgebra, \
    hecke_to_tl, pi2, basis_index, coords
from . import perms

__all__ = ["CellDatum", "murphy_hecke", "tl_cellular", "bh_cellular",
           "btl_cellular", "cell_axiom_check", "star_axiom_check",
           "transition_matrix"]


class CellDatum:
    """A concrete cell datum: a poset of labels, tableaux sets, and one
    algebra element per (label, s, t) triple."""

    def __init__(self, algebra, labels, tableaux, elements, greater):
        self.algebra = algebra
        self.labels = list(labels)
        self.tableaux = tableaux          # label -> list of tableau keys
        self.elements = elements          # (label, s, t) -> AlgebraElement
        self.greater = greater            # greater(a, b): a strictly above b

    def triples(self):
        out = []
        for lam in self.labels:
            for s in self.tableaux[lam]:
                for t in self.tableaux[lam]:
                    out.append((lam, s, t))
        return out

    def size(self):
        return len(self.triples())


def murphy_hecke(n):
    """The Murphy cellular basis of the Hecke algebra of S_n."""
    h = HeckeAlgebra(n)
    labels = int_partitions(n)
    tabs = {lam: standard_tableaux(lam) for lam in labels}
    elements = {}
    for lam in labels:
        m_lam = h.element({w: Q ** perms.length(w)
                           for w in perms.young_subgroup(lam)})
        for s in tabs[lam]:
            hs = h.basis_element(perms.inverse(d_of_tableau(s)))
            left = hs * m_lam
            for t in tabs[lam]:
                elements[(lam, s, t)] = left * h.basis_element(d_of_tableau(t))
    return CellDatum(h, labels, tabs, elements, strictly_dominates)


def tl_cellular(n):
    """Projection of the two-column part of the Murphy basis onto the
    Temperley-Lieb diagram algebra."""
    md = murphy_hecke(n)
    labels = two_column_partitions(n)
    tabs = {lam: md.tableaux[lam] for lam in labels}
    elements = {}
    for lam in labels:
        for s in tabs[lam]:
            for t in tabs[lam]:
                elements[(lam, s, t)] = hecke_to_tl(md.elements[(lam, s, t)])
    return CellDatum(TLAlgebra(n), labels, tabs, elements, strictly_dominates)


def _multi_greater(lams, mus):
    """Strict cellular order on multipartitions: same underlying composition,
    componentwise dominance, strictly somewhere.  Labels over different
    compositions are incomparable (their cells sit under orthogonal central
    idempotents)."""
    shape_a = tuple(sum(l) for l in lams)
    shape_b = tuple(sum(l) for l in mus)
    if shape_a != shape_b or lams == mus:
        return False
    from .combinatorics import dominates
    return all(dominates(a, b) for a, b in zip(lams, mus))


def bh_cellular(n):
    """Cellular basis of the tied-boxed Hecke algebra: for a multipartition
    with underlying composition mu, the Mobius idempotent of mu times the
    Murphy-type element of the Young subgroup, conjugated by the tableau
    permutations through z generators."""
    bh = BHAlgebra(n)
    labels = []
    tabs = {}
    elements = {}
    for mu in compositions(n):
        i_mu = SetPartition.from_composition(mu)
        ee = bh.mobius_idempotent(i_mu)
        for lams in multipartitions_of_composition(mu):
            labels.append(lams)
            tabs[lams] = initial_kind_multitableaux(lams)
            inner = tuple(x for lam in lams for x in lam)
            m_lam = ee * bh.element(
                {(i_mu, w): Q ** perms.length(w)
                 for w in perms.young_subgroup(inner)})
            for s in tabs[lams]:
                zs = bh.z_of(d_of_multitableau(s)).star()
                left = zs * m_lam
                for t in tabs[lams]:
                    elements[(lams, s, t)] = \
                        left * bh.z_of(d_of_multitableau(t))
    return CellDatum(bh, labels, tabs, elements, _multi_greater)


def btl_cellular(n):
    """Cellular basis of the tied-boxed Temperley-Lieb algebra: the image
    under the block projection of the two-column part of the tied-boxed
    Hecke cellular basis."""
    bd = bh_cellular(n)
    labels = [lams for lams in bd.labels
              if all(not lam or lam[0] <= 2 for lam in lams)]
    tabs = {lams: bd.tableaux[lams] for lams in labels}
    elements = {}
    for lams in labels:
        for s in tabs[lams]:
            for t in tabs[lams]:
                elements[(lams, s, t)] = pi2(bd.elements[(lams, s, t)])
    return CellDatum(BTLAlgebra(n), labels, tabs, elements, _multi_greater)


def transition_matrix(datum):
    """Rows: cellular elements expanded in the structural basis."""
    index = basis_index(datum.algebra)
    triples = datum.triples()
    m = CoeffMatrix(len(triples), len(index))
    for r, tri in enumerate(triples):
        for j, v in coords(datum.elements[tri], index).items():
            m.data[(r, j)] = v
    return m, triples, index


def _frac_inverse(m, dim):
    """Dense Gauss-Jordan inverse over the fraction field."""
    a = [[LaurentFrac(m.data.get((i, j), ZERO)) for j in range(dim)]
         + [LaurentFrac(1 if j == i else 0) for j in range(dim)]
         for i in range(dim)]
    for col in range(dim):
        piv = next((r for r in range(col, dim) if a[r][col]), None)
        if piv is None:
            raise ValueError("transition matrix is singular")
        a[col], a[piv] = a[piv], a[col]
        inv = LaurentFrac(1) / a[col][col]
        a[col] = [v * inv for v in a[col]]
        for r in range(dim):
            if r != col and a[r][col]:
                f = a[r][col]
                a[r] = [v - f * w for v, w in zip(a[r], a[col])]
    return [row[dim:] for row in a]


def star_axiom_check(datum):
    """star(c_st) must equal c_ts for every pair."""
    failures = []
    for lam in datum.labels:
        for s in datum.tableaux[lam]:
            for t in datum.tableaux[lam]:
                if datum.elements[(lam, s, t)].star() != \
                        datum.elements[(lam, t, s)]:
                    failures.append((lam, s, t))
    return {"status": "pass" if not failures else "fail",
            "failures": failures}


def cell_axiom_check(datum, generators, max_products=None):
    """Check the multiplication axiom: c_st * a lies, modulo strictly
    greater labels, in the span of the c_sv with the same s, and the
    coefficients r_v do not depend on s.

    Returns a report dict with status and a witness on failure.
    """
    m, triples, index = transition_matrix(datum)
    dim = len(triples)
    if dim != len(index):
        return {"status": "fail",
                "witness": f"basis count {dim} != dimension {len(index)}"}
    try:
        minv = _frac_inverse(m, dim)
    except ValueError as exc:
        return {"status": "fail", "witness": str(exc)}
    tri_pos = {tri: r for r, tri in enumerate(triples)}

    def expand(x):
        vec = coords(x, index)
        out = {}
        for j, v in vec.items():
            f = LaurentFrac(v)
            for r in range(dim):
                if minv[j][r]:
                    w = out.get(r, LaurentFrac(0)) + f * minv[j][r]
                    if w:
                        out[r] = w
                    else:
                        out.pop(r, None)
        return out

    seen = {}
    count = 0
    for lam, s, t in triples:
        for gi, a in enumerate(generators):
            if max_products is not None and count >= max_products:
                return {"status": "pass", "products": count,
                        "truncated": True}
            count += 1
            prod = datum.elements[(lam, s, t)] * a
            rv = {}
            for r, coeff in expand(prod).items():
                lam2, s2, t2 = triples[r]
                if datum.greater(lam2, lam):
                    continue
                if lam2 == lam and s2 == s:
                    rv[t2] = coeff
                    continue
                return {"status": "fail", "products": count,
                        "witness": {"label": lam, "s": repr(s), "t": repr(t),
                                    "generator": gi,
                                    "offending": (lam2, repr(s2), repr(t2)),
                                    "coefficient": str(coeff)}}
            key = (lam, t, gi)
            frozen = tuple(sorted(((repr(v), str(c)) for v, c in rv.items())))
            if key in seen and seen[key][0] != frozen:
                return {"status": "fail", "products": count,
                        "witness": {"label": lam, "t": repr(t),
                                    "generator": gi,
                                    "reason": "coefficients depend on s",
                                    "s_pair": (seen[key][1], repr(s))}}
            seen.setdefault(key, (frozen, repr(s)))
    return {"status": "pass", "products": count, "truncated": False}
