"""Monoid presentations, Knuth-Bendix completion over the shortlex order,
and verification of presentations against concrete finite monoids.

Words are tuples of generator indices; the order of the generator list
fixes the shortlex order.
"""

from itertools import product

from . import perms
from .combinatorics import compositions

__all__ = ["Presentation", "RewriteSystem", "kb_complete", "normal_forms",
           "word_equiv", "presentation_check", "build_preset",
           "PRESET_NAMES"]


class Presentation:
    def __init__(self, generators, relations, name=""):
        self.generators = list(generators)       # names, fixing the order
        self.relations = [(tuple(l), tuple(r)) for l, r in relations]
        self.name = name

    def gen_index(self, name):
        return self.generators.index(name)

    def __repr__(self):
        return f"Presentation({self.name}, {len(self.generators)} gens, " \
            f"{len(self.relations)} rels)"

    def format_text(self):
        lines = []
        for l, r in self.relations:
            fl = " ".join(self.generators[i] for i in l) or "1"
            fr = " ".join(self.generators[i] for i in r) or "1"
            lines.append(f"{fl} = {fr}")
        return "\n".join(lines)


class RewriteSystem:
    def __init__(self, rules, num_gens, complete):
        self.rules = rules            # list of (lhs, rhs), lhs > rhs shortlex
        self.num_gens = num_gens
        self.complete = complete

    def reduce(self, word):
        word = tuple(word)
        changed = True
        while changed:
            changed = False
            for lhs, rhs in self.rules:
                k = len(lhs)
                for p in range(len(word) - k + 1):
                    if word[p:p + k] == lhs:
                        word = word[:p] + rhs + word[p + k:]
                        changed = True
                        break
                if changed:
                    break
        return word


def _shortlex_key(word):
    return (len(word), word)


def _orient(u, v):
    if _shortlex_key(u) > _shortlex_key(v):
        return u, v
    if _shortlex_key(v) > _shortlex_key(u):
        return v, u
    return None


def _reduce(word, rules):
    changed = True
    while changed:
        changed = False
        for lhs, rhs in rules:
            k = len(lhs)
            idx = _find(word, lhs)
            if idx >= 0:
                word = word[:idx] + rhs + word[idx + k:]
                changed = True
    return word


def _find(word, sub):
    k = len(sub)
    for p in range(len(word) - k + 1):
        if word[p:p + k] == sub:
            return p
    return -1


def kb_complete(pres, max_rules=20000, max_steps=10 ** 6):
    """Knuth-Bendix completion with the shortlex order induced by the
    generator list.  Returns a RewriteSystem; `complete` is False if a
    budget was exhausted."""
    rules = []

    def add_equation(u, v, steps):
        u = _reduce(u, rules)
        v = _reduce(v, rules)
        if u == v:
            return steps
        o = _orient(u, v)
        if o is None:
            raise RuntimeError("unorientable equation (same shortlex key)")
        rules.append(o)
        return steps

    steps = 0
    for l, r in pres.relations:
        steps = add_equation(tuple(l), tuple(r), steps)

    pending = True
    while pending:
        pending = False
        current = list(rules)
        for i, (l1, r1) in enumerate(current):
            for l2, r2 in current:
                # overlaps: a suffix of l1 is a prefix of l2
                for k in range(1, min(len(l1), len(l2)) + 1):
                    steps += 1
                    if steps > max_steps or len(rules) > max_rules:
                        return RewriteSystem(_interreduce(rules),
                                             len(pres.generators), False)
                    if l1[len(l1) - k:] == l2[:k]:
                        u = l1 + l2[k:]
                        a = _reduce(r1 + l2[k:], rules)
                        b = _reduce(l1[:len(l1) - k] + r2, rules)
                        if a != b:
                            o = _orient(a, b)
                            if o is None:
                                raise RuntimeError("unorientable")
                            rules.append(o)
                            pending = True
                # containment: l2 properly inside l1
                if len(l2) < len(l1):
                    idx = _find(l1, l2)
                    if idx >= 0:
                        steps += 1
                        a = _reduce(r1, rules)
                        b = _reduce(l1[:idx] + r2 + l1[idx + len(l2):], rules)
                        if a != b:
                            o = _orient(a, b)
                            if o is None:
                                raise RuntimeError("unorientable")
                            rules.append(o)
                            pending = True
        if pending:
            rules = _interreduce(rules)
    return RewriteSystem(_interreduce(rules), len(pres.generators), True)


def _interreduce(rules):
    rules = sorted(set(rules), key=lambda lr: _shortlex_key(lr[0]))
    out = []
    for i, (l, r) in enumerate(rules):
        others = [lr for j, lr in enumerate(rules)
                  if j != i and lr[0] != l]
        if any(_find(l, l2) >= 0 for l2, _ in others):
            continue
        out.append((l, _reduce(r, others)))
    return out


def normal_forms(rs, cap=10 ** 6):
    """All irreducible words of a (complete) rewrite system, by breadth
    first search over lengths.  Raises RuntimeError beyond `cap` or if the
    language looks infinite for an incomplete system."""
    if not rs.complete:
        raise RuntimeError("rewrite system is not complete")
    lhs_set = [l for l, _ in rs.rules]
    forms = [()]
    frontier = [()]
    while frontier:
        new = []
        for w in frontier:
            for g in range(rs.num_gens):
                w2 = w + (g,)
                # w is irreducible, so only suffixes of w2 need checking
                if any(w2[len(w2) - len(l):] == l for l in lhs_set
                       if len(l) <= len(w2)):
                    continue
                new.append(w2)
        forms.extend(new)
        if len(forms) > cap:
            raise RuntimeError("normal form cap exceeded")
        frontier = new
    return forms


def word_equiv(rs, u, v):
    return rs.reduce(u) == rs.reduce(v)


def _bounded_bijection(pres, gen_elems, identity, target_set, max_len=10):
    """Fallback injectivity check when completion fails: map every word of
    bounded length into the target and demand exactly |target| classes,
    with word classes separated by their images."""
    images = {(): identity}
    frontier = {(): identity}
    for _ in range(max_len):
        new = {}
        for w, x in frontier.items():
            for g, ge in enumerate(gen_elems):
                new[w + (g,)] = x * ge
        images.update(new)
        frontier = new
        if len(set(images.values())) == len(target_set):
            break
    return len(set(images.values())) == len(target_set)


def presentation_check(pres, gen_elems, identity, target_set,
                       max_rules=20000, max_steps=10 ** 6):
    """Full presentation verification:

    1. every relation holds among the images of the generators,
    2. the images generate the target monoid,
    3. Knuth-Bendix normal form count equals |target| (+1 for a formal
       identity when the presentation is of a semigroup without one);
       if completion exhausts its budget, fall back to a bounded-length
       bijection check and report 'inconclusive-fallback-pass' at best.
    """
    report = {"name": pres.name, "status": "fail"}
    # 1: homomorphism
    def ev(word):
        x = identity
        for g in word:
            x = x * gen_elems[g]
        return x
    bad = [(l, r) for l, r in pres.relations if ev(l) != ev(r)]
    report["relations_hold"] = not bad
    if bad:
        report["witness"] = pres.format_text().splitlines()[
            pres.relations.index(bad[0])]
        return report
    # 2: surjectivity
    from .diagrams import closure
    generated = set(closure(list(gen_elems) + [identity],
                            mul=lambda a, b: a * b))
    target = set(target_set)
    surj = generated == target or generated == target | {identity}
    report["surjective"] = surj
    if not surj:
        report["witness"] = "generators do not generate the target"
        return report
    expected = len(target) if identity in target else len(target) + 1
    # 3: normal form count
    rs = kb_complete(pres, max_rules=max_rules, max_steps=max_steps)
    report["kb_complete"] = rs.complete
    if rs.complete:
        nf = normal_forms(rs, cap=10 * expected + 1000)
        report["normal_forms"] = len(nf)
        report["expected"] = expected
        report["status"] = "pass" if len(nf) == expected else "fail"
        return report
    ok = _bounded_bijection(pres, gen_elems, identity, target | {identity})
    report["status"] = "inconclusive-fallback-pass" if ok else "fail"
    return report


# ---------------------------------------------------------------------------
# presentation presets


def _pn_relations(n, e_names):
    """Relations of the presentation of P_n by the tie generators e_{i,j}."""
    idx = {p: i for i, p in enumerate(e_names)}
    rels = []
    pairs = list(e_names)
    for p in pairs:
        rels.append(((idx[p], idx[p]), (idx[p],)))
    for a in pairs:
        for b in pairs:
            if a < b:
                rels.append(((idx[a], idx[b]), (idx[b], idx[a])))
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            for k in range(j + 1, n + 1):
                ij, ik, jk = idx[(i, j)], idx[(i, k)], idx[(j, k)]
                rels.append(((ij, ik), (ij, jk)))
                rels.append(((ij, jk), (ik, jk)))
    return rels


def preset_pn(n):
    e_names = [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)]
    gens = [f"e_{i}_{j}" for (i, j) in e_names]
    pres = Presentation(gens, _pn_relations(n, e_names), name=f"pn:{n}")
    from .setpartitions import SetPartition, all_partitions

    def tie(i, j):
        return SetPartition([(i, j)], tuple(range(1, n + 1)))

    gen_elems = [_JoinElem(tie(i, j)) for (i, j) in e_names]
    identity = _JoinElem(SetPartition.singletons(range(1, n + 1)))
    target = [_JoinElem(p) for p in all_partitions(range(1, n + 1))]
    return pres, gen_elems, identity, target


class _JoinElem:
    """Set partitions as a monoid under join."""

    __slots__ = ("p",)

    def __init__(self, p):
        self.p = p

    def __mul__(self, other):
        return _JoinElem(self.p.join(other.p))

    def __eq__(self, other):
        return self.p == other.p

    def __hash__(self):
        return hash(self.p)


def _sgroup_relations(off, n):
    """Symmetric group relations on generators s_1..s_{n-1} at offset off."""
    rels = []
    for i in range(n - 1):
        rels.append(((off + i, off + i), ()))
    for i in range(n - 2):
        rels.append(((off + i, off + i + 1, off + i),
                     (off + i + 1, off + i, off + i + 1)))
    for i in range(n - 1):
        for j in range(i + 2, n - 1):
            rels.append(((off + i, off + j), (off + j, off + i)))
    return rels


def preset_brauer(n):
    """Brauer monoid presented by transpositions s_i and hooks t_i."""
    gens = [f"s{i}" for i in range(1, n)] + [f"t{i}" for i in range(1, n)]
    S = lambda i: i - 1
    T = lambda i: n - 2 + i
    rels = _sgroup_relations(0, n)
    for i in range(1, n):
        rels.append(((T(i), T(i)), (T(i),)))
        rels.append(((T(i), S(i)), (T(i),)))
        rels.append(((S(i), T(i)), (T(i),)))
        for j in range(1, n):
            d = abs(i - j)
            if d == 1:
                rels.append(((T(i), T(j), T(i)), (T(i),)))
                rels.append(((S(i), T(j), T(i)), (S(j), T(i))))
                rels.append(((T(i), T(j), S(i)), (T(i), S(j))))
            elif d > 1:
                rels.append(((T(i), T(j)), (T(j), T(i))))
                rels.append(((T(i), S(j)), (S(j), T(i))))
    pres = Presentation(gens, rels, name=f"brauer:{n}")
    from .diagrams import generator, perm_diagram, brauer_monoid
    gen_elems = [perm_diagram(perms.sgen(n, i)) for i in range(1, n)] + \
        [generator("t", n, i) for i in range(1, n)]
    identity = perm_diagram(perms.identity(n))
    return pres, gen_elems, identity, list(brauer_monoid(n))


def preset_rsn(n):
    """R(S_n) presented by e_i (ties) and s_i."""
    gens = [f"e{i}" for i in range(1, n)] + [f"s{i}" for i in range(1, n)]
    E = lambda i: i - 1
    S = lambda i: n - 2 + i
    rels = []
    for i in range(1, n):
        rels.append(((E(i), E(i)), (E(i),)))
        for j in range(i + 1, n):
            rels.append(((E(i), E(j)), (E(j), E(i))))
    rels += [(tuple(x + n - 1 for x in l), tuple(x + n - 1 for x in r))
             for l, r in _sgroup_relations(0, n)]
    for i in range(1, n):
        for j in range(1, n):
            d = abs(i - j)
            if d == 1:
                rels.append(((E(i), S(j), S(i)), (S(j), S(i), E(j))))
                rels.append(((E(i), E(j), S(i)), (E(j), S(i), E(j))))
                rels.append(((E(j), S(i), E(j)), (S(i), E(j), E(i))))
            else:
                rels.append(((S(i), E(j)), (E(j), S(i))))
    pres = Presentation(gens, rels, name=f"rsn:{n}")
    from .ramified import gen_e, gen_s, r_symmetric, ramified_identity
    gen_elems = [gen_e(n, i) for i in range(1, n)] + \
        [gen_s(n, i) for i in range(1, n)]
    return pres, gen_elems, ramified_identity(n), list(r_symmetric(n))


def _ez_relations(n, E, Z):
    """Common tie/tied-braid relations: idempotent commuting ties, braid
    relations for z, z_i^2 = e_i, e_i z_i = z_i, and e-z commutation."""
    rels = []
    for i in range(1, n):
        rels.append(((E(i), E(i)), (E(i),)))
        for j in range(i + 1, n):
            rels.append(((E(i), E(j)), (E(j), E(i))))
    for i in range(1, n):
        for j in range(1, n):
            d = abs(i - j)
            if d == 1:
                rels.append(((Z(i), Z(j), Z(i)), (Z(j), Z(i), Z(j))))
            elif d > 1 and i < j:
                rels.append(((Z(i), Z(j)), (Z(j), Z(i))))
            if i != j:
                rels.append(((E(i), Z(j)), (Z(j), E(i))))
    for i in range(1, n):
        rels.append(((Z(i), Z(i)), (E(i),)))
        rels.append(((E(i), Z(i)), (Z(i),)))
        rels.append(((Z(i), E(i)), (Z(i),)))
    return rels


def preset_brsn(n):
    """BR(S_n) presented by ties e_i and tied transpositions z_i."""
    gens = [f"e{i}" for i in range(1, n)] + [f"z{i}" for i in range(1, n)]
    E = lambda i: i - 1
    Z = lambda i: n - 2 + i
    pres = Presentation(gens, _ez_relations(n, E, Z), name=f"brsn:{n}")
    from .ramified import gen_e, gen_z, br_symmetric, ramified_identity
    gen_elems = [gen_e(n, i) for i in range(1, n)] + \
        [gen_z(n, i) for i in range(1, n)]
    return pres, gen_elems, ramified_identity(n), list(br_symmetric(n))


def preset_brsn_z(n):
    """BR(S_n) presented by the tied transpositions alone."""
    gens = [f"z{i}" for i in range(1, n)]
    Z = lambda i: i - 1
    rels = []
    for i in range(1, n):
        rels.append(((Z(i), Z(i), Z(i)), (Z(i),)))
        for j in range(1, n):
            d = abs(i - j)
            if d == 1 and i < j:
                rels.append(((Z(i), Z(j), Z(i)), (Z(j), Z(i), Z(j))))
            elif d > 1 and i < j:
                rels.append(((Z(i), Z(j)), (Z(j), Z(i))))
            if i != j:
                rels.append(((Z(i), Z(i), Z(j), Z(j)),
                             (Z(j), Z(j), Z(i), Z(i))))
                rels.append(((Z(i), Z(i), Z(j)), (Z(j), Z(i), Z(i))))
    pres = Presentation(gens, rels, name=f"brsn-z:{n}")
    from .ramified import gen_z, br_symmetric, ramified_identity
    gen_elems = [gen_z(n, i) for i in range(1, n)]
    return pres, gen_elems, ramified_identity(n), list(br_symmetric(n))


def preset_brjn(n):
    """BR(J_n) presented by ties e_i and tied hooks d_i."""
    gens = [f"e{i}" for i in range(1, n)] + [f"d{i}" for i in range(1, n)]
    E = lambda i: i - 1
    D = lambda i: n - 2 + i
    rels = []
    for i in range(1, n):
        rels.append(((E(i), E(i)), (E(i),)))
        for j in range(i + 1, n):
            rels.append(((E(i), E(j)), (E(j), E(i))))
    for i in range(1, n):
        rels.append(((D(i), D(i)), (D(i),)))
        rels.append(((D(i), E(i)), (D(i),)))
        rels.append(((E(i), D(i)), (D(i),)))
        for j in range(1, n):
            d = abs(i - j)
            if d == 1:
                rels.append(((D(i), D(j), D(i)), (E(j), D(i), E(j))))
                rels.append(((D(i), E(j)), (E(j), D(i))))
            elif d > 1:
                if i < j:
                    rels.append(((D(i), D(j)), (D(j), D(i))))
                rels.append(((D(i), E(j)), (E(j), D(i))))
    pres = Presentation(gens, rels, name=f"brjn:{n}")
    from .ramified import gen_e, gen_d, br_jones, ramified_identity
    gen_elems = [gen_e(n, i) for i in range(1, n)] + \
        [gen_d(n, i) for i in range(1, n)]
    return pres, gen_elems, ramified_identity(n), list(br_jones(n))


def _brbr_relations(n, E, Z, D):
    rels = _ez_relations(n, E, Z)
    for i in range(1, n):
        rels.append(((D(i), D(i)), (D(i),)))
        rels.append(((D(i), E(i)), (D(i),)))
        rels.append(((E(i), D(i)), (D(i),)))
        rels.append(((Z(i), D(i)), (D(i),)))
        rels.append(((D(i), Z(i)), (D(i),)))
        for j in range(1, n):
            d = abs(i - j)
            if d == 1:
                rels.append(((D(i), D(j), D(i)), (E(j), D(i), E(j))))
                rels.append(((D(i), E(j)), (E(j), D(i))))
                rels.append(((Z(i), D(j), D(i)), (Z(j), D(i))))
                rels.append(((D(i), D(j), Z(i)), (D(i), Z(j))))
            elif d > 1:
                if i < j:
                    rels.append(((D(i), D(j)), (D(j), D(i))))
                rels.append(((D(i), E(j)), (E(j), D(i))))
                rels.append(((Z(i), D(j)), (D(j), Z(i))))
    return rels


def preset_brbrn(n, abstract=False):
    """BR(Br_n) presented by e_i, z_i, d_i; `abstract` builds the same
    relation set as the abstractly presented monoid for comparison."""
    gens = [f"e{i}" for i in range(1, n)] + [f"z{i}" for i in range(1, n)] \
        + [f"d{i}" for i in range(1, n)]
    E = lambda i: i - 1
    Z = lambda i: n - 2 + i
    D = lambda i: 2 * (n - 1) + i - 1
    name = f"brbrn-abstract:{n}" if abstract else f"brbrn:{n}"
    pres = Presentation(gens, _brbr_relations(n, E, Z, D), name=name)
    from .ramified import gen_e, gen_z, gen_d, br_brauer, ramified_identity
    gen_elems = [gen_e(n, i) for i in range(1, n)] + \
        [gen_z(n, i) for i in range(1, n)] + \
        [gen_d(n, i) for i in range(1, n)]
    return pres, gen_elems, ramified_identity(n), list(br_brauer(n))


def preset_srsn(n):
    """The singular part sR(S_n), presented as a semigroup by e_{i,j} and
    the decorated z^r_{i,j}, with ground instances of the braid-style
    relations on superindices.  A formal identity is adjoined for the
    rewriting (the normal form count is |sR(S_n)| + 1)."""
    pairs = [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)]
    rs = list(range(1, n))
    e_names = [f"e_{i}_{j}" for (i, j) in pairs]
    z_names = [f"z_{i}_{j}^{r}" for r in rs for (i, j) in pairs]
    gens = e_names + z_names
    eidx = {p: k for k, p in enumerate(pairs)}

    def Z(r, p):
        return len(pairs) + (r - 1) * len(pairs) + eidx[p]

    def E(p):
        return eidx[p]

    def ap(r, p):
        s = perms.sgen(n, r)
        a, b = s[p[0] - 1], s[p[1] - 1]
        return (a, b) if a < b else (b, a)

    rels = _pn_relations(n, pairs)
    for r in rs:
        for t in rs:
            if abs(r - t) == 1:
                for p in pairs:
                    # braid-style relation on superindices
                    l = (Z(r, p), Z(t, ap(r, p)), Z(r, ap(t, ap(r, p))))
                    rr = (Z(t, p), Z(r, ap(t, p)), Z(t, ap(r, ap(t, p))))
                    if l != rr:
                        rels.append((l, rr))
            if abs(r - t) > 1:
                for p in pairs:
                    rels.append(((Z(r, p), Z(t, ap(r, p))),
                                 (Z(t, p), Z(r, ap(t, p)))))
    for r in rs:
        for p in pairs:
            for p2 in pairs:
                rels.append(((Z(r, p), Z(r, p2)), (E(p), E(ap(r, p2)))))
                rels.append(((Z(r, p), E(p2)), (E(ap(r, p2)), Z(r, p))))
            rels.append(((E(p), Z(r, p)), (Z(r, p),)))
    pres = Presentation(gens, rels, name=f"srsn:{n}")
    from .ramified import gen_e_pair, gen_z_pair, sr_symmetric, \
        ramified_identity
    gen_elems = [gen_e_pair(n, i, j) for (i, j) in pairs] + \
        [gen_z_pair(n, r, i, j) for r in rs for (i, j) in pairs]
    return pres, gen_elems, ramified_identity(n), list(sr_symmetric(n))


PRESETS = {
    "pn": preset_pn,
    "brauer": preset_brauer,
    "rsn": preset_rsn,
    "brsn": preset_brsn,
    "brsn-z": preset_brsn_z,
    "brjn": preset_brjn,
    "brbrn": preset_brbrn,
    "brbrn-abstract": lambda n: preset_brbrn(n, abstract=True),
    "srsn": preset_srsn,
}

PRESET_NAMES = list(PRESETS)


def build_preset(name, n):
    return PRESETS[name](n)
