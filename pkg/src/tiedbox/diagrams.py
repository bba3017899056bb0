"""Partition diagrams on n strands: set partitions of {1..n, n+1..2n},
where i is the i-th top point and n+i the i-th bottom point.

Concatenation runs through a shared middle row using union-find over 3n
points and reports the number of closed middle components (loops).
"""

from functools import lru_cache

from .setpartitions import SetPartition, UnionFind, all_partitions
from . import perms

__all__ = [
    "Diagram", "concat", "perm_diagram", "generator", "closure",
    "boxed_diagram", "is_boxed", "boxed_composition", "mu_partitions",
    "over", "shift_blocks", "separation_cuts", "boxed_decomposition",
    "symmetric_diagrams", "jones_monoid", "brauer_monoid", "partition_monoid",
]


class Diagram:
    __slots__ = ("n", "part")

    def __init__(self, n, part):
        if isinstance(part, (list, tuple)):
            part = SetPartition(part, tuple(range(1, 2 * n + 1)))
        if part.ground != tuple(range(1, 2 * n + 1)):
            raise ValueError("diagram must partition {1..2n}")
        self.n = n
        self.part = part

    def __eq__(self, other):
        return self.n == other.n and self.part == other.part

    def __hash__(self):
        return hash((self.n, self.part))

    def __le__(self, other):
        return self.part <= other.part

    def __ge__(self, other):
        return other.part <= self.part

    def __mul__(self, other):
        return concat(self, other)[0]

    def top(self):
        """Restriction to the top points, as a partition of {1..n}."""
        return self.part.restrict(range(1, self.n + 1))

    def bottom(self):
        """Restriction to the bottom points, renumbered to {1..n}."""
        p = self.part.restrict(range(self.n + 1, 2 * self.n + 1))
        return p.relabel(lambda x: x - self.n)

    def flip(self):
        """Swap top and bottom (the diagram antiautomorphism)."""
        n = self.n
        return Diagram(n, self.part.relabel(
            lambda x: x + n if x <= n else x - n))

    def __str__(self):
        return f"{self.n}; {self.part}"

    def __repr__(self):
        return f"Diagram({self})"

    @staticmethod
    def parse(text):
        head, _, rest = text.partition(";")
        n = int(head)
        part = SetPartition.parse(rest, ground=tuple(range(1, 2 * n + 1)))
        return Diagram(n, part)


def concat(d1, d2):
    """Concatenate (d1 on top of d2).  Returns (diagram, loops)."""
    if d1.n != d2.n:
        raise ValueError("different strand counts")
    n = d1.n
    # points: 1..n top, n+1..2n middle, 2n+1..3n bottom
    uf = UnionFind(range(1, 3 * n + 1))
    for b in d1.part.blocks:
        for x in b[1:]:
            uf.union(b[0], x)
    for b in d2.part.blocks:
        sb = [x + n for x in b]
        for x in sb[1:]:
            uf.union(sb[0], x)
    loops = 0
    blocks = []
    for cls in uf.classes():
        outer = [x for x in cls if x <= n or x > 2 * n]
        if not outer:
            loops += 1
            continue
        blocks.append([x if x <= n else x - n for x in outer])
    return Diagram(n, blocks), loops


def perm_diagram(w):
    """Diagram of a permutation: i joined to n + w(i)."""
    n = len(w)
    return Diagram(n, [(i, n + w[i - 1]) for i in range(1, n + 1)])


def generator(kind, n, i, j=None):
    """Named generators on n strands.

    's': transposition diagram s_i.
    't': Brauer/Jones hook t_i (blocks {i,i+1} and {i',(i+1)'}).
    'b': boxed join b_i = identity with blocks i and i+1 merged.
    'e': identity with a tie joining strands i and j (needs j).
    """
    ident = [(k, n + k) for k in range(1, n + 1)]
    if kind == "s":
        return perm_diagram(perms.sgen(n, i))
    if kind == "t":
        blocks = [b for b in ident if b[0] not in (i, i + 1)]
        blocks += [(i, i + 1), (n + i, n + i + 1)]
        return Diagram(n, blocks)
    if kind == "b":
        blocks = [b for b in ident if b[0] not in (i, i + 1)]
        blocks += [(i, i + 1, n + i, n + i + 1)]
        return Diagram(n, blocks)
    if kind == "e":
        if j is None:
            raise ValueError("'e' needs two strand indices")
        blocks = [b for b in ident if b[0] not in (i, j)]
        blocks += [(i, j, n + i, n + j)]
        return Diagram(n, blocks)
    raise ValueError(f"unknown generator kind {kind!r}")


def closure(gens, mul=None, include_identity=None, budget=10 ** 6):
    """Multiplicative closure of a set of elements, breadth first.

    Works for any associative product; by default diagram concatenation
    with loops discarded.
    """
    if mul is None:
        mul = lambda a, b: concat(a, b)[0]
    gens = list(gens)
    seen = list(dict.fromkeys(gens))
    frontier = list(seen)
    seen_set = set(seen)
    steps = 0
    while frontier:
        new = []
        for x in frontier:
            for g in gens:
                steps += 1
                if steps > budget:
                    raise RuntimeError("closure budget exhausted")
                y = mul(x, g)
                if y not in seen_set:
                    seen_set.add(y)
                    new.append(y)
        seen.extend(new)
        frontier = new
    return seen


def boxed_diagram(mu):
    """b_mu: the coarsening of the identity given by a composition."""
    n = sum(mu)
    blocks = []
    x = 1
    for m in mu:
        blocks.append(tuple(range(x, x + m)) +
                      tuple(range(n + x, n + x + m)))
        x += m
    return Diagram(n, blocks)


def is_boxed(d):
    """Boxed: coarsens the identity and the top restriction is linear."""
    n = d.n
    ident = perm_diagram(perms.identity(n))
    return ident <= d and d.top().is_linear()


def boxed_composition(d):
    """The composition mu with d == b_mu, for a boxed diagram."""
    if not is_boxed(d):
        raise ValueError("not a boxed diagram")
    return d.top().to_composition()


def all_boxed(n):
    from .combinatorics import compositions
    return [boxed_diagram(mu) for mu in compositions(n)]


def shift_blocks(blocks, m, r, s):
    """The (r, s)-shift: add r to points <= m and s - m to points > m.

    `blocks` are blocks over {1..2m}; the result is a raw block list.
    """
    return [tuple(x + r if x <= m else x - m + s for x in b) for b in blocks]


def over(d1, d2):
    """Horizontal (side by side) product of diagrams."""
    m, n = d1.n, d2.n
    blocks = shift_blocks(d1.part.blocks, m, 0, m + n)
    blocks += shift_blocks(d2.part.blocks, n, m, 2 * m + n)
    return Diagram(m + n, blocks)


def separation_cuts(d):
    """Positions r where no block of d crosses the vertical cut after
    strand r (0 < r < n)."""
    n = d.n
    cuts = []
    for r in range(1, n):
        left = set(range(1, r + 1)) | set(range(n + 1, n + r + 1))
        ok = all(set(b) <= left or not (set(b) & left) for b in d.part.blocks)
        if ok:
            cuts.append(r)
    return cuts


def boxed_decomposition(d):
    """Split d at every separation cut.  Returns the list of factors
    (diagrams on fewer strands); their horizontal product is d."""
    n = d.n
    cuts = [0] + separation_cuts(d) + [n]
    out = []
    for a, b in zip(cuts, cuts[1:]):
        m = b - a
        points = list(range(a + 1, b + 1)) + list(range(n + a + 1, n + b + 1))
        sub = d.part.restrict(points)
        sub = sub.relabel(lambda x: x - a if x <= n else x - n - a + m)
        out.append(Diagram(m, sub))
    return out


def mu_partitions(mu):
    """All diagrams finer than b_mu: independent partition diagrams inside
    each box, combined with horizontal products."""
    out = [Diagram(0, SetPartition([], ()))]
    for m in mu:
        box = [Diagram(m, p) for p in all_partitions(range(1, 2 * m + 1))]
        out = [over(d, x) for d in out for x in box]
    return out


def symmetric_diagrams(n):
    return [perm_diagram(w) for w in perms.all_perms(n)]


@lru_cache(maxsize=None)
def jones_monoid(n):
    """The Jones (Temperley-Lieb) monoid: closure of identity and hooks."""
    gens = [perm_diagram(perms.identity(n))]
    gens += [generator("t", n, i) for i in range(1, n)]
    return tuple(closure(gens))


@lru_cache(maxsize=None)
def brauer_monoid(n):
    gens = [perm_diagram(perms.identity(n))]
    gens += [generator("s", n, i) for i in range(1, n)]
    gens += [generator("t", n, i) for i in range(1, n)]
    return tuple(closure(gens))


def partition_monoid(n):
    return [Diagram(n, p) for p in all_partitions(range(1, 2 * n + 1))]
