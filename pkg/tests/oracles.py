"""Independent reference computations used to check the library.

None of these call foxcalc.fox, foxcalc.schreier or foxcalc.linalg.
"""

from foxcalc.freegroup import FreeWord, letters
from foxcalc.groupring import RingElt, add, from_word, mul, scalar_mul


def fox_by_letters(k, u):
    """D_k via the product rule applied one letter at a time inside Z[F].

    D(w a) = D(w) a + D(a), with D(x_k) = 1 and D(x_k^-1) = -x_k^-1.
    """
    rank = u.rank
    total = RingElt(rank)
    for w, c in u.terms.items():
        acc = RingElt(rank)
        for g, s in letters(w):
            a = FreeWord(rank, [(g, s)])
            acc = mul(acc, from_word(a))
            if g == k:
                acc = add(acc, from_word(FreeWord(rank), 1) if s > 0 else from_word(a, -1))
        total = add(total, scalar_mul(c, acc))
    return total


def pi_by_enumeration(u, group, images):
    """Coefficient vector of u pushed into Z[G], evaluating words letter by letter."""
    t = group.table
    out = [0] * group.order
    for w, c in u.terms.items():
        x = 0
        for g, s in letters(w):
            a = images[g - 1]
            x = t[x][a if s > 0 else group.inverse[a]]
        out[x] += c
    return out


class MagnusQuotient:
    """F / [N,N] N^d realised inside (Z/d)[G]^rank x| G, N = ker(images).

    An element is (g, a) with a a tuple of rank*|G| residues; the generator
    x_i maps to (images[i], unit vector at (i, identity)) and
    (g, a)(h, b) = (gh, a.h + b), a.h meaning right translation by h.
    The kernel of F -> this group is [N,N]N^d, so word images decide
    membership modulo that subgroup.
    """

    def __init__(self, group, images, d):
        self.group = group
        self.images = list(images)
        self.rank = len(images)
        self.d = d
        self._subgroups = {}
        n = group.order
        self.gens = []
        for i, a in enumerate(self.images):
            vec = [0] * (self.rank * n)
            vec[i * n] = 1
            self.gens.append((a, tuple(vec)))

    def mul(self, x, y):
        (g, a), (h, b) = x, y
        n, t, d = self.group.order, self.group.table, self.d
        out = list(b)
        for i in range(self.rank):
            base = i * n
            for z in range(n):
                c = a[base + z]
                if c:
                    j = base + t[z][h]
                    out[j] = (out[j] + c) % d
        return (t[g][h], tuple(out))

    def identity(self):
        return (0, (0,) * (self.rank * self.group.order))

    def inverse(self, x):
        # finite group: x^-1 = x^(ord - 1)
        y, prev = x, None
        while y != self.identity():
            prev = y
            y = self.mul(y, x)
        return prev if prev is not None else x

    def image(self, w):
        x = self.identity()
        invs = [self.inverse(gen) for gen in self.gens]
        for g, s in letters(w):
            x = self.mul(x, self.gens[g - 1] if s > 0 else invs[g - 1])
        return x

    def closure(self, gens):
        seen = {self.identity()}
        frontier = [self.identity()]
        while frontier:
            nxt = []
            for x in frontier:
                for g in gens:
                    y = self.mul(x, g)
                    if y not in seen:
                        seen.add(y)
                        nxt.append(y)
            frontier = nxt
        return seen

    def normal_closure(self, seeds):
        """Smallest normal subgroup containing seeds; conjugating by generators is enough."""
        kept, group = [], self.closure([])
        for h in seeds:
            if h not in group:
                kept.append(h)
                group = self.closure(kept)
        seeds = kept
        conjugators = [(self.inverse(x), x) for x in self.gens]
        changed = True
        while changed:
            changed = False
            for h in list(seeds):
                for xi, x in conjugators:
                    for c in (self.mul(self.mul(xi, h), x), self.mul(self.mul(x, h), xi)):
                        if c not in group:
                            seeds.append(c)
                            group = self.closure(seeds)
                            changed = True
        return seeds, group

    def product_subgroup(self, K):
        """Image of F_K (F_K n N)^F [N,N] N^d."""
        fk = self.closure([self.gens[k - 1] for k in sorted(K)])
        fk_n = sorted(x for x in fk if x[0] == 0)
        seeds, _ = self.normal_closure(fk_n)
        return self.closure([self.gens[k - 1] for k in sorted(K)] + seeds)

    def member(self, v, K):
        key = frozenset(K)
        if key not in self._subgroups:
            self._subgroups[key] = self.product_subgroup(K)
        return self.image(v) in self._subgroups[key]
