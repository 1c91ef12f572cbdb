"""Graded spaces of arrow diagrams and their relation quotients.

Two skeletons are supported:

* ``("long",)`` — diagrams on a single long strand: m arrows whose 2m
  endpoints occupy slots 1..2m; an arrow is (tail, head).
* ``("strands", n)`` — horizontal diagrams on n parallel strands: words of
  length m in the letters a_(p,q) (arrow from strand p over strand q),
  taken modulo commutation of letters on disjoint strand pairs (arrows far
  apart in space commute); the canonical form is the lexicographically
  smallest word in the commutation class.

Relation sets: TC (tails commute), 4T (four-term arrow relation), 6T
(six-term relation; with TC it implies 4T), RI (rotation-number
independence: left and right isolated arrows agree), FI (framing
independence: isolated arrows vanish), CC (commutators commute,
instantiated through the trivalent-diagram module).
"""

from itertools import combinations_with_replacement, permutations, product

from .rational import rat
from .linalg import SparseEchelon

LONG = ("long",)


def strands(n):
    return ("strands", int(n))


# --------------------------------------------------------------------------
# Canonical diagrams
# --------------------------------------------------------------------------

def canonical_long(arrows):
    """Canonical long-strand diagram: arrows sorted, slots packed to 1..2m."""
    arrows = [(int(t), int(h)) for t, h in arrows]
    used = sorted(x for a in arrows for x in a)
    if len(set(used)) != len(used):
        raise ValueError("duplicate endpoint slot")
    remap = {old: new for new, old in enumerate(used, start=1)}
    return tuple(sorted((remap[t], remap[h]) for t, h in arrows))


def _letters_disjoint(a, b):
    return not (set(a) & set(b))


def canonical_word(word, n):
    """Lex-least representative of a word modulo disjoint-letter commutation."""
    w = list(tuple(l) for l in word)
    for p, q in w:
        if not (1 <= p <= n and 1 <= q <= n) or p == q:
            raise ValueError("bad letter %r" % ((p, q),))
    changed = True
    while changed:
        changed = False
        for i in range(len(w) - 1):
            if w[i] > w[i + 1] and _letters_disjoint(w[i], w[i + 1]):
                w[i], w[i + 1] = w[i + 1], w[i]
                changed = True
    return tuple(w)


def canonical(skeleton, data):
    if skeleton == LONG:
        return canonical_long(data)
    if skeleton[0] == "strands":
        return canonical_word(data, skeleton[1])
    raise ValueError("unknown skeleton %r" % (skeleton,))


def enumerate_diagrams(skeleton, m):
    """All canonical degree-m diagrams on the skeleton, sorted."""
    if m < 0:
        raise ValueError("degree must be >= 0")
    if skeleton == LONG:
        out = []

        def rec(arrows, free):
            if not free:
                out.append(tuple(sorted(arrows)))
                return
            t = free[0]
            for h in free[1:]:
                rec(arrows + [(t, h)], [x for x in free if x not in (t, h)])
                rec(arrows + [(h, t)], [x for x in free if x not in (t, h)])

        rec([], list(range(1, 2 * m + 1)))
        return sorted(out)
    if skeleton[0] == "strands":
        n = skeleton[1]
        letters = [(p, q) for p in range(1, n + 1) for q in range(1, n + 1)
                   if p != q]
        seen = set()
        for w in product(letters, repeat=m):
            seen.add(canonical_word(w, n))
        return sorted(seen)
    raise ValueError("unknown skeleton %r" % (skeleton,))


# --------------------------------------------------------------------------
# Arrow vectors
# --------------------------------------------------------------------------

class ArrowVector:
    """Formal rational combination of same-degree diagrams on one skeleton."""

    def __init__(self, skeleton, m, terms=None):
        self.skeleton = skeleton
        self.m = m
        self.terms = {}
        if terms:
            for d, c in (terms.items() if isinstance(terms, dict) else terms):
                self.add_term(d, c)

    def add_term(self, diagram, coeff):
        c = self.terms.get(diagram, rat(0)) + coeff
        if c:
            self.terms[diagram] = c
        else:
            self.terms.pop(diagram, None)

    def __add__(self, other):
        if (self.skeleton, self.m) != (other.skeleton, other.m):
            raise ValueError("mixed degrees or skeletons")
        out = ArrowVector(self.skeleton, self.m, dict(self.terms))
        for d, c in other.terms.items():
            out.add_term(d, c)
        return out

    def __sub__(self, other):
        return self + other * -1

    def __mul__(self, scalar):
        return ArrowVector(self.skeleton, self.m,
                           {d: c * rat(scalar) for d, c in self.terms.items()})

    __rmul__ = __mul__

    def is_zero(self):
        return not self.terms

    def __eq__(self, other):
        return (isinstance(other, ArrowVector)
                and (self.skeleton, self.m) == (other.skeleton, other.m)
                and self.terms == other.terms)

    def __repr__(self):
        return "ArrowVector(%r, %d, %r)" % (self.skeleton, self.m, self.terms)


# --------------------------------------------------------------------------
# Relator generation: long strand
# --------------------------------------------------------------------------

def _insert_long(context, placements):
    """Insert endpoints into a long diagram.

    context -- canonical degree-c diagram; placements -- list of arrows as
    ((gap, rank), (gap, rank)) tail/head pseudo-positions, where gap is in
    0..2c and rank orders multiple insertions inside one gap.
    """
    big = [(3 * t, 3 * h) for t, h in context]
    # inserted endpoint at gap g, rank r -> position 3g + 1 + r/(R+1), but
    # integer arithmetic: scale everything by a common factor
    scale = 64
    big = [(scale * t, scale * h) for t, h in big]
    for (gt, rt), (gh, rh) in placements:
        big.append((scale * 3 * gt + scale + rt, scale * 3 * gh + scale + rh))
    return canonical_long(big)


def _sites_long(context, count):
    """All ordered site triples/pairs: (gap, site-rank) positions.

    Sites are disjoint insertion points on the line, possibly inside the
    same gap of the context (then ordered by site rank).
    """
    c = len(context)
    gaps = range(0, 2 * c + 1)
    return list(combinations_with_replacement(gaps, count))


def _term_long(context, sites, letters):
    """Long diagram for a 2-letter product at 3 sites.

    sites -- tuple of 3 gaps (non-decreasing); letters -- ordered pairs
    (u, v) with u, v in {0,1,2} indexing the sites: earlier letters place
    their endpoints before later ones within a shared site.
    """
    placements = []
    for idx, (u, v) in enumerate(letters):
        # rank: site index separates sites sharing a gap; letter index
        # orders endpoints within one site
        rt = 8 * u + idx
        rh = 8 * v + idx
        placements.append(((sites[u], rt), (sites[v], rh)))
    return _insert_long(context, placements)


def _relators_long(m, relset):
    out = []
    if "TC" in relset:
        for d in enumerate_diagrams(LONG, m):
            tails = {t for t, _ in d}
            for i in range(1, 2 * m):
                if i in tails and i + 1 in tails:
                    swapped = canonical_long(
                        [(i + 1 if t == i else (i if t == i + 1 else t), h)
                         for t, h in d])
                    v = ArrowVector(LONG, m)
                    v.add_term(d, rat(1))
                    v.add_term(swapped, rat(-1))
                    if not v.is_zero():
                        out.append(v)
    if ("4T" in relset or "6T" in relset) and m >= 2:
        for context in enumerate_diagrams(LONG, m - 2):
            for sites in _sites_long(context, 3):
                for i, j, k in permutations(range(3)):
                    if "4T" in relset:
                        v = ArrowVector(LONG, m)
                        v.add_term(_term_long(context, sites, [(i, j), (j, k)]), rat(1))
                        v.add_term(_term_long(context, sites, [(j, k), (i, j)]), rat(-1))
                        v.add_term(_term_long(context, sites, [(i, k), (j, k)]), rat(1))
                        v.add_term(_term_long(context, sites, [(j, k), (i, k)]), rat(-1))
                        if not v.is_zero():
                            out.append(v)
                    if "6T" in relset:
                        v = ArrowVector(LONG, m)
                        for (a, b), sgn in [(((i, j), (i, k)), 1),
                                            (((i, j), (j, k)), 1),
                                            (((i, k), (j, k)), 1),
                                            (((i, k), (i, j)), -1),
                                            (((j, k), (i, j)), -1),
                                            (((j, k), (i, k)), -1)]:
                            v.add_term(_term_long(context, sites, [a, b]), rat(sgn))
                        if not v.is_zero():
                            out.append(v)
    if ("RI" in relset or "FI" in relset) and m >= 1:
        for context in enumerate_diagrams(LONG, m - 1):
            for g in range(0, 2 * (m - 1) + 1):
                right = _insert_long(context, [(((g, 0)), ((g, 1)))])
                left = _insert_long(context, [(((g, 1)), ((g, 0)))])
                if "RI" in relset:
                    v = ArrowVector(LONG, m)
                    v.add_term(right, rat(1))
                    v.add_term(left, rat(-1))
                    if not v.is_zero():
                        out.append(v)
                if "FI" in relset:
                    for d in (right, left):
                        v = ArrowVector(LONG, m)
                        v.add_term(d, rat(1))
                        out.append(v)
    if "CC" in relset and m >= 4:
        from .jacobi import cc_arrow_relators
        out.extend(cc_arrow_relators(m))
    return out


# --------------------------------------------------------------------------
# Relator generation: strands
# --------------------------------------------------------------------------

def _relators_strands(n, m, relset):
    out = []
    skel = strands(n)
    letters = [(p, q) for p in range(1, n + 1) for q in range(1, n + 1)
               if p != q]

    def vec(pairs):
        v = ArrowVector(skel, m)
        for w, c in pairs:
            v.add_term(canonical_word(w, n), rat(c))
        return v

    if "TC" in relset and m >= 2:
        for ctx in enumerate_diagrams(skel, m - 2):
            for pos in range(m - 1):
                for a in letters:
                    for b in letters:
                        if a[0] != b[0] or a >= b:
                            continue
                        pre, post = ctx[:pos], ctx[pos:]
                        v = vec([(pre + (a, b) + post, 1),
                                 (pre + (b, a) + post, -1)])
                        if not v.is_zero():
                            out.append(v)
    if ("4T" in relset or "6T" in relset) and m >= 2:
        trips = [t for t in permutations(range(1, n + 1), 3)]
        for ctx in enumerate_diagrams(skel, m - 2):
            for pos in range(m - 1):
                pre, post = ctx[:pos], ctx[pos:]
                for i, j, k in trips:
                    aij, aik, ajk = (i, j), (i, k), (j, k)
                    if "4T" in relset:
                        v = vec([(pre + (aij, ajk) + post, 1),
                                 (pre + (ajk, aij) + post, -1),
                                 (pre + (aik, ajk) + post, 1),
                                 (pre + (ajk, aik) + post, -1)])
                        if not v.is_zero():
                            out.append(v)
                    if "6T" in relset:
                        v = vec([(pre + (aij, aik) + post, 1),
                                 (pre + (aij, ajk) + post, 1),
                                 (pre + (aik, ajk) + post, 1),
                                 (pre + (aik, aij) + post, -1),
                                 (pre + (ajk, aij) + post, -1),
                                 (pre + (ajk, aik) + post, -1)])
                        if not v.is_zero():
                            out.append(v)
    if "RI" in relset or "FI" in relset or "CC" in relset:
        raise ValueError("RI/FI/CC apply to the long strand only")
    return out


def generate_relations(skeleton, m, relset):
    """All relator vectors of degree m for the given relation ids."""
    relset = frozenset(relset)
    known = {"TC", "4T", "6T", "RI", "FI", "CC"}
    if not relset <= known:
        raise ValueError("unknown relation ids: %r" % (relset - known,))
    if skeleton == LONG:
        return _relators_long(m, relset)
    if skeleton[0] == "strands":
        return _relators_strands(skeleton[1], m, relset)
    raise ValueError("unknown skeleton %r" % (skeleton,))


# --------------------------------------------------------------------------
# Quotient spaces
# --------------------------------------------------------------------------

class QuotientSpace:
    """Per-degree quotient of the diagram span by a relation set.

    Two-term ±1 relators are folded into a signed union-find first; the
    remaining relators are echelonized over the surviving class
    representatives.  The quotient basis is the set of non-pivot classes.
    """

    def __init__(self, skeleton, m, relset):
        self.skeleton = skeleton
        self.m = m
        self.relset = frozenset(relset)
        diagrams = enumerate_diagrams(skeleton, m)
        self._index = {d: i for i, d in enumerate(diagrams)}
        self._diagrams = diagrams
        n = len(diagrams)
        parent = list(range(n))
        weight = [rat(1)] * n  # diagram = weight * rep(diagram)
        dead = [False] * n     # class known to be zero

        def find(i):
            if parent[i] == i:
                return i, rat(1)
            r, w = find(parent[i])
            parent[i], weight[i] = r, weight[i] * w
            return r, weight[i]

        relators = generate_relations(skeleton, m, relset)
        rest = []
        for v in relators:
            items = sorted(v.terms.items())
            if len(items) == 1:
                r, _ = find(self._index[items[0][0]])
                dead[r] = True
            elif (len(items) == 2 and abs(items[0][1]) == 1
                  and abs(items[1][1]) == 1):
                (d1, c1), (d2, c2) = items
                r1, w1 = find(self._index[d1])
                r2, w2 = find(self._index[d2])
                if r1 == r2:
                    if c1 * w1 + c2 * w2 != 0:
                        dead[r1] = True
                    continue
                # c1*w1*r1 + c2*w2*r2 = 0  =>  r1 = (-c2*w2/(c1*w1)) * r2
                if r1 < r2:
                    parent[r2] = r1
                    weight[r2] = -c1 * w1 / (c2 * w2)
                else:
                    parent[r1] = r2
                    weight[r1] = -c2 * w2 / (c1 * w1)
                if dead[max(r1, r2)]:
                    dead[min(r1, r2)] = True
            else:
                rest.append(v)
        # propagate deadness to roots once more
        for i in range(n):
            r, _ = find(i)
            if dead[i]:
                dead[r] = True

        self._find = find
        self._dead = dead
        self._ech = SparseEchelon()
        seen_rows = set()
        for v in rest:
            row = self._to_row(v)
            key = tuple(sorted(row.items()))
            if row and key not in seen_rows:
                seen_rows.add(key)
                self._ech.add(row)
        reps = sorted({find(i)[0] for i in range(n)
                       if not dead[find(i)[0]]})
        pivots = set(self._ech.pivots())
        self.basis = [self._diagrams[r] for r in reps if r not in pivots]
        self._basis_index = {d: i for i, d in enumerate(self.basis)}

    def _to_row(self, v):
        row = {}
        for d, c in v.terms.items():
            r, w = self._find(self._index[d])
            if self._dead[r]:
                continue
            cw = row.get(r, rat(0)) + c * w
            if cw:
                row[r] = cw
            else:
                row.pop(r, None)
        return row

    @property
    def dim(self):
        return len(self.basis)

    def project(self, v):
        """Coordinates of an ArrowVector in the quotient basis."""
        if (v.skeleton, v.m) != (self.skeleton, self.m):
            raise ValueError("degree/skeleton mismatch")
        row = self._ech.reduce(self._to_row(v))
        out = [rat(0)] * self.dim
        for r, c in row.items():
            d = self._diagrams[r]
            if d not in self._basis_index:
                raise AssertionError("reduced row touches a pivot class")
            out[self._basis_index[d]] = c
        return out

    def project_diagram(self, d):
        v = ArrowVector(self.skeleton, self.m)
        v.add_term(canonical(self.skeleton, d), rat(1))
        return self.project(v)


def quotient(skeleton, m, relset):
    return QuotientSpace(skeleton, m, relset)
