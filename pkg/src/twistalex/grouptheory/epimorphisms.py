"""Epimorphisms onto finite groups, kernels, divisibility and separability witnesses."""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Iterable, Sequence

from .abelian import PhiClass
from .perms import FiniteGroup, Perm, group_catalog
from .words import Presentation, Word


def evaluate_word(w: Word, images: Sequence[Perm]) -> Perm:
    """Product of the generator images along w (left to right)."""
    if not images:
        if w.letters:
            raise IndexError("word uses generators but no images were given")
        return Perm.identity(1)
    out = Perm.identity(images[0].degree)
    invs: dict[int, Perm] = {}
    for g, s in w.letters:
        if not 0 <= g < len(images):
            raise IndexError(f"generator index {g} has no image")
        if s > 0:
            out = out * images[g]
        else:
            if g not in invs:
                invs[g] = images[g].inverse()
            out = out * invs[g]
    return out


def _eval_index(G: FiniteGroup, letters, img: Sequence[int]) -> int:
    tab, inv = G.table, G.inv
    cur = 0
    for g, s in letters:
        x = img[g]
        cur = tab[cur][x if s > 0 else inv[x]]
    return cur


@dataclass(frozen=True)
class Epimorphism:
    """Generator images in the canonical element table of ``target``."""

    target: FiniteGroup
    image_indices: tuple[int, ...]

    @property
    def images(self) -> tuple[Perm, ...]:
        return tuple(self.target.elements[i] for i in self.image_indices)

    def __call__(self, w: Word) -> Perm:
        return self.target.elements[self.index_of(w)]

    def index_of(self, w: Word) -> int:
        return _eval_index(self.target, w.letters, self.image_indices)

    def describe(self) -> list[list[int]]:
        """Images in one-line notation."""
        return [list(p.images) for p in self.images]

    def __hash__(self):
        return hash((self.target.name, self.image_indices))

    def __eq__(self, other):
        return (isinstance(other, Epimorphism) and self.target.name == other.target.name
                and self.image_indices == other.image_indices)


def validate_epimorphism(p: Presentation, G: FiniteGroup, images: Sequence[Perm]) -> bool:
    """Independent check: every relator maps to 1 and the images generate G."""
    if len(images) != p.k:
        return False
    for r in p.relators:
        if not evaluate_word(r, images).is_identity():
            return False
    ident = Perm.identity(G.degree)
    seen = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for x in frontier:
            for g in images:
                for y in (x * g, x * g.inverse()):
                    if y not in seen:
                        seen.add(y)
                        nxt.append(y)
        frontier = nxt
    return len(seen) == G.order


def _schedule(p: Presentation) -> list[list[tuple]]:
    """Relators grouped by the depth at which all their generators are assigned."""
    by_depth: list[list[tuple]] = [[] for _ in range(max(p.k, 1))]
    for r in p.relators:
        if not r.letters:
            continue
        by_depth[max(r.generators_used())].append(r.letters)
    return by_depth


def _class_minima(G: FiniteGroup) -> list[int]:
    n = G.order
    return [min(G.conjugate_index(i, c) for c in range(n)) for i in range(n)]


def enumerate_epimorphisms(p: Presentation, G: FiniteGroup, dedupe_conjugacy: bool = False,
                           prune: bool = True) -> list[Epimorphism]:
    """All surjections pi -> G, lexicographic in element indices.

    Backtracks over generator images and abandons a branch as soon as a
    relator whose generators are all assigned fails.  With
    ``dedupe_conjugacy`` one tuple per orbit of simultaneous conjugation
    is kept (the lexicographically smallest tuple in the orbit).
    ``prune=False`` checks relators only on complete tuples.
    """
    k, n = p.k, G.order
    if k == 0:
        return [Epimorphism(G, ())] if n == 1 else []
    sched = _schedule(p) if prune else [[] for _ in range(k - 1)] + [[r.letters for r in p.relators if r.letters]]
    first_choices = range(n)
    minima = None
    if dedupe_conjugacy:
        minima = _class_minima(G)
        first_choices = [i for i in range(n) if minima[i] == i]
    img = [0] * k
    out: list[Epimorphism] = []
    tab, inv = G.table, G.inv

    def ok(depth):
        for letters in sched[depth]:
            cur = 0
            for g, s in letters:
                x = img[g]
                cur = tab[cur][x if s > 0 else inv[x]]
            if cur:
                return False
        return True

    def rec(depth):
        if depth == k:
            if len(G.closure(img)) == n:
                t = tuple(img)
                if dedupe_conjugacy and not _is_orbit_min(G, t):
                    return
                out.append(Epimorphism(G, t))
            return
        choices = first_choices if depth == 0 else range(n)
        for x in choices:
            img[depth] = x
            if ok(depth):
                rec(depth + 1)

    rec(0)
    return out


def _is_orbit_min(G: FiniteGroup, t: tuple[int, ...]) -> bool:
    for c in range(1, G.order):
        if G.conjugate_index(t[0], c) != t[0]:
            continue
        conj = tuple(G.conjugate_index(x, c) for x in t)
        if conj < t:
            return False
    return True


def brute_force_epimorphisms(p: Presentation, G: FiniteGroup) -> list[tuple[int, ...]]:
    """Reference enumeration over all |G|^k tuples using Perm arithmetic."""
    from itertools import product
    out = []
    for t in product(range(G.order), repeat=p.k):
        if validate_epimorphism(p, G, [G.elements[i] for i in t]):
            out.append(t)
    return out


def kernel_schreier_generators(p: Presentation, alpha: Epimorphism, root: int = 0) -> list[Word]:
    """Schreier generators of ker(alpha) from the coset graph on the elements of G.

    Vertices are the elements of G, edges g -> g*alpha(x_i).  A breadth-first
    spanning tree from ``root`` supplies paths T(g); each non-tree edge
    (g, i) contributes T(g) x_i T(g alpha(x_i))^-1.
    """
    G = alpha.target
    tab = G.table
    img = alpha.image_indices
    tree: dict[int, Word] = {root: Word()}
    tree_edges = set()
    queue = [root]
    head = 0
    while head < len(queue):
        v = queue[head]
        head += 1
        for i in range(p.k):
            w = tab[v][img[i]]
            if w not in tree:
                tree[w] = tree[v] * Word.gen(i)
                tree_edges.add((v, i))
                queue.append(w)
    if len(tree) != G.order:
        raise ValueError("images do not generate the target group")
    gens = []
    for v in sorted(tree):
        for i in range(p.k):
            if (v, i) in tree_edges:
                continue
            w = tab[v][img[i]]
            gens.append(tree[v] * Word.gen(i) * tree[w].inverse())
    return gens


def divisibility_of_restriction(phi: PhiClass, kernel_gens: Iterable[Word]) -> int:
    """gcd of |phi(w)| over the given kernel generators (0 if all vanish)."""
    g = 0
    for w in kernel_gens:
        g = gcd(g, phi(w))
    return g


@dataclass(frozen=True)
class SeparabilityWitness:
    epimorphism: Epimorphism
    image_of_g: Perm
    subgroup_order: int


@dataclass(frozen=True)
class NoneUpToBound:
    max_order: int
    groups_checked: int
    epimorphisms_checked: int


def separability_witness(p: Presentation, subgroup_gens: Sequence[Word], g: Word,
                         catalog: Sequence[FiniteGroup] | None = None, max_order: int = 24):
    """First finite quotient alpha (catalog order, then epimorphism order) with alpha(g) outside alpha(A)."""
    groups = catalog if catalog is not None else group_catalog(max_order)
    n_groups = n_epis = 0
    for G in groups:
        if G.order > max_order:
            continue
        n_groups += 1
        for alpha in enumerate_epimorphisms(p, G):
            n_epis += 1
            sub = G.closure(alpha.index_of(a) for a in subgroup_gens)
            x = alpha.index_of(g)
            if x not in sub:
                return SeparabilityWitness(alpha, G.elements[x], len(sub))
    return NoneUpToBound(max_order, n_groups, n_epis)
