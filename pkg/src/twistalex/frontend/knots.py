"""Knot-group constructors: closed braids, Wirtinger tracing of simple diagrams, 0-surgery."""

from __future__ import annotations

from dataclasses import dataclass, replace
from typing import Sequence

from ..grouptheory.abelian import PhiClass, infinite_cyclic_phi
from ..grouptheory.epimorphisms import enumerate_epimorphisms
from ..grouptheory.perms import group_catalog
from ..grouptheory.words import Presentation, Word
from .parser import PresentationFile


class NotAKnot(ValueError):
    """The closure has more than one component."""


class LongitudeInvalid(ValueError):
    pass


# --- closed braids ---------------------------------------------------------

def _artin(images: list[Word], gen: int) -> list[Word]:
    """Post-compose the automorphism ``images`` with sigma_i^{+-1} (i = |gen|, 1-based)."""
    i = abs(gen) - 1
    xi, xj = Word.gen(i), Word.gen(i + 1)
    if gen > 0:
        sub_i, sub_j = xi * xj * xi.inverse(), xi
    else:
        sub_i, sub_j = xj, xj.inverse() * xi * xj
    subs = [Word.gen(m) for m in range(len(images))]
    subs[i], subs[i + 1] = sub_i, sub_j
    return [w.substitute(subs) for w in images]


def braid_permutation(word: Sequence[int], n: int) -> list[int]:
    """Strand permutation of the braid (0-based, top position -> bottom position)."""
    pos = list(range(n))
    for g in word:
        i = abs(g) - 1
        pos = [i + 1 if p == i else i if p == i + 1 else p for p in pos]
    return pos


def _conjugate_form(w: Word) -> tuple[Word, int]:
    """Split a reduced word u x_j u^-1 into (u, j)."""
    L = w.letters
    h = len(L) // 2
    if len(L) % 2 == 0 or L[h][1] != 1 or Word.of(L[:h]).inverse().letters != L[h + 1:]:
        raise ValueError("word is not a conjugate of a generator")
    return Word.of(L[:h]), L[h][0]


def braid_to_presentation(word: Sequence[int], n: int, label: str = "braid") -> PresentationFile:
    return braid_data(word, n, label)[0]


def braid_data(word: Sequence[int], n: int, label: str = "braid") -> tuple[PresentationFile, int]:
    """Group of the closure of a braid word (sigma_i written as i, its inverse as -i).

    Relators x_i^-1 beta(x_i) for i < n (the last one is redundant) and a
    longitude built from the conjugators around the single strand cycle,
    corrected by a meridian power so that phi vanishes on it.  Also
    returns that power (the blackboard framing of the traversal word).
    """
    if n < 1 or any(g == 0 or abs(g) >= n for g in word):
        raise ValueError(f"braid letters must be nonzero with |i| < {n}")
    perm = braid_permutation(word, n)
    seen, p = {0}, perm[0]
    while p != 0:
        seen.add(p)
        p = perm[p]
    if len(seen) != n:
        raise NotAKnot(f"closure has {_count_cycles(perm)} components")
    images = [Word.gen(i) for i in range(n)]
    for g in word:
        images = _artin(images, g)
    forms = [_conjugate_form(w) for w in images]
    rels = tuple(Word.gen(i).inverse() * images[i] for i in range(n - 1))
    names = tuple(f"x{i + 1}" for i in range(n))
    pres = Presentation(names, rels)
    lam, i = Word(), 0
    for _ in range(n):
        u, j = forms[i]
        lam = lam * u
        i = j
    phi = PhiClass((1,) * n)
    framing = phi(lam)
    lam = lam * Word.gen(0, -framing)
    return PresentationFile(pres, phi.exponents, None, lam, label, False), framing


def _count_cycles(perm: Sequence[int]) -> int:
    seen, c = set(), 0
    for s in range(len(perm)):
        if s in seen:
            continue
        c += 1
        while s not in seen:
            seen.add(s)
            s = perm[s]
    return c


def writhe(word: Sequence[int]) -> int:
    return sum(1 if g > 0 else -1 for g in word)


# --- Wirtinger tracing -----------------------------------------------------

@dataclass(frozen=True)
class Diagram:
    """Crossings sigma_i^{+-1} stacked top to bottom on ``width`` vertical positions.

    With caps given, top and bottom ends are joined by non-crossing arcs
    (pairs of 0-based positions); without them, bottom position p is joined
    to top position p (braid closure).
    """

    width: int
    crossings: tuple[int, ...]
    top_caps: tuple[tuple[int, int], ...] | None = None
    bottom_caps: tuple[tuple[int, int], ...] | None = None


def pretzel_diagram(*twists: int) -> Diagram:
    """Standard pretzel picture: box i holds twists[i] half twists on positions 2i, 2i+1."""
    n = len(twists)
    crossings = []
    for i, p in enumerate(twists):
        crossings += [(2 * i + 1) * (1 if p > 0 else -1)] * abs(p)
    caps = tuple((2 * i + 1, 2 * i + 2) for i in range(n - 1)) + ((2 * n - 1, 0),)
    return Diagram(2 * n, tuple(crossings), caps, caps)


def _walk(diag: Diagram):
    """Passages of the component through (level 0, position 0): (crossing, is_over, direction)."""
    L = len(diag.crossings)
    top = bottom = None
    if diag.top_caps is not None:
        top, bottom = {}, {}
        for a, b in diag.top_caps:
            top[a], top[b] = b, a
        for a, b in diag.bottom_caps:
            bottom[a], bottom[b] = b, a
    start = (0, 0, 1)  # (level, position, +1 down / -1 up)
    level, pos, way = start
    passages = []
    for _ in range(4 * (L + 1) * diag.width + 4):
        if way > 0 and level == L:
            if bottom is None:
                level = 0
            else:
                pos, way = bottom[pos], -1
        elif way < 0 and level == 0:
            pos, way = top[pos], 1
        else:
            cr = level if way > 0 else level - 1
            g = diag.crossings[cr]
            i = abs(g) - 1
            if pos in (i, i + 1):
                # the strand joining top i to bottom i+1 is the over strand iff g > 0
                diagonal = (pos == i) if way > 0 else (pos == i + 1)
                dx = 1 if pos == i else -1
                passages.append((cr, diagonal == (g > 0), (dx, -way)))
                pos = 2 * i + 1 - pos
            level += way
        if (level, pos, way) == start:
            break
    else:
        raise RuntimeError("diagram traversal did not close up")
    if len(passages) != 2 * L:
        raise NotAKnot("diagram has more than one component")
    return passages


def wirtinger(diag: Diagram, base: int = 0) -> tuple[Presentation, Word]:
    """Wirtinger presentation and a phi-zero longitude of a one-component diagram.

    Arcs are numbered along the traversal, starting after the last
    undercrossing; generator x_a is the meridian of arc a.  Passing under
    arc o with sign e turns a into c = o^e a o^-e.  The longitude is the
    product of o_k^-e_k along one traversal starting at arc ``base``,
    corrected by a power of x_base; it commutes with x_base.
    """
    passages = _walk(diag)
    unders = [i for i, p in enumerate(passages) if not p[1]]
    if not unders:
        raise ValueError("diagram without undercrossings")
    r = unders[-1] + 1
    passages = passages[r:] + passages[:r]
    arc_of = []
    arc = 0
    for cr, over, _ in passages:
        arc_of.append(arc)
        if not over:
            arc += 1
    n_arcs = arc
    over_arc = {}
    over_dir = {}
    for idx, (cr, over, d) in enumerate(passages):
        if over:
            over_arc[cr] = arc_of[idx]
            over_dir[cr] = d
    rels, steps = [], []
    for idx, (cr, over, d) in enumerate(passages):
        if over:
            continue
        o = over_arc[cr]
        od = over_dir[cr]
        e = 1 if od[0] * d[1] - od[1] * d[0] > 0 else -1
        a = arc_of[idx]
        c = (a + 1) % n_arcs
        xo = Word.gen(o, e)
        rels.append(Word.gen(c).inverse() * xo * Word.gen(a) * xo.inverse())
        steps.append(Word.gen(o, -e))
    if not 0 <= base < n_arcs:
        raise ValueError(f"base arc must lie in 0..{n_arcs - 1}")
    lam = Word()
    for w in steps[base:] + steps[:base]:
        lam = lam * w
    names = tuple(f"x{i + 1}" for i in range(n_arcs))
    lam = lam * Word.gen(base, -sum(s for _, s in lam.letters))
    return Presentation(names, tuple(rels[:-1])), lam


# --- Tietze moves ----------------------------------------------------------

def _solve_for(r: Word, g: int) -> Word | None:
    """If g occurs exactly once in r, the word equal to x_g in the relation r = 1."""
    occ = [i for i, (h, _) in enumerate(r.letters) if h == g]
    if len(occ) != 1:
        return None
    i = occ[0]
    before, after = Word.of(r.letters[:i]), Word.of(r.letters[i + 1:])
    # before x^s after = 1  =>  x^s = before^-1 after^-1
    w = before.inverse() * after.inverse()
    return w if r.letters[i][1] > 0 else w.inverse()


def simplify(p: Presentation, extra: Sequence[Word] = (), keep: Sequence[int] = (0,)):
    """Eliminate generators that occur once in some relator.

    ``extra`` words (a longitude, say) are rewritten alongside.  Generators
    in ``keep`` are never eliminated.  Returns the new presentation, the
    rewritten extra words and the indices of surviving generators.
    """
    k = p.k
    alive = list(range(k))
    rels = [r.cyclically_reduced() for r in p.relators]
    extra = list(extra)
    keep = set(keep)
    while True:
        best = None
        for ri, r in enumerate(rels):
            for g in sorted(r.generators_used()):
                if g in keep:
                    continue
                w = _solve_for(r, g)
                if w is not None and (best is None or len(r) < best[0]):
                    best = (len(r), ri, g, w)
        if best is None:
            break
        _, ri, g, w = best
        subs = [Word.gen(i) for i in range(k)]
        subs[g] = w
        rels = [x.substitute(subs).cyclically_reduced() for j, x in enumerate(rels) if j != ri]
        rels = [x for x in rels if not x.is_identity()]
        extra = [x.substitute(subs) for x in extra]
        alive.remove(g)
    # renumber
    new_index = {g: i for i, g in enumerate(alive)}
    subs = [Word.gen(new_index[i]) if i in new_index else Word() for i in range(k)]
    seen, out = set(), []
    for r in rels:
        r = r.substitute(subs)
        key = r.letters
        if key not in seen:
            seen.add(key)
            out.append(r)
    names = tuple(p.generators[g] for g in alive)
    return Presentation(names, tuple(out)), [x.substitute(subs) for x in extra], alive


def knot_presentation(diag: Diagram, label: str = "knot") -> PresentationFile:
    """Smallest simplified Wirtinger presentation over all base arcs.

    The base arc is kept as the first generator, so the stored longitude
    commutes with generator 0.  Ties are broken by total word length, then
    by base index.
    """
    best = None
    base = 0
    while True:
        try:
            p, lam = wirtinger(diag, base)
        except ValueError:
            break
        q, (lam2,), alive = simplify(p, [lam], keep=(base,))
        key = (q.k, sum(len(r) for r in q.relators) + len(lam2), base)
        if best is None or key < best[0]:
            best = (key, q, lam2, alive)
        base += 1
    (_, _, base), q, lam2, alive = best
    b = alive.index(base)
    order = [b] + [i for i in range(q.k) if i != b]
    pos = {old: new for new, old in enumerate(order)}
    subs = [Word.gen(pos[i]) for i in range(q.k)]
    names = tuple(f"x{i + 1}" for i in range(q.k))
    pres = Presentation(names, tuple(r.substitute(subs) for r in q.relators))
    return PresentationFile(pres, (1,) * q.k, None, lam2.substitute(subs), label, False)


def rename_generators(p: Presentation, names: Sequence[str]) -> Presentation:
    return Presentation(tuple(names), p.relators)


# --- 0-surgery -------------------------------------------------------------

def check_longitude(p: Presentation, phi: PhiClass, longitude: Word, meridian: int = 0,
                    check_order: int = 12) -> int:
    """Validate phi(longitude) = 0 and [longitude, meridian] = 1 in every catalog quotient.

    Returns the number of epimorphisms checked.
    """
    v = phi(longitude)
    if v:
        raise LongitudeInvalid(f"phi(longitude) = {v}, expected 0")
    comm = longitude * Word.gen(meridian) * longitude.inverse() * Word.gen(meridian).inverse()
    n = 0
    for G in group_catalog(check_order):
        for alpha in enumerate_epimorphisms(p, G):
            n += 1
            if alpha.index_of(comm) != 0:
                raise LongitudeInvalid(
                    f"longitude does not commute with the meridian in {G.name} under {alpha.describe()}")
    return n


def zero_surgery(pf: PresentationFile, longitude: Word | None = None, meridian: int = 0,
                 check_order: int = 12, label: str | None = None) -> PresentationFile:
    """Closed presentation obtained by adding the longitude as a relator."""
    lam = longitude if longitude is not None else pf.longitude
    if lam is None:
        raise LongitudeInvalid("no longitude given")
    p = pf.presentation
    phi = PhiClass(pf.phi) if pf.phi is not None else infinite_cyclic_phi(p)
    check_longitude(p, phi, lam, meridian, check_order)
    closed = Presentation(p.generators, p.relators + (lam,))
    return replace(pf, presentation=closed, phi=phi.exponents, longitude=None, closed=True,
                   label=label or f"{pf.label}_0surgery")
