"""Permutations and small permutation groups with fully enumerated element tables."""

from __future__ import annotations

from collections import deque
from itertools import permutations as _itperms
from math import factorial
from typing import Iterable, Sequence


class Perm:
    """A bijection of {0..m-1} given by its image list.

    Products compose left to right: ``(p * q)(x) = q(p(x))``, matching the
    right action used for words (``a b`` means apply a first).
    """

    __slots__ = ("images",)

    def __init__(self, images: Iterable[int]):
        images = tuple(images)
        if sorted(images) != list(range(len(images))):
            raise ValueError(f"not a permutation: {images}")
        object.__setattr__(self, "images", images)

    def __setattr__(self, name, value):
        raise AttributeError("Perm is immutable")

    @classmethod
    def identity(cls, m: int) -> Perm:
        return cls(range(m))

    @classmethod
    def from_cycles(cls, m: int, *cycles: Sequence[int]) -> Perm:
        img = list(range(m))
        for cyc in cycles:
            for a, b in zip(cyc, tuple(cyc[1:]) + (cyc[0],)):
                img[a] = b
        return cls(img)

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, x: int) -> int:
        return self.images[x]

    def __mul__(self, other: Perm) -> Perm:
        o = other.images
        return Perm(o[x] for x in self.images)

    def inverse(self) -> Perm:
        inv = [0] * len(self.images)
        for i, x in enumerate(self.images):
            inv[x] = i
        return Perm(inv)

    def __pow__(self, n: int) -> Perm:
        base = self if n >= 0 else self.inverse()
        out = Perm.identity(self.degree)
        for _ in range(abs(n)):
            out = out * base
        return out

    def is_identity(self) -> bool:
        return all(i == x for i, x in enumerate(self.images))

    def cycles(self) -> list[tuple[int, ...]]:
        seen, out = set(), []
        for i in range(len(self.images)):
            if i in seen:
                continue
            cyc = [i]
            seen.add(i)
            j = self.images[i]
            while j != i:
                cyc.append(j)
                seen.add(j)
                j = self.images[j]
            out.append(tuple(cyc))
        return out

    def order(self) -> int:
        from math import lcm
        out = 1
        for c in self.cycles():
            out = lcm(out, len(c))
        return out

    def __eq__(self, other):
        return isinstance(other, Perm) and self.images == other.images

    def __lt__(self, other):
        return self.images < other.images

    def __hash__(self):
        return hash(self.images)

    def __repr__(self):
        return f"Perm({list(self.images)})"

    def __str__(self):
        cyc = [c for c in self.cycles() if len(c) > 1]
        return "".join("(" + " ".join(map(str, c)) + ")" for c in cyc) or "()"


class FiniteGroup:
    """A permutation group with its full element table in canonical order.

    Elements are sorted by image tuple, so index 0 is always the identity.
    """

    def __init__(self, name: str, generators: Sequence[Perm], degree: int | None = None):
        gens = tuple(generators)
        if degree is None:
            degree = gens[0].degree if gens else 1
        if any(g.degree != degree for g in gens):
            raise ValueError("generators act on different point sets")
        self.name = name
        self.degree = degree
        self.generators = gens
        ident = Perm.identity(degree)
        seen = {ident}
        queue = deque([ident])
        while queue:
            x = queue.popleft()
            for g in gens:
                y = x * g
                if y not in seen:
                    seen.add(y)
                    queue.append(y)
        self.elements: tuple[Perm, ...] = tuple(sorted(seen))
        self.index = {g: i for i, g in enumerate(self.elements)}
        self._table = None
        self._inv = None

    @property
    def order(self) -> int:
        return len(self.elements)

    def __len__(self):
        return len(self.elements)

    def __repr__(self):
        return f"FiniteGroup({self.name}, order={self.order})"

    @property
    def table(self) -> list[list[int]]:
        """table[i][j] = index of elements[i] * elements[j]."""
        if self._table is None:
            idx = self.index
            els = self.elements
            self._table = [[idx[a * b] for b in els] for a in els]
        return self._table

    @property
    def inv(self) -> list[int]:
        if self._inv is None:
            self._inv = [self.index[g.inverse()] for g in self.elements]
        return self._inv

    def closure(self, idxs: Iterable[int]) -> set[int]:
        """Indices of the subgroup generated by the given element indices."""
        gens = [i for i in set(idxs) if i != 0]
        seen = {0}
        stack = [0]
        tab = self.table
        while stack:
            x = stack.pop()
            row = tab[x]
            for g in gens:
                y = row[g]
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
        return seen

    def conjugate_index(self, i: int, c: int) -> int:
        """Index of c^-1 * g_i * c."""
        tab = self.table
        return tab[tab[self.inv[c]][i]][c]

    def is_abelian(self) -> bool:
        tab = self.table
        n = self.order
        return all(tab[i][j] == tab[j][i] for i in range(n) for j in range(i + 1, n))


# -- catalog ---------------------------------------------------------------------

def trivial_group() -> FiniteGroup:
    return FiniteGroup("1", [], degree=1)


def cyclic_group(n: int) -> FiniteGroup:
    if n == 1:
        return trivial_group()
    return FiniteGroup(f"Z/{n}", [Perm.from_cycles(n, range(n))])


def dihedral_group(n: int) -> FiniteGroup:
    """Symmetries of the n-gon (order 2n); D2 is the Klein four-group on 4 points."""
    if n == 2:
        return FiniteGroup("D2", [Perm.from_cycles(4, (0, 1), (2, 3)), Perm.from_cycles(4, (0, 2), (1, 3))])
    rot = Perm.from_cycles(n, range(n))
    refl = Perm([(-i) % n for i in range(n)])
    return FiniteGroup(f"D{n}", [rot, refl])


def symmetric_group(n: int) -> FiniteGroup:
    if n == 1:
        return trivial_group()
    if n == 2:
        return FiniteGroup("S2", [Perm.from_cycles(2, (0, 1))])
    return FiniteGroup(f"S{n}", [Perm.from_cycles(n, range(n)), Perm.from_cycles(n, (0, 1))])


def alternating_group(n: int) -> FiniteGroup:
    if n < 3:
        return trivial_group()
    gens = [Perm.from_cycles(n, (0, 1, 2))]
    if n > 3:
        gens.append(Perm.from_cycles(n, range(n)) if n % 2 else Perm.from_cycles(n, range(1, n)))
    return FiniteGroup(f"A{n}", gens)


_FAMILY_RANK = {"1": 0, "Z": 1, "D": 2, "A": 3, "S": 4}
CATALOG_CEILING = 120


def group_catalog(max_order: int) -> list[FiniteGroup]:
    """Catalog groups of order <= max_order in a fixed canonical order.

    Contains the trivial group, Z/n, D_n (n >= 2), S_n (3 <= n <= 5), A4
    and A5.  Sorted by (order, family, n); isomorphic entries such as D3
    and S3 are both kept under their own names.
    """
    if max_order < 1:
        raise ValueError("max_order must be at least 1")
    specs = [("1", 0, 1)]
    specs += [("Z", n, n) for n in range(2, max_order + 1)]
    specs += [("D", n, 2 * n) for n in range(2, max_order // 2 + 1)]
    specs += [("S", n, factorial(n)) for n in range(3, 6) if factorial(n) <= max_order]
    specs += [("A", n, factorial(n) // 2) for n in (4, 5) if factorial(n) // 2 <= max_order]
    specs.sort(key=lambda s: (s[2], _FAMILY_RANK[s[0]], s[1]))
    build = {"1": lambda n: trivial_group(), "Z": cyclic_group, "D": dihedral_group,
             "S": symmetric_group, "A": alternating_group}
    return [build[f](n) for f, n, _ in specs]


def group_by_name(name: str) -> FiniteGroup:
    """Look up "1", "Z/n", "Dn", "Sn" or "An"."""
    name = name.strip()
    try:
        if name in ("1", "trivial"):
            return trivial_group()
        if name.startswith("Z/"):
            return cyclic_group(int(name[2:]))
        if name[0] in "DSA" and name[1:].isdigit():
            n = int(name[1:])
            return {"D": dihedral_group, "S": symmetric_group, "A": alternating_group}[name[0]](n)
    except (ValueError, IndexError):
        pass
    raise ValueError(f"unknown group name {name!r}")


def group_from_generators(name: str, gens: Sequence[Sequence[int]]) -> FiniteGroup:
    """A user-supplied permutation group, generators in one-line notation."""
    return FiniteGroup(name, [Perm(g) for g in gens])


def all_permutations(m: int) -> list[Perm]:
    return [Perm(p) for p in _itperms(range(m))]
