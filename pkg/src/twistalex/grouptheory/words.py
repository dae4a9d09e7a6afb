"""Free-group words and finite presentations."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

Letter = tuple[int, int]  # (generator index, +1 or -1)


def free_reduce(letters: Iterable[Letter]) -> tuple[Letter, ...]:
    """Cancel adjacent x x^-1 pairs until none remain."""
    out: list[Letter] = []
    for g, s in letters:
        if s not in (1, -1):
            raise ValueError(f"letter sign must be +1 or -1, got {s}")
        if out and out[-1][0] == g and out[-1][1] == -s:
            out.pop()
        else:
            out.append((g, s))
    return tuple(out)


@dataclass(frozen=True)
class Word:
    """A freely reduced word; construct through :meth:`Word.of` to reduce."""

    letters: tuple[Letter, ...] = ()

    @classmethod
    def of(cls, letters: Iterable[Letter]) -> Word:
        return cls(free_reduce(letters))

    @classmethod
    def gen(cls, i: int, power: int = 1) -> Word:
        s = 1 if power > 0 else -1
        return cls(((i, s),) * abs(power))

    @classmethod
    def from_exponents(cls, pairs: Iterable[tuple[int, int]]) -> Word:
        """Build from (generator, power) pairs, e.g. [(0, 3), (1, -1)] = a^3 b^-1."""
        letters = []
        for g, n in pairs:
            s = 1 if n > 0 else -1
            letters.extend([(g, s)] * abs(n))
        return cls.of(letters)

    def __mul__(self, other: Word) -> Word:
        return Word.of(self.letters + other.letters)

    def inverse(self) -> Word:
        return Word(tuple((g, -s) for g, s in reversed(self.letters)))

    def __pow__(self, n: int) -> Word:
        base = self if n >= 0 else self.inverse()
        return Word.of(base.letters * abs(n))

    def __len__(self):
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def is_identity(self) -> bool:
        return not self.letters

    def generators_used(self) -> set[int]:
        return {g for g, _ in self.letters}

    def exponent_sums(self, k: int) -> list[int]:
        out = [0] * k
        for g, s in self.letters:
            out[g] += s
        return out

    def conjugate(self, by: Word) -> Word:
        """by * self * by^-1"""
        return by * self * by.inverse()

    def substitute(self, images: Sequence[Word]) -> Word:
        """Image under the endomorphism x_i -> images[i]."""
        out = []
        for g, s in self.letters:
            w = images[g] if s > 0 else images[g].inverse()
            out.extend(w.letters)
        return Word.of(out)

    def cyclically_reduced(self) -> Word:
        L = list(self.letters)
        while len(L) >= 2 and L[0][0] == L[-1][0] and L[0][1] == -L[-1][1]:
            L = L[1:-1]
        return Word(tuple(L))

    def format(self, names: Sequence[str]) -> str:
        """Tokens ``name`` / ``name^-1`` separated by spaces (empty word -> "1")."""
        if not self.letters:
            return "1"
        return " ".join(names[g] if s > 0 else f"{names[g]}^-1" for g, s in self.letters)


@dataclass(frozen=True)
class Presentation:
    """<x_1..x_k | r_1..r_l>; relators are stored freely reduced."""

    generators: tuple[str, ...]
    relators: tuple[Word, ...] = ()

    def __post_init__(self):
        gens = tuple(self.generators)
        if len(set(gens)) != len(gens):
            raise ValueError("generator names must be distinct")
        rels = tuple(Word.of(r.letters if isinstance(r, Word) else r) for r in self.relators)
        for r in rels:
            for g, _ in r.letters:
                if not 0 <= g < len(gens):
                    raise ValueError(f"relator uses generator index {g} outside 0..{len(gens) - 1}")
        object.__setattr__(self, "generators", gens)
        object.__setattr__(self, "relators", rels)

    @property
    def k(self) -> int:
        return len(self.generators)

    @property
    def l(self) -> int:
        return len(self.relators)

    def index(self, name: str) -> int:
        return self.generators.index(name)

    def word(self, text: str) -> Word:
        """Parse a space-separated word such as ``"a b a^-1"``."""
        letters = []
        for tok in text.split():
            name, _, pw = tok.partition("^")
            n = int(pw) if pw else 1
            letters.extend([(self.index(name), 1 if n > 0 else -1)] * abs(n))
        return Word.of(letters)

    def exponent_matrix(self) -> list[list[int]]:
        """l x k matrix of relator exponent sums."""
        return [r.exponent_sums(self.k) for r in self.relators]

    def with_relators(self, relators: Iterable[Word]) -> Presentation:
        return Presentation(self.generators, tuple(relators))

    def format_relators(self) -> list[str]:
        return [r.format(self.generators) for r in self.relators]

    def __str__(self):
        return f"<{', '.join(self.generators)} | {', '.join(self.format_relators())}>"
