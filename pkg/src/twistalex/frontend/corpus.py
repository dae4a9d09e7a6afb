"""Built-in knot corpus with independent oracles."""

from __future__ import annotations

from dataclasses import dataclass
from importlib import resources

from ..grouptheory.abelian import PhiClass
from ..fibercheck.criteria import ManifoldInput
from ..laurent.matrix import PolyMatrix
from ..laurent.linalg import det_poly
from ..laurent.poly import LaurentPoly, T, normalize_unit
from .parser import PresentationFile, parse_presentation


@dataclass(frozen=True)
class CorpusEntry:
    label: str
    filename: str
    expected_delta: str
    fibered: bool
    genus: int
    closed: bool
    seifert: tuple[tuple[int, ...], ...] | None = None
    monodromy: tuple[tuple[int, int], tuple[int, int]] | None = None
    provenance: tuple[str, ...] = ()

    def load(self) -> PresentationFile:
        text = resources.files(__package__).joinpath("corpus", self.filename).read_text(encoding="utf-8")
        return parse_presentation(text)

    def manifold(self) -> ManifoldInput:
        pf = self.load()
        return ManifoldInput(pf.presentation, PhiClass(pf.phi), pf.norm, pf.closed, pf.label,
                             NORM_SOURCE if pf.norm is not None else None)

    def oracle(self) -> LaurentPoly:
        """det(V - t V^T) for exteriors, det(t I - M) for torus bundles."""
        if self.seifert is not None:
            return seifert_alexander(self.seifert)
        if self.monodromy is not None:
            return torus_bundle_charpoly(self.monodromy)
        raise ValueError(f"{self.label} has no oracle")


NORM_SOURCE = "0-surgery on a genus-1 knot: the norm of the generator of H^1 is max(2g - 2, 0) = 0"


def seifert_alexander(V) -> LaurentPoly:
    n = len(V)
    if n == 0:
        return LaurentPoly.const(1)
    t = T
    m = PolyMatrix.from_rows([[V[i][j] - t * V[j][i] for j in range(n)] for i in range(n)])
    return normalize_unit(det_poly(m))


def torus_bundle_charpoly(M) -> LaurentPoly:
    (a, b), (c, d) = M
    return normalize_unit((T - a) * (T - d) - b * c)


_TREFOIL_V = ((-1, 1), (0, -1))
_FIG8_V = ((1, 1), (0, -1))
_PRETZEL_V = ((1, -1), (-2, 1))

ENTRIES = (
    CorpusEntry("unknot", "unknot.pres", "1", True, 0, False, seifert=(),
                provenance=("pi_1 of the unknot exterior is Z",)),
    CorpusEntry("trefoil", "trefoil.pres", "t^2 - t + 1", True, 1, False, seifert=_TREFOIL_V,
                provenance=("torus knot T(2,3); Seifert matrix of the standard genus-1 surface",)),
    CorpusEntry("figure8", "figure8.pres", "t^2 - 3*t + 1", True, 1, False, seifert=_FIG8_V,
                provenance=("closure of the 3-braid s1 s2^-1 s1 s2^-1, Wirtinger plus Tietze",)),
    CorpusEntry("pretzel535", "pretzel535.pres", "t^2 - 3*t + 1", False, 1, False, seifert=_PRETZEL_V,
                provenance=("three-box pretzel diagram (5,-3,5), Wirtinger plus Tietze",
                            "genus-1 pretzel surface; non-fibered despite the monic Alexander polynomial")),
    CorpusEntry("trefoil_0surgery", "trefoil_0surgery.pres", "t^2 - t + 1", True, 1, True,
                monodromy=((1, 1), (-1, 0)),
                provenance=("torus bundle with trace-1 monodromy", NORM_SOURCE)),
    CorpusEntry("figure8_0surgery", "figure8_0surgery.pres", "t^2 - 3*t + 1", True, 1, True,
                monodromy=((2, 1), (1, 1)),
                provenance=("torus bundle with trace-3 monodromy", NORM_SOURCE)),
    CorpusEntry("pretzel535_0surgery", "pretzel535_0surgery.pres", "t^2 - 3*t + 1", False, 1, True,
                provenance=("not a torus bundle: the pretzel knot is not fibered", NORM_SOURCE)),
)

BY_LABEL = {e.label: e for e in ENTRIES}


def corpus_entry(label: str) -> CorpusEntry:
    try:
        return BY_LABEL[label]
    except KeyError:
        raise KeyError(f"unknown corpus entry {label!r}; known: {', '.join(BY_LABEL)}") from None
