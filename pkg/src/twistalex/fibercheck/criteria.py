"""Per-epimorphism evaluation of the fibering criteria."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from ..grouptheory.abelian import PhiClass, phi_from_exponents
from ..grouptheory.epimorphisms import (
    Epimorphism, divisibility_of_restriction, kernel_schreier_generators,
)
from ..grouptheory.words import Presentation
from ..laurent.poly import is_monic, span_degree
from ..twisted.complex import build_complex
from ..twisted.delta import DeltaBundle, delta_bundle

NONZERO_OK = "NONZERO_OK"
ZERO_OBSTRUCTION = "ZERO_OBSTRUCTION"
NONMONIC = "NONMONIC"
DEGREE_MISMATCH = "DEGREE_MISMATCH"
INAPPLICABLE = "INAPPLICABLE"
STATUSES = (NONZERO_OK, ZERO_OBSTRUCTION, NONMONIC, DEGREE_MISMATCH, INAPPLICABLE)


@dataclass(frozen=True)
class ManifoldInput:
    """A presentation of pi_1(N) together with phi and what is known about N."""

    presentation: Presentation
    phi: PhiClass
    thurston_norm: int | None = None
    closed: bool = False
    label: str = "unnamed"
    norm_source: str | None = None

    def __post_init__(self):
        phi_from_exponents(self.presentation, self.phi.exponents)
        if self.thurston_norm is not None and self.thurston_norm < 0:
            raise ValueError("Thurston norm must be nonnegative")

    def degree_check_possible(self) -> bool:
        return self.closed and self.thurston_norm is not None and self.phi.primitive

    def scaled(self, n: int) -> ManifoldInput:
        """Same manifold with n*phi (the norm scales linearly)."""
        norm = None if self.thurston_norm is None else n * self.thurston_norm
        return ManifoldInput(self.presentation, self.phi.scaled(n), norm, self.closed,
                             f"{self.label}*{n}", self.norm_source)


class CriterionError(RuntimeError):
    """A computation failed for a specific epimorphism."""

    def __init__(self, alpha: Epimorphism, cause: BaseException):
        super().__init__(f"{alpha.target.name} {alpha.describe()}: {cause!r}")
        self.alpha = alpha
        self.cause = cause


@dataclass(frozen=True)
class CriterionResult:
    alpha: Epimorphism
    bundle: DeltaBundle
    div_phi_G: int
    expected_degree: int | None
    actual_degree: int | None
    monic: bool | None
    status: str
    monic_with_content: bool | None = None
    notes: tuple[str, ...] = field(default=())

    @property
    def failed(self) -> bool:
        return self.status in (ZERO_OBSTRUCTION, NONMONIC, DEGREE_MISMATCH)


def expected_degree(group_order: int, norm: int, div: int) -> int:
    """|G| * ||phi||_T + 2 * div."""
    if group_order < 1 or norm < 0 or div < 0:
        raise ValueError("inputs must be nonnegative with |G| >= 1")
    if div == 0:
        raise ValueError("div phi_G = 0: phi vanishes on ker(alpha), the degree formula does not apply")
    return group_order * norm + 2 * div


def check_epi(inp: ManifoldInput, alpha: Epimorphism, content_monic: bool = False) -> CriterionResult:
    """Classify one epimorphism.

    By default monicness is judged on the primitive part. With content_monic the
    integer content counts too, when it is known.
    """
    try:
        return _check(inp, alpha, content_monic)
    except CriterionError:
        raise
    except Exception as exc:  # keep the epimorphism for reproducibility
        raise CriterionError(alpha, exc) from exc


def _check(inp: ManifoldInput, alpha: Epimorphism, content_monic: bool) -> CriterionResult:
    p, phi = inp.presentation, inp.phi
    bundle = delta_bundle(build_complex(p, alpha, phi))
    div = divisibility_of_restriction(phi, kernel_schreier_generators(p, alpha))
    notes = []
    exp = None
    if inp.degree_check_possible():
        if div >= 1:
            exp = expected_degree(alpha.target.order, inp.thurston_norm, div)
        else:
            notes.append("div phi_G = 0")
    elif inp.closed and inp.thurston_norm is None:
        notes.append("no norm metadata")
    elif not inp.closed:
        notes.append("manifold has boundary: degree formula not checked")
    if not phi.primitive:
        notes.append("phi not primitive")
    if phi.is_zero():
        notes.append("phi = 0")
    if bundle.delta1_content is None:
        notes.append("integer content unknown")

    if not bundle.nonzero:
        return CriterionResult(alpha, bundle, div, exp, None, None, ZERO_OBSTRUCTION, None, tuple(notes))

    actual = span_degree(bundle.delta1)
    monic = is_monic(bundle.delta1)
    mwc = None if bundle.delta1_content is None else (monic and bundle.delta1_content == 1)
    if bundle.delta1_content not in (None, 1):
        notes.append(f"integer content {bundle.delta1_content}")
    if phi.is_zero():
        status = INAPPLICABLE
    elif not monic or (content_monic and mwc is False):
        status = NONMONIC
    elif exp is not None and actual != exp:
        status = DEGREE_MISMATCH
    else:
        status = NONZERO_OK
    return CriterionResult(alpha, bundle, div, exp, actual, monic, status, mwc, tuple(notes))


def norm_estimate(results: Sequence[CriterionResult]) -> Fraction:
    """Heuristic max over alpha of (span - 2 div) / |G|; for display only."""
    vals = [Fraction(r.actual_degree - 2 * r.div_phi_G, r.alpha.target.order)
            for r in results if r.bundle.nonzero and r.actual_degree is not None]
    if not vals:
        raise ValueError("norm_estimate needs at least one nonzero result")
    return max(vals)
