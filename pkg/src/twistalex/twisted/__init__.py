"""Fox calculus, the twisted representation and the orders Delta_0, Delta_1."""

from .complex import TwistedComplex, TwistRep, build_complex, sigma_eval
from .delta import CONVENTION, DeltaBundle, NoValidColumn, delta0, delta1, delta_bundle, reparametrize, wada_torsion
from .fox import GroupRingElem, fox_derivative, fox_jacobian
