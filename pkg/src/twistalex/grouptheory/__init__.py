"""Words, presentations, permutation groups and finite quotients."""

from .abelian import NotAHomomorphism, PhiClass, abelianization, infinite_cyclic_phi, phi_from_exponents
from .epimorphisms import (
    Epimorphism, NoneUpToBound, SeparabilityWitness, brute_force_epimorphisms,
    divisibility_of_restriction, enumerate_epimorphisms, evaluate_word, kernel_schreier_generators,
    separability_witness, validate_epimorphism,
)
from .perms import FiniteGroup, Perm, group_by_name, group_catalog, group_from_generators
from .words import Presentation, Word, free_reduce
