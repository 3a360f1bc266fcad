"""Finite multiplicative lattices: z-elements, z-closure, spectra and a theorem checker."""

from .errors import ZlatError
from .lattice import FiniteLattice, LatticeHom, check_homomorphism, chain, validate_lattice
from .mlat import MlatDocument, build_structure, document_of, load_mlat, parse_mlat, serialize_mlat
from .quantale import (
    MultiplicativeLattice,
    MultTable,
    boolean_frame,
    build_fixture,
    chain_frame,
    frame_of,
    named_fixture,
    named_fixtures,
    validate_quantale,
    zn_ideal,
)
from .spectra import (
    classify_element,
    jacobson_radical,
    lattice_predicates,
    maximal_elements,
    minimal_primes_over,
    primes,
    radical,
)
from .ztheory import (
    is_z_element,
    lattice_z_predicates,
    maximal_cover,
    minimal_z_primes,
    z_classify,
    z_closure,
    z_elements,
    z_irreducible_decomposition,
    z_quotient,
)

__version__ = "0.1.0"
