"""Mesoprimary decomposition of binomial ideals and monoid congruences."""
from __future__ import annotations

__version__ = "0.1.0"

from .ring import AmbientRing, Binomial, BinomialIdeal, FacePrime  # noqa: E402
from .lattice import Lattice, PartialCharacter  # noqa: E402
from .mesoprime import Mesoprime, extract_character, mesoprime_ideal  # noqa: E402
from .congruence import Congruence, common_refinement, congruence_ideal  # noqa: E402
from .parse import parse, parse_ideal  # noqa: E402
from .witness import (associated_objects, enumerate_witnesses, is_key_witness,  # noqa: E402
                      is_witness, testimony)
from .components import (coprincipal_component, mesoprimary_component,  # noqa: E402
                         order_ideal)
from .decompose import (Decomposition, cellular_decomposition,  # noqa: E402
                        characteristic_decomposition, congruence_decomposition,
                        coprincipal_decomposition, decompose, ideal_taxonomy, maximalize,
                        mesoprimary_decomposition, primary_bundles)
from .verify import GenericIdeal, certify, grid_oracle, intersect  # noqa: E402

__all__ = [
    "AmbientRing", "Binomial", "BinomialIdeal", "FacePrime", "Lattice", "PartialCharacter",
    "Mesoprime", "extract_character", "mesoprime_ideal", "Congruence", "common_refinement",
    "congruence_ideal", "parse", "parse_ideal", "associated_objects", "enumerate_witnesses",
    "is_key_witness", "is_witness", "testimony", "coprincipal_component",
    "mesoprimary_component", "order_ideal", "Decomposition", "cellular_decomposition",
    "characteristic_decomposition", "congruence_decomposition", "coprincipal_decomposition",
    "decompose", "ideal_taxonomy", "maximalize", "mesoprimary_decomposition",
    "primary_bundles", "GenericIdeal", "certify", "grid_oracle", "intersect",
]
