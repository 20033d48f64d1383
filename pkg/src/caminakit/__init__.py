"""Camina pairs and triples of finite groups, with exact character tables."""
from .camina import (
    GroupContext, TripleQuery, enumerate_camina_triples, find_camina_triples,
    is_camina_pair, is_camina_triple, vanishing_off_global,
)
from .catalog import CatalogSpec, default_catalog, make_group, parse_spec
from .character import CharacterTable, character_table
from .cyclotomic import Cyclotomic
from .errors import (
    CaminaError, EquivalenceViolation, InternalError, InvalidQuery, InvalidSpec,
    MalformedInput, NotAGroup, NotNormal, OrderCapExceeded, TheoremViolation,
)
from .group import ElementSet, Group, build_group, from_cayley, from_permutations
from .kernels import BACKEND

__version__ = "0.1.0"

__all__ = [
    "BACKEND", "CaminaError", "CatalogSpec", "CharacterTable", "Cyclotomic", "ElementSet",
    "EquivalenceViolation", "Group", "GroupContext", "InternalError", "InvalidQuery",
    "InvalidSpec", "MalformedInput", "NotAGroup", "NotNormal", "OrderCapExceeded",
    "TheoremViolation", "TripleQuery", "build_group", "character_table", "default_catalog",
    "enumerate_camina_triples", "find_camina_triples", "from_cayley", "from_permutations",
    "is_camina_pair", "is_camina_triple", "make_group", "parse_spec", "vanishing_off_global",
]
