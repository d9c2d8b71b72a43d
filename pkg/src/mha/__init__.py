"""Exact rational checks of Hopf structure on finite-dimensional algebras,
plus a finitely supported backend for function algebras on infinite groups."""
from .algebra import FinDimAlgebra, validate_algebra
from .catalog import CatalogEntry, by_name, hopf_entries, standard_catalog
from .cointegrals import classify_discrete
from .comult import Comultiplication, GaloisKind, validate_comultiplication
from .errors import InternalInconsistency, InvalidInput, MHAError
from .ls_engine import AntipodeMap, Verdict, classify, construct_antipode, construct_counit, verify_structure
from .specfile import export_spec, load_spec, parse_spec_file

__version__ = "0.1.0"

__all__ = [
    "AntipodeMap", "CatalogEntry", "Comultiplication", "FinDimAlgebra", "GaloisKind",
    "InternalInconsistency", "InvalidInput", "MHAError", "Verdict", "by_name", "classify",
    "classify_discrete", "construct_antipode", "construct_counit", "export_spec", "hopf_entries",
    "load_spec", "parse_spec_file", "standard_catalog", "validate_algebra",
    "validate_comultiplication", "verify_structure",
]
