from engine.oracle.catalog import CATALOG, get_theorem, theorem_ids
from engine.oracle.verify import VerificationReport, brute_force_set, resolve_theorems, verify, verify_many

__all__ = [
    "CATALOG",
    "VerificationReport",
    "brute_force_set",
    "get_theorem",
    "resolve_theorems",
    "theorem_ids",
    "verify",
    "verify_many",
]
