"""Rotation Gray codes for stamp foldings and semi-meanders.

Two generators (recursive and iterative) produce identical cyclic listings in
which consecutive piles differ by one stamp rotation. A brute-force geometric
oracle and a listing verifier check them independently.
"""
from .common import GenConfig, Kind, OpCounters
from .iterative import gen_iterative, iter_iterative, listing_iterative
from .oracle import (
    Arc,
    ArcDiagram,
    Side,
    arc_diagram,
    brute_force_enumerate,
    is_open_meander,
    is_semi_meander,
    is_stamp_folding,
)
from .pile import (
    CircularPile,
    Pile,
    PileError,
    SignArray,
    StampRotation,
    apply_rotation,
    index_of,
    rotate_left,
    rotate_right,
    rots,
)
from .recursive import gen_recursive, iter_recursive, listing_recursive, next_semi_meander_steps
from .verify import VerifyReport, find_stamp_rotation, verify_listing

__all__ = [
    "Arc", "ArcDiagram", "CircularPile", "GenConfig", "Kind", "OpCounters", "Pile",
    "PileError", "Side", "SignArray", "StampRotation", "VerifyReport", "apply_rotation",
    "arc_diagram", "brute_force_enumerate", "find_stamp_rotation", "gen_iterative",
    "gen_recursive", "index_of", "is_open_meander", "is_semi_meander", "is_stamp_folding",
    "iter_iterative", "iter_recursive", "listing_iterative", "listing_recursive",
    "next_semi_meander_steps", "rotate_left", "rotate_right", "rots", "verify_listing",
]
