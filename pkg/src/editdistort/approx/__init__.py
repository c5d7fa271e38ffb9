"""The six approximation distances."""
from .batu import batu_blocks, batu_distance, batu_shrink, reduce_alphabet
from .hieralign import andoni10_distance
from .params import BatuParams, HierAlignParams, QGramParams
from .qgram import QGramProfile, baryossef_distance, qgram_profile, sokolov_distance
from .ulam_metrics import andoni09_distance, charikar_distance

__all__ = [
    "BatuParams",
    "HierAlignParams",
    "QGramParams",
    "QGramProfile",
    "andoni09_distance",
    "andoni10_distance",
    "baryossef_distance",
    "batu_blocks",
    "batu_distance",
    "batu_shrink",
    "charikar_distance",
    "qgram_profile",
    "reduce_alphabet",
    "sokolov_distance",
]
