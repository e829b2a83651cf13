from .extractor import FeatureExtractor, FeatureMatrix, extract_all
from .inventory import FeatureInventory, build_inventory
from .lexical import extract_lexical, mtld, sttr, ttr
from .posgrams import build_reference_profile, g2_keyness, select_npos_inventory
from .readability import extract_readability
from .syntactical import extract_syntactical
from .translatability import extract_translatability

__all__ = [
    "FeatureExtractor",
    "FeatureMatrix",
    "FeatureInventory",
    "build_inventory",
    "build_reference_profile",
    "extract_all",
    "extract_lexical",
    "extract_readability",
    "extract_syntactical",
    "extract_translatability",
    "g2_keyness",
    "mtld",
    "select_npos_inventory",
    "sttr",
    "ttr",
]
