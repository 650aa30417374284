from __future__ import annotations

from diffmc.difflocal import difflocal_winner
from diffmc.engine.mc import ModelCheckResult
from diffmc.engine.mc import model_check
from diffmc.engine.trees import EvalNode
from diffmc.engine.trees import EvalTree
from diffmc.engine.trees import IsoType
from diffmc.engine.trees import exact_representatives
from diffmc.engine.trees import full_tree
from diffmc.engine.trees import full_tree_mc
from diffmc.engine.trees import iso_type
from diffmc.engine.trees import label_types
from diffmc.engine.trees import reduced_tree
from diffmc.engine.trees import verdict_from_tree

__all__ = [
    "EvalNode",
    "EvalTree",
    "IsoType",
    "ModelCheckResult",
    "difflocal_winner",
    "exact_representatives",
    "full_tree",
    "full_tree_mc",
    "iso_type",
    "label_types",
    "model_check",
    "reduced_tree",
    "verdict_from_tree",
]
