from __future__ import annotations

import logging
from pathlib import Path
from typing import Optional

from diffmc.difflocal import ColoringPreset
from diffmc.difflocal import apply_coloring
from diffmc.difflocal import load_coloring
from diffmc.difflocal import preset_coloring
from diffmc.exceptions import InputError
from diffmc.graphs.graph import LabeledGraph
from diffmc.graphs.io import load_graph
from diffmc.output.style import render_cli_option

logger = logging.getLogger(__name__)


def load_input_graph(
    path: Path,
    coloring: Optional[Path] = None,
    preset: Optional[ColoringPreset] = None,
) -> LabeledGraph:
    """Read a graph file and apply a coloring file or preset to it.

    Colors already stored in the graph are kept when neither is given.
    """
    if coloring is not None and preset is not None:
        raise InputError(
            f"Use either {render_cli_option('--coloring')} or "
            f"{render_cli_option('--preset')}, not both"
        )
    g = load_graph(path)
    if coloring is not None:
        g = apply_coloring(g, load_coloring(coloring))
    elif preset is not None:
        g = apply_coloring(g, preset_coloring(g, preset))
        logger.debug("Colored %s with preset %s", path, preset)
    return g
