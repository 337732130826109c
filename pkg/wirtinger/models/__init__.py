from wirtinger.models.coloring import ColoringResult, ColoringSequence, ColoringState, Move
from wirtinger.models.diagram import Crossing, Diagram, GaussCode, Strand

__all__ = [
    # Diagram
    "GaussCode",
    "Strand",
    "Crossing",
    "Diagram",
    # Coloring
    "Move",
    "ColoringState",
    "ColoringSequence",
    "ColoringResult",
]
