from .render import FIGURES, PlotSpec, SchemaError, case_colors, render

__all__ = ["FIGURES", "PlotSpec", "SchemaError", "case_colors", "render"]
