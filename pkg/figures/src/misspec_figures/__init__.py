"""Figure rendering for misspecified-embedding experiment CSVs."""

from .reader import SchemaError, group_stats, read_deloc_profile, read_semicircle_curve, read_trials
from .render import FIGURE_KINDS, FigureSpec, RenderResult, render

__version__ = "0.1.0"
