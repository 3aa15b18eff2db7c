"""Command-line interface and SVG rendering."""

from .render import RenderOptions, render_scene

__all__ = ["RenderOptions", "render_scene"]
