"""Triangle and circle geometry kernel with theorem checks and a straightedge DSL."""

__version__ = "0.1.0"
