"""Importing this package registers every check, chapter by chapter, in catalog order."""

from . import lemoine, excircles, drozfarny, neuberg, lucas, ruler, apollonius, harmonic, orthology  # noqa: F401
