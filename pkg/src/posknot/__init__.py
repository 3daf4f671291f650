"""Jones polynomial state sums and positivity obstructions for knot diagrams."""

from posknot.diagram import OrientedDiagram, from_text, mirror, parse_pd
from posknot.jones import jones, jones_polynomial, kauffman_bracket
from posknot.laurent import LaurentPoly, format_poly, parse_poly

__all__ = [
    "LaurentPoly",
    "OrientedDiagram",
    "format_poly",
    "from_text",
    "jones",
    "jones_polynomial",
    "kauffman_bracket",
    "mirror",
    "parse_pd",
    "parse_poly",
]
