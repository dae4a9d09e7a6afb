"""Presentation files, knot constructors, corpus, reports and the CLI."""

from .corpus import ENTRIES, NORM_SOURCE, CorpusEntry, corpus_entry, seifert_alexander, torus_bundle_charpoly
from .knots import (
    Diagram, LongitudeInvalid, NotAKnot, braid_data, braid_to_presentation, check_longitude,
    knot_presentation, pretzel_diagram, simplify, wirtinger, writhe, zero_surgery,
)
from .parser import (
    PresentationFile, PresentationSemanticError, PresentationSyntaxError, load_presentation,
    parse_presentation, serialize_presentation,
)
