"""Invariants of rail knotoids: knotoid diagrams between two vertical rails,
their over/under companion loops, and polynomial invariants computed on them."""

from .closure import (
    ORIENT_MINUS,
    ORIENT_PLUS,
    SIDE_OVER,
    SIDE_UNDER,
    companion,
    forget_rails_closure,
    orient,
)
from .diagram import (
    EMPTY_DIAGRAM,
    UNKNOT,
    LinkDiagram,
    RailKnotoidDiagram,
    parse_diagram,
    render_gauss,
    serialize_diagram,
    validate,
    validate_link,
)
from .errors import MoveNotApplicable, RailknotError, ResourceLimitError, UsageError
from .invariants import (
    Bounds,
    InvariantCertificate,
    bracket,
    certificate,
    compare,
    homflypt,
    homflypt_to_jones,
    jones,
    kauffman_f,
    kauffman_to_x,
    normalized_bracket,
    rail_bracket,
    rail_invariant,
    writhe,
)
from .moves import Move, WalkSpec, apply_move, enumerate_moves, random_walk, simplify
from .polynomial import Laurent1, Laurent2

__all__ = [
    "Bounds",
    "EMPTY_DIAGRAM",
    "InvariantCertificate",
    "Laurent1",
    "Laurent2",
    "LinkDiagram",
    "Move",
    "MoveNotApplicable",
    "ORIENT_MINUS",
    "ORIENT_PLUS",
    "RailKnotoidDiagram",
    "RailknotError",
    "ResourceLimitError",
    "SIDE_OVER",
    "SIDE_UNDER",
    "UNKNOT",
    "UsageError",
    "WalkSpec",
    "apply_move",
    "bracket",
    "certificate",
    "companion",
    "compare",
    "enumerate_moves",
    "forget_rails_closure",
    "homflypt",
    "homflypt_to_jones",
    "jones",
    "kauffman_f",
    "kauffman_to_x",
    "normalized_bracket",
    "orient",
    "parse_diagram",
    "rail_bracket",
    "rail_invariant",
    "random_walk",
    "render_gauss",
    "serialize_diagram",
    "simplify",
    "validate",
    "validate_link",
    "writhe",
]

__version__ = "0.1.0"
