"""Left orders on finitely presented groups, dynamical realizations and germ orders.

Document-producing calls return dictionaries that keep their exact JSON text.
"""

import json

from . import _core
from ._core import (
    Error,
    ParseError,
    PreconditionError,
    eval_germ,
    first_betti,
    identity_status,
    normalize,
    smith_diagonal,
)

__all__ = [
    "Error",
    "ParseError",
    "PreconditionError",
    "check_lo",
    "corpus",
    "eval_germ",
    "first_betti",
    "germ_order",
    "identity_status",
    "normalize",
    "obstruct",
    "realize",
    "smith_diagonal",
    "verify",
]


class Document(dict):
    """A parsed artifact that keeps its exact text for replay."""

    def __init__(self, text):
        super().__init__(json.loads(text))
        self.text = text


def _germs(germs):
    return [(name, expr, str(rho)) for name, expr, rho in germs]


def check_lo(presentation, subset, max_len, max_word_length=32, max_nodes=4000, threads=1):
    return Document(_core.check_lo(presentation, list(subset), max_len, max_word_length, max_nodes, threads))


def realize(presentation, order, radius, iterates, map_radius=2):
    return Document(_core.realize(presentation, order, radius, iterates, map_radius))


def germ_order(germs, depth, max_len):
    return Document(_core.germ_order(_germs(germs), depth, max_len))


def obstruct(presentation, germs, depth):
    return Document(_core.obstruct(presentation, _germs(germs), depth))


def verify(document):
    """Replays a document (a Document or its text); returns (ok, kind, message)."""
    text = document.text if isinstance(document, Document) else document
    return _core.verify(text)


def corpus():
    return {name: {"text": text, "notes": notes} for name, text, notes in _core.corpus()}
