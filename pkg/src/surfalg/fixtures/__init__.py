"""Bundled example documents.

>>> sorted(names())[:2]
['disk', 'eight_vertex']
"""

from __future__ import annotations

from importlib import resources

from ..io import is_brauer_document, load_brauer, load_quiver


def names() -> list[str]:
    return sorted(p.name[:-5] for p in resources.files(__name__).iterdir() if p.name.endswith(".json"))


def text(name: str) -> str:
    return resources.files(__name__).joinpath(f"{name}.json").read_text(encoding="utf-8")


def load(name: str):
    """A weighted quiver or a Brauer graph, depending on the document."""
    import json

    doc = json.loads(text(name))
    if is_brauer_document(doc):
        return load_brauer(doc)
    return load_quiver(doc).wbq
