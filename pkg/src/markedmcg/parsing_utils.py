#!/usr/bin/env python3
"""
Parsing Utilities

Pure functions for reading the input files of the command-line front-end and for
converting presentations to and from their text and structured forms.

Text form of a presentation:

    gens: s1 s2
    rel: s1 s2 s1 s2' s1' s2'

Structured form: {"generators": [names], "relators": [[[index, sign], ...], ...]}
with 0-based generator indices and signs +1/-1.
"""

import json
from typing import Any, Dict, List, Sequence

import numpy as np

from .artin import INFINITE_LABEL, CoxeterGraph
from .cluster import as_exchange_matrix
from .constants import INVERSE_MARK
from .surface import MarkedSurface
from .triangulation import TaggedTriangulation
from .words import Letter, Presentation, Word, free_reduce

GENS_PREFIX = "gens:"
REL_PREFIX = "rel:"


# ============================================================================
# PRESENTATIONS
# ============================================================================


def parse_letter(token: str) -> Letter:
    """Convert ``s1`` or ``s1'`` into a (name, sign) letter.

    Raises:
        ValueError: If the token has no generator name
    """
    name = token.rstrip(INVERSE_MARK)
    marks = len(token) - len(name)
    if not name or marks > 1:
        raise ValueError(f"Malformed letter '{token}'")
    return name, -1 if marks else 1


def parse_word(text: str, generators: Sequence[str]) -> Word:
    """Parse whitespace-separated letters over ``generators``.

    Raises:
        KeyError: If a letter names an undeclared generator
    """
    return free_reduce((parse_letter(t) for t in text.split()), generators)


def format_text(p: Presentation) -> str:
    """The text form of ``p``; the empty relator is omitted."""
    lines = [f"{GENS_PREFIX} {' '.join(p.generators)}".rstrip()]
    for relator in p.relators:
        if relator:
            lines.append(f"{REL_PREFIX} {relator.to_text(INVERSE_MARK)}")
    return "\n".join(lines) + "\n"


def parse_text(text: str, name: str = "") -> Presentation:
    """Inverse of ``format_text``; blank lines and ``#`` comments are skipped.

    Raises:
        ValueError: If the first line is not a ``gens:`` line or a line is unknown
        KeyError: If a relator uses an undeclared generator
    """
    lines = [
        line.strip()
        for line in text.splitlines()
        if line.strip() and not line.strip().startswith("#")
    ]
    if not lines or not lines[0].startswith(GENS_PREFIX):
        raise ValueError(f"Presentation text must start with '{GENS_PREFIX}'")
    generators = lines[0][len(GENS_PREFIX) :].split()
    relators = []
    for number, line in enumerate(lines[1:], start=2):
        if not line.startswith(REL_PREFIX):
            raise ValueError(f"Line {number}: expected '{REL_PREFIX}', got '{line}'")
        relators.append(parse_word(line[len(REL_PREFIX) :], generators))
    return Presentation(generators, relators, name=name)


def to_struct(p: Presentation) -> Dict[str, Any]:
    index = {g: i for i, g in enumerate(p.generators)}
    return {
        "generators": list(p.generators),
        "relators": [[[index[n], s] for n, s in r] for r in p.relators if r],
    }


def from_struct(data: Dict[str, Any], name: str = "") -> Presentation:
    """Inverse of ``to_struct``.

    Raises:
        ValueError: If a key is missing or an index is out of range
        TypeError: If the fields have the wrong shape
    """
    for key in ("generators", "relators"):
        if key not in data:
            raise ValueError(f"Presentation missing required key: {key}")
    generators = data["generators"]
    if not isinstance(generators, list) or not all(isinstance(g, str) for g in generators):
        raise TypeError("Presentation field 'generators' must be an array of names")
    relators = []
    for r, relator in enumerate(data["relators"]):
        letters = []
        for entry in relator:
            if not isinstance(entry, list) or len(entry) != 2:
                raise TypeError(f"Relator {r}: letters must be [index, sign] pairs")
            index, sign = int(entry[0]), int(entry[1])
            if not 0 <= index < len(generators):
                raise ValueError(f"Relator {r}: generator index {index} out of range")
            letters.append((generators[index], sign))
        relators.append(free_reduce(letters))
    return Presentation(generators, relators, name=name)


# ============================================================================
# INPUT FILES
# ============================================================================


def _read_json(path: str) -> Any:
    with open(path, encoding="utf-8") as handle:
        try:
            return json.load(handle)
        except json.JSONDecodeError as e:
            raise ValueError(f"Invalid JSON: {e.msg} at line {e.lineno}")


def load_surface(path: str) -> MarkedSurface:
    """Load a surface description file.

    Raises:
        FileNotFoundError: If the file doesn't exist
        ValueError, TypeError: If the content is malformed
    """
    try:
        return MarkedSurface.from_dict(_read_json(path))
    except FileNotFoundError:
        raise FileNotFoundError(f"Surface file not found: {path}")
    except Exception as e:
        raise type(e)(f"Error loading surface {path}: {str(e)}")


def parse_matrix(data: Any) -> np.ndarray:
    """Validate an array-of-arrays of integers as an exchange matrix."""
    if not isinstance(data, list) or not all(isinstance(row, list) for row in data):
        raise TypeError("Matrix must be an array of arrays")
    for row in data:
        for entry in row:
            if not isinstance(entry, int) or isinstance(entry, bool):
                raise TypeError(f"Matrix entry {entry!r} is not an integer")
    return as_exchange_matrix(data)


def load_matrix(source: str) -> np.ndarray:
    """Load a matrix from a file path, or from inline JSON starting with '['."""
    try:
        if source.lstrip().startswith("["):
            try:
                return parse_matrix(json.loads(source))
            except json.JSONDecodeError as e:
                raise ValueError(f"Invalid JSON: {e.msg}")
        return parse_matrix(_read_json(source))
    except FileNotFoundError:
        raise FileNotFoundError(f"Matrix file not found: {source}")
    except Exception as e:
        raise type(e)(f"Error loading matrix {source}: {str(e)}")


def validate_triangulation_structure(data: Dict[str, Any]) -> None:
    """Check keys and field types of a triangulation description.

    Raises:
        ValueError: If a required key is missing
        TypeError: If a field has the wrong type
    """
    if not isinstance(data, dict):
        raise TypeError("Triangulation description must be an object")
    for key in ("arcs", "triangles"):
        if key not in data:
            raise ValueError(f"Triangulation missing required key: {key}")
    if not all(isinstance(a, str) for a in data["arcs"]):
        raise TypeError("Triangulation field 'arcs' must be an array of names")
    for triple in data["triangles"]:
        if not isinstance(triple, list) or len(triple) != 3:
            raise TypeError(f"Triangle {triple!r} must be an array of three labels")


def triangulation_from_dict(data: Dict[str, Any], name: str = "") -> TaggedTriangulation:
    """Build a triangulation from counterclockwise label triples.

    ``selffolded`` lists [radius, loop] pairs the triples must produce; ``notched``
    lists [arc, end] pairs with end 0 or 1.
    """
    validate_triangulation_structure(data)
    notched = [(str(arc), int(end)) for arc, end in data.get("notched", [])]
    t = TaggedTriangulation.from_label_triangles(
        data["arcs"], data["triangles"], notched, name=name
    )
    declared = {(str(r), str(l)) for r, l in data.get("selffolded", [])}
    found = {(f.radius, f.loop) for f in t.self_folded()}
    if declared and declared != found:
        raise ValueError(
            f"Declared self-folded triangles {sorted(declared)} do not match {sorted(found)}"
        )
    return t


def load_triangulation(path: str) -> TaggedTriangulation:
    try:
        return triangulation_from_dict(_read_json(path), name=path)
    except FileNotFoundError:
        raise FileNotFoundError(f"Triangulation file not found: {path}")
    except Exception as e:
        raise type(e)(f"Error loading triangulation {path}: {str(e)}")


def parse_coxeter_text(text: str) -> CoxeterGraph:
    """Parse ``vertices: a b c`` followed by ``edge: a b 3`` lines.

    The label ``inf`` marks an edge without relation.
    """
    graph = None
    edges: List[tuple] = []
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if line.startswith("vertices:"):
            if graph is not None:
                raise ValueError(f"Line {number}: duplicate 'vertices:' line")
            graph = CoxeterGraph(line[len("vertices:") :].split())
        elif line.startswith("edge:"):
            fields = line[len("edge:") :].split()
            if len(fields) != 3:
                raise ValueError(f"Line {number}: expected 'edge: a b m', got '{line}'")
            a, b, label = fields
            m = INFINITE_LABEL if label in ("inf", "∞") else int(label)
            edges.append((a, b, m))
        else:
            raise ValueError(f"Line {number}: unknown line '{line}'")
    if graph is None:
        raise ValueError("Coxeter graph file has no 'vertices:' line")
    for a, b, m in edges:
        graph.set_label(a, b, m)
    return graph


def load_coxeter_graph(path: str) -> CoxeterGraph:
    try:
        with open(path, encoding="utf-8") as handle:
            return parse_coxeter_text(handle.read())
    except FileNotFoundError:
        raise FileNotFoundError(f"Coxeter graph file not found: {path}")
    except Exception as e:
        raise type(e)(f"Error loading Coxeter graph {path}: {str(e)}")


def load_presentation(path: str) -> Presentation:
    """Load a presentation from a ``.json`` structured file or a text file."""
    try:
        if path.endswith(".json"):
            return from_struct(_read_json(path), name=path)
        with open(path, encoding="utf-8") as handle:
            return parse_text(handle.read(), name=path)
    except FileNotFoundError:
        raise FileNotFoundError(f"Presentation file not found: {path}")
    except Exception as e:
        raise type(e)(f"Error loading presentation {path}: {str(e)}")
