"""Reading and writing relation files.

Text form, one directive per line (``#`` starts a comment)::

    universe: a b c d
    kind: tolerance
    edge: a b
    edge: c d

``kind`` is one of ``tolerance``, ``quasiorder``, ``covering`` or
``lattice``. Tolerances and quasiorders use ``edge: x y`` (for a quasiorder,
``x <= y``; loops are optional and ignored), coverings use ``set: x y z``,
lattices use ``cover: x y`` (``y`` covers ``x``) with optional ``bottom:``
and ``top:`` hints. Files ending in ``.json`` hold the same fields as a JSON
object: ``universe``, ``kind``, ``edges``, ``sets``, ``covers``, ``bottom``,
``top``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path

from .coverings import Covering, induced_tolerance
from .errors import ParseError, ValidationError
from .lattice import FiniteLattice
from .relation import Quasiorder, Tolerance, Universe, tolerance_from_edges

KINDS = ("tolerance", "quasiorder", "covering", "lattice")
_BODY = {"tolerance": "edge", "quasiorder": "edge", "covering": "set", "lattice": "cover"}


@dataclass
class RelationFile:
    kind: str
    universe: tuple[str, ...]
    edges: list[tuple[str, str]] = field(default_factory=list)
    sets: list[tuple[str, ...]] = field(default_factory=list)
    covers: list[tuple[str, str]] = field(default_factory=list)
    bottom: str | None = None
    top: str | None = None

    def _universe(self) -> Universe:
        return Universe(self.universe)

    def tolerance(self, dedup: bool = False) -> Tolerance:
        """The tolerance described by a tolerance or covering file."""
        if self.kind == "tolerance":
            u = self._universe()
            return tolerance_from_edges(u, [e for e in self.edges if e[0] != e[1]], symmetrize=True)
        if self.kind == "covering":
            return induced_tolerance(self.covering(dedup))
        raise ValidationError(f"a {self.kind} file does not describe a tolerance")

    def covering(self, dedup: bool = False) -> Covering:
        if self.kind != "covering":
            raise ValidationError(f"a {self.kind} file does not describe a covering")
        return Covering.from_labels(self._universe(), self.sets, dedup=dedup)

    def quasiorder(self) -> Quasiorder:
        if self.kind != "quasiorder":
            raise ValidationError(f"a {self.kind} file does not describe a quasiorder")
        return Quasiorder.from_pairs(self._universe(), self.edges)

    def lattice(self) -> FiniteLattice:
        if self.kind != "lattice":
            raise ValidationError(f"a {self.kind} file does not describe a lattice")
        u = self._universe()
        for x, y in self.covers:
            u.index(x), u.index(y)
        L = FiniteLattice.from_covers(self.universe, self.covers)
        if self.bottom is not None and L.label(L.bottom) != self.bottom:
            raise ValidationError(f"bottom hint {self.bottom!r} but the least element is {L.label(L.bottom)!r}")
        if self.top is not None and L.label(L.top) != self.top:
            raise ValidationError(f"top hint {self.top!r} but the greatest element is {L.label(L.top)!r}")
        return L

    def validate(self, dedup: bool = False) -> None:
        """Build the described object, raising ValidationError on any defect."""
        u = self._universe()
        for x, y in self.edges:
            u.index(x), u.index(y)
        for s in self.sets:
            for x in s:
                u.index(x)
        if self.kind == "tolerance":
            self.tolerance()
        elif self.kind == "covering":
            self.covering(dedup)
        elif self.kind == "quasiorder":
            self.quasiorder()
        else:
            self.lattice()

    def canonical(self) -> "RelationFile":
        """Same content with edges, sets and covers in a fixed order."""
        pos = {x: i for i, x in enumerate(self.universe)}

        def rank(x: str):
            return (pos.get(x, len(pos)), x)

        def pair_key(e):
            return (rank(e[0]), rank(e[1]))

        edges = {e for e in self.edges if e[0] != e[1]}
        if self.kind == "tolerance":
            edges = {tuple(sorted(e, key=rank)) for e in edges}
        edges = sorted(edges, key=pair_key)
        sets = sorted({tuple(sorted(set(s))) for s in self.sets})
        covers = sorted(set(self.covers), key=pair_key)
        return RelationFile(self.kind, self.universe, edges, sets, covers, self.bottom, self.top)


def parse_text(text: str) -> RelationFile:
    universe = kind = None
    body: list[tuple[int, str, list[str]]] = []
    bottom = top = None
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if ":" not in line:
            raise ParseError(f"line {lineno}: expected 'directive: values'")
        key, _, rest = line.partition(":")
        key, values = key.strip(), rest.split()
        if key == "universe":
            if universe is not None:
                raise ParseError(f"line {lineno}: duplicate universe line")
            universe = tuple(values)
        elif key == "kind":
            if kind is not None:
                raise ParseError(f"line {lineno}: duplicate kind line")
            if len(values) != 1 or values[0] not in KINDS:
                raise ParseError(f"line {lineno}: kind must be one of {', '.join(KINDS)}")
            kind = values[0]
        elif key in ("bottom", "top"):
            if len(values) != 1:
                raise ParseError(f"line {lineno}: {key} takes exactly one label")
            if key == "bottom":
                bottom = values[0]
            else:
                top = values[0]
        elif key in ("edge", "set", "cover"):
            body.append((lineno, key, values))
        else:
            raise ParseError(f"line {lineno}: unknown directive {key!r}")
    if universe is None:
        raise ParseError("missing 'universe:' line")
    if kind is None:
        raise ParseError("missing 'kind:' line")
    rf = RelationFile(kind, universe, bottom=bottom, top=top)
    for lineno, key, values in body:
        _add(rf, key, values, f"line {lineno}")
    return rf


def _add(rf: RelationFile, key: str, values: list[str], where: str) -> None:
    if key != _BODY[rf.kind]:
        raise ValidationError(f"{where}: '{key}' is not allowed in a {rf.kind} file")
    if key in ("edge", "cover"):
        if len(values) != 2:
            raise ParseError(f"{where}: {key} needs exactly two labels")
        (rf.edges if key == "edge" else rf.covers).append((values[0], values[1]))
    else:
        if not values:
            raise ValidationError(f"{where}: empty set")
        rf.sets.append(tuple(values))


def parse_json(text: str) -> RelationFile:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc}") from None
    if not isinstance(data, dict):
        raise ParseError("JSON relation file must be an object")
    unknown = set(data) - {"universe", "kind", "edges", "sets", "covers", "bottom", "top"}
    if unknown:
        raise ParseError(f"unknown JSON keys: {', '.join(sorted(unknown))}")
    if "universe" not in data:
        raise ParseError("missing 'universe'")
    if data.get("kind") not in KINDS:
        raise ParseError(f"'kind' must be one of {', '.join(KINDS)}")
    universe = data["universe"]
    if not isinstance(universe, list) or not all(isinstance(x, str) for x in universe):
        raise ParseError("'universe' must be a list of strings")
    rf = RelationFile(data["kind"], tuple(universe))
    for key, field_name in (("edge", "edges"), ("set", "sets"), ("cover", "covers")):
        items = data.get(field_name, [])
        if not isinstance(items, list):
            raise ParseError(f"'{field_name}' must be a list")
        for i, item in enumerate(items):
            if not isinstance(item, list) or not all(isinstance(x, str) for x in item):
                raise ParseError(f"{field_name}[{i}] must be a list of strings")
            _add(rf, key, item, f"{field_name}[{i}]")
    for hint in ("bottom", "top"):
        if hint in data:
            if not isinstance(data[hint], str):
                raise ParseError(f"'{hint}' must be a string")
            setattr(rf, hint, data[hint])
    return rf


def format_text(rf: RelationFile) -> str:
    rf = rf.canonical()
    lines = [f"universe: {' '.join(rf.universe)}", f"kind: {rf.kind}"]
    if rf.bottom is not None:
        lines.append(f"bottom: {rf.bottom}")
    if rf.top is not None:
        lines.append(f"top: {rf.top}")
    lines += [f"edge: {x} {y}" for x, y in rf.edges]
    lines += [f"set: {' '.join(s)}" for s in rf.sets]
    lines += [f"cover: {x} {y}" for x, y in rf.covers]
    return "\n".join(lines) + "\n"


def format_json(rf: RelationFile) -> str:
    rf = rf.canonical()
    data: dict = {"universe": list(rf.universe), "kind": rf.kind}
    key = {"tolerance": "edges", "quasiorder": "edges", "covering": "sets", "lattice": "covers"}[rf.kind]
    data[key] = [list(x) for x in getattr(rf, key)]
    if rf.bottom is not None:
        data["bottom"] = rf.bottom
    if rf.top is not None:
        data["top"] = rf.top
    return json.dumps(data, indent=2) + "\n"


def parse(text: str, json_format: bool = False) -> RelationFile:
    return parse_json(text) if json_format else parse_text(text)


def load(path: str | Path) -> RelationFile:
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror}") from None
    except UnicodeDecodeError:
        raise ParseError(f"{path} is not valid UTF-8") from None
    return parse(text, json_format=path.suffix.lower() == ".json")


def from_tolerance(R: Tolerance) -> RelationFile:
    edges = [(x, y) for x, y in R.pairs() if x != y]
    return RelationFile("tolerance", R.universe.labels, edges=edges)


def from_covering(H: Covering) -> RelationFile:
    return RelationFile("covering", H.universe.labels, sets=[tuple(X.labels) for X in H.sets])
