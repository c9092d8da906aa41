"""The QV1 text format for quivers with optional zero relations.

Line-oriented::

    quiver 3
    arrow a 1 2
    arrow b 2 3
    relations
    rel a b

``#`` starts a comment, blank lines are ignored.  ``rel`` lines list arrow
ids in traversal order (first-traversed arrow first); the emitter also
writes the reversed, composition-order string in a trailing comment since
algebra texts usually print words that way.
"""

from __future__ import annotations

import hashlib

from .algebra import RelationSet, reduce_relations
from .quiver import Arrow, CompositionError, Path, Quiver


class QvParseError(ValueError):
    def __init__(self, line_no: int, message: str):
        self.line_no = line_no
        super().__init__(f"line {line_no}: {message}")


def parse(text: str) -> tuple[Quiver, RelationSet]:
    n = None
    arrows: list[Arrow] = []
    arrow_lines: dict[str, int] = {}
    rel_words: list[tuple[int, list[str]]] = []
    in_relations = False
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        fields = line.split()
        directive = fields[0]
        if directive == "quiver":
            if n is not None:
                raise QvParseError(line_no, "duplicate 'quiver' directive")
            if in_relations or arrows:
                raise QvParseError(line_no, "'quiver' must come first")
            if len(fields) != 2 or not fields[1].isdigit():
                raise QvParseError(line_no, "expected: quiver <vertex count>")
            n = int(fields[1])
        elif directive == "arrow":
            if n is None:
                raise QvParseError(line_no, "'arrow' before 'quiver'")
            if in_relations:
                raise QvParseError(line_no, "'arrow' after 'relations'")
            if len(fields) != 4:
                raise QvParseError(line_no, "expected: arrow <id> <source> <target>")
            aid = fields[1]
            if aid in arrow_lines:
                raise QvParseError(line_no, f"duplicate arrow id {aid!r}")
            try:
                s, t = int(fields[2]), int(fields[3])
            except ValueError:
                raise QvParseError(line_no, "arrow endpoints must be integers") from None
            if not (1 <= s <= n and 1 <= t <= n):
                raise QvParseError(line_no, f"endpoint outside 1..{n}")
            arrow_lines[aid] = line_no
            arrows.append(Arrow(aid, s, t))
        elif directive == "relations":
            if n is None:
                raise QvParseError(line_no, "'relations' before 'quiver'")
            if in_relations:
                raise QvParseError(line_no, "duplicate 'relations' directive")
            in_relations = True
        elif directive == "rel":
            if not in_relations:
                raise QvParseError(line_no, "'rel' before 'relations'")
            if len(fields) < 2:
                raise QvParseError(line_no, "empty relation")
            rel_words.append((line_no, fields[1:]))
        else:
            raise QvParseError(line_no, f"unknown directive {directive!r}")
    if n is None:
        raise QvParseError(1, "missing 'quiver' directive")
    try:
        quiver = Quiver(n, tuple(arrows))
    except ValueError as exc:
        raise QvParseError(1, str(exc)) from None
    paths: list[Path] = []
    for line_no, word in rel_words:
        for aid in word:
            if aid not in quiver.arrow_by_id:
                raise QvParseError(line_no, f"unknown arrow id {aid!r} in relation")
        try:
            paths.append(quiver.path(quiver.arrow(word[0]).source, word))
        except CompositionError as exc:
            raise QvParseError(line_no, f"relation does not compose: {exc}") from None
        if len(word) < 2:
            raise QvParseError(line_no, "relations must have length >= 2")
    return quiver, reduce_relations(paths)


def emit(quiver: Quiver, relations: RelationSet = RelationSet(())) -> str:
    lines = [f"quiver {quiver.n}"]
    for a in quiver.arrows:
        lines.append(f"arrow {a.id} {a.source} {a.target}")
    if len(relations):
        lines.append("relations")
        lines.append("# rel words are in traversal order (first-traversed first)")
        for g in relations:
            composition = "".join(reversed(g.word))
            lines.append(f"rel {' '.join(g.word)}  # composition order: {composition}")
    return "\n".join(lines) + "\n"


def load(path: str) -> tuple[Quiver, RelationSet, str]:
    """Parse a file; returns (quiver, relations, sha256 content hash)."""
    with open(path, "rb") as fh:
        data = fh.read()
    digest = hashlib.sha256(data).hexdigest()
    quiver, relations = parse(data.decode("utf-8"))
    return quiver, relations, digest
