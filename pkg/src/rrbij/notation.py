"""Text form of partitions: ``1+3_x+7``, ``ε`` for empty, ``|`` between components."""

from __future__ import annotations

import re
from typing import Mapping, Sequence

from .partitions import Label, LabeledPartition

EMPTY = "ε"
GRAMMAR = ("components separated by '|'; each component is 'e', 'ε' or parts joined "
           "by '+'; a part is a non-negative integer with an optional label suffix "
           "such as _x, _xy, _xy2, _x2y2, _x2y")

# how each family writes its labels; the unsuffixed label is the family default
LABEL_STYLES: dict[str, dict[Label, str]] = {
    # (AI): parts carry y or xy; xy parts are written with a subscript x
    "AI": {Label.Y: "", Label.XY: "_x"},
    # (AIII): unlabeled parts or x
    "AIII": {Label.NONE: "", Label.X: "_x"},
    "FULL": {l: ("_" + l.marker if l.marker else "") for l in Label},
}

_PART = re.compile(r"^(\d+)(?:_([a-z0-9]+))?$")


class ParseError(ValueError):
    def __init__(self, token: str, why: str = ""):
        msg = f"cannot parse {token!r}"
        if why:
            msg += f": {why}"
        super().__init__(f"{msg} (expected {GRAMMAR})")
        self.token = token


def render_parts(parts: Sequence[int]) -> str:
    if not parts:
        return EMPTY
    return "+".join(str(p) for p in parts)


def render_labeled(lp: LabeledPartition, style: Mapping[Label, str] | str = "FULL") -> str:
    if isinstance(style, str):
        style = LABEL_STYLES[style]
    if not lp.parts:
        return EMPTY
    return "+".join(f"{p}{style[l]}" for p, l in zip(lp.parts, lp.labels))


def render(obj, style="FULL") -> str:
    if isinstance(obj, LabeledPartition):
        return render_labeled(obj, style)
    return render_parts(obj)


def render_tuple(components: Sequence, style="FULL", sep: str = ", ") -> str:
    return "(" + sep.join(render(c, style) for c in components) + ")"


def split_components(text: str) -> list[str]:
    body = "".join(text.split())
    if body.startswith("(") and body.endswith(")"):
        body = body[1:-1]
    if "(" in body or ")" in body:
        raise ParseError(text, "unbalanced parentheses")
    return body.split("|")


def parse_component(text: str, style: Mapping[Label, str] | str = "FULL"):
    """Parse one component; returns a tuple of ints, or a LabeledPartition if any
    part carries a suffix."""
    if isinstance(style, str):
        style = LABEL_STYLES[style]
    text = "".join(text.split())
    if text in ("", "e", EMPTY):
        return ()
    by_suffix = {v: k for k, v in style.items()}
    full = {("_" + l.marker if l.marker else ""): l for l in Label}
    parts, labels, labeled = [], [], False
    for token in text.split("+"):
        m = _PART.match(token)
        if not m:
            raise ParseError(token)
        parts.append(int(m.group(1)))
        suffix = "_" + m.group(2) if m.group(2) else ""
        if suffix:
            labeled = True
        if suffix in by_suffix:
            labels.append(by_suffix[suffix])
        elif suffix in full:
            labels.append(full[suffix])
        else:
            raise ParseError(token, f"unknown label suffix {suffix!r}")
    if any(a > b for a, b in zip(parts, parts[1:])):
        raise ParseError(text, "parts must be weakly increasing")
    if labeled or "" in by_suffix and by_suffix[""] != Label.NONE:
        return LabeledPartition(tuple(parts), tuple(labels))
    return tuple(parts)
