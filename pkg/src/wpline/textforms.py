"""Text grammar for group elements and bundle presentations, plus canonical JSON.

Element expressions:  term (("+"|"-") term)*, where a term is an optionally
scaled name, e.g. "2*x2", "3x3", "c", "w" (the dualizing element), "xbar1",
or a bare "0".  Bundle expressions: "E<l1,l2,l3>" with an optional twist in
parentheses, e.g. "E<0,2,0>(x3)".

CLI and HTTP share one serializer so their JSON outputs are byte-identical.
"""

from __future__ import annotations

import json
import re

from .bundles import ExtBundle
from .lgroup import LElement, WeightTriple

_TERM = re.compile(
    r"\s*(?P<sign>[+-]?)\s*(?:(?P<num>\d+)\s*\*?\s*)?"
    r"(?P<name>x1|x2|x3|xbar1|xbar2|xbar3|c|w|0)\s*"
)


def parse_element(w: WeightTriple, text: str) -> LElement:
    """Parse an element expression into its normal form."""
    names = {
        "x1": w.x(1), "x2": w.x(2), "x3": w.x(3),
        "xbar1": w.xbar(1), "xbar2": w.xbar(2), "xbar3": w.xbar(3),
        "c": w.c, "w": w.omega, "0": w.zero,
    }
    pos = 0
    total = w.zero
    first = True
    while pos < len(text):
        m = _TERM.match(text, pos)
        if not m or (not first and not m.group("sign")):
            raise ValueError(f"cannot parse element expression at {text[pos:]!r}")
        sign = -1 if m.group("sign") == "-" else 1
        num = int(m.group("num")) if m.group("num") else 1
        total = total + sign * num * names[m.group("name")]
        pos = m.end()
        first = False
    if first:
        raise ValueError("empty element expression")
    return total


_BUNDLE = re.compile(r"\s*E\s*<\s*(\d+)\s*,\s*(\d+)\s*,\s*(\d+)\s*>\s*(?:\((.*)\))?\s*$")


def parse_bundle(w: WeightTriple, text: str) -> ExtBundle:
    """Parse "E<l1,l2,l3>" with an optional "(twist expression)"."""
    m = _BUNDLE.match(text)
    if not m:
        raise ValueError(f"cannot parse bundle expression {text!r}")
    interior = (int(m.group(1)), int(m.group(2)), int(m.group(3)))
    twist = parse_element(w, m.group(4)) if m.group(4) else w.zero
    return ExtBundle(w, interior, twist)


def parse_weights(text: str) -> WeightTriple:
    parts = text.split(",")
    if len(parts) != 3:
        raise ValueError("weights must be three comma-separated integers")
    return WeightTriple(*(int(p) for p in parts))


def canonical_json(obj) -> str:
    """The one serialization both the CLI and the service emit."""
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))
