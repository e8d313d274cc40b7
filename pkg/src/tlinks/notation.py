"""Parsing and printing of the inline parameter notation.

Grammar (whitespace ignored)::

    tlink := "T(" pair ("," pair)* ")"
    gen   := "T(" [pair ("," pair)* (","|";")] pair [";" "d=" INT] ")"
    tn    := "T^" ["{"] INT ["}"] "(" [pair ("," pair)* ","] "(" INT ";" INT ")" ")"
    pair  := "(" INT "," INT ")"

The last pair of ``gen`` is the (possibly negative) final block. In ``tn`` the
final ``(r; d)`` group gives the twisted width and the number of extra
strands. ``∅`` may stand for an empty pair list. Each parameter kind also
accepts its JSON object form.
"""

from __future__ import annotations

import json
import re

from .tlink import GenTLinkParams, TLinkParams, TnLinkParams, TrivialDescriptor


class NotationError(ValueError):
    """Malformed parameter string."""


_HEAD = re.compile(r"^T(?:\^\{?(-?\d+)\}?)?\((.*)\)$")
_GROUP = re.compile(r"\((-?\d+)([,;])(-?\d+)\)")
_D_SUFFIX = re.compile(r"[;,]d=(\d+)$")


def _split(text: str):
    s = re.sub(r"\s+", "", text).replace("∅", "")
    m = _HEAD.match(s)
    if not m:
        raise NotationError(f"not a T-link expression: {text!r}")
    twist = None if m.group(1) is None else int(m.group(1))
    body = m.group(2)
    d = None
    dm = _D_SUFFIX.search(body)
    if dm:
        d = int(dm.group(1))
        body = body[: dm.start()]
    groups = [(int(a), sep, int(b)) for a, sep, b in _GROUP.findall(body)]
    leftover = _GROUP.sub("", body)
    if leftover.strip(",;"):
        raise NotationError(f"unexpected text {leftover!r} in {text!r}")
    return twist, groups, d


def _json(text: str) -> dict | None:
    text = text.strip()
    if not text.startswith("{"):
        return None
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise NotationError(str(exc)) from exc


def parse_tlink(text: str) -> TLinkParams:
    data = _json(text)
    if data is not None:
        return TLinkParams(tuple(map(tuple, data["pairs"])))
    twist, groups, d = _split(text)
    if twist is not None or d is not None or any(sep != "," for _, sep, _ in groups):
        raise NotationError(f"plain T-link expected: {text!r}")
    return TLinkParams(tuple((a, b) for a, _, b in groups))


def parse_gen(text: str) -> GenTLinkParams:
    data = _json(text)
    if data is not None:
        return GenTLinkParams(
            tuple(map(tuple, data.get("pairs", []))), tuple(data["last"]), int(data.get("d", 0))
        )
    twist, groups, d = _split(text)
    if twist is not None:
        raise NotationError(f"generalised T-link has no twist exponent: {text!r}")
    if not groups or any(sep != "," for _, sep, _ in groups):
        raise NotationError(f"expected pairs (r,s): {text!r}")
    pairs = tuple((a, b) for a, _, b in groups)
    return GenTLinkParams(pairs[:-1], pairs[-1], d or 0)


def parse_tn(text: str) -> TnLinkParams:
    data = _json(text)
    if data is not None:
        return TnLinkParams(
            int(data["n"]), tuple(map(tuple, data.get("pairs", []))), int(data["r_last"]), int(data.get("d", 0))
        )
    twist, groups, d = _split(text)
    if twist is None:
        raise NotationError(f"T^n-link needs a twist exponent T^n(...): {text!r}")
    if d is not None or not groups or groups[-1][1] != ";":
        raise NotationError(f"T^n-link must end with (r;d): {text!r}")
    if any(sep != "," for _, sep, _ in groups[:-1]):
        raise NotationError(f"only the last group may use ';': {text!r}")
    r_last, _, dd = groups[-1]
    return TnLinkParams(twist, tuple((a, b) for a, _, b in groups[:-1]), r_last, dd)


def _pairs_text(pairs) -> str:
    return ",".join(f"({r},{s})" for r, s in pairs)


def format_params(obj) -> str:
    if isinstance(obj, GenTLinkParams):
        return f"T({_pairs_text(obj.pairs + (obj.last,))};d={obj.d})"
    return str(obj)


def params_to_dict(obj) -> dict:
    """JSON object for any parameter kind, tagged with ``kind`` and its notation."""
    if isinstance(obj, TLinkParams):
        out = {"kind": "tlink", "pairs": [list(p) for p in obj.pairs], "empty": obj.is_empty}
    elif isinstance(obj, TnLinkParams):
        out = {
            "kind": "tn",
            "n": obj.n,
            "pairs": [list(p) for p in obj.pairs],
            "r_last": obj.r_last,
            "d": obj.d,
        }
    elif isinstance(obj, GenTLinkParams):
        out = {"kind": "gen", "pairs": [list(p) for p in obj.pairs], "last": list(obj.last), "d": obj.d}
    elif isinstance(obj, TrivialDescriptor):
        out = {"kind": "unlink", "components": obj.components}
    else:
        raise TypeError(f"not a parameter object: {obj!r}")
    out["notation"] = format_params(obj)
    return out
