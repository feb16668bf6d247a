"""Line-oriented algebra definition files.

::

    # comments start with '#'
    field GF 2          # or: field Q
    dim 3
    basis a1 a2 a3      # optional, defaults to e1 .. en
    [a1,a1] = a3
    [a2,a2] = -1/2*a3 + a1

Unlisted brackets are zero.
"""

from __future__ import annotations

import re
from typing import Dict, List, Optional, Tuple

from .algebra import LeibnizAlgebra
from .errors import ParseError
from .fields import FieldSpec, GF, QQ

_NAME = r"[A-Za-z_][A-Za-z0-9_']*"
_BRACKET_RE = re.compile(rf"^\[\s*({_NAME})\s*,\s*({_NAME})\s*\]\s*=\s*(.+)$")
_TERM_RE = re.compile(rf"\s*(?:([+-]?\s*\d+(?:/\d+)?)\s*\*\s*({_NAME})|([+-]?)\s*({_NAME}))\s*")


def _parse_terms(text: str, lineno: int) -> List[Tuple[str, str]]:
    terms = []
    pos = 0
    while True:
        m = _TERM_RE.match(text, pos)
        if not m or m.end() == pos:
            raise ParseError(f"cannot parse term at {text[pos:]!r}", lineno)
        if m.group(2) is not None:
            terms.append((m.group(1).replace(" ", ""), m.group(2)))
        else:
            terms.append((m.group(3) + "1", m.group(4)))
        pos = m.end()
        if pos == len(text):
            return terms
        if text[pos] != "+":
            raise ParseError(f"expected '+' before {text[pos:]!r}", lineno)
        pos += 1


def _parse_field(args: List[str], lineno: int) -> FieldSpec:
    if args == ["Q"]:
        return QQ
    if len(args) == 2 and args[0] == "GF" and args[1].isdigit():
        try:
            return GF(int(args[1]))
        except ValueError as exc:
            raise ParseError(str(exc), lineno) from None
    raise ParseError("field must be 'Q' or 'GF <p>'", lineno)


def parse_algebra(text: str, *, check: bool = True) -> LeibnizAlgebra:
    """Parse a definition file; raises ParseError, or IdentityViolation when checking."""
    field: Optional[FieldSpec] = None
    dim: Optional[int] = None
    names: Optional[List[str]] = None
    brackets: List[Tuple[int, str, str, str]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("["):
            m = _BRACKET_RE.match(line)
            if not m:
                raise ParseError(f"malformed bracket line {line!r}", lineno)
            brackets.append((lineno, m.group(1), m.group(2), m.group(3).strip()))
            continue
        word, *args = line.split()
        if word == "field":
            if field is not None:
                raise ParseError("duplicate 'field' declaration", lineno)
            field = _parse_field(args, lineno)
        elif word == "dim":
            if dim is not None:
                raise ParseError("duplicate 'dim' declaration", lineno)
            if len(args) != 1 or not args[0].isdigit():
                raise ParseError("dim takes one nonnegative integer", lineno)
            dim = int(args[0])
        elif word == "basis":
            if names is not None:
                raise ParseError("duplicate 'basis' declaration", lineno)
            for a in args:
                if not re.fullmatch(_NAME, a):
                    raise ParseError(f"invalid basis name {a!r}", lineno)
            if len(set(args)) != len(args):
                raise ParseError("basis names must be distinct", lineno)
            names = args
        else:
            raise ParseError(f"unknown directive {word!r}", lineno)
    if field is None:
        raise ParseError("missing 'field' declaration")
    if dim is None:
        raise ParseError("missing 'dim' declaration")
    if names is None:
        names = [f"e{i + 1}" for i in range(dim)]
    elif len(names) != dim:
        raise ParseError(f"basis lists {len(names)} names but dim is {dim}")
    index = {name: i for i, name in enumerate(names)}

    def lookup(name: str, lineno: int) -> int:
        if name not in index:
            raise ParseError(f"unknown basis name {name!r}", lineno)
        return index[name]

    table: Dict[Tuple[int, int], Dict[int, object]] = {}
    for lineno, left, right, rhs in brackets:
        key = (lookup(left, lineno), lookup(right, lineno))
        if key in table:
            raise ParseError(f"duplicate assignment for [{left},{right}]", lineno)
        coeffs: Dict[int, object] = {}
        for scalar, name in _parse_terms(rhs, lineno):
            k = lookup(name, lineno)
            try:
                value = field.parse(scalar)
            except (ValueError, ZeroDivisionError) as exc:
                raise ParseError(str(exc), lineno) from None
            coeffs[k] = coeffs.get(k, field.zero) + value
        table[key] = coeffs
    return LeibnizAlgebra.from_brackets(field, names, table, check=check)


def format_terms(L: LeibnizAlgebra, vec) -> str:
    parts = []
    for k, x in enumerate(vec):
        if not x:
            continue
        parts.append(L.names[k] if x == L.field.one else f"{x}*{L.names[k]}")
    return " + ".join(parts) if parts else "0"


def serialize_algebra(L: LeibnizAlgebra) -> str:
    """Inverse of :func:`parse_algebra` (up to comments and whitespace)."""
    field = "Q" if L.field.kind == "Q" else f"GF {L.field.p}"
    lines = [f"field {field}", f"dim {L.dim}"]
    if L.dim:
        lines.append("basis " + " ".join(L.names))
    for (i, j), vec in L.brackets().items():
        lines.append(f"[{L.names[i]},{L.names[j]}] = {format_terms(L, vec)}")
    return "\n".join(lines) + "\n"
