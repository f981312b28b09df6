"""Line-oriented algebra description language.

    # comment
    field Q            (or: field F 5)
    vertex 1 2 3
    arrow a : 1 -> 2
    rel a.b - 2*c.d    (paths read left to right: a.b = a, then b)

Errors carry a 1-based line and column.
"""
from __future__ import annotations

import re
from fractions import Fraction

from .algebra import NonAdmissibleError, Path, PathAlgebra
from .field import get_field
from .quiver import Arrow, Quiver


class ParseError(ValueError):
    def __init__(self, message, line=0, col=0):
        self.message = message
        self.line = line
        self.col = col
        where = f"line {line}, col {col}: " if line else ""
        super().__init__(where + message)


_IDENT = r"[A-Za-z0-9_'Ͱ-Ͽ]+"
_ARROW_RE = re.compile(rf"\s*({_IDENT})\s*:\s*({_IDENT})\s*->\s*({_IDENT})\s*$")
_TERM_RE = re.compile(rf"\s*([+-])?\s*(?:(\d+(?:/\d+)?)\s*\*?\s*)?({_IDENT}(?:\.{_IDENT})*)?\s*")


def _terms(text: str, line: int, offset: int):
    """Split ``[coef*]path (+|-) ...`` into ``(coef, [labels], col)`` triples."""
    out = []
    pos = 0
    first = True
    text = text.rstrip()
    if not text.strip():
        raise ParseError("empty linear combination", line, offset + 1)
    while pos < len(text):
        m = _TERM_RE.match(text, pos)
        sign, coef, path = m.group(1), m.group(2), m.group(3)
        col = offset + m.start() + 1
        if sign is None and not first:
            raise ParseError("expected '+' or '-' between terms", line, col)
        if path is None:
            if coef is not None and coef.strip() and m.end() >= len(text):
                raise ParseError("coefficient without a path", line, col)
            raise ParseError(f"unexpected character {text[m.end():m.end() + 1]!r}", line, offset + m.end() + 1)
        c = Fraction(coef) if coef else Fraction(1)
        if sign == "-":
            c = -c
        out.append((c, path.split("."), col))
        pos = m.end()
        first = False
    return out


def parse_algebra(text: str, name: str = "") -> PathAlgebra:
    field = None
    vertices: list[str] = []
    arrows: list[Arrow] = []
    pending_rels = []
    for ln, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0]
        stripped = line.strip()
        if not stripped:
            continue
        indent = len(line) - len(line.lstrip())
        kw, _, rest = stripped.partition(" ")
        rest_col = indent + len(kw) + 2
        if kw == "field":
            if field is not None:
                raise ParseError("field declared twice", ln, indent + 1)
            spec = rest.strip()
            try:
                field = get_field(spec.replace(" ", "") if spec else "")
            except ValueError as exc:
                raise ParseError(str(exc), ln, rest_col) from None
        elif kw == "vertex":
            labels = rest.split()
            if not labels:
                raise ParseError("vertex needs at least one label", ln, rest_col)
            for lab in labels:
                if not re.fullmatch(_IDENT, lab):
                    raise ParseError(f"bad vertex label {lab!r}", ln, indent + 1 + line.strip().find(lab))
                if lab in vertices:
                    raise ParseError(f"vertex {lab} declared twice", ln, indent + 1 + stripped.find(lab))
                vertices.append(lab)
        elif kw == "arrow":
            m = _ARROW_RE.match(rest)
            if not m:
                raise ParseError("expected 'arrow <label> : <src> -> <tgt>'", ln, rest_col)
            lab, s, t = m.groups()
            for v in (s, t):
                if v not in vertices:
                    raise ParseError(f"undeclared vertex {v}", ln, rest_col + rest.find(v))
            if any(a.label == lab for a in arrows) or lab in vertices:
                raise ParseError(f"label {lab} already used", ln, rest_col)
            arrows.append(Arrow(lab, s, t))
        elif kw == "rel":
            pending_rels.append((ln, rest, rest_col - 1))
        else:
            raise ParseError(f"unknown directive {kw!r}", ln, indent + 1)
    if not vertices:
        raise ParseError("no vertices declared", 1, 1)
    if field is None:
        field = get_field("Q")
    Q = Quiver(tuple(vertices), tuple(arrows))
    by_label = {a.label: a for a in arrows}
    rels = []
    for ln, body, off in pending_rels:
        rel: dict = {}
        ends = None
        for c, labels, col in _terms(body, ln, off):
            for lab in labels:
                if lab not in by_label:
                    raise ParseError(f"undeclared arrow {lab}", ln, col)
            seq = [by_label[l] for l in labels]
            for a, b in zip(seq, seq[1:]):
                if a.target != b.source:
                    raise ParseError(f"path {'.'.join(labels)} does not compose ({a.label} ends at {a.target}, "
                                     f"{b.label} starts at {b.source})", ln, col)
            if len(seq) < 2:
                raise ParseError(f"relation term {'.'.join(labels)} has length < 2", ln, col)
            p = Path(seq[0].source, seq[-1].target, tuple(labels))
            if ends is not None and (p.source, p.target) != ends:
                raise ParseError("relation terms are not parallel", ln, col)
            ends = (p.source, p.target)
            rel[p] = rel.get(p, Fraction(0)) + c
        rels.append({p: c for p, c in rel.items() if c})
    try:
        return PathAlgebra(Q, field, rels, name=name)
    except NonAdmissibleError as exc:
        raise ParseError(str(exc), pending_rels[-1][0] if pending_rels else 1, 1) from None


def parse_element(A: PathAlgebra, text: str) -> dict:
    """An element such as ``2*a.b - e_1`` reduced to the path basis of ``A``."""
    if text.strip() == "0":
        return {}
    F = A.F
    out: dict = {}
    for c, labels, col in _terms(text, 0, 0):
        if len(labels) == 1 and labels[0].startswith("e_") and labels[0][2:] in A.vertices:
            v = labels[0][2:]
            p = Path(v, v, ())
        else:
            try:
                seq = [A.quiver.arrow(l) for l in labels]
            except KeyError as exc:
                raise ParseError(f"unknown arrow {exc.args[0]}", 0, col) from None
            for a, b in zip(seq, seq[1:]):
                if a.target != b.source:
                    raise ParseError(f"path {'.'.join(labels)} does not compose", 0, col)
            p = Path(seq[0].source, seq[-1].target, tuple(labels))
        for k, x in A.reduce_path(p).items():
            nv = out.get(k, F.zero) + F(c) * x
            if nv:
                out[k] = nv
            else:
                out.pop(k, None)
    return out


def load_algebra(path) -> PathAlgebra:
    from pathlib import Path as FsPath
    p = FsPath(path)
    return parse_algebra(p.read_text(encoding="utf-8"), name=p.stem)
