"""Line-oriented presentation files.

    # comment
    label: trefoil
    gens: a b
    rel: a b a b^-1 a^-1 b^-1
    phi: 1 1
    norm: 0
    longitude: a b a b a b a^-1 a^-1 a^-1 a^-1 a^-1 a^-1
    closed: false

``rel:`` may repeat; every other key appears at most once and ``gens:`` is
required.  Letters are ``name`` or ``name^-1``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from ..grouptheory.abelian import NotAHomomorphism, phi_from_exponents
from ..grouptheory.words import Presentation, Word

NAME = re.compile(r"[a-z][a-z0-9_]*\Z")
LETTER = re.compile(r"([a-z][a-z0-9_]*)(\^-1)?\Z")
LABEL = re.compile(r"[A-Za-z0-9_.\-]+\Z")
INT = re.compile(r"[+-]?\d+\Z")
KEYS = ("label", "gens", "rel", "phi", "norm", "longitude", "closed")


class PresentationSyntaxError(ValueError):
    def __init__(self, message: str, line: int, column: int, token: str = ""):
        super().__init__(f"line {line}, column {column}: {message}" + (f" (at {token!r})" if token else ""))
        self.line, self.column, self.token = line, column, token


class PresentationSemanticError(ValueError):
    def __init__(self, message: str, line: int | None = None):
        super().__init__(message if line is None else f"line {line}: {message}")
        self.line = line


@dataclass(frozen=True)
class PresentationFile:
    presentation: Presentation
    phi: tuple[int, ...] | None = None
    norm: int | None = None
    longitude: Word | None = None
    label: str = "unnamed"
    closed: bool = False


def _tokens(text: str, offset: int):
    """(column, token) pairs, columns 1-based."""
    for m in re.finditer(r"\S+", text):
        yield offset + m.start() + 1, m.group()


def parse_presentation(text: str) -> PresentationFile:
    seen: dict[str, int] = {}
    gens: list[str] | None = None
    raw_rels: list[tuple[int, list[tuple[int, str, int]]]] = []
    raw_long = None
    phi = norm = None
    label, closed = "unnamed", False
    for ln, line in enumerate(text.splitlines(), start=1):
        body = line.split("#", 1)[0]
        if not body.strip():
            continue
        lead = len(body) - len(body.lstrip())
        key, colon, rest = body.lstrip().partition(":")
        key = key.strip()
        if not colon:
            raise PresentationSyntaxError("expected 'key:'", ln, lead + 1, body.split()[0])
        if key not in KEYS:
            raise PresentationSyntaxError("unknown key", ln, lead + 1, key)
        if key != "rel" and key in seen:
            raise PresentationSyntaxError(f"duplicate '{key}:' (first on line {seen[key]})", ln, lead + 1, key)
        seen.setdefault(key, ln)
        toks = list(_tokens(rest, lead + len(key) + 1))
        end_col = len(body.rstrip()) + 1

        if key == "gens":
            gens = []
            for col, tok in toks:
                if not NAME.match(tok):
                    raise PresentationSyntaxError("bad generator name", ln, col, tok)
                gens.append(tok)
            if not gens:
                raise PresentationSyntaxError("'gens:' needs at least one name", ln, end_col)
        elif key in ("rel", "longitude"):
            letters = []
            for col, tok in toks:
                m = LETTER.match(tok)
                if not m:
                    raise PresentationSyntaxError("expected 'name' or 'name^-1'", ln, col, tok)
                letters.append((col, m.group(1), -1 if m.group(2) else 1))
            if not letters:
                raise PresentationSyntaxError(f"'{key}:' needs at least one letter", ln, end_col)
            if key == "rel":
                raw_rels.append((ln, letters))
            else:
                raw_long = (ln, letters)
        elif key == "phi":
            vals = []
            for col, tok in toks:
                if not INT.match(tok):
                    raise PresentationSyntaxError("expected an integer", ln, col, tok)
                vals.append(int(tok))
            if not vals:
                raise PresentationSyntaxError("'phi:' needs values", ln, end_col)
            phi = (ln, tuple(vals))
        elif key == "norm":
            if len(toks) != 1 or not re.fullmatch(r"\d+", toks[0][1]):
                col, tok = toks[-1] if toks else (end_col, "")
                raise PresentationSyntaxError("expected one nonnegative integer", ln, col, tok)
            norm = int(toks[0][1])
        elif key == "label":
            if len(toks) != 1 or not LABEL.match(toks[0][1]):
                col, tok = toks[-1] if toks else (end_col, "")
                raise PresentationSyntaxError("expected one label token", ln, col, tok)
            label = toks[0][1]
        elif key == "closed":
            if len(toks) != 1 or toks[0][1] not in ("true", "false"):
                col, tok = toks[-1] if toks else (end_col, "")
                raise PresentationSyntaxError("expected 'true' or 'false'", ln, col, tok)
            closed = toks[0][1] == "true"

    if gens is None:
        raise PresentationSemanticError("missing 'gens:' line")
    if len(set(gens)) != len(gens):
        raise PresentationSemanticError("generator names must be distinct", seen["gens"])
    index = {g: i for i, g in enumerate(gens)}

    def resolve(ln, letters):
        out = []
        for col, name, s in letters:
            if name not in index:
                raise PresentationSemanticError(f"unknown generator {name!r} at column {col}", ln)
            out.append((index[name], s))
        return Word.of(out)

    rels = []
    for ln, letters in raw_rels:
        w = resolve(ln, letters)
        if not w.is_identity():
            rels.append(w)
    pres = Presentation(tuple(gens), tuple(rels))
    longitude = None
    if raw_long is not None:
        longitude = resolve(*raw_long)
        if longitude.is_identity():
            raise PresentationSemanticError("longitude reduces to the empty word", raw_long[0])
    phi_vals = None
    if phi is not None:
        ln, phi_vals = phi
        try:
            phi_from_exponents(pres, phi_vals)
        except NotAHomomorphism as exc:
            raise PresentationSemanticError(f"phi is not a homomorphism: {exc}", ln) from None
        except ValueError as exc:
            raise PresentationSemanticError(str(exc), ln) from None
    return PresentationFile(pres, phi_vals, norm, longitude, label, closed)


def _letters(w: Word, names) -> str:
    return " ".join(names[g] + ("" if s > 0 else "^-1") for g, s in w.letters)


def serialize_presentation(pf: PresentationFile) -> str:
    names = pf.presentation.generators
    lines = [f"label: {pf.label}", "gens: " + " ".join(names)]
    lines += ["rel: " + _letters(r, names) for r in pf.presentation.relators]
    if pf.phi is not None:
        lines.append("phi: " + " ".join(str(x) for x in pf.phi))
    if pf.norm is not None:
        lines.append(f"norm: {pf.norm}")
    if pf.longitude is not None:
        lines.append("longitude: " + _letters(pf.longitude, names))
    lines.append(f"closed: {'true' if pf.closed else 'false'}")
    return "\n".join(lines) + "\n"


def load_presentation(path) -> PresentationFile:
    with open(path, encoding="utf-8") as fh:
        return parse_presentation(fh.read())
