"""The line-oriented input format for covers and groups.

Grammar (one record per line, '#' starts a comment, blank lines ignored):

    version 1
    type cover                  # or: type group
    label <text>                # optional
    notes <text>                # optional
    genus G                     # cover records
    degree N
    gen <perm>                  # exactly 2*G lines
    factor same                 # one factor line per fiber-product slot;
    factor begin                # 'begin' opens a block of 2*G gen lines
    gen <perm>
    ...
    factor end

    name <text>                 # group records, after 'type group'
    degree N
    gen <perm>                  # one or more
    order K                     # optional expected order
    transitivity T              # optional expected max transitivity

Permutations are cycle strings like "(1 2 3)(4 5)" (letters a..l alias
1..12, fixed points may be omitted, "()" is the identity) or one-line image
arrays like "2 3 1".  A cover with no factor lines means a single factor
equal to the base cover.
"""

from __future__ import annotations

import os
from dataclasses import dataclass

from .errors import (
    CoverFileDegreeError,
    CoverFileRelationError,
    CoverFileSyntaxError,
)
from .fiberprod import ProductCover, DEFAULT_MAX_FIBER
from .monodromy import MonodromyCover, validate
from .perms import PermDegreeError, PermSyntaxError, parse_perm

FORMAT_VERSION = 1


@dataclass(frozen=True)
class CoverFile:
    version: int
    label: str
    notes: str
    genus: int
    degree: int
    generators: tuple
    factors: tuple  # each entry "same" or a tuple of 2g Perms

    @property
    def ell(self):
        return len(self.factors)

    def base_cover(self):
        return MonodromyCover(self.genus, self.degree, self.generators)

    def factor_covers(self):
        base = self.base_cover()
        return tuple(
            base if f == "same" else MonodromyCover(self.genus, self.degree, f)
            for f in self.factors
        )

    def product(self, max_fiber=DEFAULT_MAX_FIBER):
        return ProductCover(self.factor_covers(), max_fiber=max_fiber)


@dataclass(frozen=True)
class GroupRecord:
    version: int
    name: str
    label: str
    notes: str
    degree: int
    generators: tuple
    expected_order: object
    expected_max_transitivity: object


def _lex(text):
    """(lineno, key, rest, rest_col) for every meaningful line."""
    records = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        content = raw.split("#", 1)[0]
        stripped = content.strip()
        if not stripped:
            continue
        key, _, rest = stripped.partition(" ")
        rest = rest.strip()
        key_col = content.index(key)
        rest_col = content.find(rest, key_col + len(key)) if rest else key_col
        records.append((lineno, key, rest, rest_col))
    return records


def _parse_int(rest, lineno, col, what, minimum):
    try:
        value = int(rest)
    except ValueError:
        raise CoverFileSyntaxError(f"{what} must be an integer, got {rest!r}", lineno, col + 1) from None
    if value < minimum:
        raise CoverFileSyntaxError(f"{what} must be >= {minimum}, got {value}", lineno, col + 1)
    return value


def _parse_gen(rest, degree, lineno, col):
    try:
        return parse_perm(rest, degree)
    except PermDegreeError as exc:
        offset = exc.col if exc.col is not None else 0
        raise CoverFileDegreeError(str(exc), lineno, col + offset + 1) from None
    except (PermSyntaxError, ValueError) as exc:
        offset = getattr(exc, "col", None) or 0
        raise CoverFileSyntaxError(str(exc), lineno, col + offset + 1) from None


def _check_relation(genus, degree, gens, lineno):
    report = validate(MonodromyCover(genus, degree, gens))
    if not report.ok:
        raise CoverFileRelationError("; ".join(report.failures), lineno)


def parse_document(src):
    """Parse a cover or group document from text, a path, or path-like."""
    text = _load(src)
    records = _lex(text)
    if not records:
        raise CoverFileSyntaxError("empty file")
    lineno, key, rest, col = records[0]
    if key != "version":
        raise CoverFileSyntaxError("first record must be 'version'", lineno)
    version = _parse_int(rest, lineno, col, "version", 1)
    if version != FORMAT_VERSION:
        raise CoverFileSyntaxError(f"unsupported format version {version}", lineno, col + 1)
    if len(records) < 2 or records[1][1] != "type":
        raise CoverFileSyntaxError("second record must be 'type cover' or 'type group'", records[0][0])
    lineno, _, kind, col = records[1]
    if kind == "cover":
        return _parse_cover(version, records[2:])
    if kind == "group":
        return _parse_group(version, records[2:])
    raise CoverFileSyntaxError(f"unknown type {kind!r}", lineno, col + 1)


def _parse_cover(version, records):
    label = ""
    notes = ""
    genus = None
    degree = None
    gen_lines = []  # (lineno, col, text)
    factors = []  # "same" or list of (lineno, col, text)
    first_gen_line = None
    open_block = None  # (start_lineno, list)
    for lineno, key, rest, col in records:
        if key == "gen":
            if open_block is not None:
                open_block[1].append((lineno, col, rest))
            elif factors:
                raise CoverFileSyntaxError("base 'gen' lines must come before 'factor' lines", lineno)
            else:
                if first_gen_line is None:
                    first_gen_line = lineno
                gen_lines.append((lineno, col, rest))
        elif key == "factor":
            if open_block is not None:
                if rest == "end":
                    start, body = open_block
                    factors.append((start, body))
                    open_block = None
                else:
                    raise CoverFileSyntaxError("expected 'factor end' before a new factor", lineno)
            elif rest == "same":
                factors.append("same")
            elif rest == "begin":
                open_block = (lineno, [])
            else:
                raise CoverFileSyntaxError(
                    f"factor must be 'same' or 'begin'...'end', got {rest!r}", lineno, col + 1
                )
        elif key == "genus":
            if genus is not None:
                raise CoverFileSyntaxError("duplicate 'genus'", lineno)
            genus = _parse_int(rest, lineno, col, "genus", 1)
        elif key == "degree":
            if degree is not None:
                raise CoverFileSyntaxError("duplicate 'degree'", lineno)
            degree = _parse_int(rest, lineno, col, "degree", 2)
        elif key == "label":
            label = rest
        elif key == "notes":
            notes = rest
        else:
            raise CoverFileSyntaxError(f"unknown record {key!r}", lineno)
    if open_block is not None:
        raise CoverFileSyntaxError("unterminated factor block", open_block[0])
    if genus is None:
        raise CoverFileSyntaxError("missing 'genus' record")
    if degree is None:
        raise CoverFileSyntaxError("missing 'degree' record")
    if len(gen_lines) != 2 * genus:
        where = gen_lines[-1][0] if gen_lines else None
        raise CoverFileSyntaxError(
            f"generator count must be 2*genus (expected {2 * genus}, got {len(gen_lines)})",
            where,
        )
    gens = tuple(_parse_gen(text, degree, lineno, col) for lineno, col, text in gen_lines)
    _check_relation(genus, degree, gens, first_gen_line)
    parsed_factors = []
    for f in factors:
        if f == "same":
            parsed_factors.append("same")
            continue
        start, body = f
        if len(body) != 2 * genus:
            raise CoverFileSyntaxError(
                f"generator count must be 2*genus (expected {2 * genus}, got {len(body)})",
                start,
            )
        block = tuple(_parse_gen(text, degree, lineno, col) for lineno, col, text in body)
        _check_relation(genus, degree, block, start)
        parsed_factors.append(block)
    if not parsed_factors:
        parsed_factors = ["same"]
    return CoverFile(
        version=version,
        label=label,
        notes=notes,
        genus=genus,
        degree=degree,
        generators=gens,
        factors=tuple(parsed_factors),
    )


def _parse_group(version, records):
    name = ""
    label = ""
    notes = ""
    degree = None
    gen_lines = []
    order = None
    transitivity = None
    for lineno, key, rest, col in records:
        if key == "gen":
            gen_lines.append((lineno, col, rest))
        elif key == "degree":
            degree = _parse_int(rest, lineno, col, "degree", 1)
        elif key == "name":
            name = rest
        elif key == "label":
            label = rest
        elif key == "notes":
            notes = rest
        elif key == "order":
            order = _parse_int(rest, lineno, col, "order", 1)
        elif key == "transitivity":
            transitivity = _parse_int(rest, lineno, col, "transitivity", 0)
        else:
            raise CoverFileSyntaxError(f"unknown record {key!r}", lineno)
    if degree is None:
        raise CoverFileSyntaxError("missing 'degree' record")
    if not gen_lines:
        raise CoverFileSyntaxError("a group record needs at least one 'gen' line")
    gens = tuple(_parse_gen(text, degree, lineno, col) for lineno, col, text in gen_lines)
    return GroupRecord(
        version=version,
        name=name,
        label=label,
        notes=notes,
        degree=degree,
        generators=gens,
        expected_order=order,
        expected_max_transitivity=transitivity,
    )


def parse_cover_file(src):
    """Parse and validate a cover document; group documents are rejected."""
    doc = parse_document(src)
    if not isinstance(doc, CoverFile):
        raise CoverFileSyntaxError("expected a cover document, found a group record")
    return doc


def _load(src):
    if isinstance(src, os.PathLike):
        with open(src, encoding="utf-8") as handle:
            return handle.read()
    if isinstance(src, str):
        if "\n" not in src and os.path.exists(src):
            with open(src, encoding="utf-8") as handle:
                return handle.read()
        return src
    raise TypeError(f"expected text or a path, got {type(src)!r}")


def serialize_cover(cf):
    """Canonical text form; parse(serialize(parse(x))) == parse(x)."""
    lines = [f"version {cf.version}", "type cover"]
    if cf.label:
        lines.append(f"label {cf.label}")
    if cf.notes:
        lines.append(f"notes {cf.notes}")
    lines.append(f"genus {cf.genus}")
    lines.append(f"degree {cf.degree}")
    lines.extend(f"gen {p}" for p in cf.generators)
    for f in cf.factors:
        if f == "same":
            lines.append("factor same")
        else:
            lines.append("factor begin")
            lines.extend(f"gen {p}" for p in f)
            lines.append("factor end")
    return "\n".join(lines) + "\n"


def serialize_group(gr):
    lines = [f"version {gr.version}", "type group"]
    if gr.name:
        lines.append(f"name {gr.name}")
    if gr.label:
        lines.append(f"label {gr.label}")
    if gr.notes:
        lines.append(f"notes {gr.notes}")
    lines.append(f"degree {gr.degree}")
    lines.extend(f"gen {p}" for p in gr.generators)
    if gr.expected_order is not None:
        lines.append(f"order {gr.expected_order}")
    if gr.expected_max_transitivity is not None:
        lines.append(f"transitivity {gr.expected_max_transitivity}")
    return "\n".join(lines) + "\n"
