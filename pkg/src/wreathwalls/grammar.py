"""Parsers for the element grammar, sample files, and lamp table files.

The element grammar (produced by ``str()`` on the corresponding types):

    word        := "1" | letter+          letters a..z generators, A..Z inverses
    lampentry   := word ":" elementId     elementId decimal, 1..order-1
    config      := "{" [lampentry ("," lampentry)*] "}"
    wreath      := config "|" word        e.g. "{1:1,a:1}|ab"

Words are freely reduced on parse, so ``parse_element(str(x)) == x`` and
``str(parse_element(s))`` is the canonical (shortlex-sorted, reduced) form.

A lamp table file starts with a line ``order k`` followed by k lines of k
space-separated ids, row times column. A sample file holds one wreath
literal per line; ``#`` starts a comment and blank lines are skipped.
"""

from __future__ import annotations

from pathlib import Path

from .groups import LampConfig, LampGroup, MAX_RANK, ReducedWord, WreathElement


class ParseError(ValueError):
    """A syntax or range error in a literal, with the offending position."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position


def _scan_word(text: str, start: int, rank: int) -> tuple[ReducedWord, int]:
    if start < len(text) and text[start] == "1":
        return ReducedWord.identity(rank), start + 1
    letters = []
    i = start
    while i < len(text):
        c = text[i]
        if "a" <= c <= "z":
            index = ord(c) - ord("a") + 1
        elif "A" <= c <= "Z":
            index = -(ord(c) - ord("A") + 1)
        else:
            break
        if abs(index) > rank:
            raise ParseError(f"generator {c!r} outside rank {rank}", i)
        letters.append(index)
        i += 1
    if not letters:
        found = text[start] if start < len(text) else "end of input"
        raise ParseError(f"expected a word, found {found!r}", start)
    return ReducedWord.from_letters(letters, rank), i


def _expect(text: str, i: int, char: str) -> int:
    if i >= len(text) or text[i] != char:
        found = text[i] if i < len(text) else "end of input"
        raise ParseError(f"expected {char!r}, found {found!r}", i)
    return i + 1


def parse_word(text: str, rank: int) -> ReducedWord:
    """Parse a whole string as a word literal."""
    _check_rank(rank)
    word, i = _scan_word(text, 0, rank)
    if i != len(text):
        raise ParseError(f"unexpected trailing {text[i]!r}", i)
    return word


def _scan_config(
    text: str, start: int, lamps: LampGroup, rank: int
) -> tuple[LampConfig, int]:
    i = _expect(text, start, "{")
    pairs: list[tuple[ReducedWord, int]] = []
    positions_seen: set[ReducedWord] = set()
    if i < len(text) and text[i] == "}":
        return LampConfig.empty(lamps, rank), i + 1
    while True:
        entry_start = i
        position, i = _scan_word(text, i, rank)
        if position in positions_seen:
            raise ParseError(f"duplicate position {position} in configuration", entry_start)
        positions_seen.add(position)
        i = _expect(text, i, ":")
        value_start = i
        while i < len(text) and text[i].isdigit():
            i += 1
        if i == value_start:
            found = text[i] if i < len(text) else "end of input"
            raise ParseError(f"expected a lamp id, found {found!r}", i)
        value = int(text[value_start:i])
        if value == 0:
            raise ParseError("lamp id 0 is the identity and may not appear", value_start)
        if value >= lamps.order:
            raise ParseError(
                f"lamp id {value} outside 1..{lamps.order - 1}", value_start
            )
        pairs.append((position, value))
        if i < len(text) and text[i] == ",":
            i += 1
            continue
        i = _expect(text, i, "}")
        return LampConfig.from_pairs(pairs, lamps, rank), i


def parse_config(text: str, lamps: LampGroup, rank: int) -> LampConfig:
    """Parse a whole string as a configuration literal."""
    _check_rank(rank)
    config, i = _scan_config(text, 0, lamps, rank)
    if i != len(text):
        raise ParseError(f"unexpected trailing {text[i]!r}", i)
    return config


def parse_element(text: str, lamps: LampGroup, rank: int) -> WreathElement:
    """Parse a wreath element literal ``config|word``."""
    _check_rank(rank)
    if not text:
        raise ParseError("empty element literal", 0)
    config, i = _scan_config(text, 0, lamps, rank)
    i = _expect(text, i, "|")
    position, i = _scan_word(text, i, rank)
    if i != len(text):
        raise ParseError(f"unexpected trailing {text[i]!r}", i)
    return WreathElement(config, position)


def _check_rank(rank: int) -> None:
    if not 1 <= rank <= MAX_RANK:
        raise ValueError(f"rank must be in 1..{MAX_RANK}, got {rank}")


# -- sample files -----------------------------------------------------------


def parse_sample_text(text: str, lamps: LampGroup, rank: int) -> list[WreathElement]:
    """One element literal per line; '#' comments and blank lines ignored."""
    elements = []
    for lineno, raw_line in enumerate(text.splitlines(), start=1):
        line = raw_line.split("#", 1)[0].strip()
        if not line:
            continue
        try:
            elements.append(parse_element(line, lamps, rank))
        except ParseError as exc:
            raise ParseError(f"line {lineno}: {exc.args[0]}", exc.position) from exc
    return elements


def load_sample_file(path: str | Path, lamps: LampGroup, rank: int) -> list[WreathElement]:
    return parse_sample_text(Path(path).read_text(), lamps, rank)


# -- lamp table files ---------------------------------------------------------


def parse_lamp_table(text: str) -> LampGroup:
    """Parse a lamp table: line ``order k`` then k rows of k ids."""
    lines = [line.strip() for line in text.splitlines() if line.strip()]
    if not lines:
        raise ValueError("empty lamp table")
    header = lines[0].split()
    if len(header) != 2 or header[0] != "order" or not header[1].isdigit():
        raise ValueError(f"lamp table must start with 'order k', got {lines[0]!r}")
    order = int(header[1])
    if len(lines) - 1 != order:
        raise ValueError(f"expected {order} table rows, got {len(lines) - 1}")
    table = []
    for lineno, line in enumerate(lines[1:], start=2):
        fields = line.split()
        try:
            row = [int(field) for field in fields]
        except ValueError:
            raise ValueError(f"line {lineno}: table entries must be integers") from None
        table.append(row)
    return LampGroup(table)


def load_lamp_table(path: str | Path) -> LampGroup:
    return parse_lamp_table(Path(path).read_text())


def format_lamp_table(lamps: LampGroup) -> str:
    lines = [f"order {lamps.order}"]
    lines.extend(" ".join(str(v) for v in row) for row in lamps.table)
    return "\n".join(lines) + "\n"
