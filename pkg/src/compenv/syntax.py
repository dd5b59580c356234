"""Shared programming language of every universal processor.

Instructions, configurations and deterministic instruction sets form the
syntax every processor in this package speaks.  A configuration is a machine
state plus a tape snapshot with a marked head cell; the tape alphabet is
fixed to ``0``, ``1`` and the blank (rendered ``_`` in every text format).

Configurations are kept in canonical form: exactly the written region plus
the head cell is stored, so blanks beyond the outermost non-blank symbol
(or the head) are trimmed.  Equality of configurations is equality of
canonical forms.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Optional

BLANK = "_"
INPUT_SYMBOLS = ("0", "1")
TAPE_SYMBOLS = INPUT_SYMBOLS + (BLANK,)
DIRECTIONS = ("L", "R")

INITIAL_STATE = "q0"
HALT_STATE = "h"

_STATE_RE = re.compile(r"^(h|q\d+)$")
_CONFIG_RE = re.compile(r"^\((h|q\d+), ([01_]*)\[([01_])\]([01_]*)\)$")


class SyntaxError_(ValueError):
    """Base class for malformed syntax-level input."""


class ProcedureSyntaxError(SyntaxError_):
    """A procedure file line does not match the instruction grammar."""

    def __init__(self, message: str, line: Optional[int] = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class DeterminismError(ValueError):
    """Two instructions share a (state, symbol) trigger with different actions."""


def is_state(s: str) -> bool:
    return bool(_STATE_RE.match(s))


def require_state(s: str) -> str:
    if not is_state(s):
        raise SyntaxError_(f"not a machine state: {s!r} (expected 'h' or 'q<digits>')")
    return s


def require_tape_symbol(a: str) -> str:
    if a not in TAPE_SYMBOLS:
        raise SyntaxError_(f"not a tape symbol: {a!r} (expected one of 0, 1, _)")
    return a


def require_input_string(x: str) -> str:
    for ch in x:
        if ch not in INPUT_SYMBOLS:
            raise SyntaxError_(f"not an input symbol: {ch!r} (input strings range over 0, 1)")
    return x


def _state_sort_key(s: str) -> tuple:
    # q-states ordered by index, halting state last
    if s == HALT_STATE:
        return (1, 0)
    return (0, int(s[1:]))


@dataclass(frozen=True, order=False)
class Instruction:
    """One atomic command: in state `from_state` reading `read`, write
    `write`, move `direction`, enter `to_state`."""

    from_state: str
    read: str
    to_state: str
    write: str
    direction: str

    def __post_init__(self):
        require_state(self.from_state)
        require_tape_symbol(self.read)
        require_state(self.to_state)
        require_tape_symbol(self.write)
        if self.direction not in DIRECTIONS:
            raise SyntaxError_(f"not a direction: {self.direction!r} (expected L or R)")

    @property
    def trigger(self) -> tuple:
        return (self.from_state, self.read)

    def sort_key(self) -> tuple:
        return (_state_sort_key(self.from_state), self.read,
                _state_sort_key(self.to_state), self.write, self.direction)


def canonicalize(left: Iterable[str], head: str, right: Iterable[str]) -> tuple:
    """Trim blanks beyond the outermost non-blank cell on each side.

    The head cell is always kept; interior blanks are kept.  Idempotent.
    """
    left = tuple(left)
    right = tuple(right)
    i = 0
    while i < len(left) and left[i] == BLANK:
        i += 1
    j = len(right)
    while j > 0 and right[j - 1] == BLANK:
        j -= 1
    return left[i:], head, right[:j]


@dataclass(frozen=True)
class Configuration:
    """A machine state plus tape-with-head snapshot, stored canonically."""

    state: str
    left: tuple = ()
    head: str = BLANK
    right: tuple = ()

    def __post_init__(self):
        require_state(self.state)
        require_tape_symbol(self.head)
        for a in self.left:
            require_tape_symbol(a)
        for a in self.right:
            require_tape_symbol(a)
        left, head, right = canonicalize(self.left, self.head, self.right)
        object.__setattr__(self, "left", left)
        object.__setattr__(self, "right", right)

    def display(self) -> str:
        return f"({self.state}, {''.join(self.left)}[{self.head}]{''.join(self.right)})"

    def __str__(self) -> str:
        return self.display()


def config(state: str, left: str = "", head: str = BLANK, right: str = "") -> Configuration:
    """Convenience constructor taking tape halves as strings."""
    return Configuration(state, tuple(left), head, tuple(right))


def parse_configuration(text: str) -> Configuration:
    m = _CONFIG_RE.match(text.strip())
    if m is None:
        raise SyntaxError_(
            f"not a configuration: {text!r} (expected '(<state>, <left>[<head>]<right>)')")
    state, left, head, right = m.groups()
    return Configuration(state, tuple(left), head, tuple(right))


def format_configuration(c: Configuration) -> str:
    return c.display()


def initial_config(x: str) -> Configuration:
    """Start configuration for input ``x``: initial state, head on a blank,
    the input written to the right."""
    require_input_string(x)
    return Configuration(INITIAL_STATE, (), BLANK, tuple(x))


def associated_string(c: Configuration) -> str:
    """Tape content of ``c`` with the blank padding trimmed.

    Interior blanks are kept; the result ranges over the full tape alphabet.
    """
    word = "".join(c.left) + c.head + "".join(c.right)
    return word.strip(BLANK)


def check_determinism(instructions: Iterable[Instruction]) -> bool:
    """True iff no two instructions share a trigger with differing actions."""
    seen = {}
    for inst in instructions:
        prev = seen.get(inst.trigger)
        if prev is not None and prev != inst:
            return False
        seen[inst.trigger] = inst
    return True


@dataclass(frozen=True)
class SyntaxProcedure:
    """A finite deterministic instruction set.

    Instructions are stored sorted, so two procedures with the same
    instruction set compare equal regardless of construction order.
    """

    instructions: tuple
    _table: dict = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        insts = tuple(sorted(set(self.instructions), key=Instruction.sort_key))
        table = {}
        for inst in insts:
            prev = table.get(inst.trigger)
            if prev is not None:
                raise DeterminismError(
                    f"conflicting instructions for {inst.trigger}: "
                    f"{format_instruction(prev)} vs {format_instruction(inst)}")
            table[inst.trigger] = inst
        object.__setattr__(self, "instructions", insts)
        object.__setattr__(self, "_table", table)

    def __iter__(self) -> Iterator[Instruction]:
        return iter(self.instructions)

    def __len__(self) -> int:
        return len(self.instructions)

    def __contains__(self, inst: Instruction) -> bool:
        return inst in self.instructions

    def lookup(self, state: str, symbol: str) -> Optional[Instruction]:
        return self._table.get((state, symbol))


def procedure(*instructions: Instruction) -> SyntaxProcedure:
    return SyntaxProcedure(tuple(instructions))


def select_instruction(m: SyntaxProcedure, c: Configuration) -> Optional[Instruction]:
    """The unique instruction of ``m`` triggered by ``c``, or None.

    Determinism of ``m`` guarantees uniqueness; None models the undefined
    selection.
    """
    return m.lookup(c.state, c.head)


def parse_instruction(text: str, line: Optional[int] = None) -> Instruction:
    """Parse `<state>,<sym>/<state>,<sym>,<L|R>`."""
    parts = text.strip().split("/")
    if len(parts) != 2:
        raise ProcedureSyntaxError(f"expected one '/' in {text!r}", line)
    lhs = parts[0].split(",")
    rhs = parts[1].split(",")
    if len(lhs) != 2 or len(rhs) != 3:
        raise ProcedureSyntaxError(
            f"expected '<state>,<sym>/<state>,<sym>,<L|R>' in {text!r}", line)
    try:
        return Instruction(lhs[0].strip(), lhs[1].strip(),
                           rhs[0].strip(), rhs[1].strip(), rhs[2].strip())
    except SyntaxError_ as exc:
        raise ProcedureSyntaxError(str(exc), line) from exc


def format_instruction(inst: Instruction) -> str:
    return (f"{inst.from_state},{inst.read}/"
            f"{inst.to_state},{inst.write},{inst.direction}")


def parse_procedure(text: str) -> SyntaxProcedure:
    """Parse a procedure file: one instruction per line, ``#`` comments.

    Raises ProcedureSyntaxError with a line number on grammar errors and
    DeterminismError on conflicting triggers.
    """
    instructions = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.strip()
        if not stripped or stripped.startswith("#"):
            continue
        instructions.append(parse_instruction(stripped, line=lineno))
    return SyntaxProcedure(tuple(instructions))


def format_procedure(m: SyntaxProcedure) -> str:
    return "\n".join(format_instruction(inst) for inst in m) + ("\n" if len(m) else "")
