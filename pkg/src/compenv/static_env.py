"""The static universal processor: pure transition and success boxes.

Both boxes are stateless functions; repeated queries with equal arguments
always yield equal answers.  The transition box implements the standard
one-cell move rule on an unbounded tape (moving past the written region
materializes a blank), and the success box accepts exactly the two halting
patterns: halting state with the head on a blank at either end of a
blank-free word.
"""

from __future__ import annotations

from typing import Optional

from .syntax import (
    BLANK,
    HALT_STATE,
    INPUT_SYMBOLS,
    Configuration,
    Instruction,
)


def tbox_s(c: Configuration, inst: Instruction) -> Optional[Configuration]:
    """Apply ``inst`` to ``c``: write, move one cell, switch state.

    Returns None when the instruction's trigger does not match the
    configuration (the undefined transition).  Defined for every
    instruction, including those firing from the halting state.
    """
    if (c.state, c.head) != (inst.from_state, inst.read):
        return None
    left, right = c.left, c.right
    if inst.direction == "R":
        new_left = left + (inst.write,)
        new_head = right[0] if right else BLANK
        new_right = right[1:]
    else:
        new_right = (inst.write,) + right
        new_head = left[-1] if left else BLANK
        new_left = left[:-1]
    return Configuration(inst.to_state, new_left, new_head, new_right)


def _word_over_inputs(cells: tuple) -> bool:
    return all(a in INPUT_SYMBOLS for a in cells)


def success_word_right(c: Configuration) -> Optional[str]:
    """The word ``x`` when canonical ``c`` is halted with the head on the
    blank just right of a blank-free word; otherwise None."""
    if c.state == HALT_STATE and c.head == BLANK and not c.right \
            and _word_over_inputs(c.left):
        return "".join(c.left)
    return None


def success_word_left(c: Configuration) -> Optional[str]:
    """The word ``x`` when canonical ``c`` is halted with the head on the
    blank just left of a blank-free word; otherwise None."""
    if c.state == HALT_STATE and c.head == BLANK and not c.left \
            and _word_over_inputs(c.right):
        return "".join(c.right)
    return None


def sbox_s(c: Configuration) -> bool:
    """True (YES) iff canonical ``c`` matches one of the two halting
    patterns; False (NO) otherwise."""
    return success_word_left(c) is not None or success_word_right(c) is not None


class StaticProcessor:
    """Stateless processor pairing the static boxes behind a uniform
    tbox/sbox interface."""

    evolving = False

    def tbox(self, c: Configuration, inst: Instruction) -> Optional[Configuration]:
        return tbox_s(c, inst)

    def sbox(self, c: Configuration) -> bool:
        return sbox_s(c)
