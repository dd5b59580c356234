"""Stock procedures used by the experiments, the CLI and the tests."""

from __future__ import annotations

from .syntax import Instruction, SyntaxProcedure, procedure


def scan_right() -> SyntaxProcedure:
    """Walk right across the input and stop just past its last symbol.

    On input ``x`` the run sticks at the halted configuration whose word
    sits entirely left of the head, which is exactly the configuration the
    evolving success box refers to its acceptor.
    """
    return procedure(
        Instruction("q0", "_", "h", "_", "R"),
        Instruction("h", "0", "h", "0", "R"),
        Instruction("h", "1", "h", "1", "R"),
    )


def ones_then_zero() -> SyntaxProcedure:
    """Accept strings of ones followed by a single zero, halting at the
    left end.

    Every successful run sticks in the halted pattern with the word to the
    right of the head, so the evolving success box never consults its
    acceptor for this procedure.
    """
    return procedure(
        Instruction("q0", "_", "q1", "_", "R"),
        Instruction("q1", "1", "q1", "1", "R"),
        Instruction("q1", "0", "q2", "0", "R"),
        Instruction("q2", "_", "h", "_", "L"),
        Instruction("h", "0", "h", "0", "L"),
        Instruction("h", "1", "h", "1", "L"),
    )


def accept_any() -> SyntaxProcedure:
    """Halt successfully on every nonempty input in three steps.

    The run bounces one cell right and back, sticking at the halted
    pattern with the word to the right of the head; neither environment
    consults an acceptor for that pattern.
    """
    return procedure(
        Instruction("q0", "_", "q1", "_", "R"),
        Instruction("q1", "0", "h", "0", "L"),
        Instruction("q1", "1", "h", "1", "L"),
    )


def reject_all() -> SyntaxProcedure:
    """The empty procedure: sticks immediately in the start configuration,
    which no success box accepts."""
    return procedure()
