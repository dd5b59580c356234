"""compenv: interactive computation environments.

A static Turing-style universal processor, a persistently evolving twin,
computist sessions with append-only transcripts, verification tooling for
the environments' axioms, and scripted experiments reproducing their
order-sensitivity phenomena.
"""

from .syntax import (
    BLANK,
    Configuration,
    Instruction,
    SyntaxProcedure,
    associated_string,
    canonicalize,
    check_determinism,
    config,
    format_configuration,
    format_instruction,
    format_procedure,
    initial_config,
    parse_configuration,
    parse_instruction,
    parse_procedure,
    procedure,
    select_instruction,
)
from .static_env import StaticProcessor, sbox_s, tbox_s
from .evolving import (
    EvolvingAcceptor,
    EvolvingProcessor,
    EvolvingSuccessBox,
    Nfa1,
    check_persistence,
    empty_automaton,
    evolve,
    fresh_acceptor,
    run_nfa1,
)
from .session import (
    EnvironmentKind,
    RunOutcome,
    Session,
    Transcript,
    open_session,
)

__all__ = [
    "BLANK",
    "Configuration",
    "Instruction",
    "SyntaxProcedure",
    "associated_string",
    "canonicalize",
    "check_determinism",
    "config",
    "format_configuration",
    "format_instruction",
    "format_procedure",
    "initial_config",
    "parse_configuration",
    "parse_instruction",
    "parse_procedure",
    "procedure",
    "select_instruction",
    "StaticProcessor",
    "sbox_s",
    "tbox_s",
    "EvolvingAcceptor",
    "EvolvingProcessor",
    "EvolvingSuccessBox",
    "Nfa1",
    "check_persistence",
    "empty_automaton",
    "evolve",
    "fresh_acceptor",
    "run_nfa1",
    "EnvironmentKind",
    "RunOutcome",
    "Session",
    "Transcript",
    "open_session",
]
