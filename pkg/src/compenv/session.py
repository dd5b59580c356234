"""Computist sessions: free-order box queries against an opaque processor,
procedure runs with time accounting, and append-only transcripts.

A session wraps one processor (static, evolving, or blinded behind a
seeded coin) and records every box answer in an append-only log with
strictly increasing sequence numbers.  Transcripts serialize that log as
JSON Lines, one event per line, and are byte-stable across re-export.
"""

from __future__ import annotations

import enum
import json
import random
from dataclasses import dataclass
from typing import Optional, Union

from .syntax import (
    Configuration,
    Instruction,
    SyntaxProcedure,
    format_configuration,
    format_instruction,
    initial_config,
    select_instruction,
)
from .static_env import StaticProcessor
from .evolving import EvolvingProcessor

DEFAULT_MAX_STEPS = 10_000


class EnvironmentKind(str, enum.Enum):
    ET = "et"
    EE = "ee"
    BLINDED = "blinded"


class SessionClosedError(RuntimeError):
    """The session was closed by a reveal; no further queries are answered."""


@dataclass(frozen=True)
class TboxQuery:
    seq: int
    config: Configuration
    instruction: Instruction
    result: Optional[Configuration]

    def to_json_obj(self) -> dict:
        return {
            "seq": self.seq,
            "kind": "tbox",
            "config": format_configuration(self.config),
            "instruction": format_instruction(self.instruction),
            "answer": None if self.result is None else format_configuration(self.result),
        }


@dataclass(frozen=True)
class SboxQuery:
    seq: int
    config: Configuration
    verdict: bool

    def to_json_obj(self) -> dict:
        return {
            "seq": self.seq,
            "kind": "sbox",
            "config": format_configuration(self.config),
            "answer": "YES" if self.verdict else "NO",
        }


@dataclass(frozen=True)
class RunSummary:
    seq: int
    procedure: SyntaxProcedure
    input: str
    outcome: str  # success | stuck-no | max-steps
    path_length: int

    def to_json_obj(self) -> dict:
        return {
            "seq": self.seq,
            "kind": "run",
            "procedure": "; ".join(format_instruction(i) for i in self.procedure),
            "input": self.input,
            "answer": self.outcome,
            "time": self.path_length,
        }


Event = Union[TboxQuery, SboxQuery, RunSummary]

STUCK_NO = "stuck-no"
MAX_STEPS = "max-steps"
SUCCESS = "success"


@dataclass(frozen=True)
class RunOutcome:
    """Result of running a procedure: the computation path, success flag,
    and (for rejections) the reason."""

    path: tuple
    success: bool
    reason: Optional[str] = None  # STUCK_NO or MAX_STEPS when not successful

    @property
    def time(self) -> int:
        return len(self.path)

    @property
    def final(self) -> Configuration:
        return self.path[-1]


@dataclass(frozen=True)
class Transcript:
    """Immutable serialized snapshot of a session log."""

    events: tuple

    def to_jsonl(self) -> str:
        return "".join(
            json.dumps(e.to_json_obj(), separators=(",", ":")) + "\n"
            for e in self.events
        )

    def __len__(self) -> int:
        return len(self.events)


class Session:
    """One computist session: a processor plus an append-only event log.

    Mutations within one session must be externally serialized; distinct
    sessions are independent.
    """

    def __init__(self, kind: EnvironmentKind, seed: Optional[int] = None):
        self.kind = kind
        self.log: list = []
        self._seq = 0
        self._closed = False
        if kind == EnvironmentKind.ET:
            self._hidden_kind = EnvironmentKind.ET
        elif kind == EnvironmentKind.EE:
            self._hidden_kind = EnvironmentKind.EE
        else:
            coin = random.Random(seed).random() < 0.5
            self._hidden_kind = EnvironmentKind.ET if coin else EnvironmentKind.EE
        if self._hidden_kind == EnvironmentKind.ET:
            self._processor = StaticProcessor()
        else:
            self._processor = EvolvingProcessor()

    @property
    def clock(self) -> int:
        return self._seq

    def _next_seq(self) -> int:
        self._seq += 1
        return self._seq

    def _check_open(self):
        if self._closed:
            raise SessionClosedError("session was revealed and is closed")

    def query_tbox(self, c: Configuration, inst: Instruction) -> Optional[Configuration]:
        self._check_open()
        result = self._processor.tbox(c, inst)
        self.log.append(TboxQuery(self._next_seq(), c, inst, result))
        return result

    def query_sbox(self, c: Configuration) -> bool:
        self._check_open()
        verdict = self._processor.sbox(c)
        self.log.append(SboxQuery(self._next_seq(), c, verdict))
        return verdict

    def run_procedure(self, m: SyntaxProcedure, x: str,
                      max_steps: int = DEFAULT_MAX_STEPS) -> RunOutcome:
        """Iterate the transition box from the start configuration until no
        instruction applies, then ask the success box once.

        The time of a run is the number of configurations in its path.  A
        run that exhausts ``max_steps`` is rejected without consulting the
        success box (the budget signals possible divergence).
        """
        if max_steps < 1:
            raise ValueError("max_steps must be >= 1")
        self._check_open()
        c = initial_config(x)
        path = [c]
        outcome: RunOutcome
        while True:
            inst = select_instruction(m, c)
            if inst is None:
                verdict = self.query_sbox(c)
                if verdict:
                    outcome = RunOutcome(tuple(path), True)
                else:
                    outcome = RunOutcome(tuple(path), False, STUCK_NO)
                break
            if len(path) >= max_steps:
                outcome = RunOutcome(tuple(path), False, MAX_STEPS)
                break
            c = self.query_tbox(c, inst)
            assert c is not None  # select_instruction guarantees applicability
            path.append(c)
        tag = SUCCESS if outcome.success else outcome.reason
        self.log.append(RunSummary(self._next_seq(), m, x, tag, outcome.time))
        return outcome

    def membership(self, m: SyntaxProcedure, x: str,
                   max_steps: int = DEFAULT_MAX_STEPS) -> bool:
        return self.run_procedure(m, x, max_steps).success

    def export_transcript(self) -> Transcript:
        return Transcript(tuple(self.log))

    def reveal(self) -> EnvironmentKind:
        """Disclose the hidden kind and close the session (blinded only)."""
        if self.kind != EnvironmentKind.BLINDED:
            raise ValueError("reveal applies to blinded sessions only")
        self._check_open()
        self._closed = True
        return self._hidden_kind

    @property
    def closed(self) -> bool:
        return self._closed


def open_session(kind: Union[EnvironmentKind, str],
                 seed: Optional[int] = None) -> Session:
    """Open a fresh session of the given kind.

    Evolving sessions start with a fresh acceptor; blinded sessions flip a
    seeded coin to pick their hidden processor, so equal seeds give
    identical behavior.
    """
    return Session(EnvironmentKind(kind), seed)
