"""Persistently evolving machinery: automata, their evolution rule, and the
stateful success box built on top of them.

The automaton class used throughout has at most one transition per
(state, symbol) pair.  The evolution rule never removes anything: a run
that is accepted leaves the automaton alone; a run that stops in a
non-accepting state either leaves it alone (when one more symbol could
reach an accepting state) or marks that state accepting; a run that
crashes grafts a fresh accepting chain for the unread suffix.  Because
growth is monotone, answers once given are reproduced forever.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from typing import Optional, Sequence, Tuple

from .syntax import INPUT_SYMBOLS, Configuration
from .static_env import success_word_left, success_word_right

_STATE_INDEX_RE = re.compile(r"^[sq](\d+)$")


class AutomatonError(ValueError):
    """Structural invariant of an automaton violated."""


@dataclass(frozen=True)
class Nfa1:
    """Finite automaton with at most one transition per (state, symbol).

    ``delta`` maps (state, symbol) to the successor state; absence of a key
    is an undefined transition.
    """

    states: frozenset
    start: str
    delta: tuple  # sorted tuple of ((state, symbol), state) pairs
    accepting: frozenset

    def __post_init__(self):
        states = frozenset(self.states)
        accepting = frozenset(self.accepting)
        delta_items = tuple(sorted(dict(self.delta).items()))
        if self.start not in states:
            raise AutomatonError(f"start state {self.start!r} not among states")
        if not accepting <= states:
            raise AutomatonError("accepting set contains unknown states")
        for (src, sym), dst in delta_items:
            if src not in states or dst not in states:
                raise AutomatonError(f"transition ({src},{sym})->{dst} leaves the state set")
            if sym not in INPUT_SYMBOLS:
                raise AutomatonError(f"transition label {sym!r} outside the input alphabet")
        object.__setattr__(self, "states", states)
        object.__setattr__(self, "accepting", accepting)
        object.__setattr__(self, "delta", delta_items)

    def step(self, state: str, symbol: str) -> Optional[str]:
        return self._delta_map().get((state, symbol))

    def _delta_map(self) -> dict:
        cached = getattr(self, "_map", None)
        if cached is None:
            cached = dict(self.delta)
            object.__setattr__(self, "_map", cached)
        return cached

    def size(self) -> Tuple[int, int, int]:
        return (len(self.states), len(self.delta), len(self.accepting))

    def to_snapshot(self) -> dict:
        """JSON-ready structural snapshot, stably ordered."""
        return {
            "states": sorted(self.states),
            "start": self.start,
            "transitions": [
                {"from": src, "symbol": sym, "to": dst}
                for (src, sym), dst in self.delta
            ],
            "accepting": sorted(self.accepting),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_snapshot(), sort_keys=True)


def empty_automaton() -> Nfa1:
    """The one-state automaton with no transitions and nothing accepting."""
    return Nfa1(frozenset({"q0"}), "q0", (), frozenset())


ACCEPTED = "accepted"
STOPPED = "stopped"
CRASHED = "crashed"


@dataclass(frozen=True)
class Nfa1Run:
    """Outcome of running an automaton on a string.

    ``outcome`` is one of accepted / stopped / crashed; ``state`` is where
    the run ended; ``consumed`` counts symbols read (< len(input) only when
    crashed); ``one_step_to_accept`` is meaningful for stopped runs.
    """

    outcome: str
    state: str
    consumed: int
    one_step_to_accept: bool = False


def run_nfa1(a: Nfa1, x: str) -> Nfa1Run:
    """Simulate ``a`` on ``x`` symbol by symbol."""
    for ch in x:
        if ch not in INPUT_SYMBOLS:
            raise AutomatonError(f"not an input symbol: {ch!r}")
    state = a.start
    for i, ch in enumerate(x):
        nxt = a.step(state, ch)
        if nxt is None:
            return Nfa1Run(CRASHED, state, i)
        state = nxt
    if state in a.accepting:
        return Nfa1Run(ACCEPTED, state, len(x))
    one_step = False
    for sym in INPUT_SYMBOLS:
        dst = a.step(state, sym)
        if dst is not None and dst in a.accepting:
            one_step = True
            break
    return Nfa1Run(STOPPED, state, len(x), one_step_to_accept=one_step)


def _max_state_index(a: Nfa1) -> int:
    best = 0
    for s in a.states:
        m = _STATE_INDEX_RE.match(s)
        if m:
            best = max(best, int(m.group(1)))
    return best


def _evolve_from_run(a: Nfa1, x: str, run: Nfa1Run) -> Nfa1:
    if run.outcome == ACCEPTED:
        return a
    if run.outcome == STOPPED:
        if run.one_step_to_accept:
            return a
        return Nfa1(a.states, a.start, a.delta, a.accepting | {run.state})
    # crashed: append a chain for the unread suffix
    suffix = x[run.consumed:]
    base = _max_state_index(a)
    fresh = [f"s{base + 1 + i}" for i in range(len(suffix))]
    delta = dict(a.delta)
    src = run.state
    for sym, dst in zip(suffix, fresh):
        delta[(src, sym)] = dst
        src = dst
    return Nfa1(
        a.states | frozenset(fresh),
        a.start,
        tuple(delta.items()),
        a.accepting | {fresh[-1]},
    )


def evolve(a: Nfa1, x: str) -> Nfa1:
    """One evolution step of ``a`` under input ``x``.

    Accepted runs and stopped runs one symbol away from acceptance leave
    the automaton unchanged; other stopped runs mark the final state
    accepting; crashed runs graft a fresh accepting chain spelling the
    unread suffix.  Fresh chain states take the next unused indices, so the
    result is a deterministic function of (automaton, input).
    """
    return _evolve_from_run(a, x, run_nfa1(a, x))


@dataclass
class EvolvingAcceptor:
    """A persistently evolving acceptor: evolve on every query, then answer.

    The automaton only ever grows; the append-only history records every
    (input, output bit) pair, and the step counter charges one unit per
    symbol read, transition added, and accepting-set insertion.
    """

    current: Nfa1 = field(default_factory=empty_automaton)
    history: list = field(default_factory=list)
    step_counter: int = 0

    def query(self, x: str) -> int:
        before = self.current
        first = run_nfa1(before, x)
        evolved = _evolve_from_run(before, x, first)
        final = run_nfa1(evolved, x)
        bit = 1 if final.outcome == ACCEPTED else 0
        added_delta = len(evolved.delta) - len(before.delta)
        added_accepting = len(evolved.accepting) - len(before.accepting)
        self.step_counter += first.consumed + final.consumed + added_delta + added_accepting
        self.current = evolved
        self.history.append((x, bit))
        return bit


def fresh_acceptor() -> EvolvingAcceptor:
    """The evolving acceptor seeded with the empty one-state automaton."""
    return EvolvingAcceptor()



def check_persistence(initial: Nfa1, inputs: Sequence[str]) -> bool:
    """Evolve through ``inputs`` and verify every historical answer is
    reproduced by every later automaton in the chain."""
    chain = [initial]
    answers = []
    for x in inputs:
        evolved = evolve(chain[-1], x)
        bit = 1 if run_nfa1(evolved, x).outcome == ACCEPTED else 0
        chain.append(evolved)
        answers.append(bit)
    for i, (x, bit) in enumerate(zip(inputs, answers)):
        for later in chain[i + 1:]:
            replay = evolve(later, x)
            replay_bit = 1 if run_nfa1(replay, x).outcome == ACCEPTED else 0
            if replay_bit != bit:
                return False
    return True


class EvolvingSuccessBox:
    """Stateful success box: halting-left patterns are accepted outright,
    halting-right patterns are referred to a private evolving acceptor."""

    def __init__(self, acceptor: Optional[EvolvingAcceptor] = None):
        self.acceptor = acceptor if acceptor is not None else fresh_acceptor()

    def sbox(self, c: Configuration) -> bool:
        if success_word_left(c) is not None:
            return True
        word = success_word_right(c)
        if word is not None:
            return self.acceptor.query(word) == 1
        return False


class EvolvingProcessor:
    """Processor whose transition box is the static one and whose success
    box persistently evolves."""

    evolving = True

    def __init__(self):
        from .static_env import tbox_s
        self._tbox = tbox_s
        self.success_box = EvolvingSuccessBox()

    def tbox(self, c: Configuration, inst) -> Optional[Configuration]:
        return self._tbox(c, inst)

    def sbox(self, c: Configuration) -> bool:
        return self.success_box.sbox(c)
