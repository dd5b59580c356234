"""Executable checks of the environments' meta-claims.

This module provides an independent classical acceptance oracle, model
checks of the four box axioms against both environments, constructive
complexity-equivalence witnesses between the two processors, the
prefix-tree construction showing any finite transcript has a static
explanation, and the exhaustive desk-scale comparison of the static
environment against the classical oracle.

The oracle deliberately shares no stepping code with the static
environment: it works on a sparse integer-indexed tape and judges
acceptance by the first visit of a successful configuration.
"""

from __future__ import annotations

import random
import time as _time
from dataclasses import dataclass, field
from itertools import product
from typing import Iterable, Iterator, List, Optional, Sequence, Tuple

from .syntax import (
    BLANK,
    HALT_STATE,
    INITIAL_STATE,
    INPUT_SYMBOLS,
    TAPE_SYMBOLS,
    Configuration,
    Instruction,
    SyntaxProcedure,
    canonicalize,
    format_configuration,
    format_instruction,
    require_input_string,
)
from .static_env import sbox_s, success_word_left, success_word_right, tbox_s
from .evolving import ACCEPTED, EvolvingSuccessBox, Nfa1, run_nfa1
from .session import DEFAULT_MAX_STEPS, EnvironmentKind, SboxQuery, open_session

DEFAULT_SEED = 20260810


# ---------------------------------------------------------------------------
# classical acceptance oracle (independent code path)


@dataclass(frozen=True)
class OracleResult:
    accepted: bool
    time: Optional[int]
    max_steps_hit: bool = False


def _raw_successful(tape: dict, head: int) -> bool:
    """Successful tape pattern on a sparse tape holding non-blank cells."""
    if head in tape:
        return False
    if not tape:
        return True
    lo = min(tape)
    hi = max(tape)
    if hi - lo + 1 != len(tape):
        return False  # interior blank
    return head == lo - 1 or head == hi + 1


def classical_tm_oracle(m: SyntaxProcedure, x: str,
                        max_steps: int = DEFAULT_MAX_STEPS) -> OracleResult:
    """Acceptance by the classical reading: the deterministic run accepts
    at its first visit of a successful configuration, with time equal to
    the number of configurations seen so far."""
    require_input_string(x)
    tape = {i + 1: ch for i, ch in enumerate(x)}
    head = 0
    state = INITIAL_STATE
    configs = 1
    while True:
        if state == HALT_STATE and _raw_successful(tape, head):
            return OracleResult(True, configs)
        inst = m.lookup(state, tape.get(head, BLANK))
        if inst is None:
            return OracleResult(False, None)
        if configs >= max_steps:
            return OracleResult(False, None, max_steps_hit=True)
        if inst.write == BLANK:
            tape.pop(head, None)
        else:
            tape[head] = inst.write
        head += 1 if inst.direction == "R" else -1
        state = inst.to_state
        configs += 1


def raw_step(c: Configuration, inst: Instruction) -> Optional[Configuration]:
    """One move computed on a sparse tape, independent of the transition
    box implementation; used as the closed-form reference for A1."""
    if (c.state, c.head) != (inst.from_state, inst.read):
        return None
    tape = {}
    for i, a in enumerate(reversed(c.left)):
        if a != BLANK:
            tape[-(i + 1)] = a
    if c.head != BLANK:
        tape[0] = c.head
    for i, a in enumerate(c.right):
        if a != BLANK:
            tape[i + 1] = a
    if inst.write == BLANK:
        tape.pop(0, None)
    else:
        tape[0] = inst.write
    head = 1 if inst.direction == "R" else -1
    positions = set(tape) | {head}
    lo = min(positions)
    hi = max(positions)
    cells = [tape.get(p, BLANK) for p in range(lo, hi + 1)]
    split = head - lo
    return Configuration(inst.to_state, tuple(cells[:split]), cells[split],
                         tuple(cells[split + 1:]))


# ---------------------------------------------------------------------------
# configuration sampling


def exhaustive_canonical_configurations(
        max_word_len: int = 4,
        states: Sequence[str] = ("h", "q0", "q1", "q2")) -> Iterator[Configuration]:
    """Every canonical configuration whose kept word has the given maximum
    length, over the given states."""
    for state in states:
        for length in range(1, max_word_len + 1):
            for word in product(TAPE_SYMBOLS, repeat=length):
                for hp in range(length):
                    left, head, right = word[:hp], word[hp], word[hp + 1:]
                    if canonicalize(left, head, right) == (left, head, right):
                        yield Configuration(state, left, head, right)


def random_canonical_configuration(
        rng: random.Random, max_word_len: int = 12,
        states: Sequence[str] = ("h", "q0", "q1", "q2", "q3", "q4")) -> Configuration:
    length = rng.randint(1, max_word_len)
    word = [rng.choice(TAPE_SYMBOLS) for _ in range(length)]
    hp = rng.randrange(length)
    return Configuration(rng.choice(states), tuple(word[:hp]), word[hp],
                         tuple(word[hp + 1:]))


def _random_input_word(rng: random.Random, min_len: int, max_len: int) -> str:
    return "".join(rng.choice(INPUT_SYMBOLS)
                   for _ in range(rng.randint(min_len, max_len)))


# ---------------------------------------------------------------------------
# axiom suite


@dataclass
class AxiomCheck:
    axiom: str            # A1..A4
    mode: str             # static | fresh | post-flood
    passed: bool
    tested: int
    counterexamples: list = field(default_factory=list)


@dataclass
class AxiomReport:
    environment: str
    checks: List[AxiomCheck]
    sessions: dict = field(default_factory=dict, repr=False)

    def check(self, axiom: str, mode: Optional[str] = None) -> AxiomCheck:
        for c in self.checks:
            if c.axiom == axiom and (mode is None or c.mode == mode):
                return c
        raise KeyError(f"no such check: {axiom} {mode}")

    def all_passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def render_table(self) -> str:
        lines = [f"axiom suite for {self.environment}",
                 f"{'axiom':<6} {'mode':<11} {'result':<6} {'tested':>7}  counterexample"]
        for c in self.checks:
            first = ""
            if c.counterexamples:
                first = str(c.counterexamples[0].get("config", c.counterexamples[0]))
            lines.append(f"{c.axiom:<6} {c.mode:<11} "
                         f"{'pass' if c.passed else 'FAIL':<6} {c.tested:>7}  {first}")
        return "\n".join(lines)

    def to_rows(self) -> List[dict]:
        return [
            {
                "environment": self.environment,
                "axiom": c.axiom,
                "mode": c.mode,
                "passed": c.passed,
                "tested": c.tested,
                "counterexamples": len(c.counterexamples),
            }
            for c in self.checks
        ]


def _a1_check(tbox, configs_exhaustive, configs_fuzz, rng,
              action_states=("h", "q0", "q1", "q2")) -> AxiomCheck:
    tested = 0
    bad = []
    actions = [(p, c, d) for p in action_states for c in TAPE_SYMBOLS for d in ("L", "R")]

    def compare(conf, inst):
        nonlocal tested
        tested += 1
        got = tbox(conf, inst)
        expected = raw_step(conf, inst)
        if got != expected:
            bad.append({
                "config": format_configuration(conf),
                "instruction": format_instruction(inst),
                "expected": None if expected is None else format_configuration(expected),
                "got": None if got is None else format_configuration(got),
            })

    for conf in configs_exhaustive:
        for p, c, d in actions:
            compare(conf, Instruction(conf.state, conf.head, p, c, d))
    for conf in configs_fuzz:
        for _ in range(3):
            p, c, d = actions[rng.randrange(len(actions))]
            compare(conf, Instruction(conf.state, conf.head, p, c, d))
    return AxiomCheck("A1", "static", not bad, tested, bad)


def _pattern_of(conf: Configuration) -> Optional[str]:
    if success_word_left(conf) is not None:
        return "left"
    if success_word_right(conf) is not None:
        return "right"
    return None


def check_axioms(environment: str | EnvironmentKind,
                 max_word_len: int = 4,
                 fuzz_samples: int = 10_000,
                 fuzz_max_len: int = 12,
                 flood_len: int = 1,
                 seed: int = DEFAULT_SEED) -> AxiomReport:
    """Model-check the four box axioms against one environment.

    A1 compares the transition box against an independently coded move
    rule; A2 demands every YES be one of the two halting patterns; A3 and
    A4 demand YES on those patterns.  On the evolving environment A4 is
    evaluated twice: on a fresh session (words queried in length order)
    and on a session whose acceptor has been flooded first, where the
    failing words are reported as counterexamples.
    """
    kind = EnvironmentKind(environment)
    if kind == EnvironmentKind.BLINDED:
        raise ValueError("axioms are checked against a disclosed environment")
    rng = random.Random(seed)
    exhaustive = list(exhaustive_canonical_configurations(max_word_len))
    fuzz = [random_canonical_configuration(rng, fuzz_max_len)
            for _ in range(fuzz_samples)]

    words = [""]
    for length in range(1, max_word_len):
        words.extend("".join(bits) for bits in product(INPUT_SYMBOLS, repeat=length))
    long_words = sorted({_random_input_word(rng, max_word_len, fuzz_max_len)
                         for _ in range(60)})
    a34_words = words + sorted(long_words, key=lambda w: (len(w), w))

    checks: List[AxiomCheck] = []
    sessions: dict = {}

    if kind == EnvironmentKind.ET:
        sess = open_session(EnvironmentKind.ET)
        sessions["static"] = sess
        checks.append(_a1_check(lambda c, i: sess.query_tbox(c, i), exhaustive, fuzz, rng))

        a2_bad, a3_bad, a4_bad = [], [], []
        for conf in exhaustive + fuzz:
            if sess.query_sbox(conf) and _pattern_of(conf) is None:
                a2_bad.append({"config": format_configuration(conf)})
        for w in a34_words:
            left = Configuration(HALT_STATE, (), BLANK, tuple(w))
            if not sess.query_sbox(left):
                a3_bad.append({"config": format_configuration(left)})
            right = Configuration(HALT_STATE, tuple(w), BLANK, ())
            if not sess.query_sbox(right):
                a4_bad.append({"config": format_configuration(right)})
        checks.append(AxiomCheck("A2", "static", not a2_bad,
                                 len(exhaustive) + len(fuzz), a2_bad))
        checks.append(AxiomCheck("A3", "static", not a3_bad, len(a34_words), a3_bad))
        checks.append(AxiomCheck("A4", "static", not a4_bad, len(a34_words), a4_bad))
        return AxiomReport("et", checks, sessions)

    # evolving environment
    fresh = open_session(EnvironmentKind.EE)
    sessions["fresh"] = fresh
    checks.append(_a1_check(lambda c, i: fresh.query_tbox(c, i), exhaustive, fuzz, rng))
    checks[-1].mode = "fresh"

    a3_bad = []
    for w in a34_words:
        left = Configuration(HALT_STATE, (), BLANK, tuple(w))
        if not fresh.query_sbox(left):
            a3_bad.append({"config": format_configuration(left)})
    checks.append(AxiomCheck("A3", "fresh", not a3_bad, len(a34_words), a3_bad))

    # A4 on the fresh session: words in length-lexicographic order, so every
    # query grafts or extends a chain and is accepted
    a4_bad = []
    for w in a34_words:
        right = Configuration(HALT_STATE, tuple(w), BLANK, ())
        if not fresh.query_sbox(right):
            a4_bad.append({"config": format_configuration(right)})
    checks.append(AxiomCheck("A4", "fresh", not a4_bad, len(a34_words), a4_bad))

    # A2 afterwards on the same session: answers may only say YES on patterns
    a2_bad = []
    for conf in exhaustive + fuzz:
        if fresh.query_sbox(conf) and _pattern_of(conf) is None:
            a2_bad.append({"config": format_configuration(conf)})
    checks.append(AxiomCheck("A2", "fresh", not a2_bad,
                             len(exhaustive) + len(fuzz), a2_bad))

    # A4 after flooding: every word of the flooded length is now rejected
    from .experiments import flood

    flooded = open_session(EnvironmentKind.EE)
    sessions["post-flood"] = flooded
    flood(flooded, flood_len)
    a4_flood_bad = []
    for w in a34_words:
        right = Configuration(HALT_STATE, tuple(w), BLANK, ())
        if not flooded.query_sbox(right):
            a4_flood_bad.append({"config": format_configuration(right),
                                 "word": w})
    checks.append(AxiomCheck("A4", "post-flood", not a4_flood_bad,
                             len(a34_words), a4_flood_bad))
    return AxiomReport("ee", checks, sessions)


# ---------------------------------------------------------------------------
# complexity equivalence


STATIC_TO_EVOLVING = "static-to-evolving"
EVOLVING_TO_STATIC = "evolving-to-static"


@dataclass(frozen=True)
class EquivalenceWitness:
    """An instruction sequence carrying one processor's YES configuration
    into the other processor's acceptance, within twice the word length."""

    source: Configuration
    direction: str
    instructions: tuple
    result: Configuration
    n: int  # kept word length of the source

    @property
    def k(self) -> int:
        return len(self.instructions)


def complexity_equivalence_witness(c: Configuration, direction: str) -> EquivalenceWitness:
    """Construct and verify a witness for one YES configuration.

    Left-halting patterns are accepted by both success boxes, so the empty
    sequence witnesses them in either direction.  A right-halting pattern
    entering the evolving environment is walked left across its word,
    ending in the left-halting pattern, which the evolving box accepts
    without consulting its acceptor.
    """
    if direction not in (STATIC_TO_EVOLVING, EVOLVING_TO_STATIC):
        raise ValueError(f"unknown direction: {direction!r}")
    word_left = success_word_left(c)
    word_right = success_word_right(c)
    if word_left is None and word_right is None:
        raise ValueError(
            f"{format_configuration(c)} is not a YES configuration of the source box")
    n = len(c.left) + 1 + len(c.right)
    if word_left is not None or direction == EVOLVING_TO_STATIC:
        instructions: tuple = ()
    else:
        x = word_right
        steps = [Instruction(HALT_STATE, BLANK, HALT_STATE, BLANK, "L")]
        steps.extend(Instruction(HALT_STATE, s, HALT_STATE, s, "L")
                     for s in reversed(x))
        instructions = tuple(steps)
    witness = EquivalenceWitness(c, direction, instructions,
                                 _replay_witness(c, instructions), n)
    if not verify_equivalence_witness(witness):
        raise AssertionError("constructed witness failed verification")
    return witness


def _replay_witness(c: Configuration, instructions: tuple) -> Configuration:
    cur = c
    for inst in instructions:
        nxt = tbox_s(cur, inst)
        if nxt is None:
            raise AssertionError("witness instruction not applicable during replay")
        cur = nxt
    return cur


def verify_equivalence_witness(w: EquivalenceWitness) -> bool:
    """Replay the witness through the target processor and check the bound."""
    if w.k > 2 * w.n:
        return False
    try:
        final = _replay_witness(w.source, w.instructions)
    except AssertionError:
        return False
    if final != w.result:
        return False
    if w.direction == STATIC_TO_EVOLVING:
        return EvolvingSuccessBox().sbox(final)
    return sbox_s(final)


# ---------------------------------------------------------------------------
# finite transcripts always have a static explanation


class InconsistentTranscriptError(ValueError):
    """The same input carries two different outputs."""


def build_consistent_static(pairs: Iterable[Tuple[str, int]]) -> Nfa1:
    """A static prefix-tree acceptor reproducing every (input, bit) pair.

    Raises InconsistentTranscriptError when some input is mapped to two
    different outputs; that would signal a well-definedness violation in
    whatever produced the pairs.
    """
    normalized: List[Tuple[str, int]] = []
    seen: dict = {}
    for x, bit in pairs:
        require_input_string(x)
        bit = int(bool(bit))
        if x in seen:
            if seen[x] != bit:
                raise InconsistentTranscriptError(
                    f"input {x!r} mapped to both {seen[x]} and {bit}")
            continue
        seen[x] = bit
        normalized.append((x, bit))

    states = ["n0"]
    delta: dict = {}
    nodes = {"": "n0"}
    for x, _ in normalized:
        for i, sym in enumerate(x):
            prefix = x[: i + 1]
            if prefix not in nodes:
                name = f"n{len(states)}"
                states.append(name)
                nodes[prefix] = name
                delta[(nodes[x[:i]], sym)] = name
    accepting = frozenset(nodes[x] for x, bit in normalized if bit == 1)
    acceptor = Nfa1(frozenset(states), "n0", tuple(delta.items()), accepting)
    for x, bit in normalized:
        if static_accepts(acceptor, x) != bool(bit):
            raise AssertionError("prefix-tree acceptor failed to reproduce a pair")
    return acceptor


def static_accepts(a: Nfa1, x: str) -> bool:
    """Run the automaton statically (no evolution): accept iff the whole
    input is read and the final state is accepting."""
    return run_nfa1(a, x).outcome == ACCEPTED


def extract_box_pairs(events: Iterable) -> List[Tuple[str, int]]:
    """The (word, bit) pairs a success box decided through its acceptor
    surface: sbox queries whose configuration halts with the word left of
    the head."""
    pairs = []
    for event in events:
        if isinstance(event, SboxQuery):
            if success_word_left(event.config) is not None:
                continue
            word = success_word_right(event.config)
            if word is not None:
                pairs.append((word, 1 if event.verdict else 0))
    return pairs


def consistency_certificate(session_or_events) -> dict:
    """Build the static-explanation certificate for a session's log."""
    events = getattr(session_or_events, "log", session_or_events)
    pairs = extract_box_pairs(events)
    acceptor = build_consistent_static(pairs)
    return {
        "pairs": [[x, bit] for x, bit in pairs],
        "acceptor": acceptor.to_snapshot(),
        "reproduces_all": all(static_accepts(acceptor, x) == bool(b) for x, b in pairs),
    }


# ---------------------------------------------------------------------------
# recognizing classical languages inside the evolving environment


@dataclass
class ClassicalAgreementRow:
    input: str
    oracle: bool
    first_run: bool
    second_run: bool

    @property
    def agreed(self) -> bool:
        return self.oracle == self.first_run == self.second_run


@dataclass
class ClassicalAgreementResult:
    rows: List[ClassicalAgreementRow]
    acceptor_untouched: bool

    @property
    def agreed(self) -> bool:
        return self.acceptor_untouched and all(r.agreed for r in self.rows)


def classical_agreement_check(m: SyntaxProcedure, samples: Sequence[str],
                              max_steps: int = DEFAULT_MAX_STEPS) -> ClassicalAgreementResult:
    """Verify that a left-returning procedure recognizes the same samples
    inside the evolving environment as under the classical oracle.

    The procedure must halt only in the left-halting pattern, so the
    evolving success box never consults its acceptor; both runs of each
    sample must agree with the oracle, in one shared session.
    """
    sess = open_session(EnvironmentKind.EE)
    rows = []
    for x in samples:
        oracle = classical_tm_oracle(m, x, max_steps).accepted
        first = sess.membership(m, x, max_steps)
        second = sess.membership(m, x, max_steps)
        rows.append(ClassicalAgreementRow(x, oracle, first, second))
    untouched = not extract_box_pairs(sess.log)
    return ClassicalAgreementResult(rows, untouched)


# ---------------------------------------------------------------------------
# exhaustive desk-scale oracle equivalence


@dataclass
class OracleScanReport:
    cases: int
    mismatches: int
    accepted: int
    max_accept_time: int
    maxsteps_cases: int
    elapsed_seconds: float
    first_mismatch: Optional[dict] = None

    @property
    def all_agree(self) -> bool:
        return self.mismatches == 0


_STATE_NAMES = ("q0", "q1", "q2", "h")
_SYMBOL_NAMES = ("0", "1", BLANK)
_DIR_NAMES = ("L", "R")


def decode_procedure(slots: Sequence[int], action_combo: int) -> SyntaxProcedure:
    """Rebuild the procedure a kernel case encodes, for reporting."""
    from ._scan import N_ACTIONS

    instructions = []
    a = action_combo
    for slot in slots:
        action = a % N_ACTIONS
        a //= N_ACTIONS
        to_state = action // 6
        rest = action % 6
        instructions.append(Instruction(
            _STATE_NAMES[slot // 3], _SYMBOL_NAMES[slot % 3],
            _STATE_NAMES[to_state], _SYMBOL_NAMES[rest // 2], _DIR_NAMES[rest % 2]))
    return SyntaxProcedure(tuple(instructions))


def oracle_equivalence_scan(max_instructions: int = 4, max_input_len: int = 4,
                            budget: Optional[int] = None,
                            progress: bool = False) -> OracleScanReport:
    """Sweep every deterministic procedure over the bounded slot universe
    and every input up to the given length, comparing static-environment
    acceptance and time against the classical oracle on each case."""
    from . import _scan

    if budget is None:
        budget = _scan.DEFAULT_BUDGET
    input_bits, input_lens = _scan.all_inputs(max_input_len)
    started = _time.monotonic()
    totals = [0, 0, 0, 0, 0]
    first_mismatch = None
    for slot_from, slot_read, k, combo in _scan.slot_sets(max_instructions):
        out = _scan.scan_slot_set(slot_from, slot_read, k, input_bits,
                                  input_lens, budget)
        totals[0] += int(out[0])
        totals[1] += int(out[1])
        totals[2] += int(out[2])
        totals[3] = max(totals[3], int(out[3]))
        totals[4] += int(out[4])
        if out[5] >= 0 and first_mismatch is None:
            m = decode_procedure(combo, int(out[5]))
            strings = _input_strings(max_input_len)
            first_mismatch = {
                "procedure": [format_instruction(i) for i in m],
                "input": strings[int(out[6])],
            }
        if progress:
            print(f"  slots={combo} cases={totals[0]:,} mismatches={totals[1]}",
                  flush=True)
    return OracleScanReport(totals[0], totals[1], totals[2], totals[3],
                            totals[4], _time.monotonic() - started, first_mismatch)


def _input_strings(max_len: int) -> List[str]:
    out = []
    for n in range(max_len + 1):
        out.extend("".join(b) for b in product(INPUT_SYMBOLS, repeat=n))
    return out


def cross_validate_kernels(n_samples: int = 400, seed: int = DEFAULT_SEED,
                           budget: Optional[int] = None) -> int:
    """Tie the compiled kernels to the production implementations on random
    cases; returns the number of cases checked, raising on any deviation."""
    import numpy as np

    from . import _scan

    if budget is None:
        budget = _scan.DEFAULT_BUDGET
    rng = random.Random(seed)
    checked = 0
    for _ in range(n_samples):
        k = rng.randint(0, 4)
        slots = sorted(rng.sample(range(9), k))
        action_combo = rng.randrange(24 ** k) if k else 0
        m = decode_procedure(slots, action_combo)
        x = _random_input_word(rng, 0, 4)

        slot_from = np.array([s // 3 for s in slots], dtype=np.int8)
        slot_read = np.array([s % 3 for s in slots], dtype=np.int8)
        act_to = np.empty(4, dtype=np.int8)
        act_write = np.empty(4, dtype=np.int8)
        act_dir = np.empty(4, dtype=np.int8)
        a = action_combo
        for i in range(k):
            action = a % 24
            a //= 24
            act_to[i] = action // 6
            act_write[i] = (action % 6) // 2
            act_dir[i] = action % 2
        x_bits = np.zeros(max(1, len(x)), dtype=np.int8)
        for i, ch in enumerate(x):
            x_bits[i] = int(ch)
        va, ta, vb, tb = _scan.run_single_case(
            slot_from, slot_read, k, act_to, act_write, act_dir,
            x_bits, len(x), budget)

        sess = open_session(EnvironmentKind.ET)
        outcome = sess.run_procedure(m, x, max_steps=budget)
        if outcome.success != (va == _scan.VERDICT_ACCEPT):
            raise AssertionError(f"kernel/static divergence on {m.instructions} {x!r}")
        if outcome.success and outcome.time != ta:
            raise AssertionError(f"kernel/static time divergence on {x!r}")
        if va == _scan.VERDICT_REJECT and outcome.time != ta:
            raise AssertionError(f"kernel/static stuck-time divergence on {x!r}")
        if va in (_scan.VERDICT_MAXSTEPS, _scan.VERDICT_CYCLE) \
                and outcome.reason != "max-steps":
            raise AssertionError(f"kernel/static budget divergence on {x!r}")

        oracle = classical_tm_oracle(m, x, max_steps=budget)
        if oracle.accepted != (vb == _scan.VERDICT_ACCEPT):
            raise AssertionError(f"kernel/oracle divergence on {m.instructions} {x!r}")
        if oracle.accepted and oracle.time != tb:
            raise AssertionError(f"kernel/oracle time divergence on {x!r}")
        if vb == _scan.VERDICT_REJECT and oracle.max_steps_hit:
            raise AssertionError(f"kernel/oracle stuck divergence on {x!r}")
        if vb in (_scan.VERDICT_MAXSTEPS, _scan.VERDICT_CYCLE) \
                and not oracle.max_steps_hit:
            raise AssertionError(f"kernel/oracle budget divergence on {x!r}")
        checked += 1
    return checked
