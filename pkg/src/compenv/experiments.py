"""Scripted reproductions of the environments' interaction phenomena.

Each experiment owns private sessions and returns a structured result that
serializes to JSON, so every run is replayable from its own record: the
order-sensitive query pair, the flooding scenario that permanently empties
a whole input length, the adversary that traps any fast candidate decider
in a contradiction, the two refutation moves against a claimed horizon,
and the order-sensitive numeric box.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import product
from typing import Dict, List, Optional, Sequence, Union

from .syntax import (
    BLANK,
    HALT_STATE,
    INPUT_SYMBOLS,
    Configuration,
    SyntaxProcedure,
    format_instruction,
    initial_config,
    parse_instruction,
    select_instruction,
)
from .static_env import success_word_left, success_word_right, tbox_s
from .session import (
    DEFAULT_MAX_STEPS,
    EnvironmentKind,
    MAX_STEPS,
    SboxQuery,
    Session,
    Transcript,
    open_session,
)
from .procedures import scan_right


def _all_words(length: int) -> List[str]:
    return ["".join(bits) for bits in product(INPUT_SYMBOLS, repeat=length)]


def _halted_word_right(word: str) -> Configuration:
    return Configuration(HALT_STATE, tuple(word), BLANK, ())


# ---------------------------------------------------------------------------
# order sensitivity


@dataclass(frozen=True)
class OrderSensitivityResult:
    """Two fresh evolving sessions asked the same two halting
    configurations in opposite orders."""

    inputs_a: tuple
    verdicts_a: tuple
    inputs_b: tuple
    verdicts_b: tuple
    transcript_a: Transcript
    transcript_b: Transcript


def order_sensitivity_demo() -> OrderSensitivityResult:
    """Ask a fresh evolving box about the halting configurations of the
    scan-right procedure for 111 then 11, and for 11 then 111 in a second
    fresh session; the answer to 11 depends on the order."""
    pair_a = ("111", "11")
    pair_b = ("11", "111")
    sess_a = open_session(EnvironmentKind.EE)
    verdicts_a = tuple(sess_a.query_sbox(_halted_word_right(x)) for x in pair_a)
    sess_b = open_session(EnvironmentKind.EE)
    verdicts_b = tuple(sess_b.query_sbox(_halted_word_right(x)) for x in pair_b)
    return OrderSensitivityResult(pair_a, verdicts_a, pair_b, verdicts_b,
                                  sess_a.export_transcript(),
                                  sess_b.export_transcript())


# ---------------------------------------------------------------------------
# flooding


class FloodPreconditionError(RuntimeError):
    """The session already asked about words at the lengths being flooded."""


@dataclass
class FloodReport:
    """Verdicts of running the scan-right procedure on every word of
    length m+1 and then on every word of length m."""

    m: int
    queried_inputs: List[str]
    pre_verdicts: Dict[str, int]   # words of length m+1, flood phase
    post_verdicts: Dict[str, int]  # words of length m, probe phase

    def to_json_obj(self) -> dict:
        return {
            "m": self.m,
            "queried_inputs": list(self.queried_inputs),
            "pre_verdicts": dict(self.pre_verdicts),
            "post_verdicts": dict(self.post_verdicts),
        }

    @property
    def flood_all_accepted(self) -> bool:
        return all(v == 1 for v in self.pre_verdicts.values())

    @property
    def probe_all_rejected(self) -> bool:
        return all(v == 0 for v in self.post_verdicts.values())


def _acceptor_words_queried(session: Session) -> List[str]:
    words = []
    for event in session.log:
        if isinstance(event, SboxQuery):
            if success_word_left(event.config) is not None:
                continue
            word = success_word_right(event.config)
            if word is not None:
                words.append(word)
    return words


def flood(session: Session, m: int,
          max_steps: int = DEFAULT_MAX_STEPS) -> FloodReport:
    """Run scan-right on every word of length m+1 (lexicographically), then
    on every word of length m.

    Requires a session that has not yet asked its acceptor about words of
    length m or m+1, checked against the log; afterwards every length-m
    word is rejected forever.
    """
    if m < 0:
        raise ValueError("m must be nonnegative")
    prior = {len(w) for w in _acceptor_words_queried(session)}
    if m in prior or (m + 1) in prior:
        raise FloodPreconditionError(
            f"session already queried words of length {m} or {m + 1}")
    proc = scan_right()
    queried = []
    pre = {}
    for w in _all_words(m + 1):
        queried.append(w)
        pre[w] = 1 if session.run_procedure(proc, w, max_steps).success else 0
    post = {}
    for w in _all_words(m):
        queried.append(w)
        post[w] = 1 if session.run_procedure(proc, w, max_steps).success else 0
    return FloodReport(m, queried, pre, post)


# ---------------------------------------------------------------------------
# the adversary against fast candidate deciders


CANDIDATE = "candidate"
SCAN_RIGHT = "scan-right"


@dataclass
class InteractionRecord:
    procedure: str  # CANDIDATE or SCAN_RIGHT
    input: str
    max_steps: int
    success: bool

    def to_json_obj(self) -> dict:
        return {"procedure": self.procedure, "input": self.input,
                "max_steps": self.max_steps, "success": self.success}


@dataclass
class AdversaryCertificate:
    """A replayable interaction order ending in a contradiction between a
    candidate's verdict and the session's own ground truth."""

    candidate: List[str]          # formatted instructions
    f_table: Dict[int, int]
    n_range: List[int]
    w: str
    case: int                     # 1: no acceptor-facing configurations on the path
    interactions: List[InteractionRecord]
    candidate_verdict: bool
    ground_truth: bool

    @property
    def contradiction(self) -> bool:
        return self.candidate_verdict != self.ground_truth

    def to_json_obj(self) -> dict:
        return {
            "candidate": list(self.candidate),
            "f_table": {str(k): v for k, v in self.f_table.items()},
            "n_range": list(self.n_range),
            "w": self.w,
            "case": self.case,
            "interactions": [r.to_json_obj() for r in self.interactions],
            "candidate_verdict": self.candidate_verdict,
            "ground_truth": self.ground_truth,
            "contradiction": self.contradiction,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj(), indent=2) + "\n"

    @staticmethod
    def from_json_obj(obj: dict) -> "AdversaryCertificate":
        return AdversaryCertificate(
            candidate=list(obj["candidate"]),
            f_table={int(k): v for k, v in obj["f_table"].items()},
            n_range=list(obj["n_range"]),
            w=obj["w"],
            case=int(obj["case"]),
            interactions=[InteractionRecord(r["procedure"], r["input"],
                                            r["max_steps"], r["success"])
                          for r in obj["interactions"]],
            candidate_verdict=obj["candidate_verdict"],
            ground_truth=obj["ground_truth"],
        )


@dataclass
class NoContradictionAtScale:
    """The adversary could not trap this candidate at this scale."""

    reason: str
    w: str
    detail: str = ""


def _candidate_path(candidate: SyntaxProcedure, w: str,
                    budget: int) -> List[Configuration]:
    """The candidate's computation path generated with the static
    transition box only, up to the step budget; nothing evolves."""
    c = initial_config(w)
    path = [c]
    while len(path) < budget:
        inst = select_instruction(candidate, c)
        if inst is None:
            break
        c = tbox_s(c, inst)
        path.append(c)
    return path


def adversary_trap(candidate: SyntaxProcedure, f_table: Dict[int, int],
                   n_range: Sequence[int]) -> Union[AdversaryCertificate,
                                                    NoContradictionAtScale]:
    """Trap a candidate decider for "some word of my length is accepted"
    in a contradiction, exploiting free query order.

    The candidate's path on the chosen word is first generated with the
    transition box alone; the halted word-left-of-head configurations on
    it tell the adversary which acceptor entries the real run could touch.
    If there are none (case 1), the candidate's verdict is directly
    refuted: a YES is followed by flooding the next length, emptying the
    chosen length; a NO is refuted by exhibiting a fresh accepted word.
    Otherwise (case 2) those entries are pre-flooded with their
    0-extensions before the real run, and the same refutations apply.
    Ground truth is established by exhaustively probing every word of the
    chosen length at the end; that probing is itself part of the argument.
    """
    n_range = sorted(n_range)
    if not n_range:
        raise ValueError("n_range must be nonempty")
    for n in n_range:
        if n not in f_table:
            raise ValueError(f"f_table has no budget for n={n}")
        if f_table[n] >= 2 ** n:
            raise ValueError(
                f"f_table({n})={f_table[n]} is not below 2^{n}: not sub-exponential "
                "at this scale")

    session = open_session(EnvironmentKind.EE)
    horizon = 0  # fresh session: nothing is determined yet
    n = None
    for cand_n in n_range:
        if cand_n > horizon:
            n = cand_n
            break
    if n is None:
        return NoContradictionAtScale("horizon", "", "n_range below the horizon")
    w = "0" * n
    budget = f_table[n]

    path = _candidate_path(candidate, w, budget)
    acceptor_words = []
    for c in path:
        if success_word_left(c) is not None:
            continue
        word = success_word_right(c)
        if word is not None:
            acceptor_words.append(word)
    e_w = sorted({x for x in acceptor_words if len(x) == n})
    d_w = sorted({x for x in acceptor_words if len(x) == n + 2})
    case = 2 if acceptor_words else 1

    proc = scan_right()
    interactions: List[InteractionRecord] = []

    def run(tag: str, x: str, max_steps: int) -> bool:
        m = candidate if tag == CANDIDATE else proc
        ok = session.run_procedure(m, x, max_steps).success
        interactions.append(InteractionRecord(tag, x, max_steps, ok))
        return ok

    if case == 2:
        for v in e_w:
            run(SCAN_RIGHT, v + "0", DEFAULT_MAX_STEPS)
        for v in d_w:
            run(SCAN_RIGHT, v + "0", DEFAULT_MAX_STEPS)

    outcome = session.run_procedure(candidate, w, max_steps=budget)
    interactions.append(InteractionRecord(CANDIDATE, w, budget, outcome.success))
    if outcome.reason == MAX_STEPS:
        return NoContradictionAtScale(
            "budget-exceeded", w,
            f"candidate ran past its own budget f({n})={budget}; the "
            "sub-exponential claim fails outright")
    verdict = outcome.success

    if verdict:
        if case == 1:
            for u in _all_words(n + 1):
                run(SCAN_RIGHT, u, DEFAULT_MAX_STEPS)
        else:
            for v in _all_words(n):
                run(SCAN_RIGHT, v + "0", DEFAULT_MAX_STEPS)

    truth = False
    for v in _all_words(n):
        if run(SCAN_RIGHT, v, DEFAULT_MAX_STEPS):
            truth = True
    if verdict == truth:
        return NoContradictionAtScale(
            "no-contradiction", w,
            "verdict and exhaustive ground truth agree at this scale")

    return AdversaryCertificate(
        candidate=[format_instruction(i) for i in candidate],
        f_table=dict(f_table),
        n_range=list(n_range),
        w=w,
        case=case,
        interactions=interactions,
        candidate_verdict=verdict,
        ground_truth=truth,
    )


def replay_adversary_certificate(cert: AdversaryCertificate) -> bool:
    """Re-execute the recorded interaction order in a fresh session and
    confirm every recorded answer and the final contradiction."""
    candidate = SyntaxProcedure(tuple(parse_instruction(t) for t in cert.candidate))
    proc = scan_right()
    session = open_session(EnvironmentKind.EE)
    candidate_verdict = None
    truth_words: Dict[str, bool] = {}
    for rec in cert.interactions:
        m = candidate if rec.procedure == CANDIDATE else proc
        ok = session.run_procedure(m, rec.input, rec.max_steps).success
        if ok != rec.success:
            return False
        if rec.procedure == CANDIDATE and rec.input == cert.w:
            candidate_verdict = ok
        if rec.procedure == SCAN_RIGHT and len(rec.input) == len(cert.w):
            truth_words[rec.input] = ok
    if candidate_verdict != cert.candidate_verdict:
        return False
    expected_truth = any(truth_words.get(v, False) for v in _all_words(len(cert.w)))
    if expected_truth != cert.ground_truth:
        return False
    return cert.contradiction


# ---------------------------------------------------------------------------
# the two refutation moves against a claimed horizon


@dataclass
class HorizonRefutationReport:
    """Both refutation moves at desk scale: flooding kills every word one
    length above the claimed horizon, while a single fresh probe at any
    later length is accepted."""

    k: int
    move_a: FloodReport
    move_b_input: str
    move_b_verdict: int

    def to_json_obj(self) -> dict:
        return {
            "k": self.k,
            "move_a": self.move_a.to_json_obj(),
            "move_b": {"input": self.move_b_input, "verdict": self.move_b_verdict},
        }


def horizon_refutation_demo(k: int) -> HorizonRefutationReport:
    """Against a claimed horizon k: (a) flood length k+2 so that length
    k+1 > k is permanently empty; (b) in a fresh session, a first probe
    one length past the horizon is accepted."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    m = k + 1
    session_a = open_session(EnvironmentKind.EE)
    move_a = flood(session_a, m)
    session_b = open_session(EnvironmentKind.EE)
    probe = "1" * m
    verdict = 1 if session_b.membership(scan_right(), probe) else 0
    return HorizonRefutationReport(k, move_a, probe, verdict)


# ---------------------------------------------------------------------------
# the order-sensitive numeric box


class Box513:
    """Numeric black box answering 1 until it first sees 5 or 13.

    The trigger input itself still answers 1; afterwards inputs never seen
    before answer 2 (trigger 5) or 3 (trigger 13), while everything already
    answered keeps its recorded answer forever.
    """

    def __init__(self):
        self.trigger: Optional[int] = None
        self.answers: Dict[int, int] = {}

    def query(self, n: int) -> int:
        if not isinstance(n, int) or n < 0:
            raise ValueError("inputs are natural numbers")
        if n in self.answers:
            return self.answers[n]
        if self.trigger is None:
            if n == 5:
                self.trigger = 5
            elif n == 13:
                self.trigger = 13
            answer = 1
        else:
            answer = 2 if self.trigger == 5 else 3
        self.answers[n] = answer
        return answer


def box513_query(box: Box513, n: int) -> int:
    return box.query(n)
