"""Compiled exhaustive comparison of the static environment against the
classical acceptance semantics.

The public entry point sweeps, for a bounded instruction-slot universe,
every deterministic procedure and every short input, running two
independently coded simulators: one mirrors the box semantics of the
static environment (iterate the transition rule until stuck, then judge
the final configuration), the other mirrors the classical definition
(accept at the first visit of a successful configuration).  Verdicts and
times must agree case by case.

Both simulators detect in-place divergence with Brent's cycle-finding on
canonical configurations (state plus written-region-relative tape), so a
cycling run is classified as a definitive rejection rather than a budget
timeout.  Runs that keep growing the tape hit the step budget on both
sides identically.

Encodings: symbols 0, 1, blank=2; states q0=0, q1=1, q2=2, h=3; slot
index = from_state * 3 + read_symbol; an action in [0, 24) decodes to
(to_state, write, direction) with direction 0=L, 1=R.
"""

from __future__ import annotations

import itertools

import numpy as np
from numba import njit

BLANK_CODE = 2
HALT_CODE = 3
N_SLOTS = 9
N_ACTIONS = 24

VERDICT_ACCEPT = 1
VERDICT_REJECT = 0
VERDICT_MAXSTEPS = 2
VERDICT_CYCLE = 3

# the longest accepting run in the swept space takes 48 steps (validated
# by full sweeps at budgets 128 and 512, which judge every case alike);
# 96 keeps a 2x guard band while bounding the cost of divergent runs
DEFAULT_BUDGET = 96

_ESC_SENTINEL = -(2 ** 62)


@njit(cache=True, inline="always")
def _decode_action(a):
    to_state = a // 6
    rest = a % 6
    return to_state, rest // 2, rest % 2  # write, dir


@njit(cache=True, inline="always")
def _et_success(tape, head, lo, hi):
    # halted pattern: head on blank at either end of a blank-free word
    if tape[head] != BLANK_CODE:
        return False
    if lo > hi:
        return True  # empty word
    for p in range(lo, hi + 1):
        if tape[p] == BLANK_CODE:
            return False
    return lo == head + 1 or hi == head - 1


@njit(cache=True, inline="always")
def _et_run(slot_from, slot_read, k, act_to, act_write, act_dir,
            x_bits, x_len, tape, snap, esc, budget, origin):
    """Static-environment run: step until stuck, judge once at the end.

    Returns (verdict, time, min_touched, max_touched).
    """
    state = 0
    head = origin
    esc_active = False
    esc_blank_only = True
    esc_monotone = True
    esc_dir = 0
    lo = origin + 1
    hi = origin + x_len
    if x_len == 0:
        lo, hi = 1, 0  # empty-region sentinel
    minpos = origin
    maxpos = origin + x_len
    configs = 1
    # Brent cycle detection, seeded with the true initial canonical region
    power = 1
    lam = 0
    snap_state = state
    if lo > hi:
        rlo = head
        rhi = head
    else:
        rlo = lo if lo < head else head
        rhi = hi if hi > head else head
    snap_off = head - rlo
    snap_len = rhi - rlo + 1
    for p in range(snap_len):
        snap[p] = tape[rlo + p]
    while True:
        sym = tape[head]
        found = -1
        for i in range(k):
            if slot_from[i] == state and slot_read[i] == sym:
                found = i
                break
        if found < 0:
            if state == HALT_CODE and _et_success(tape, head, lo, hi):
                return VERDICT_ACCEPT, configs, minpos, maxpos
            return VERDICT_REJECT, configs, minpos, maxpos
        if configs >= budget:
            return VERDICT_MAXSTEPS, configs, minpos, maxpos
        # write
        w = act_write[found]
        tape[head] = w
        if w != BLANK_CODE:
            if lo > hi:
                lo = head
                hi = head
            else:
                if head < lo:
                    lo = head
                if head > hi:
                    hi = head
        else:
            if lo <= head <= hi:
                if head == lo:
                    while lo <= hi and tape[lo] == BLANK_CODE:
                        lo += 1
                elif head == hi:
                    while hi >= lo and tape[hi] == BLANK_CODE:
                        hi -= 1
                if lo > hi:
                    lo, hi = 1, 0
        # move
        head_before = head
        if act_dir[found] == 1:
            head += 1
        else:
            head -= 1
        if head < minpos:
            minpos = head
        if head > maxpos:
            maxpos = head
        state = act_to[found]
        configs += 1
        # escape-streak divergence: while the run reads blanks with the
        # head outside the written region, a repeated state drifting away
        # from the region can never come back, provided the streak either
        # wrote only blanks (tape fixed, translation invariance) or moved
        # monotonically (every read is at a fresh untouched cell)
        step_dir = head - head_before
        if sym == BLANK_CODE and (
                lo > hi or ((head_before < lo or head_before > hi)
                            and (head < lo or head > hi))):
            if not esc_active:
                esc_active = True
                esc_blank_only = w == BLANK_CODE
                esc_monotone = True
                esc_dir = step_dir
                for i in range(4):
                    esc[i] = _ESC_SENTINEL
                esc[state] = head
            else:
                if w != BLANK_CODE:
                    esc_blank_only = False
                if step_dir != esc_dir:
                    esc_monotone = False
                if not (esc_blank_only or esc_monotone):
                    esc_active = False
                else:
                    prev = esc[state]
                    if prev != _ESC_SENTINEL:
                        d = head - prev
                        away = (lo > hi or (head > hi and d > 0)
                                or (head < lo and d < 0))
                        if esc_blank_only and d == 0:
                            return VERDICT_CYCLE, configs, minpos, maxpos
                        if away and d != 0:
                            return VERDICT_CYCLE, configs, minpos, maxpos
                    else:
                        esc[state] = head
        else:
            esc_active = False
        # canonical region
        if lo > hi:
            rlo = head
            rhi = head
        else:
            rlo = lo if lo < head else head
            rhi = hi if hi > head else head
        cur_off = head - rlo
        cur_len = rhi - rlo + 1
        equal = (state == snap_state and cur_off == snap_off
                 and cur_len == snap_len)
        if equal:
            for p in range(cur_len):
                if tape[rlo + p] != snap[p]:
                    equal = False
                    break
        if equal:
            return VERDICT_CYCLE, configs, minpos, maxpos
        lam += 1
        if lam == power:
            power <<= 1
            lam = 0
            snap_state = state
            snap_off = cur_off
            snap_len = cur_len
            for p in range(cur_len):
                snap[p] = tape[rlo + p]


@njit(cache=True, inline="always")
def _oracle_success(tape, head, wlo, whi):
    # classical successful configuration: halting state is checked by the
    # caller; here the head must sit on a blank immediately next to (or in
    # place of) a blank-free word
    if tape[head] != BLANK_CODE:
        return False
    if wlo > whi:
        return True
    blankfree = True
    for p in range(wlo, whi + 1):
        if tape[p] == BLANK_CODE:
            blankfree = False
            break
    if not blankfree:
        return False
    return head == wlo - 1 or head == whi + 1


@njit(cache=True, inline="always")
def _oracle_run(slot_from, slot_read, k, act_to, act_write, act_dir,
                x_bits, x_len, tape, snap, esc, budget, origin):
    """Classical run: accept at the first visit of a successful
    configuration; a stuck or cycling run rejects.

    Returns (verdict, time, min_touched, max_touched).
    """
    state = 0
    head = origin
    esc_active = False
    esc_blank_only = True
    esc_monotone = True
    esc_dir = 0
    minpos = origin
    maxpos = origin + x_len
    # wlo..whi tracks the outermost non-blank cells (wlo > whi when none)
    wlo = origin + 1
    whi = origin + x_len
    if x_len == 0:
        wlo, whi = 1, 0
    configs = 1
    power = 1
    lam = 0
    snap_state = -1
    snap_off = 0
    snap_len = 0
    first_snap = True
    while True:
        if state == HALT_CODE and _oracle_success(tape, head, wlo, whi):
            return VERDICT_ACCEPT, configs, minpos, maxpos
        sym = tape[head]
        found = -1
        for i in range(k):
            if slot_from[i] == state and slot_read[i] == sym:
                found = i
                break
        if found < 0:
            return VERDICT_REJECT, configs, minpos, maxpos
        if configs >= budget:
            return VERDICT_MAXSTEPS, configs, minpos, maxpos
        w = act_write[found]
        tape[head] = w
        if w != BLANK_CODE:
            if wlo > whi:
                wlo = head
                whi = head
            else:
                if head < wlo:
                    wlo = head
                if head > whi:
                    whi = head
        elif wlo <= head <= whi:
            if head == wlo:
                while wlo <= whi and tape[wlo] == BLANK_CODE:
                    wlo += 1
            elif head == whi:
                while whi >= wlo and tape[whi] == BLANK_CODE:
                    whi -= 1
            if wlo > whi:
                wlo, whi = 1, 0
        head_before = head
        if act_dir[found] == 1:
            head += 1
        else:
            head -= 1
        if head < minpos:
            minpos = head
        if head > maxpos:
            maxpos = head
        state = act_to[found]
        configs += 1
        # escape-streak divergence (see the static kernel); a successful
        # configuration can only sit next to the word, and drifting away
        # monotonically or over a fixed tape never returns there
        step_dir = head - head_before
        if sym == BLANK_CODE and (
                wlo > whi or ((head_before < wlo or head_before > whi)
                              and (head < wlo or head > whi))):
            if not esc_active:
                esc_active = True
                esc_blank_only = w == BLANK_CODE
                esc_monotone = True
                esc_dir = step_dir
                for i in range(4):
                    esc[i] = _ESC_SENTINEL
                esc[state] = head
            else:
                if w != BLANK_CODE:
                    esc_blank_only = False
                if step_dir != esc_dir:
                    esc_monotone = False
                if not (esc_blank_only or esc_monotone):
                    esc_active = False
                else:
                    prev = esc[state]
                    if prev != _ESC_SENTINEL:
                        d = head - prev
                        away = (wlo > whi or (head > whi and d > 0)
                                or (head < wlo and d < 0))
                        if esc_blank_only and d == 0:
                            return VERDICT_CYCLE, configs, minpos, maxpos
                        if away and d != 0:
                            return VERDICT_CYCLE, configs, minpos, maxpos
                    else:
                        esc[state] = head
        else:
            esc_active = False
        if wlo > whi:
            rlo = head
            rhi = head
        else:
            rlo = wlo if wlo < head else head
            rhi = whi if whi > head else head
        cur_off = head - rlo
        cur_len = rhi - rlo + 1
        equal = (not first_snap and state == snap_state
                 and cur_off == snap_off and cur_len == snap_len)
        if equal:
            for p in range(cur_len):
                if tape[rlo + p] != snap[p]:
                    equal = False
                    break
        if equal:
            return VERDICT_CYCLE, configs, minpos, maxpos
        lam += 1
        if lam == power:
            power <<= 1
            lam = 0
            first_snap = False
            snap_state = state
            snap_off = cur_off
            snap_len = cur_len
            for p in range(cur_len):
                snap[p] = tape[rlo + p]


@njit(cache=True, inline="always")
def _reset(tape, minpos, maxpos):
    for p in range(minpos - 1, maxpos + 2):
        tape[p] = BLANK_CODE


@njit(cache=True, inline="always")
def _load_input(tape, origin, x_bits, x_len):
    for j in range(x_len):
        tape[origin + 1 + j] = x_bits[j]


@njit(cache=True)
def scan_slot_set(slot_from, slot_read, k, input_bits, input_lens, budget):
    """Sweep every action assignment of one slot set over every input.

    Returns int64[7]: cases, mismatches, accepted, max_accept_time,
    maxsteps_cases, first_bad_combo, first_bad_input.
    """
    tape_size = 2 * budget + 16
    origin = tape_size // 2
    tape_a = np.full(tape_size, BLANK_CODE, dtype=np.int8)
    tape_b = np.full(tape_size, BLANK_CODE, dtype=np.int8)
    snap_a = np.empty(tape_size, dtype=np.int8)
    snap_b = np.empty(tape_size, dtype=np.int8)
    esc_a = np.empty(4, dtype=np.int64)
    esc_b = np.empty(4, dtype=np.int64)
    act_to = np.empty(4, dtype=np.int8)
    act_write = np.empty(4, dtype=np.int8)
    act_dir = np.empty(4, dtype=np.int8)
    n_inputs = input_lens.shape[0]
    combos = 1
    for _ in range(k):
        combos *= N_ACTIONS
    cases = 0
    mismatches = 0
    accepted = 0
    max_time = 0
    maxsteps_cases = 0
    first_bad_combo = -1
    first_bad_input = -1
    has_start = False
    for i in range(k):
        if slot_from[i] == 0 and slot_read[i] == BLANK_CODE:
            has_start = True
    if not has_start:
        # no action assignment can ever fire an instruction: the start
        # configuration matches no trigger, so every combo shares one
        # trajectory per input; execute it once and account it for all
        for i in range(4):
            act_to[i] = 0
            act_write[i] = 0
            act_dir[i] = 0
        for j in range(n_inputs):
            x_len = input_lens[j]
            x_bits = input_bits[j]
            _load_input(tape_a, origin, x_bits, x_len)
            va, ta, mina, maxa = _et_run(
                slot_from, slot_read, k, act_to, act_write, act_dir,
                x_bits, x_len, tape_a, snap_a, esc_a, budget, origin)
            _reset(tape_a, mina, maxa)
            _load_input(tape_b, origin, x_bits, x_len)
            vb, tb, minb, maxb = _oracle_run(
                slot_from, slot_read, k, act_to, act_write, act_dir,
                x_bits, x_len, tape_b, snap_b, esc_b, budget, origin)
            _reset(tape_b, minb, maxb)
            cases += combos
            acc_a = va == VERDICT_ACCEPT
            acc_b = vb == VERDICT_ACCEPT
            if acc_a != acc_b or (acc_a and ta != tb):
                mismatches += combos
                if first_bad_combo < 0:
                    first_bad_combo = 0
                    first_bad_input = j
            if acc_a:
                accepted += combos
                if ta > max_time:
                    max_time = ta
            if va == VERDICT_MAXSTEPS or vb == VERDICT_MAXSTEPS:
                maxsteps_cases += combos
        out = np.empty(7, dtype=np.int64)
        out[0] = cases
        out[1] = mismatches
        out[2] = accepted
        out[3] = max_time
        out[4] = maxsteps_cases
        out[5] = first_bad_combo
        out[6] = first_bad_input
        return out
    for combo in range(combos):
        a = combo
        for i in range(k):
            to_state, wr, dr = _decode_action(a % N_ACTIONS)
            act_to[i] = to_state
            act_write[i] = wr
            act_dir[i] = dr
            a //= N_ACTIONS
        for j in range(n_inputs):
            x_len = input_lens[j]
            x_bits = input_bits[j]
            _load_input(tape_a, origin, x_bits, x_len)
            va, ta, mina, maxa = _et_run(
                slot_from, slot_read, k, act_to, act_write, act_dir,
                x_bits, x_len, tape_a, snap_a, esc_a, budget, origin)
            _reset(tape_a, mina, maxa)
            _load_input(tape_b, origin, x_bits, x_len)
            vb, tb, minb, maxb = _oracle_run(
                slot_from, slot_read, k, act_to, act_write, act_dir,
                x_bits, x_len, tape_b, snap_b, esc_b, budget, origin)
            _reset(tape_b, minb, maxb)
            cases += 1
            acc_a = va == VERDICT_ACCEPT
            acc_b = vb == VERDICT_ACCEPT
            bad = acc_a != acc_b or (acc_a and ta != tb)
            if bad:
                mismatches += 1
                if first_bad_combo < 0:
                    first_bad_combo = combo
                    first_bad_input = j
            if acc_a:
                accepted += 1
                if ta > max_time:
                    max_time = ta
            if va == VERDICT_MAXSTEPS or vb == VERDICT_MAXSTEPS:
                maxsteps_cases += 1
    out = np.empty(7, dtype=np.int64)
    out[0] = cases
    out[1] = mismatches
    out[2] = accepted
    out[3] = max_time
    out[4] = maxsteps_cases
    out[5] = first_bad_combo
    out[6] = first_bad_input
    return out


@njit(cache=True)
def run_single_case(slot_from, slot_read, k, act_to, act_write, act_dir,
                    x_bits, x_len, budget):
    """Run one (procedure, input) case through both kernels.

    Returns (et_verdict, et_time, oracle_verdict, oracle_time).
    """
    tape_size = 2 * budget + 16
    origin = tape_size // 2
    tape = np.full(tape_size, BLANK_CODE, dtype=np.int8)
    snap = np.empty(tape_size, dtype=np.int8)
    esc = np.empty(4, dtype=np.int64)
    _load_input(tape, origin, x_bits, x_len)
    va, ta, mina, maxa = _et_run(slot_from, slot_read, k, act_to, act_write,
                                 act_dir, x_bits, x_len, tape, snap, esc, budget, origin)
    _reset(tape, mina, maxa)
    _load_input(tape, origin, x_bits, x_len)
    vb, tb, minb, maxb = _oracle_run(slot_from, slot_read, k, act_to, act_write,
                                     act_dir, x_bits, x_len, tape, snap, esc, budget, origin)
    return va, ta, vb, tb


def all_inputs(max_len: int):
    """All binary strings of length 0..max_len, as (bits matrix, lengths)."""
    strings = []
    for n in range(max_len + 1):
        for bits in itertools.product((0, 1), repeat=n):
            strings.append(bits)
    lens = np.array([len(s) for s in strings], dtype=np.int64)
    mat = np.zeros((len(strings), max(1, max_len)), dtype=np.int8)
    for i, s in enumerate(strings):
        for j, b in enumerate(s):
            mat[i, j] = b
    return mat, lens


def slot_sets(max_instructions: int):
    """All instruction-slot subsets of size 0..max_instructions."""
    for k in range(max_instructions + 1):
        for combo in itertools.combinations(range(N_SLOTS), k):
            slot_from = np.array([s // 3 for s in combo], dtype=np.int8)
            slot_read = np.array([s % 3 for s in combo], dtype=np.int8)
            yield slot_from, slot_read, k, combo
