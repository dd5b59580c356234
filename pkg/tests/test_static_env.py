import random

import pytest
from hypothesis import given, strategies as st

from compenv.syntax import (
    Configuration,
    Instruction,
    associated_string,
    config,
)
from compenv.static_env import StaticProcessor, sbox_s, tbox_s
from compenv.verification import exhaustive_canonical_configurations

states = st.sampled_from(["h", "q0", "q1", "q2"])
symbols = st.sampled_from(["0", "1", "_"])
configs = st.builds(Configuration, states, st.lists(symbols, max_size=5).map(tuple),
                    symbols, st.lists(symbols, max_size=5).map(tuple))
instructions = st.builds(Instruction, states, symbols, states, symbols,
                         st.sampled_from(["L", "R"]))


class TestTbox:
    def test_left_move_midword(self):
        # raw result keeps the leading blank; the canonical form trims it,
        # and the associated word is unchanged up to padding
        c = config("q1", "_00", "1", "101")
        inst = Instruction("q1", "1", "q2", "1", "L")
        got = tbox_s(c, inst)
        assert got == config("q2", "_0", "0", "1101")
        assert got == config("q2", "0", "0", "1101")  # canonical equality
        assert associated_string(got) == "001101"

    def test_right_move_from_edge_blank(self):
        c = config("q0", "", "_", "01")
        inst = Instruction("q0", "_", "h", "_", "R")
        got = tbox_s(c, inst)
        assert got == config("h", "", "0", "1")

    def test_mismatch_is_undefined(self):
        c = config("q0", "", "_", "")
        inst = Instruction("q1", "0", "h", "0", "R")
        assert tbox_s(c, inst) is None

    def test_left_move_materializes_blank(self):
        c = config("h", "", "1", "10")
        inst = Instruction("h", "1", "h", "1", "L")
        assert tbox_s(c, inst) == config("h", "", "_", "110")

    def test_applicable_iff_trigger_matches(self):
        rng = random.Random(7)
        samples = list(exhaustive_canonical_configurations(3))
        for _ in range(500):
            c = rng.choice(samples)
            inst = Instruction(rng.choice(["h", "q0", "q1"]),
                               rng.choice(["0", "1", "_"]),
                               "q0", rng.choice(["0", "1", "_"]),
                               rng.choice(["L", "R"]))
            applicable = (c.state, c.head) == (inst.from_state, inst.read)
            assert (tbox_s(c, inst) is not None) == applicable

    @given(configs, instructions)
    def test_purity(self, c, inst):
        assert tbox_s(c, inst) == tbox_s(c, inst)

    @given(configs, instructions)
    def test_move_and_return_preserves_word_up_to_written_cell(self, c, inst):
        stepped = tbox_s(c, inst)
        if stepped is None:
            return
        back_dir = "L" if inst.direction == "R" else "R"
        back = tbox_s(stepped, Instruction(stepped.state, stepped.head,
                                           c.state, stepped.head, back_dir))
        assert back is not None
        # back at the original cell: tape may differ only in the written cell
        assert back.left == c.left and back.right == c.right
        assert back.head == inst.write


class TestSbox:
    def test_halting_left_pattern(self):
        assert sbox_s(config("h", "", "_", "01"))

    def test_halting_right_pattern(self):
        assert sbox_s(config("h", "01", "_", ""))

    def test_non_halting_state(self):
        assert not sbox_s(config("q1", "", "_", "01"))

    def test_empty_word_accepted(self):
        assert sbox_s(config("h", "", "_", ""))

    def test_interior_blank_rejected(self):
        assert not sbox_s(config("h", "", "_", "0_1"))
        assert not sbox_s(config("h", "0_1", "_", ""))

    def test_exactly_two_patterns_on_small_configurations(self):
        for c in exhaustive_canonical_configurations(4):
            word_ok = all(a in "01" for a in c.left + c.right)
            expected = (c.state == "h" and c.head == "_" and word_ok
                        and (not c.left or not c.right))
            assert sbox_s(c) == expected, c

    @given(configs)
    def test_purity(self, c):
        p = StaticProcessor()
        assert p.sbox(c) == p.sbox(c) == sbox_s(c)
