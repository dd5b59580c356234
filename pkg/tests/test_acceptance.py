"""Acceptance suite: one test per criterion, each printing a pass line.

Run with `pytest tests/test_acceptance.py -v -s`.  The oracle-equivalence
sweep is exhaustive over its procedure space and takes a few minutes of
single-core time; everything else finishes in seconds.
"""

import random
import time
from importlib import resources

from compenv.evolving import fresh_acceptor
from compenv.experiments import (
    AdversaryCertificate,
    Box513,
    adversary_trap,
    flood,
    order_sensitivity_demo,
    replay_adversary_certificate,
)
from compenv.procedures import accept_any, reject_all, scan_right
from compenv.session import open_session
from compenv.static_env import sbox_s
from compenv.syntax import config, parse_configuration
from compenv.verification import (
    STATIC_TO_EVOLVING,
    EVOLVING_TO_STATIC,
    build_consistent_static,
    check_axioms,
    complexity_equivalence_witness,
    cross_validate_kernels,
    exhaustive_canonical_configurations,
    extract_box_pairs,
    oracle_equivalence_scan,
    static_accepts,
    verify_equivalence_witness,
)

SEED = 20260810


def report(name: str):
    print(f"\n[PASS] {name}")


def test_order_sensitivity_pair():
    started = time.perf_counter()
    proc = scan_right()
    first = open_session("ee")
    assert first.run_procedure(proc, "111").success is True
    assert first.run_procedure(proc, "11").success is False
    second = open_session("ee")
    assert second.run_procedure(proc, "11").success is True
    assert second.run_procedure(proc, "111").success is True
    demo = order_sensitivity_demo()
    assert demo.verdicts_a == (True, False)
    assert demo.verdicts_b == (True, True)
    elapsed = time.perf_counter() - started
    assert elapsed < 1.0
    report(f"order-sensitivity pair: (YES,NO) and (YES,YES) in {elapsed:.3f}s")


def test_flood_property():
    started = time.perf_counter()
    for m in (1, 2, 3):
        session = open_session("ee")
        result = flood(session, m)
        assert all(v == 1 for v in result.pre_verdicts.values()), m
        assert all(v == 0 for v in result.post_verdicts.values()), m
        assert len(result.pre_verdicts) == 2 ** (m + 1)
        assert len(result.post_verdicts) == 2 ** m
    elapsed = time.perf_counter() - started
    assert elapsed < 1.0
    report(f"flood property for m in {{1,2,3}}: exact in {elapsed:.3f}s")


def test_persistence_and_monotone_growth():
    rng = random.Random(SEED)
    sequences = 10_000
    inconsistencies = 0
    for _ in range(sequences):
        pt = fresh_acceptor()
        answers = {}
        sizes = pt.current.size()
        for _ in range(rng.randint(1, 20)):
            if answers and rng.random() < 0.35:
                x = rng.choice(list(answers))
            else:
                x = "".join(rng.choice("01") for _ in range(rng.randint(0, 8)))
            bit = pt.query(x)
            if x in answers and answers[x] != bit:
                inconsistencies += 1
            answers[x] = bit
            new_sizes = pt.current.size()
            assert all(a <= b for a, b in zip(sizes, new_sizes))
            sizes = new_sizes
    assert inconsistencies == 0
    report(f"persistence: {sequences} random query sequences, "
           "zero replay inconsistencies, growth monotone")


def test_oracle_equivalence_exhaustive():
    checked = cross_validate_kernels(300, seed=SEED)
    assert checked == 300
    result = oracle_equivalence_scan(max_instructions=4, max_input_len=4)
    # procedures with <= 4 instructions over 3 non-halting states and the
    # full tape alphabet, times inputs of length <= 4
    assert result.cases == 1_332_564_295
    assert result.mismatches == 0, result.first_mismatch
    assert result.accepted > 0
    # budget sanity: the longest accepting run sits well inside the budget
    assert result.max_accept_time * 2 <= 96
    report(f"oracle equivalence: {result.cases:,} cases agree exactly "
           f"(accepted {result.accepted:,}, longest accept "
           f"{result.max_accept_time}) in {result.elapsed_seconds:.0f}s")


def test_axiom_suite():
    static_report = check_axioms("et", fuzz_samples=10_000, seed=SEED)
    assert static_report.all_passed()
    evolving_report = check_axioms("ee", fuzz_samples=10_000, seed=SEED)
    for axiom in ("A1", "A2", "A3"):
        assert evolving_report.check(axiom).passed, axiom
    assert evolving_report.check("A4", "fresh").passed
    flooded = evolving_report.check("A4", "post-flood")
    assert not flooded.passed and flooded.counterexamples
    session = evolving_report.sessions["post-flood"]
    witness = flooded.counterexamples[0]["config"]
    assert not session.query_sbox(parse_configuration(witness))
    report("axiom suite: static passes A1-A4; evolving passes A1-A3 and "
           f"fresh A4; post-flood A4 fails at {witness} (replayed)")


def test_two_n_equivalence():
    checked = 0
    for c in exhaustive_canonical_configurations(8, states=("h",)):
        if not sbox_s(c):
            continue
        into_evolving = complexity_equivalence_witness(c, STATIC_TO_EVOLVING)
        assert into_evolving.k <= 2 * into_evolving.n
        assert verify_equivalence_witness(into_evolving)
        back = complexity_equivalence_witness(c, EVOLVING_TO_STATIC)
        assert back.k == 0 and verify_equivalence_witness(back)
        checked += 1
    assert checked == 509  # halting words of length <= 7, both patterns
    report(f"2n-equivalence: verified witnesses for all {checked} "
           "small YES configurations")


def test_adversary_certificates():
    for name, candidate in (("accept-all", accept_any()),
                            ("reject-all", reject_all())):
        cert = adversary_trap(candidate, {3: 7}, [3])
        assert isinstance(cert, AdversaryCertificate), name
        assert cert.contradiction, name
        assert replay_adversary_certificate(cert), name
    report("adversary: accept-all and reject-all at n=3 trapped; "
           "certificates replay bit-for-bit")


def test_box513():
    box = Box513()
    assert [box.query(n) for n in (7, 5, 7, 9)] == [1, 1, 1, 2]
    box = Box513()
    assert [box.query(n) for n in (3, 13, 3, 4)] == [1, 1, 1, 3]
    rng = random.Random(SEED)
    for _ in range(10_000):
        box = Box513()
        seen = {}
        for _ in range(rng.randint(1, 25)):
            n = rng.randint(0, 25)
            answer = box.query(n)
            if n in seen:
                assert seen[n] == answer
            seen[n] = answer
    report("box513: [1,1,1,2] and [1,1,1,3] exact; well-defined over "
           "10000 random sequences")


def test_consistency_proposition():
    rng = random.Random(SEED)
    for _ in range(100):
        session = open_session("ee")
        for _ in range(rng.randint(1, 50)):
            x = "".join(rng.choice("01") for _ in range(rng.randint(0, 7)))
            session.query_sbox(config("h", x, "_", ""))
        pairs = extract_box_pairs(session.log)
        acceptor = build_consistent_static(pairs)
        assert all(static_accepts(acceptor, x) == bool(b) for x, b in pairs)
    report("consistency proposition: 100 random evolving transcripts all "
           "carry a reproducing static acceptor")


def test_console_round_trip_server_side():
    # the console's exact request sequence for the order pair, compared
    # byte-for-byte against the golden transcript; then a blinded reveal
    from fastapi.testclient import TestClient

    from compenv.service import create_app

    client = TestClient(create_app())
    sid = client.post("/sessions", json={"kind": "ee"}).json()["id"]
    assert client.post(f"/sessions/{sid}/sbox",
                       json={"config": "(h, 111[_])"}).json()["verdict"] == "YES"
    assert client.post(f"/sessions/{sid}/sbox",
                       json={"config": "(h, 11[_])"}).json()["verdict"] == "NO"
    golden = resources.files("compenv").joinpath(
        "golden/order_sensitivity_a.jsonl").read_text()
    assert client.get(f"/sessions/{sid}/transcript").text == golden

    blind = client.post("/sessions", json={"kind": "blinded", "seed": 7}).json()["id"]
    client.post(f"/sessions/{blind}/sbox", json={"config": "(h, 10[_])"})
    reveal = client.post(f"/sessions/{blind}/reveal",
                         json={"guess": "static"}).json()
    assert reveal["kind"] in ("et", "ee")
    assert reveal["certificate"]["reproduces_all"]
    report("console round-trip: order pair via HTTP matches the golden "
           "transcript byte-for-byte; reveal returns kind plus certificate")
