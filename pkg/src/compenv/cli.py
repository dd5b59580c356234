"""Command-line operator surface.

`run` executes one procedure on one input in a chosen environment (with an
optional same-session REPL, whose answers in an evolving environment
depend on everything asked before).  `experiment` reproduces the named
phenomenon and writes its artifacts: transcripts and certificates as JSON
(Lines), a delimited summary, and a figure.  `serve` starts the local
HTTP service backing the computist console.
"""

from __future__ import annotations

import json
import os
import sys
from pathlib import Path

import click

from .syntax import (
    DeterminismError,
    SyntaxError_,
    format_configuration,
    parse_procedure,
)
from .session import DEFAULT_MAX_STEPS, EnvironmentKind, open_session
from . import experiments as exps
from . import procedures as procs
from . import reporting
from .verification import (
    STATIC_TO_EVOLVING,
    EVOLVING_TO_STATIC,
    check_axioms,
    complexity_equivalence_witness,
    cross_validate_kernels,
    exhaustive_canonical_configurations,
    oracle_equivalence_scan,
    verify_equivalence_witness,
)
from .static_env import sbox_s

EXPERIMENT_NAMES = ("order-sensitivity", "flood", "adversary", "pt1",
                    "box513", "axioms", "equivalence", "oracle-diff")

BUILTIN_PROCEDURES = {
    "scan-right": procs.scan_right,
    "ones-then-zero": procs.ones_then_zero,
    "accept-all": procs.accept_any,
    "reject-all": procs.reject_all,
}


def _default_seed() -> int | None:
    raw = os.environ.get("COMPENV_SEED")
    return int(raw) if raw else None


def _load_procedure(spec: str):
    if spec.startswith("@"):
        name = spec[1:]
        if name not in BUILTIN_PROCEDURES:
            raise click.UsageError(
                f"unknown builtin procedure {name!r}; have: "
                + ", ".join(sorted(BUILTIN_PROCEDURES)))
        return BUILTIN_PROCEDURES[name]()
    path = Path(spec)
    if not path.exists():
        raise click.UsageError(f"procedure file not found: {spec}")
    try:
        return parse_procedure(path.read_text())
    except (SyntaxError_, DeterminismError) as exc:
        raise click.UsageError(f"bad procedure file {spec}: {exc}")


@click.group()
def main():
    """Computation environments: static and persistently evolving."""


@main.command("run")
@click.option("--env", "env", type=click.Choice(["et", "ee", "blinded"]),
              default="et", show_default=True)
@click.option("--proc", "proc_spec", required=True,
              help="procedure file, or @name for a builtin")
@click.option("--input", "input_", required=True, help="input string over 0/1")
@click.option("--max-steps", type=int, default=DEFAULT_MAX_STEPS, show_default=True)
@click.option("--seed", type=int, default=None,
              help="session seed (default: COMPENV_SEED)")
@click.option("--show-path", is_flag=True, help="print the computation path")
@click.option("--repl", is_flag=True,
              help="keep the session open and run further inputs from stdin")
@click.pass_context
def run_cmd(ctx, env, proc_spec, input_, max_steps, seed, show_path, repl):
    """Run a procedure on an input; exit 0 on success, 1 on rejection."""
    procedure = _load_procedure(proc_spec)
    if seed is None:
        seed = _default_seed()
    session = open_session(EnvironmentKind(env), seed)

    def one(x: str) -> bool:
        try:
            outcome = session.run_procedure(procedure, x, max_steps)
        except SyntaxError_ as exc:
            raise click.UsageError(str(exc))
        tag = "Success" if outcome.success else f"Rejected({outcome.reason})"
        click.echo(f"{x or '(empty)'} -> {tag}, time={outcome.time}")
        if show_path:
            for c in outcome.path:
                click.echo(f"  {format_configuration(c)}")
        return outcome.success

    ok = one(input_)
    if repl:
        click.echo("# repl: one input per line, blank line or EOF to stop",
                   err=True)
        for line in sys.stdin:
            line = line.strip()
            if not line:
                break
            ok = one(line)
    ctx.exit(0 if ok else 1)


@main.command("serve")
@click.option("--host", default="127.0.0.1", show_default=True)
@click.option("--port", type=int, default=8787, show_default=True)
def serve_cmd(host, port):
    """Start the local HTTP service for the computist console."""
    from .service import serve

    serve(host, port)


@main.command("experiment")
@click.argument("name", type=click.Choice(EXPERIMENT_NAMES))
@click.option("--out", "out_dir", type=click.Path(file_okay=False), default="out",
              show_default=True, help="artifact directory")
@click.option("--m", "m_param", type=int, default=1, show_default=True,
              help="flood length parameter")
@click.option("--k", "k_param", type=int, default=1, show_default=True,
              help="claimed horizon for the pt1 experiment")
@click.option("--candidate", default="accept-all", show_default=True,
              help="adversary candidate: builtin name or procedure file")
@click.option("--n", "n_param", type=int, default=3, show_default=True,
              help="adversary word length")
@click.option("--budget", type=int, default=None,
              help="adversary per-length budget (default 2^n - 1)")
@click.option("--replay", "replay_path", type=click.Path(exists=True, dir_okay=False),
              default=None, help="replay an adversary certificate file")
@click.option("--env", "env_param", type=click.Choice(["et", "ee"]), default="ee",
              show_default=True, help="environment for the axiom suite")
@click.option("--post-flood", is_flag=True,
              help="print the post-flood counterexamples of the axiom suite")
@click.option("--fuzz", type=int, default=10_000, show_default=True,
              help="fuzz samples for the axiom suite")
@click.option("--max-word", type=int, default=8, show_default=True,
              help="maximum word length for the equivalence sweep")
@click.option("--full", is_flag=True,
              help="oracle-diff: sweep the full 4-instruction space")
@click.option("--seed", type=int, default=None)
def experiment_cmd(name, out_dir, m_param, k_param, candidate, n_param, budget,
                   replay_path, env_param, post_flood, fuzz, max_word, full, seed):
    """Reproduce a named phenomenon and write its artifacts."""
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    if seed is None:
        seed = _default_seed()

    handler = {
        "order-sensitivity": lambda: _exp_order_sensitivity(out),
        "flood": lambda: _exp_flood(out, m_param),
        "adversary": lambda: _exp_adversary(out, candidate, n_param, budget,
                                            replay_path),
        "pt1": lambda: _exp_pt1(out, k_param),
        "box513": lambda: _exp_box513(out),
        "axioms": lambda: _exp_axioms(out, env_param, post_flood, fuzz),
        "equivalence": lambda: _exp_equivalence(out, max_word),
        "oracle-diff": lambda: _exp_oracle_diff(out, full),
    }[name]
    handler()


def _exp_order_sensitivity(out: Path):
    result = exps.order_sensitivity_demo()
    (out / "order_sensitivity_a.jsonl").write_text(result.transcript_a.to_jsonl())
    (out / "order_sensitivity_b.jsonl").write_text(result.transcript_b.to_jsonl())
    rows = []
    for session, inputs, verdicts in (("A", result.inputs_a, result.verdicts_a),
                                      ("B", result.inputs_b, result.verdicts_b)):
        for i, (x, v) in enumerate(zip(inputs, verdicts), start=1):
            rows.append([session, i, x, "YES" if v else "NO"])
    reporting.write_csv(out / "order_sensitivity.csv",
                        ["session", "seq", "input", "verdict"], rows)
    reporting.verdict_timeline_figure(
        out / "order_sensitivity.png",
        [("session A: 111 then 11", result.inputs_a, result.verdicts_a),
         ("session B: 11 then 111", result.inputs_b, result.verdicts_b)])
    click.echo(f"session A verdicts: {_yn(result.verdicts_a)}")
    click.echo(f"session B verdicts: {_yn(result.verdicts_b)}")
    click.echo(f"artifacts in {out}")


def _yn(verdicts):
    return ",".join("YES" if v else "NO" for v in verdicts)


def _exp_flood(out: Path, m: int):
    session = open_session(EnvironmentKind.EE)
    report = exps.flood(session, m)
    (out / "flood_transcript.jsonl").write_text(
        session.export_transcript().to_jsonl())
    (out / "flood_report.json").write_text(
        json.dumps(report.to_json_obj(), indent=2) + "\n")
    rows = ([["flood", x, v] for x, v in report.pre_verdicts.items()]
            + [["probe", x, v] for x, v in report.post_verdicts.items()])
    reporting.write_csv(out / "flood.csv", ["phase", "input", "verdict"], rows)
    reporting.verdict_timeline_figure(
        out / "flood.png",
        [(f"flood phase: all words of length {m + 1}",
          list(report.pre_verdicts), [bool(v) for v in report.pre_verdicts.values()]),
         (f"probe phase: all words of length {m}",
          list(report.post_verdicts), [bool(v) for v in report.post_verdicts.values()])])
    click.echo(f"flooded length {m + 1}: "
               f"{sum(report.pre_verdicts.values())}/{len(report.pre_verdicts)} accepted")
    click.echo(f"probed length {m}: "
               f"{sum(report.post_verdicts.values())}/{len(report.post_verdicts)} accepted")
    click.echo(f"artifacts in {out}")


def _exp_adversary(out: Path, candidate_spec: str, n: int, budget,
                   replay_path):
    if replay_path:
        cert = exps.AdversaryCertificate.from_json_obj(
            json.loads(Path(replay_path).read_text()))
        ok = exps.replay_adversary_certificate(cert)
        click.echo(f"replay {'reproduced the contradiction' if ok else 'FAILED'}")
        if not ok:
            raise SystemExit(1)
        return
    candidate = _load_procedure(
        "@" + candidate_spec if candidate_spec in BUILTIN_PROCEDURES
        else candidate_spec)
    f_table = {n: budget if budget is not None else 2 ** n - 1}
    result = exps.adversary_trap(candidate, f_table, [n])
    if isinstance(result, exps.NoContradictionAtScale):
        click.echo(f"no certificate: {result.reason} ({result.detail})")
        return
    (out / "adversary_certificate.json").write_text(result.to_json())
    rows = [[i + 1, r.procedure, r.input, "YES" if r.success else "NO"]
            for i, r in enumerate(result.interactions)]
    reporting.write_csv(out / "adversary.csv",
                        ["step", "procedure", "input", "verdict"], rows)
    reporting.verdict_timeline_figure(
        out / "adversary.png",
        [(f"interaction order (candidate verdict on {result.w}: "
          f"{'YES' if result.candidate_verdict else 'NO'}, truth: "
          f"{'YES' if result.ground_truth else 'NO'})",
          [f"{r.procedure[:4]}:{r.input}" for r in result.interactions],
          [r.success for r in result.interactions])])
    click.echo(f"case {result.case}; candidate said "
               f"{'YES' if result.candidate_verdict else 'NO'} on {result.w}, "
               f"ground truth {'YES' if result.ground_truth else 'NO'}"
               f" -> contradiction: {result.contradiction}")
    click.echo(f"certificate: {out / 'adversary_certificate.json'}")


def _exp_pt1(out: Path, k: int):
    report = exps.horizon_refutation_demo(k)
    (out / "pt1_report.json").write_text(
        json.dumps(report.to_json_obj(), indent=2) + "\n")
    rows = ([["a-flood", x, v] for x, v in report.move_a.pre_verdicts.items()]
            + [["a-probe", x, v] for x, v in report.move_a.post_verdicts.items()]
            + [["b-probe", report.move_b_input, report.move_b_verdict]])
    reporting.write_csv(out / "pt1.csv", ["move", "input", "verdict"], rows)
    reporting.verdict_timeline_figure(
        out / "pt1.png",
        [(f"move (a): flood length {report.move_a.m + 1}, probe length {report.move_a.m}",
          report.move_a.queried_inputs,
          [bool(report.move_a.pre_verdicts.get(x, report.move_a.post_verdicts.get(x)))
           for x in report.move_a.queried_inputs]),
         ("move (b): fresh probe one length past the horizon",
          [report.move_b_input], [bool(report.move_b_verdict)])])
    click.echo(f"claimed horizon {k}: move (a) emptied length {report.move_a.m}; "
               f"move (b) fresh {report.move_b_input} -> {report.move_b_verdict}")
    click.echo(f"artifacts in {out}")


def _exp_box513(out: Path):
    seq_a = [7, 5, 7, 9]
    seq_b = [3, 13, 3, 4]
    box_a = exps.Box513()
    box_b = exps.Box513()
    ans_a = [box_a.query(x) for x in seq_a]
    ans_b = [box_b.query(x) for x in seq_b]
    rows = ([["A", x, a] for x, a in zip(seq_a, ans_a)]
            + [["B", x, a] for x, a in zip(seq_b, ans_b)])
    reporting.write_csv(out / "box513.csv", ["sequence", "input", "answer"], rows)
    reporting.box513_figure(out / "box513.png",
                            [("order A", seq_a, ans_a), ("order B", seq_b, ans_b)])
    click.echo(f"{seq_a} -> {ans_a}")
    click.echo(f"{seq_b} -> {ans_b}")
    click.echo(f"artifacts in {out}")


def _exp_axioms(out: Path, env: str, post_flood: bool, fuzz: int):
    report = check_axioms(env, fuzz_samples=fuzz)
    click.echo(report.render_table())
    rows = [[r["environment"], r["axiom"], r["mode"],
             "pass" if r["passed"] else "fail", r["tested"], r["counterexamples"]]
            for r in report.to_rows()]
    reporting.write_csv(out / f"axioms_{env}.csv",
                        ["environment", "axiom", "mode", "result", "tested",
                         "counterexamples"], rows)
    reporting.write_text(out / f"axioms_{env}.txt", report.render_table() + "\n")
    reporting.axiom_report_figure(out / f"axioms_{env}.png", report.to_rows())
    if post_flood:
        if env != "ee":
            raise click.UsageError("--post-flood applies to the evolving environment")
        failing = report.check("A4", "post-flood")
        click.echo("post-flood A4 counterexamples (first 5):")
        for ce in failing.counterexamples[:5]:
            click.echo(f"  {ce['config']}")
    click.echo(f"artifacts in {out}")


def _exp_equivalence(out: Path, max_word: int):
    rows = []
    ns, ks = [], []
    for c in exhaustive_canonical_configurations(max_word, states=("h",)):
        if not sbox_s(c):
            continue
        w = complexity_equivalence_witness(c, STATIC_TO_EVOLVING)
        back = complexity_equivalence_witness(c, EVOLVING_TO_STATIC)
        ok = verify_equivalence_witness(w) and verify_equivalence_witness(back)
        rows.append([format_configuration(c), w.n, w.k, back.k,
                     "ok" if ok else "FAIL"])
        ns.append(w.n)
        ks.append(w.k)
    reporting.write_csv(out / "equivalence.csv",
                        ["config", "n", "k_into_evolving", "k_into_static",
                         "verified"], rows)
    reporting.witness_length_figure(out / "equivalence.png", ns, ks)
    click.echo(f"{len(rows)} YES configurations, all witnesses within 2n: "
               f"{all(r[4] == 'ok' for r in rows)}")
    click.echo(f"artifacts in {out}")


def _exp_oracle_diff(out: Path, full: bool):
    max_instructions = 4 if full else 3
    click.echo(f"cross-validating kernels against the library ...")
    checked = cross_validate_kernels(200)
    click.echo(f"  {checked} random cases agree")
    click.echo(f"sweeping procedures with <= {max_instructions} instructions ...")
    report = oracle_equivalence_scan(max_instructions=max_instructions)
    reporting.write_csv(out / "oracle_diff.csv",
                        ["cases", "mismatches", "accepted", "max_accept_time",
                         "budget_cases", "seconds"],
                        [[report.cases, report.mismatches, report.accepted,
                          report.max_accept_time, report.maxsteps_cases,
                          f"{report.elapsed_seconds:.1f}"]])
    click.echo(f"  {report.cases:,} cases, {report.mismatches} mismatches, "
               f"{report.accepted:,} accepted, "
               f"{report.elapsed_seconds:.1f}s")
    if report.first_mismatch:
        click.echo(f"  first mismatch: {report.first_mismatch}")
        raise SystemExit(1)
    click.echo(f"artifacts in {out}")


if __name__ == "__main__":
    main()
