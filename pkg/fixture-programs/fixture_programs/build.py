"""Validate the fixture tree and record its replay cassettes.

The cassettes are produced by running the benchmark's own experiment
entry point against a scripted provider whose replies are the fixture
programs, so every transcript on disk went through the same recording
path a live run would use. Nothing here is written by hand.
"""

import json
import random
import sys
import tempfile
from pathlib import Path

from solvebench import get_problem, smt
from solvebench.orchestrate import parse_config, run_experiment
from solvebench.sandbox import run_candidate

from . import (
    CATALOG,
    FIXTURES_ROOT,
    MANIFEST_PATH,
    PACKAGE_ROOT,
    correct_fixtures,
    faulty_fixtures,
    get_fixture,
    __version__,
)


class BuildError(Exception):
    pass


# demo instances on which each faulty fixture must earn its designated kind;
# the binairo one admits a relaxed completion that duplicates the first row,
# which is exactly the mistake the faulty encoding family is built around
DEMO_INSTANCES = {
    ("binairo", "faulty"): "1 2 1 2\n0 0 0 0\n2 1 2 1\n0 0 0 0\n",
    ("subset-sum", "faulty-crash"): "2 17 21 3 5\n26\n",
    ("subset-sum", "faulty-wrong"): "2 17 21 3 5\n26\n",
}

ARCS = (
    {
        "name": "subset-sum-arc",
        "problem": "subset-sum",
        "method": "pal",
        "seed": 0,
        "solved_examples": 3,
        "replies": (("subset-sum", "faulty-crash"),
                    ("subset-sum", "faulty-wrong"),
                    ("subset-sum", "pal")),
        "feedback_kinds": ("Runtime", "WrongOutput"),
    },
    {
        "name": "binairo-arc",
        "problem": "binairo",
        "method": "solver_program",
        "seed": 0,
        "solved_examples": 2,
        "replies": (("binairo", "faulty"), ("binairo", "solver")),
        "feedback_kinds": ("WrongOutput",),
    },
)

TIME_LIMIT = 60.0


def _fenced(source: str) -> str:
    return "```python\n%s```" % source


def validate_fixtures(instances: int = 3, source_for=None) -> None:
    """Run every fixture and fail loudly when one misbehaves."""
    if source_for is None:
        source_for = lambda fixture: fixture.source()
    solver_cmd = smt.command_string(TIME_LIMIT)
    for fixture in correct_fixtures():
        adapter = get_problem(fixture.problem)
        program = source_for(fixture)
        for seed in range(instances):
            instance = adapter.generate(adapter.default_test_size(),
                                        random.Random(seed))
            _, outcome = run_candidate(adapter, instance, program,
                                       time_limit=TIME_LIMIT,
                                       solver_command=solver_cmd)
            if outcome.kind != "Correct":
                raise BuildError(
                    "%s/%s should solve every instance but produced %s on "
                    "seed %d: %s" % (fixture.problem, fixture.variant,
                                     outcome.kind, seed, outcome.detail))
    for fixture in faulty_fixtures():
        adapter = get_problem(fixture.problem)
        text = DEMO_INSTANCES[(fixture.problem, fixture.variant)]
        instance = adapter._instance(text, adapter.measure(text))
        _, outcome = run_candidate(adapter, instance, source_for(fixture),
                                   time_limit=TIME_LIMIT,
                                   solver_command=solver_cmd)
        if outcome.kind != fixture.designated:
            raise BuildError(
                "%s/%s is designated %s but produced %s: %s"
                % (fixture.problem, fixture.variant, fixture.designated,
                   outcome.kind, outcome.detail))
        # its repaired counterpart must flip the same instance to Correct
        repaired = get_fixture(fixture.problem, fixture.fixes)
        _, outcome = run_candidate(adapter, instance, source_for(repaired),
                                   time_limit=TIME_LIMIT,
                                   solver_command=solver_cmd)
        if outcome.kind != "Correct":
            raise BuildError(
                "%s/%s should repair the %s demo but produced %s: %s"
                % (repaired.problem, repaired.variant, fixture.variant,
                   outcome.kind, outcome.detail))


def _arc_config(arc, script_path: Path, cassette_path: Path,
                out_dir: Path) -> str:
    return (
        "problems %s\n"
        "methods %s\n"
        "provider scripted\n"
        "script_file %s\n"
        "record_cassette %s\n"
        "runs 1\n"
        "feedback_rounds 4\n"
        "solved_examples %d\n"
        "test_count 2\n"
        "seed %d\n"
        "time_limit %d\n"
        "out_dir %s\n"
        % (arc["problem"], arc["method"], script_path, cassette_path,
           arc["solved_examples"], arc["seed"], int(TIME_LIMIT), out_dir)
    )


def build_cassettes(out_dir: Path = None) -> list:
    """Record one cassette per scripted refinement arc."""
    out_dir = Path(out_dir) if out_dir else FIXTURES_ROOT / "cassettes"
    out_dir.mkdir(parents=True, exist_ok=True)
    written = []
    for arc in ARCS:
        cassette = out_dir / ("%s.jsonl" % arc["name"])
        with tempfile.TemporaryDirectory() as scratch:
            scratch = Path(scratch)
            script = scratch / "replies.jsonl"
            replies = [_fenced(get_fixture(p, v).source())
                       for p, v in arc["replies"]]
            script.write_text(
                "\n".join(json.dumps({"text": r}) for r in replies) + "\n")
            config = parse_config(
                _arc_config(arc, script, cassette, scratch / "reports"))
            run = run_experiment(config, write=False)
        trace = run.method_runs[0].traces[0]
        kinds = tuple(r.feedback_kind for r in trace.rounds
                      if r.feedback_kind)
        if kinds != arc["feedback_kinds"]:
            raise BuildError("%s arc produced feedback %r, wanted %r"
                             % (arc["name"], kinds, arc["feedback_kinds"]))
        if trace.stop_reason != "AllCorrect":
            raise BuildError("%s arc stopped with %s"
                             % (arc["name"], trace.stop_reason))
        if any(t.outcome.kind != "Correct"
               for t in run.method_runs[0].test_refined):
            raise BuildError("%s arc best program failed at test time"
                             % arc["name"])
        written.append(cassette)
    return written


def _solver_binding_version() -> str:
    package_json = PACKAGE_ROOT.parent / "node_modules" / "z3-solver" / "package.json"
    if package_json.exists():
        return json.loads(package_json.read_text())["version"]
    return "unknown"


def write_manifest(cassettes) -> Path:
    manifest = {
        "generated_by": "fixture_programs.build",
        "version": __version__,
        "python_requires": ">=3.10",
        "pins": {
            "solvebench": _solvebench_version(),
            "z3-solver": _solver_binding_version(),
            "solver_interface": "SMT-LIB2 text over the SMT_SOLVER_CMD subprocess",
        },
        "fixtures": [
            {
                "problem": f.problem,
                "variant": f.variant,
                "role": f.role,
                "designated": f.designated,
                "fixes": f.fixes,
                "sha256": f.sha256(),
            }
            for f in CATALOG
        ],
        "demo_instances": {
            "%s/%s" % key: text for key, text in sorted(DEMO_INSTANCES.items())
        },
        "cassettes": [
            {
                "file": "cassettes/%s.jsonl" % arc["name"],
                "problem": arc["problem"],
                "method": arc["method"],
                "seed": arc["seed"],
                "solved_examples": arc["solved_examples"],
                "replies": ["%s/%s" % pair for pair in arc["replies"]],
                "feedback_kinds": list(arc["feedback_kinds"]),
            }
            for arc in ARCS
        ],
    }
    MANIFEST_PATH.write_text(json.dumps(manifest, indent=2, sort_keys=True)
                             + "\n")
    return MANIFEST_PATH


def _solvebench_version() -> str:
    import solvebench
    return solvebench.__version__


def main(argv=None) -> int:
    validate_fixtures()
    cassettes = build_cassettes()
    manifest = write_manifest(cassettes)
    for path in cassettes:
        print("wrote %s" % path)
    print("wrote %s" % manifest)
    return 0


if __name__ == "__main__":
    sys.exit(main())
