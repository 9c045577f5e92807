"""End-to-end checks for the fixture tree and its recorded cassettes."""

import hashlib
import json
import random
from pathlib import Path

import pytest

from solvebench import get_problem, smt
from solvebench.orchestrate import parse_config, run_experiment

from fixture_programs import (
    CATALOG,
    FIXTURES_ROOT,
    PROBLEMS,
    correct_fixtures,
    faulty_fixtures,
    get_fixture,
    load_manifest,
)
from fixture_programs.build import (
    ARCS,
    DEMO_INSTANCES,
    TIME_LIMIT,
    BuildError,
    build_cassettes,
    validate_fixtures,
)
from solvebench.sandbox import run_candidate

SOLVER_CMD = smt.command_string(TIME_LIMIT)


def run_fixture(fixture, instance):
    _, outcome = run_candidate(get_problem(fixture.problem), instance,
                               fixture.source(), time_limit=TIME_LIMIT,
                               solver_command=SOLVER_CMD)
    return outcome


def demo_instance(fixture):
    adapter = get_problem(fixture.problem)
    text = DEMO_INSTANCES[(fixture.problem, fixture.variant)]
    return adapter._instance(text, adapter.measure(text))


# ---------------------------------------------------------------------------
# catalog shape

def test_catalog_covers_every_problem():
    assert len(PROBLEMS) == 12
    assert len(CATALOG) == 27
    for problem in PROBLEMS:
        assert get_fixture(problem, "solver").role == "correct"
        assert get_fixture(problem, "pal").role == "correct"
    for fixture in CATALOG:
        assert fixture.path.is_file(), fixture.path
    for fixture in faulty_fixtures():
        repaired = get_fixture(fixture.problem, fixture.fixes)
        assert repaired.role == "correct"
    with pytest.raises(KeyError):
        get_fixture("subset-sum", "no-such-variant")


# ---------------------------------------------------------------------------
# every correct fixture solves fresh instances within the budget

@pytest.mark.parametrize(
    "fixture", correct_fixtures(),
    ids=lambda f: "%s/%s" % (f.problem, f.variant))
def test_correct_fixture_solves_fresh_instances(fixture):
    adapter = get_problem(fixture.problem)
    for seed in range(3):
        instance = adapter.generate(adapter.default_test_size(),
                                    random.Random(seed))
        outcome = run_fixture(fixture, instance)
        assert outcome.kind == "Correct", (seed, outcome.detail)


def test_infeasible_instances_answered_with_none():
    # both correct subset-sum programs must report None, not guess
    adapter = get_problem("subset-sum")
    text = "2 4 6\n5\n"
    instance = adapter._instance(text, adapter.measure(text))
    for variant in ("solver", "pal"):
        outcome = run_fixture(get_fixture("subset-sum", variant), instance)
        assert outcome.kind == "Correct", (variant, outcome.detail)


# ---------------------------------------------------------------------------
# faulty fixtures fail the designated way, and their repairs recover

@pytest.mark.parametrize(
    "fixture", faulty_fixtures(),
    ids=lambda f: "%s/%s" % (f.problem, f.variant))
def test_faulty_fixture_earns_its_designation(fixture):
    outcome = run_fixture(fixture, demo_instance(fixture))
    assert outcome.kind == fixture.designated, outcome.detail


def test_repaired_programs_flip_the_demo_instances():
    for fixture in faulty_fixtures():
        instance = demo_instance(fixture)
        before = run_fixture(fixture, instance)
        after = run_fixture(get_fixture(fixture.problem, fixture.fixes),
                            instance)
        assert before.kind == fixture.designated
        assert after.kind == "Correct", (fixture.variant, after.detail)


def test_validation_catches_a_broken_fixture():
    sabotaged = correct_fixtures()[0]

    def source_for(fixture):
        if fixture is sabotaged:
            return "open('output.txt', 'w').write('not a solution')\n"
        return fixture.source()

    with pytest.raises(BuildError):
        validate_fixtures(instances=1, source_for=source_for)


# ---------------------------------------------------------------------------
# cassettes: recorded by the build, replayable through the pipeline

def replay_config(arc, cassette: Path, out_dir: Path) -> str:
    return (
        "problems %s\n"
        "methods %s\n"
        "provider replay\n"
        "cassette %s\n"
        "runs 1\n"
        "feedback_rounds 4\n"
        "solved_examples %d\n"
        "test_count 2\n"
        "seed %d\n"
        "time_limit %d\n"
        "out_dir %s\n"
        % (arc["problem"], arc["method"], cassette, arc["solved_examples"],
           arc["seed"], int(TIME_LIMIT), out_dir)
    )


def test_build_records_replayable_cassettes(tmp_path):
    cassettes = build_cassettes(tmp_path / "cassettes")
    assert len(cassettes) == len(ARCS)
    for arc, cassette in zip(ARCS, cassettes):
        lines = cassette.read_text().splitlines()
        assert len(lines) == len(arc["replies"])

        config = parse_config(replay_config(arc, cassette,
                                            tmp_path / arc["name"]))
        run = run_experiment(config, write=False)
        trace = run.method_runs[0].traces[0]
        kinds = tuple(r.feedback_kind for r in trace.rounds
                      if r.feedback_kind)
        assert kinds == arc["feedback_kinds"]
        assert trace.stop_reason == "AllCorrect"
        assert all(t.outcome.kind == "Correct"
                   for t in run.method_runs[0].test_refined)
        assert run.provider.calls == len(arc["replies"])


def test_committed_cassettes_match_their_arcs():
    for arc in ARCS:
        cassette = FIXTURES_ROOT / "cassettes" / ("%s.jsonl" % arc["name"])
        assert cassette.is_file()
        lines = cassette.read_text().splitlines()
        assert len(lines) == len(arc["replies"])
        for line, (problem, variant) in zip(lines, arc["replies"]):
            entry = json.loads(line)
            source = get_fixture(problem, variant).source()
            assert source in entry["response"]["text"]


# ---------------------------------------------------------------------------
# manifest pins what the tree actually contains

def test_manifest_matches_tree():
    manifest = load_manifest()
    assert manifest["pins"]["solvebench"]
    by_key = {(e["problem"], e["variant"]): e for e in manifest["fixtures"]}
    assert len(by_key) == len(CATALOG)
    for fixture in CATALOG:
        entry = by_key[(fixture.problem, fixture.variant)]
        assert entry["sha256"] == fixture.sha256()
        assert entry["designated"] == fixture.designated
    for key, text in DEMO_INSTANCES.items():
        assert manifest["demo_instances"]["%s/%s" % key] == text
    for arc, entry in zip(ARCS, manifest["cassettes"]):
        assert (FIXTURES_ROOT / entry["file"]).is_file()
        assert entry["feedback_kinds"] == list(arc["feedback_kinds"])
