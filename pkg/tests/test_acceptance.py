"""Acceptance criteria, one test per criterion.

Each test runs the relevant property suite at its default trial counts,
checks that every required check ran at least the stated number of trials
with zero failures, enforces the wall-clock limit, and prints one PASS/FAIL
line.  Under pytest the lines are repeated in the terminal summary.
"""
import subprocess
import sys
import time

import pytest

from cli_corpus import CORPUS
from relksp.document import parse_document, print_document
from relksp.suites import run_suite

ZMOD8 = "Zmod 8"
POLY5 = "poly Zmod 5 X"

#: one line per evaluated criterion, shown in the pytest terminal summary
RESULT_LINES = []


def expect(names, trials):
    return {name: trials for name in names}


def pfaffian_requirements():
    out = {}
    for ring in ("Z", "Zmod 7"):
        for size in (2, 4, 6, 8):
            for clause in ("pf_perp", "pf_transpose", "pf_squared_is_det", "pf_congruence"):
                out[f"{clause}[{ring},{size}]"] = 500
            out[f"pf_chi[{ring},{size}]"] = 1
    return out


CRITERIA = {
    "elementary relations E0-E5 in Sp6/Sp8": (
        "elementary", 30,
        expect([f"E{k}[{ring},Sp{n}]" for k in range(6) for ring in ("Z", ZMOD8, POLY5) for n in (6, 8)], 1000),
    ),
    "Steinberg relations R0-R5 and symbols": (
        "steinberg", 30,
        {**expect([f"R{k}[{ring}]" for k in range(6) for ring in ("Z", ZMOD8)], 1000),
         **expect(["symbols[Zmod 7]", "symbols[Q]"], 100)},
    ),
    "ESD transvections and relations": (
        "esd", 30,
        {"transvection_is_generator[Z,Sp6]": 30,
         **expect(["relation_I_2", "relation_I_3", "relation_I_4_a0", "relation_II"], 500)},
    ),
    "Pfaffian clauses for sizes 2..8": ("pfaffian", 60, pfaffian_requirements()),
    "excision and lift identities": (
        "lifts", 60,
        {**expect([f"axioms[{r}]" for r in ("excision Z <2>", "double Z <2>")], 1000),
         "uv_round_trip[excision Z <2>]": 1000,
         **expect(["lifts_multiplication[Z]", "tilde_operation[Z]"], 500),
         **expect(["lift_sl[Z]", "lift_sp[Z]", "lift_sl[Zmod 8]", "lift_sp[Zmod 8]"], 200),
         "lift_row_projection[Z]": 200,
         "lift_word_projection[Z]": 200,
         "localization_compat[Z]": 100},
    ),
    "Witt group representatives and certificates": (
        "witt", 60,
        {"pf_section[Zmod 8,<4>]": 2,
         "whitehead_certificate[Zmod 8,<4>]": 4,
         "hyperbolic_of_symplectic": 100,
         "inverse_rep_pfaffian": 200,
         "padding_invariance": 100,
         "extract_block": 200},
    ),
    "patching and relative row completion": (
        "completion", 60,
        {"patch_round_trip[Z]": 200,
         "patch_round_trip[poly Zmod 5 T]": 200,
         "curated_relative_completion": 20,
         "euclidean_reduction": 500},
    ),
}


def report(label, ok, elapsed, detail=""):
    line = f"{'PASS' if ok else 'FAIL'}  {label}  ({elapsed:.1f}s){'  ' + detail if detail else ''}"
    RESULT_LINES.append(line)
    print(line, flush=True)
    return line


def evaluate_suite(label):
    suite, limit, required = CRITERIA[label]
    start = time.perf_counter()
    (result,) = run_suite(suite, seed=7)
    elapsed = time.perf_counter() - start
    ran = {c.name: c for c in result.checks}
    problems = []
    for name, trials in required.items():
        check = ran.get(name)
        if check is None:
            problems.append(f"{name} missing")
        elif check.trials < trials:
            problems.append(f"{name} ran {check.trials} < {trials}")
    problems += [f"{c.name} failed: {c.first_failure}" for c in result.checks if not c.passed]
    if elapsed >= limit:
        problems.append(f"took {elapsed:.1f}s, limit {limit}s")
    report(label, not problems, elapsed, "; ".join(problems))
    return problems


@pytest.mark.parametrize("label", list(CRITERIA))
def test_suite_criterion(label):
    assert evaluate_suite(label) == []


def run_all_suites():
    return subprocess.run([sys.executable, "-m", "relksp", "suite", "all", "--seed", "7"],
                          capture_output=True, timeout=300)


def evaluate_cli():
    start = time.perf_counter()
    problems = []
    if len(CORPUS) != 30:
        problems.append(f"corpus has {len(CORPUS)} documents")
    for n, text in enumerate(CORPUS):
        doc = parse_document(text)
        if parse_document(print_document(doc)) != doc:
            problems.append(f"document {n} does not round trip")
    first, second = run_all_suites(), run_all_suites()
    if first.returncode != 0 or second.returncode != 0:
        problems.append(f"exit codes {first.returncode}, {second.returncode}")
    if first.stdout != second.stdout:
        problems.append("suite output differs between runs")
    elapsed = time.perf_counter() - start
    if elapsed >= 300:
        problems.append(f"took {elapsed:.1f}s, limit 300s")
    report("CLI round trip and reproducible suite all", not problems, elapsed, "; ".join(problems))
    return problems


def test_cli_criterion():
    assert evaluate_cli() == []


if __name__ == "__main__":
    failed = [label for label in CRITERIA if evaluate_suite(label)]
    if evaluate_cli():
        failed.append("cli")
    sys.exit(1 if failed else 0)
