import io
import json
from unittest import mock

import pytest

from planarmono import cli


def run(*argv):
    out = io.StringIO()
    code = cli.main(list(argv), out)
    return code, out.getvalue()


def records(text):
    return [json.loads(line) for line in text.splitlines()]


def test_search_planar():
    code, text = run("search-planar", "--max-q", "27")
    assert code == 0
    reports = records(text)
    assert [r["q"] for r in reports] == [3, 5, 7, 9, 11, 13, 17, 19, 23, 25, 27]
    assert [e["canonical_t"] for e in reports[-1]["entries"]] == [2, 4]


def test_search_planar_all_classes():
    code, text = run("search-planar", "--max-q", "9", "--all-classes")
    assert code == 0
    (*_, gf9) = records(text)
    assert [e["canonical_t"] for e in gf9["entries"]] == [1, 2, 4, 5, 8]


def test_search_planar_reports_mismatches():
    report = {"q": 9, "mismatches": [{"canonical_t": 4}]}
    with mock.patch("planarmono.verifiers.Planar.search", return_value=iter([report])):
        code, text = run("search-planar", "--max-q", "9")
    assert code == 1
    assert records(text) == [report]


def test_search_cap_is_an_error():
    code, text = run("--cap", "100", "search-planar", "--max-q", "243")
    assert code == 2
    assert text == ""


def test_check_hyperoval():
    code, text = run("check-hyperoval", "3", "4")
    assert code == 0
    (report,) = records(text)
    assert report["hyperoval"] is True
    assert report["triples"] == 120


def test_check_hyperoval_not_found():
    code, text = run("check-hyperoval", "3", "3")
    assert code == 0
    (report,) = records(text)
    assert report["hyperoval"] is False


def test_check_hyperoval_range():
    code, _ = run("check-hyperoval", "9", "2")
    assert code == 2


def test_sb_scan():
    code, text = run("sb-scan", "--t-max", "8")
    assert code == 0
    assert text.splitlines() == [
        "t,c_t3,c_t7,power_of_two",
        "2,1,0,1",
        "4,1,1,1",
        "6,0,0,0",
        "8,1,1,1",
    ]


def test_verify_planar():
    code, text = run("verify-planar", "--max-q", "9")
    assert code == 0
    assert all(r["passed"] for r in records(text))


def test_verify_failure_sets_exit_code():
    failing = {"identity_name": "x", "passed": False, "counterexample": {"n": 1}}
    with mock.patch("planarmono.verifiers.Lemmas.run", return_value=[failing]):
        code, text = run("verify-lemmas")
    assert code == 1
    assert records(text) == [failing]


def test_summarize(tmp_path):
    path = tmp_path / "search.jsonl"
    _, text = run("search-planar", "--max-q", "9")
    path.write_text(text, encoding="utf-8")

    code, summary = run("summarize", str(path))
    assert code == 0
    assert summary == "q,mismatches\n3,0\n5,0\n7,0\n9,0\n"


def test_summarize_mismatches(tmp_path):
    path = tmp_path / "search.jsonl"
    lines = [
        {"q": 5, "mismatches": [], "timestamp": "2024-02-29T12:00:00Z"},
        {
            "q": 3,
            "mismatches": [{"canonical_t": 4}],
            "timestamp": "2024-02-29T12:00:00Z",
        },
    ]
    path.write_text("".join(json.dumps(line) + "\n" for line in lines))

    code, summary = run("summarize", str(path))
    assert code == 1
    assert summary == "q,mismatches\n3,1\n5,0\n"


def test_unknown_command():
    with pytest.raises(SystemExit):
        run("bogus")
