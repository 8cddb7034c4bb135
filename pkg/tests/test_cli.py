import json

import pytest

from wordlab.cli import BadFilterExpression, PROPERTIES, compile_filter, enumerate_words, main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_analyze_json(capsys):
    code, out, _ = run(capsys, "analyze", "001011", "--props", "palindromic_length,rich,asymmetric", "--json")
    assert code == 0
    assert json.loads(out) == {"word": "001011", "palindromic_length": 3, "rich": True, "asymmetric": True}


def test_analyze_many_words_from_file(tmp_path, capsys):
    path = tmp_path / "words.txt"
    path.write_text("# fixed words\n0011\n\n001011\n")
    code, out, _ = run(capsys, "analyze", f"@{path}", "--props", "palindromic_length", "--json")
    assert code == 0
    assert [r["palindromic_length"] for r in json.loads(out)] == [2, 3]


def test_analyze_lists_properties(capsys):
    code, out, _ = run(capsys, "analyze", "--list")
    assert code == 0 and "palindromic_length" in out and "smallest_attractor" in out


def test_transform(capsys):
    assert run(capsys, "transform", "bwt", "0011", "001011")[1].split() == ["1010", "101100"]
    assert run(capsys, "transform", "derivative", "001011")[1].strip() == "10201"
    assert run(capsys, "transform", "morphism", "0011", "--morphism", "tau")[1].strip() == "01011010"
    assert run(capsys, "transform", "pansiot", "00")[1].strip() == "0"


def test_generate(capsys):
    assert run(capsys, "generate", "debruijn-fm", "3")[1].strip() == "00010111"
    code, out, _ = run(capsys, "generate", "pre-antipalindromes", "3", "--json")
    assert json.loads(out) == ["001", "011", "100", "110"]


def test_enumerate(capsys):
    assert run(capsys, "enumerate", "6", "--filter", "asymmetric", "--emit", "count")[1].strip() == "12"
    out = run(capsys, "enumerate", "8", "--filter", "not rich")[1].split()
    assert out == ["00101100", "00110100", "11001011", "11010011"]
    assert run(capsys, "enumerate", "0")[1].strip() == "ε"


def test_filter_compiler():
    # palindromic length 3 at n = 6 picks out exactly the asymmetric words
    assert list(enumerate_words(6, "palindromic_length >= 3 and not asymmetric")) == []
    assert len(list(enumerate_words(6, "palindromic_length == 3"))) == 12
    for bad in ("__import__('os')", "rich.real", "bogus > 1", "[rich]", "rich and"):
        with pytest.raises(BadFilterExpression):
            compile_filter(bad)


def test_every_property_runs_on_w(capsys):
    code, out, _ = run(capsys, "analyze", "001011", "--props", ",".join(PROPERTIES), "--json")
    assert code == 0
    report = json.loads(out)
    assert set(report) == {"word", *PROPERTIES}
    assert report["smallest_attractor"] == {"size": 3, "witness": [1, 3, 5]}
    assert report["palindromic_length"] == 3 and report["rich"] is True


def test_verify_exit_codes(capsys):
    code, out, _ = run(capsys, "verify", "BWT-FIXED-20")
    assert code == 0 and "verified" in out and "13" in out
    code, out, _ = run(capsys, "verify", "LYN-GHS-6")
    assert code == 1 and "counterexample: 001101" in out
    code, _, err = run(capsys, "verify", "NOPE")
    assert code == 2 and "NOPE" in err


def test_usage_errors_exit_2(capsys):
    assert run(capsys, "analyze", "012x")[0] == 2
    assert run(capsys, "enumerate", "6", "--filter", "bogus")[0] == 2
    with pytest.raises(SystemExit) as exc:
        main(["no-such-command"])
    assert exc.value.code == 2


def test_verify_json_is_deterministic_across_jobs(capsys):
    args = ["verify", "--tag", "example", "--json"]
    first = run(capsys, *args)
    again = run(capsys, *args)
    parallel = run(capsys, *args, "--jobs", "2")
    assert first == again == parallel
    reports = json.loads(first[1])
    assert [r["id"] for r in reports] == sorted(r["id"] for r in reports)
    assert all(r["elapsed_ms"] is None for r in reports)
