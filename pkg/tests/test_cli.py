import json

import pytest

from staircase.cli import main, run


def write(tmp_path, name, payload):
    path = tmp_path / name
    path.write_text(json.dumps(payload))
    return str(path)


@pytest.fixture
def ideal_file(tmp_path):
    return write(tmp_path, "i.json", {"vars": 2, "gens": [[2, 0], [1, 1]]})


@pytest.fixture
def matrix_file(tmp_path):
    return write(tmp_path, "m.json", {"rows": 1, "cols": 2, "entries": [[1, 1]]})


def test_ideal_default_payload(ideal_file):
    report = run(["ideal", "-I", ideal_file])
    assert report.command == "ideal"
    assert report.status is None
    assert report.payload["ideal"] == {"vars": 2, "gens": [[1, 1], [2, 0]]}
    assert report.payload["is_artinian"] is False


def test_ideal_ops(tmp_path, ideal_file):
    other = write(tmp_path, "j.json", {"vars": 2, "gens": [[1, 0]]})
    assert run(["ideal", "-I", other, "--contains", ideal_file]).payload == {
        "contains": True
    }
    assert run(["ideal", "-I", ideal_file, "--quotient", "1,0"]).payload == {
        "vars": 2,
        "gens": [[0, 1], [1, 0]],
    }
    assert run(["ideal", "-I", ideal_file, "--member", "2,1"]).payload == {"member": True}
    std = run(["ideal", "-I", ideal_file, "--standard-up-to", "2"]).payload["standard"]
    assert [0, 2] in std and [2, 0] not in std


def test_decompose_payloads(ideal_file):
    primary = run(["decompose", "-I", ideal_file]).payload
    assert primary == [
        {"gens": [[1, 0]], "tau": [1]},
        {"gens": [[0, 1], [2, 0]], "tau": []},
    ]
    irr = run(["decompose", "-I", ideal_file, "--irreducible"]).payload
    assert {"gens": [[1, 0]], "vars": 2} in irr
    primes = run(["decompose", "-I", ideal_file, "--primes"]).payload
    assert primes == [{"tau": [1]}, {"tau": []}]


def test_hilbert_payload(ideal_file):
    payload = run(["hilbert", "-I", ideal_file, "--table-bound", "2"]).payload
    assert [[0, 0], 1] in payload["numerator"]
    assert [[2, 1], 1] in payload["numerator"]
    table = dict((tuple(b), n) for b, n in payload["table"])
    assert table[(0, 0)] == 1 and table[(1, 1)] == 0 and table[(0, 2)] == 1


def test_antichain_pass_and_fail(tmp_path):
    good = write(
        tmp_path, "good.json", [{"vars": 2, "gens": [[a, 0], [0, 6 - a]]} for a in (1, 2, 3)]
    )
    bad = write(
        tmp_path, "bad.json", [{"vars": 2, "gens": [[1, 0]]}, {"vars": 2, "gens": [[2, 0]]}]
    )
    ok = run(["antichain", "-F", good])
    assert ok.status == "pass" and ok.payload["is_antichain"] is True
    fail = run(["antichain", "-F", bad])
    assert fail.status == "fail" and fail.payload["witness"] == [1, 0]
    assert main(["antichain", "-F", good]) == 0
    assert main(["antichain", "-F", bad]) == 1


def test_chain_modes(tmp_path):
    fam = write(
        tmp_path,
        "fam.json",
        [
            {"vars": 2, "gens": [[1, 0], [0, 1]]},
            {"vars": 2, "gens": [[2, 0], [0, 1]]},
            {"vars": 2, "gens": [[2, 0], [0, 2]]},
        ],
    )
    payload = run(["chain", "-F", fam]).payload
    assert payload == {"chain": [0, 1, 2], "length": 3}
    pivot = write(tmp_path, "pivot.json", {"vars": 2, "gens": [[2, 0], [0, 1]]})
    refined = run(["chain", "-F", fam, "--refine", pivot]).payload
    assert refined == {"blocks": [[0], [1, 2]]}
    grouped = run(["chain", "-F", fam, "--group-primes"]).payload
    assert grouped == {"blocks": [[0, 1, 2]]}


def test_fiber_payload(matrix_file):
    payload = run(["fiber", "-A", matrix_file, "-b", "3"]).payload
    assert payload["points"] == [[0, 3], [1, 2], [2, 1], [3, 0]]
    assert payload["vertices"] == [[0, 3], [3, 0]]


def test_atomic_scan_payload(matrix_file):
    assert run(["atomic-scan", "-A", matrix_file, "--bound", "5"]).payload == [[1]]
    assert (
        run(["atomic-scan", "-A", matrix_file, "--bound", "5", "--mode", "lattice"]).payload
        == [[1]]
    )


def test_atomic_scan_rejects_ideal_in_vertex_mode(matrix_file, tmp_path):
    zero = write(tmp_path, "zero.json", {"vars": 2, "gens": []})
    assert main(["atomic-scan", "-A", matrix_file, "--bound", "3", "--ideal", zero]) == 2


def test_sagbi_payload(matrix_file):
    assert run(["sagbi", "-A", matrix_file, "--coeffs", "2,3", "--bound", "5"]).payload == [
        [1, [1]]
    ]


def test_vertex_ideal_payload(matrix_file):
    payload = run(["vertex-ideal", "-A", matrix_file, "--bound", "3"]).payload
    assert payload["gens"] == {"vars": 2, "gens": [[1, 1]]}
    assert [0, 0] in payload["standard"]


def test_lift_payload(tmp_path):
    g = write(tmp_path, "g.json", {"rows": 1, "cols": 2, "entries": [[2, 3]]})
    payload = run(["lift", "-G", g, "--degree", "2", "--bound", "3"]).payload
    assert payload == {"vars": 2, "gens": [[0, 2], [1, 0]]}


def test_posetx_checks():
    ok = run(["posetx", "--check-antichain", "12"])
    assert ok.status == "pass" and ok.payload["ok"] is True
    bound = run(["posetx", "--chain-bound", "6"])
    assert bound.status == "pass" and bound.payload["violations"] == []


def test_young_directions(tmp_path):
    oi = write(tmp_path, "oi.json", {"vars": 2, "points": [[0, 0], [1, 0], [0, 1]]})
    assert run(["young", "--to-ideal", oi]).payload == {
        "vars": 2,
        "gens": [[0, 2], [1, 1], [2, 0]],
    }
    art = write(tmp_path, "art.json", {"vars": 2, "gens": [[2, 0], [1, 1], [0, 2]]})
    assert run(["young", "--to-order-ideal", art]).payload == {
        "vars": 2,
        "points": [[0, 0], [0, 1], [1, 0]],
    }


def test_example35_passes():
    report = run(["example35"])
    assert report.status == "pass"
    assert report.payload["witness"] == [1, 1, 4, 2, 2, 2]
    assert report.payload["minkowski_decomposes"] is True
    assert report.payload["is_atomic"] is False
    assert all(report.payload["checks"].values())
    assert main(["example35"]) == 0


def test_exit_codes_and_errors(tmp_path, capsys):
    assert main(["ideal", "-I", str(tmp_path / "missing.json")]) == 2
    err = capsys.readouterr().err
    assert "missing.json" in err
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    assert main(["ideal", "-I", str(bad)]) == 2
    assert "bad.json" in capsys.readouterr().err
    negative = write(tmp_path, "neg.json", {"vars": 2, "gens": [[-1, 0]]})
    assert main(["ideal", "-I", negative]) == 2
    with pytest.raises(SystemExit) as exc:
        main(["not-a-command"])
    assert exc.value.code == 2


def test_stdout_deterministic(matrix_file, capsys):
    main(["fiber", "-A", matrix_file, "-b", "2"])
    first = capsys.readouterr().out
    main(["fiber", "-A", matrix_file, "-b", "2"])
    second = capsys.readouterr().out
    assert first == second
    json.loads(first)  # stdout is exactly one JSON document


def test_seed_env_accepted(matrix_file, monkeypatch):
    monkeypatch.setenv("STAIRCASE_SEED", "7")
    report = run(["fiber", "-A", matrix_file, "-b", "1"])
    assert report.payload["points"] == [[0, 1], [1, 0]]
    main(["--seed", "3", "fiber", "-A", matrix_file, "-b", "1"])
