import pytest

from schulze_nomination.cli import main

ELECTION = """candidates: a b p
party: a b
party*: p
vote: p a b
vote: a b p
vote: b p a
"""


@pytest.fixture
def election(tmp_path):
    path = tmp_path / "e.txt"
    path.write_text(ELECTION)
    return path


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out, err = capsys.readouterr()
    return code, out, err


def test_winners_and_strengths(capsys, election):
    code, out, _ = run(capsys, "winners", election)
    assert code == 0 and out.split() == ["a", "b", "p"]
    code, out, _ = run(capsys, "winners", "--strengths", election)
    assert "\t" in out


def test_solve_exit_codes_and_certificate(capsys, election, tmp_path):
    cert = tmp_path / "cert.txt"
    code, out, _ = run(capsys, "solve", "--problem", "possible", "--certificate", cert, election)
    assert code == 0 and out.startswith("answer: yes")
    assert cert.read_text().startswith("nominees: ")
    code, out, _ = run(capsys, "solve", "--problem", "necessary", "--algorithm", "brute", election)
    assert code == 1 and "counterexample p:" in out


def test_budget_exhaustion_is_an_error(capsys, election):
    code, _, err = run(capsys, "--budget", "1", "solve", "--algorithm", "brute", "--problem", "necessary", election)
    assert code == 2 and err.startswith("error:")


def test_global_flags_after_subcommand(capsys, tmp_path):
    a, b = tmp_path / "a.cnf", tmp_path / "b.cnf"
    assert main(["generate", "cnf", "--n", "3", "--seed", "4", "--out", str(a)]) == 0
    assert main(["--seed", "4", "generate", "cnf", "--n", "3", "--out", str(b)]) == 0
    assert a.read_text() == b.read_text()


def test_reduction_pipeline(capsys, tmp_path):
    cnf, inst, nom = tmp_path / "f.cnf", tmp_path / "i.txt", tmp_path / "n.txt"
    cnf.write_text("p cnf 3 4\n1 1 2 0\n-1 -1 3 0\n-2 -3 -3 0\n-2 3 2 0\n")
    code, out, _ = run(capsys, "oracle", "sat", "--in", cnf)
    assert code == 0 and out.startswith("sat")
    assert main(["generate", "pp4", "--in", str(cnf), "--out", str(inst)]) == 0
    assert main(["solve", "--certificate", str(nom), str(inst)]) == 0
    capsys.readouterr()
    code, out, _ = run(capsys, "decode", "--kind", "pp4", "--instance", inst, "--nomination", nom)
    bits = {abs(int(t)): int(t) > 0 for t in out.split()}
    clauses = [(1, 1, 2), (-1, -1, 3), (-2, -3, -3), (-2, 3, 2)]
    assert code == 0 and all(any(bits[abs(l)] == (l > 0) for l in c) for c in clauses)


def test_clique_oracle_and_graph_generation(capsys, tmp_path):
    g = tmp_path / "h.graph"
    assert main(["generate", "graph", "--q", "2", "--x", "2", "--y", "1", "--out", str(g)]) == 0
    code, out, _ = run(capsys, "oracle", "clique", "--in", g)
    assert code == 0 and out.startswith("clique")
    code, out, _ = run(capsys, "validate", g)
    assert code == 0 and "q=2" in out


def test_pad_keeps_winners(capsys, election, tmp_path):
    padded = tmp_path / "p.txt"
    assert main(["pad", str(election), "--pairs", "2", "--out", str(padded)]) == 0
    assert padded.read_text().count("vote:") == 7
    _, before, _ = run(capsys, "winners", election)
    _, after, _ = run(capsys, "winners", padded)
    assert before == after


def test_batch_command(capsys, election, tmp_path):
    manifest = tmp_path / "m.txt"
    manifest.write_text("e.txt possible brute\ne.txt possible auto\ne.txt necessary search\n")
    code, out, _ = run(capsys, "--jobs", "1", "batch", manifest)
    assert code == 0
    rows = out.splitlines()[1:]
    assert len(rows) == 3 and all(r.endswith("true") for r in rows)


def test_validate_reports_positioned_errors(capsys, tmp_path):
    bad = tmp_path / "bad.txt"
    bad.write_text("candidates: a b\nparty*: a b\nvote: a\n")
    code, _, err = run(capsys, "validate", bad)
    assert code == 2 and "line 3" in err and "'b'" in err


def test_missing_file(capsys, tmp_path):
    code, _, err = run(capsys, "solve", tmp_path / "nope.txt")
    assert code == 2
