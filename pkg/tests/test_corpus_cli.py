import subprocess
import sys

import pytest

from graphconj import cli
from graphconj import invariants as inv
from graphconj.families import build_Gr_example
from graphconj.corpus import CorpusCache, CorpusError, builtin, cache_get_or_compute, ingest, load
from graphconj.graph import complete_graph, disjoint_union, parse_graph6


def write(tmp_path, name, text):
    p = tmp_path / name
    p.write_text(text)
    return p


def test_ingest_examples(tmp_path):
    assert ingest(write(tmp_path, "a.g6", "Bw\nC~")) == [complete_graph(3), complete_graph(4)]
    assert ingest(write(tmp_path, "b.g6", "# comment\nBw")) == [complete_graph(3)]
    with pytest.raises(CorpusError, match="empty corpus"):
        ingest(write(tmp_path, "c.g6", ""))


def test_ingest_reports_line_number(tmp_path):
    with pytest.raises(CorpusError, match=":3:"):
        ingest(write(tmp_path, "d.g6", "Bw\nC~\nBx\n"))


def test_ingest_dedups_with_warning(tmp_path, caplog):
    assert ingest(write(tmp_path, "e.g6", "Bw\nBw\nC~\n")) == [complete_graph(3), complete_graph(4)]
    assert "duplicate" in caplog.text


def test_bundled_corpus_sizes():
    assert len(builtin("connected_le7")) == 1 + 1 + 2 + 6 + 21 + 112 + 853
    assert len(builtin("connected_8")) == 11117
    assert len(builtin("cubic_le14")) == 1 + 2 + 5 + 19 + 85 + 509
    assert len(builtin("cubic_le10")) == 27
    assert len(builtin("trees_le15_maxdeg3")) == 2233
    assert len(builtin("slice_9_10")) == 500
    assert load("builtin:cubic_le10") == builtin("cubic_le10")
    with pytest.raises(CorpusError):
        builtin("nope")


def test_cache_cold_then_warm(tmp_path):
    path = tmp_path / "cache.tsv"
    cache = CorpusCache(path)
    K4 = complete_graph(4)
    assert cache_get_or_compute(cache, K4, inv.ALPHA) == 1
    assert cache.computed == 1
    assert path.read_text() == "C~\talpha\t1\n"
    assert cache_get_or_compute(cache, K4, inv.ALPHA) == 1
    assert cache.computed == 1
    again = CorpusCache(path)
    assert again.rows == cache.rows
    assert again.get_or_compute(K4, inv.ALPHA) == 1 and again.computed == 0


def test_cache_error_writes_nothing(tmp_path):
    path = tmp_path / "cache.tsv"
    cache = CorpusCache(path)
    with pytest.raises(inv.InvariantUndefined):
        cache.get_or_compute(disjoint_union(complete_graph(2), complete_graph(2)), inv.GAMMA_C)
    assert len(cache) == 0 and not path.exists()


def test_cache_parametrized_key_and_conflicts(tmp_path):
    path = tmp_path / "cache.tsv"
    CorpusCache(path).get_or_compute(complete_graph(4), inv.gamma_k(2))
    assert path.read_text() == "C~\tgamma_k:2\t2\n"
    path.write_text(path.read_text() + "C~\tgamma_k:2\t3\n")
    with pytest.raises(CorpusError, match="conflicting"):
        CorpusCache(path)


def run(argv, capsys):
    code = cli.main(["--no-timing", *argv])
    out, err = capsys.readouterr()
    return code, out, err


def test_cli_invariants_row(tmp_path, capsys):
    path = write(tmp_path, "k4.g6", "C~\n")
    code, out, _ = run(["invariants", "--file", str(path)], capsys)
    assert code == 0
    assert out == "C~ alpha=1 mu=2 gamma=1 gamma_t=2 gamma_c=1 gamma_e=2\n"


def test_cli_family_G_r(capsys):
    code, out, _ = run(["family", "--G-r", "3"], capsys)
    G = parse_graph6(out.strip())
    assert code == 0 and G.n == 12 and G == build_Gr_example(3)


def test_cli_check_thm_3_2_cubic10(tmp_path, capsys):
    path = write(tmp_path, "cubic10.g6", "\n".join(G.graph6 for G in builtin("cubic_le10")) + "\n")
    code, out, _ = run(["check", "--theorem", "THM_3_2", "--corpus", str(path)], capsys)
    assert code == 0 and "violations=0" in out


def test_cli_check_reports_and_exit_1_on_violation(tmp_path, capsys, monkeypatch):
    from dataclasses import replace
    from fractions import Fraction

    from graphconj import theorems

    path = write(tmp_path, "c.g6", "C~\n")
    code, out, _ = run(["check", "--theorem", "THM_3_2", "--corpus", str(path), "--reports"], capsys)
    assert code == 0
    assert out.splitlines()[0] == "C~\tTHM_3_2\t2\t6/5\ttrue\tfalse"

    broken = replace(theorems.STATEMENTS["THM_3_2"],
                     evaluate=lambda tid, G: theorems._Eval(True, Fraction(0), Fraction(1)))
    monkeypatch.setitem(theorems.STATEMENTS, "THM_3_2", broken)
    code, out, _ = run(["check", "--theorem", "THM_3_2", "--corpus", str(path), "--jobs", "1"], capsys)
    assert code == 1 and "violation\tC~" in out


def test_cli_usage_errors_exit_2(capsys):
    assert cli.main(["bogus"]) == 2
    assert cli.main(["check", "--theorem", "THM_9_9", "--corpus", "builtin:cubic_le10"]) == 2
    assert cli.main(["family"]) == 2
    assert cli.main(["conjecture", "--corpus", "builtin:cubic_le10", "--target", "zeta"]) == 2
    capsys.readouterr()


def test_cli_verify_and_selftest(capsys):
    code, out, _ = run(["verify-corpus", "--corpus", "builtin:cubic_le10"], capsys)
    assert code == 0 and out.count("violations=0") == len(out.splitlines())
    code, out, _ = run(["selftest"], capsys)
    assert code == 0 and "mismatches=0" in out


def test_cli_conjecture_output(capsys):
    code, out, _ = run(["conjecture", "--corpus", "builtin:cubic_le10", "--target", "gamma_c", "--top", "5"], capsys)
    lines = out.splitlines()
    assert code == 0 and 1 <= len(lines) <= 5
    hyp, ineq, touch, support, examples = lines[0].split("\t")
    assert touch.startswith("touch=") and support.startswith("support=")


def test_cli_is_deterministic_and_footer_on_stderr(tmp_path):
    argv = [sys.executable, "-m", "graphconj.cli", "conjecture", "--corpus", "builtin:cubic_le10",
            "--target", "alpha"]
    a = subprocess.run(argv, capture_output=True, text=True, check=True)
    b = subprocess.run(argv, capture_output=True, text=True, check=True)
    assert a.stdout == b.stdout
    assert a.stderr.startswith("# conjecture:")
    c = subprocess.run(argv + ["--no-timing"], capture_output=True, text=True, check=True)
    assert c.stderr == "" and c.stdout == a.stdout


def test_cli_stdin(monkeypatch, capsys):
    import io
    monkeypatch.setattr(sys, "stdin", io.StringIO("Bw\n"))
    code, out, _ = run(["invariants", "--invariants", "alpha,gamma_2,alpha_L0"], capsys)
    assert out == "Bw alpha=1 gamma_2=2 alpha_L0=1\n"
