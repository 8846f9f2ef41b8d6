import pytest

from turanhg import algebra, construct, core, krawtchouk, search, shadow, stability
from turanhg.cli import run_cli


def run(capsys, *argv):
    code = run_cli(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_kraw_eval(capsys):
    code, out, _ = run(capsys, "kraw", "eval", "--m", "2", "--n", "4", "--x", "2")
    assert code == 0
    assert out == "-2\n"
    assert out.strip() == str(krawtchouk.kraw_eval(2, 4, 2))


def test_kraw_row(capsys):
    code, out, _ = run(capsys, "kraw", "row", "--n", "5", "--x", "2")
    assert code == 0
    assert out == "".join(f"{v}\n" for v in krawtchouk.genfunc_row(5, 2))


def test_kraw_tstar(capsys):
    code, out, _ = run(capsys, "kraw", "tstar", "--n", "7", "--k", "2")
    assert code == 0
    assert out == "20\n3\n5\n"
    code, out, _ = run(capsys, "kraw", "tstar", "--n", "7", "--k", "2", "--one")
    assert out == "3\n"
    code, out, _ = run(capsys, "kraw", "tstar", "--n", "7", "--k", "2", "--tsv")
    assert out == "two_t\tmax_edges\n3\t20\n5\t20\n"


def test_count_b_and_d(capsys):
    code, out, _ = run(capsys, "count", "b", "--n", "8", "--k", "2", "--two-t", "4")
    assert (code, out) == (0, "40\n")
    code, out, _ = run(
        capsys, "count", "d", "--n", "8", "--k", "2", "--two-t", "4", "--side", "small"
    )
    assert (code, out) == (0, "20\n")


def test_construct_parity_stdout(capsys):
    code, out, _ = run(capsys, "construct", "parity", "--n", "6", "--k", "2", "--two-t", "0")
    assert code == 0
    h, _ = construct.build_parity(6, 2, krawtchouk.Shift(0))
    assert out == core.write_hypergraph(h)


def test_construct_sidorenko_file(tmp_path, capsys):
    out_file = tmp_path / "s.hg"
    code, out, _ = run(
        capsys, "construct", "sidorenko", "--n", "8", "--k", "2", "--p", "2",
        "--out", str(out_file),
    )
    assert code == 0 and out == ""
    h, _ = construct.build_sidorenko(8, 2, 2)
    assert core.read_hypergraph(out_file.read_text()) == h


def test_construct_remainder_flag(capsys):
    code, _, err = run(capsys, "construct", "sidorenko", "--n", "6", "--k", "2", "--p", "2")
    assert code == 2 and "divisible" in err
    code, out, _ = run(
        capsys, "construct", "sidorenko", "--n", "6", "--k", "2", "--p", "2",
        "--allow-remainder",
    )
    assert code == 0 and out.startswith("turan-hg v1")


def test_check_free_and_maximal(tmp_path, capsys):
    h, _ = construct.build_parity(8, 2, krawtchouk.Shift(4))
    f = tmp_path / "p.hg"
    f.write_text(core.write_hypergraph(h))
    code, out, _ = run(capsys, "check", "free", "--file", str(f), "--r", "3")
    assert (code, out) == (0, "free\n")
    code, out, _ = run(capsys, "check", "maximal", "--file", str(f), "--r", "3")
    assert (code, out) == (0, "maximal\n")
    # r=2: any edge is a copy, witness printed as two pair lines
    code, out, _ = run(capsys, "check", "free", "--file", str(f), "--r", "2", "--witness")
    assert code == 1
    lines = out.splitlines()
    assert lines[0] == "copy"
    assert len(lines) == 3
    pair_union = core.mask_of(int(x) for line in lines[1:] for x in line.split())
    assert pair_union in h.edge_set()


def test_check_not_maximal(tmp_path, capsys):
    h, _ = construct.build_parity(8, 2, krawtchouk.Shift(4))
    h2 = core.hypergraph(8, 2, h.edges[1:])
    f = tmp_path / "q.hg"
    f.write_text(core.write_hypergraph(h2))
    code, out, _ = run(capsys, "check", "maximal", "--file", str(f), "--r", "3")
    assert (code, out) == (1, "not-maximal\n")


def test_color_round_trip(tmp_path, capsys):
    f = tmp_path / "c.col"
    code, _, _ = run(capsys, "color", "gen", "--p", "3", "--out", str(f))
    assert code == 0
    assert algebra.read_coloring(f.read_text()) == algebra.generate_gf2_coloring(3)
    code, out, _ = run(capsys, "color", "verify", "--file", str(f))
    assert code == 0
    assert "four_set_condition true" in out
    code, out, _ = run(capsys, "color", "group", "--file", str(f))
    assert code == 0
    assert out.splitlines()[0] == "order 8"
    assert out.splitlines()[1] == "dimension 3"


def test_color_verify_failure_exit(tmp_path, capsys):
    bad = algebra.enumerate_one_factorizations(6)[0]
    f = tmp_path / "k6.col"
    f.write_text(algebra.write_coloring(bad))
    code, out, _ = run(capsys, "color", "verify", "--file", str(f))
    assert code == 1
    assert "four_set_condition false" in out
    assert "first_violation" in out
    code, _, err = run(capsys, "color", "group", "--file", str(f))
    assert code == 1 and err.startswith("error:")


def test_shadow_output(tmp_path, capsys):
    fam = core.set_family(6, 3, list(core.enumerate_ksubsets(5, 3)))
    f = tmp_path / "f.fam"
    f.write_text(shadow.write_family(fam))
    code, out, _ = run(capsys, "shadow", "--file", str(f))
    assert code == 0
    rep = shadow.check_lovasz_bound(fam)
    assert out == (
        f"size {rep.size}\nx {rep.x!r}\nbound {rep.bound!r}\n"
        f"shadow_size {rep.shadow_size}\nholds true\n"
    )
    code, out, _ = run(capsys, "shadow", "--file", str(f), "--tsv")
    assert out.splitlines()[0] == "size\tx\tbound\tshadow_size\tholds"


def test_stability_census_and_improve(tmp_path, capsys):
    h, part = construct.build_parity(10, 2, krawtchouk.Shift(2))
    hf = tmp_path / "h.hg"
    pf = tmp_path / "p.txt"
    hf.write_text(core.write_hypergraph(h))
    pf.write_text(stability.write_bipartition(part))
    code, out, _ = run(
        capsys, "stability", "census", "--file", str(hf), "--partition", str(pf)
    )
    assert code == 0
    c = stability.classify_tuples(h, part)
    assert out == (
        f"good_edges {c.good_edges}\nbad_edges {c.bad_edges}\n"
        f"good_non_edges {c.good_non_edges}\nbad_non_edges {c.bad_non_edges}\n"
    )
    code, out, _ = run(
        capsys, "stability", "census", "--file", str(hf), "--partition", str(pf), "--tsv"
    )
    assert out.splitlines()[1] == f"{c.good_edges}\t{c.bad_edges}\t{c.good_non_edges}\t{c.bad_non_edges}"
    code, out, _ = run(
        capsys, "stability", "improve", "--file", str(hf), "--partition", str(pf)
    )
    assert code == 0
    assert stability.read_bipartition(out, 10) == part  # already stable


def test_stability_simonovits(tmp_path, capsys):
    g = stability.turan_graph(3, 9)
    gf = tmp_path / "g.txt"
    gf.write_text(stability.write_graph(g))
    code, out, _ = run(capsys, "stability", "simonovits", "--graph", str(gf), "--s", "3")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "internal_edges 0"
    assert lines[1] == "hypothesis_failure none"
    assert len(lines) == 2 + 9
    # flagged run exits 1
    c4 = stability.simple_graph(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
    gf.write_text(stability.write_graph(c4))
    code, out, _ = run(capsys, "stability", "simonovits", "--graph", str(gf), "--s", "3")
    assert code == 1
    assert "hypothesis_failure residual-graph-contains-no-K_s" in out


def test_search_exact(capsys, tmp_path):
    code, out, _ = run(capsys, "search", "exact", "--n", "6")
    assert code == 0
    r = search.exact_turan(6)
    assert out == f"value {r.value}\nnodes {r.nodes}\noptimal true\n"
    wf = tmp_path / "w.hg"
    code, out, _ = run(
        capsys, "search", "exact", "--n", "6", "--tsv", "--witness", str(wf)
    )
    assert out == f"value\tnodes\toptimal\n{r.value}\t{r.nodes}\ttrue\n"
    assert core.read_hypergraph(wf.read_text()).edge_count == r.value


def test_search_threads_invariance(capsys):
    outs = set()
    for threads in ("1", "4"):
        code, out, _ = run(
            capsys, "--threads", threads, "search", "exact", "--n", "7", "--seed", "5"
        )
        assert code == 0
        outs.add(out)
    assert len(outs) == 1


def test_exit_codes_usage_and_io(capsys):
    code, _, err = run(capsys, "check", "free", "--file", "/does/not/exist", "--r", "3")
    assert code == 2 and err.startswith("error:")
    code, _, _ = run(capsys, "kraw", "eval", "--m", "2", "--n", "4")
    assert code == 2
    code, _, err = run(capsys, "--threads", "0", "kraw", "eval", "--m", "1", "--n", "2", "--x", "1")
    assert code == 2 and "threads" in err
    code, _, _ = run(capsys, "bogus")
    assert code == 2


def test_format_error_exit(tmp_path, capsys):
    f = tmp_path / "bad.hg"
    f.write_text("turan-hg v1\nn=4 k=2\ne 0 1 2\n")
    code, _, err = run(capsys, "check", "free", "--file", str(f), "--r", "3")
    assert code == 2
    assert "line 3" in err


def test_search_cap_via_cli(capsys):
    code, _, err = run(capsys, "search", "exact", "--n", "9")
    assert code == 2 and "cap" in err
