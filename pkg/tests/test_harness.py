import json
import os
import shutil
import subprocess
import sys

import pytest

from ptdesigns._data import BUNDLED
from ptdesigns.constructions import catalog
from ptdesigns.designs import Design, save_dsg
from ptdesigns.errors import BoundExceededError
from ptdesigns.harness import certify_all
from ptdesigns.harness.cli import main
from ptdesigns.harness.search import bundled_small_groups, colex_rank, search_small, subset_orbits, table_match
from ptdesigns.permgroup import cyclic_group, symmetric_group


def run(argv, capsys):
    code = main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


# -- CLI ----------------------------------------------------------------------------


def test_construct_list(capsys):
    code, out, _ = run(["construct", "--list"], capsys)
    assert code == 0 and out.split() == [r.tag for r in catalog()]


def test_construct_then_verify(tmp_path, capsys):
    dsg, grp = tmp_path / "ag32.dsg", tmp_path / "psl27.grp"
    assert run(["construct", "Table2:line4", "--out", str(dsg), "--group-out", str(grp)], capsys)[0] == 0
    code, out, _ = run(["verify", "--design", str(dsg), "--group", str(grp), "--mode", "both"], capsys)
    assert code == 0 and "verdict: pairwise-transitive" in out


def test_verify_negative_exits_1(tmp_path, capsys):
    dsg, grp = tmp_path / "c63.dsg", tmp_path / "s6.grp"
    run(["construct", "neg:C(6,3)", "--out", str(dsg), "--group-out", str(grp)], capsys)
    code, out, _ = run(["verify", "--design", str(dsg), "--group", str(grp)], capsys)
    assert code == 1 and "orbits.intersecting_block_pairs: 2" in out


def test_verify_with_bundled_group_name(tmp_path, capsys):
    dsg = tmp_path / "ag32.dsg"
    run(["construct", "Table2:line4", "--out", str(dsg)], capsys)
    code, _, _ = run(["verify", "--design", str(dsg), "--group", "PSL27_8", "--mode", "fast"], capsys)
    assert code == 0


def test_gammal1_cli(capsys):
    code, out, _ = run(["gammal1", "--p", "2", "--d", "4", "--i", "1", "--j", "0", "--t", "1"], capsys)
    assert code == 0 and out.strip() == "transitive: yes"
    code, out, _ = run(["gammal1", "--p", "2", "--d", "4", "--i", "5", "--j", "0", "--t", "1", "--orbits"], capsys)
    assert code == 0 and "transitive: no" in out and "orbit_sizes: 3 12" in out
    code, _, err = run(["gammal1", "--p", "2", "--d", "4", "--i", "4", "--j", "0", "--t", "1"], capsys)
    assert code == 2 and "standard form" in err


def test_zsigmondy_cli(capsys):
    assert run(["zsigmondy", "--p", "2", "--d", "6"], capsys)[1].strip() == "ppd: none"
    assert run(["zsigmondy", "--p", "3", "--d", "4"], capsys)[1].strip() == "ppd: 5"


def test_params_nonsense(tmp_path, capsys):
    p = tmp_path / "nonsense.dsg"
    save_dsg(Design(5, [(0, 1, 2), (1, 2)]), p)
    code, out, _ = run(["params", "--design", str(p)], capsys)
    assert code == 0 and "design: not a t-design (t>=2)" in out


def test_params_identities(tmp_path, capsys):
    p = tmp_path / "fano.dsg"
    run(["construct", "Table1:line2(3,2)", "--out", str(p)], capsys)
    _, out, _ = run(["params", "--design", str(p)], capsys)
    assert "design: 2-(7,3,1)" in out and "violated" not in out and "symmetric: yes" in out


def test_malformed_design_exit_2_with_line_number(tmp_path, capsys):
    p = tmp_path / "bad.dsg"
    p.write_text("points 4\nblock 0 1 9\n")
    code, _, err = run(["params", "--design", str(p)], capsys)
    assert code == 2 and "bad.dsg:2:" in err


def test_malformed_group_exit_2(tmp_path, capsys):
    d, g = tmp_path / "d.dsg", tmp_path / "g.grp"
    run(["construct", "Table2:line4", "--out", str(d)], capsys)
    g.write_text("degree 8\nperm 0 1 2\n")
    code, _, err = run(["verify", "--design", str(d), "--group", str(g)], capsys)
    assert code == 2 and "g.grp:2:" in err


def test_missing_file_and_unknown_tag(capsys):
    assert run(["params", "--design", "/nonexistent.dsg"], capsys)[0] == 2
    assert run(["construct", "Table9:line1"], capsys)[0] == 2
    assert run(["group", "NoSuchGroup"], capsys)[0] == 2


def test_usage_error_exit_2(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["frobnicate"])
    assert exc.value.code == 2


def test_group_cli(capsys):
    code, out, _ = run(["group", "M11_12"], capsys)
    assert code == 0 and "order: 7920" in out and "transitivity_degree: 3" in out


def test_search_cli(capsys):
    code, out, _ = run(["search", "--group", "M11(12)", "--k", "6"], capsys)
    assert code == 0 and "2-(12,6,5)" in out and "Table2:line5" in out


def test_console_script_runs():
    exe = shutil.which("ptdesigns")
    cmd = [exe] if exe else [sys.executable, "-m", "ptdesigns"]
    r = subprocess.run(cmd + ["zsigmondy", "--p", "2", "--d", "4"], capture_output=True, text=True)
    assert r.returncode == 0 and r.stdout.strip() == "ppd: 5"


# -- certify_all --------------------------------------------------------------------


def test_certify_all_small_is_deterministic():
    a = certify_all(max_points=20)
    b = certify_all(max_points=20)
    assert a.body(timing=False) == b.body(timing=False)
    assert a.passed
    ran = [r for r in a.rows if r.status != "skipped"]
    assert ran and all(r.params.v <= 20 for r in ran)
    assert {r.tag for r in a.rows} == {r.tag for r in catalog()}


def test_certify_all_cli_max_points(tmp_path, capsys):
    out = tmp_path / "certs.txt"
    code, text, _ = run(["certify-all", "--max-points", "20", "--out", str(out), "--no-timing"], capsys)
    assert code == 0 and text.strip() == "48 rows certified, 22 skipped, 0 failing"
    assert out.read_text() == certify_all(max_points=20).body(timing=False)


def test_d176_without_hs_data(tmp_path):
    for f in BUNDLED.iterdir():
        if f.name != "hs176.grp":
            shutil.copy(f, tmp_path / f.name)
    script = ("import json; from ptdesigns.harness import certify_all;"
              "b = certify_all(tags=['Table1:line8', 'Table1:line9']);"
              "print(json.dumps([[r.tag, r.status, r.passed, r.params.describe()] for r in b.rows]))")
    env = dict(os.environ, PTD_DATA_DIR=str(tmp_path))
    r = subprocess.run([sys.executable, "-c", script], capture_output=True, text=True, env=env)
    assert r.returncode == 0, r.stderr
    rows = json.loads(r.stdout)
    assert rows == [
        ["Table1:line8", "construction-only: parameters verified, group check skipped", True, "2-(176,50,14)"],
        ["Table1:line9", "construction-only: parameters verified, group check skipped", True, "2-(176,126,90)"],
    ]


# -- search ---------------------------------------------------------------------------


def test_colex_rank_is_a_bijection():
    from itertools import combinations
    from math import comb

    ranks = [colex_rank(s) for s in combinations(range(7), 3)]
    assert sorted(ranks) == list(range(comb(7, 3)))


def test_subset_orbits_partition():
    from math import comb

    orbs = list(subset_orbits(cyclic_group(7), 3))
    assert sum(len(o) for o in orbs) == comb(7, 3)
    assert len(orbs) == 5


def test_search_sym6_has_no_hits():
    assert search_small(symmetric_group(6), range(3, 4)) == []


def _orbit_blocks(G, rep):
    orbit, stack = {rep}, [rep]
    while stack:
        s = stack.pop()
        for g in G.generators:
            img = tuple(sorted(g(x) for x in s))
            if img not in orbit:
                orbit.add(img)
                stack.append(img)
    return orbit


def test_search_psl27_k4_one_design_up_to_isomorphism():
    from itertools import permutations

    G = bundled_small_groups()["PSL(2,7)"]()
    hits = search_small(G, range(4, 5))
    assert {h.params.describe() for h in hits} == {"2-(8,4,3)"}
    assert all(h.params.mu == 2 and h.params.b == 14 for h in hits)
    designs = [_orbit_blocks(G, h.representative) for h in hits]
    assert len(designs) == 2
    first, second = designs
    assert any({tuple(sorted(g[x] for x in b)) for b in first} == second for g in permutations(range(8)))


def test_search_m11_12_k6():
    hits = search_small(bundled_small_groups()["M11(12)"](), range(6, 7))
    assert [h.params.describe() for h in hits] == ["2-(12,6,5)"]


def test_search_bounds():
    with pytest.raises(BoundExceededError):
        search_small(symmetric_group(21))
    with pytest.raises(ValueError):
        search_small(symmetric_group(8), range(5, 6))


def test_table_match():
    assert table_match(8, 4, 3, 2) == ["Table2:line1", "Table2:line4"]
    assert "Table2:line6" in table_match(15, 3, 1, 1)
    assert "Table1:line3" in table_match(15, 7, 3) and "Table1:line2" in table_match(15, 7, 3)
    assert table_match(6, 3, 2) == []
