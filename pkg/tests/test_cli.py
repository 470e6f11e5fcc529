"""End-to-end tests for the command line front end.

Everything goes through main(argv) in-process; no subprocesses. The tool
promises byte-deterministic output, so happy paths pin exact lines rather
than substrings, and the JSON mode is run twice and compared byte-for-byte.
"""

import json

import pytest

from metriclat.cli import main

# lattice documents reused across commands
CHAIN5 = {"kind": "explicit", "n": 5, "leq": [[0, 1], [1, 2], [2, 3], [3, 4]]}
CHAIN3 = {"kind": "explicit", "n": 3, "leq": [[0, 1], [1, 2]]}
M3 = {
    "kind": "explicit",
    "n": 5,
    "leq": [[0, 1], [0, 2], [0, 3], [1, 4], [2, 4], [3, 4]],
}
FAMILY23 = {"kind": "subsets", "ground": [1, 2, 3], "generators": [[2], [3]]}
DIV12 = {"kind": "divisors", "n": 12}
SQUARE_PLUS_TOP = {
    "kind": "sublattice",
    "of": {"kind": "grid", "heights": [3, 2]},
    "elements": [0, 1, 3, 4, 8],
}
LIP2 = {
    "kind": "lipschitz",
    "points": ["a", "b"],
    "dist": [[0, 1], [1, 0]],
    "step": 1,
    "max": 2,
    "basepoint": "a",
}

OMEGA12 = {
    "kind": "valuation",
    "values": {"1": 0, "2": 1, "3": 1, "4": 2, "6": 2, "12": 3},
}
KAPPA123 = {"kind": "kappa"}  # placeholder, real doc built below
KAPPA123 = {"kind": "ultravaluation", "kappa": {"1": 1, "2": 2, "3": 3}}

# w[f][g] = omega(f) - omega(gcd(f, g)) on the divisors of 12, by hand
W_DIV12 = [
    [0, 0, 0, 0, 0, 0],
    [1, 0, 1, 0, 0, 0],
    [1, 1, 0, 1, 0, 0],
    [2, 1, 2, 0, 1, 0],
    [2, 1, 1, 1, 0, 0],
    [3, 2, 2, 1, 1, 0],
]


@pytest.fixture
def files(tmp_path):
    def write(doc, name):
        p = tmp_path / name
        p.write_text(json.dumps(doc), encoding="utf-8")
        return str(p)

    return write


def run(argv, capsys):
    code = main(argv)
    cap = capsys.readouterr()
    return code, cap.out, cap.err


# -- validate ----------------------------------------------------------------------


def test_validate_distributive_chain(files, capsys):
    code, out, err = run(["validate", files(CHAIN5, "l.json")], capsys)
    assert code == 0
    assert out == "lattice: ok, distributive: yes, 5 elements\n"
    assert err == ""


def test_validate_nondistributive_subspaces(files, capsys):
    path = files({"kind": "subspaces", "q": 2, "n": 2}, "l.json")
    code, out, _ = run(["validate", path], capsys)
    assert code == 0
    assert out == "lattice: ok, distributive: no, 5 elements\n"


def test_validate_grid(files, capsys):
    path = files({"kind": "grid", "heights": [3, 2]}, "l.json")
    code, out, _ = run(["validate", path], capsys)
    assert code == 0
    assert out == "lattice: ok, distributive: yes, 12 elements\n"


def test_validate_json_payload(files, capsys):
    path = files(CHAIN5, "l.json")
    code, out, _ = run(["--json", "validate", path], capsys)
    assert code == 0
    assert json.loads(out) == {"ok": True, "distributive": True, "elements": 5}


def test_validate_missing_file(tmp_path, capsys):
    path = str(tmp_path / "nope.json")
    code, out, err = run(["validate", path], capsys)
    assert code == 1
    assert out == ""
    assert err.startswith(f"error: {path}:")


def test_validate_malformed_json(tmp_path, capsys):
    p = tmp_path / "bad.json"
    p.write_text('{"kind": ', encoding="utf-8")
    code, _, err = run(["validate", str(p)], capsys)
    assert code == 1
    # json's line:col position lands in the message
    assert err.startswith(f"error: {p}:1:")


def test_validate_unknown_kind(files, capsys):
    path = files({"kind": "zoo"}, "l.json")
    code, _, err = run(["validate", path], capsys)
    assert code == 1
    assert "unknown lattice kind 'zoo'" in err


def test_validate_unknown_field(files, capsys):
    doc = dict(CHAIN5, bogus=1)
    code, _, err = run(["validate", files(doc, "l.json")], capsys)
    assert code == 1
    assert "unknown fields: bogus" in err


def test_validate_missing_field(files, capsys):
    path = files({"kind": "subsets", "ground": [1, 2]}, "l.json")
    code, _, err = run(["validate", path], capsys)
    assert code == 1
    assert "missing fields: generators" in err


def test_validate_malformed_leq_pairs(files, capsys):
    path = files({"kind": "explicit", "n": 2, "leq": [[0, 1, 1]]}, "l.json")
    code, _, err = run(["validate", path], capsys)
    assert code == 1
    assert "leq must be a list of [i, j] pairs" in err


def test_validate_not_a_lattice(files, capsys):
    # bowtie: two incomparable elements with two minimal upper bounds
    doc = {"kind": "explicit", "n": 4, "leq": [[0, 2], [0, 3], [1, 2], [1, 3]]}
    code, _, err = run(["validate", files(doc, "l.json")], capsys)
    assert code == 2
    assert err.startswith("error: ")


def test_validate_rejects_float_distances(files, capsys):
    doc = dict(LIP2, dist=[[0, 0.5], [0.5, 0]])
    code, _, err = run(["validate", files(doc, "l.json")], capsys)
    assert code == 1
    assert "dist" in err


# -- check -------------------------------------------------------------------------


def test_check_valuation_divisors(files, capsys):
    argv = ["check", files(DIV12, "l.json"), files(OMEGA12, "m.json")]
    code, out, _ = run(argv, capsys)
    assert code == 0
    assert out.splitlines() == [
        "modular law: PASS",
        "isotone: PASS",
        "additive cut law: PASS",
        "metric axioms: PASS",
        "separating: yes",
    ]


def test_check_valuation_cut_law_fails_off_distributive(files, capsys):
    # rank on the diamond is modular, yet its difference table breaks the
    # additive cut law on every triple of distinct atoms: 6 witnesses
    rank = {"kind": "valuation", "values": {"0": 0, "1": 1, "2": 1, "3": 1, "4": 2}}
    argv = ["check", files(M3, "l.json"), files(rank, "m.json")]
    code, out, _ = run(argv, capsys)
    assert code == 4
    assert out.splitlines() == [
        "modular law: PASS",
        "isotone: PASS",
        "additive cut law: FAIL (6 witnesses)",
        "  (1, 2, 3, 1, 0)",
        "  (1, 3, 2, 1, 0)",
        "  (2, 1, 3, 1, 0)",
        "metric axioms: PASS",
        "separating: yes",
    ]


def test_check_valuation_not_isotone(files, capsys):
    vals = {"kind": "valuation", "values": {"0": 0, "1": 2, "2": 1}}
    argv = ["check", files(CHAIN3, "l.json"), files(vals, "m.json")]
    code, out, _ = run(argv, capsys)
    assert code == 4
    lines = out.splitlines()
    assert "isotone: FAIL (1 witness)" in lines
    assert "  (value decreases along the order)" in lines
    # metric construction is skipped, so no separating verdict
    assert not any(line.startswith("separating") for line in lines)


def test_check_valuation_label_mismatch(files, capsys):
    vals = {"kind": "valuation", "values": {"1": 0, "2": 1}}
    argv = ["check", files(DIV12, "l.json"), files(vals, "m.json")]
    code, _, err = run(argv, capsys)
    assert code == 3
    assert "values keys do not match the lattice labels" in err


def test_check_ultravaluation_family(files, capsys):
    argv = ["check", files(FAMILY23, "l.json"), files(KAPPA123, "m.json")]
    code, out, _ = run(argv, capsys)
    assert code == 0
    assert out.splitlines() == [
        "ultravaluation axioms: PASS",
        "strong triangle: PASS",
        "weight-extraction round trip: PASS",
        "separating: yes",
    ]


def test_check_kappa_needs_subsets_lattice(files, capsys):
    argv = ["check", files(CHAIN5, "l.json"), files(KAPPA123, "m.json")]
    code, _, err = run(argv, capsys)
    assert code == 3
    assert "atom weights need a subsets lattice" in err


def test_check_kappa_wrong_keys(files, capsys):
    doc = {"kind": "ultravaluation", "kappa": {"1": 1, "2": 2}}
    argv = ["check", files(FAMILY23, "l.json"), files(doc, "m.json")]
    code, _, err = run(argv, capsys)
    assert code == 3
    assert "kappa keys must be exactly the ground atoms" in err


def test_check_kappa_negative(files, capsys):
    doc = {"kind": "ultravaluation", "kappa": {"1": 1, "2": "-1/2", "3": 3}}
    argv = ["check", files(FAMILY23, "l.json"), files(doc, "m.json")]
    code, _, err = run(argv, capsys)
    assert code == 3
    assert "kappa weights must be nonnegative" in err


def test_check_intervaluation_divisor_difference_table(files, capsys):
    doc = {"kind": "intervaluation", "op": "add", "w": W_DIV12}
    argv = ["check", files(DIV12, "l.json"), files(doc, "m.json")]
    code, out, _ = run(argv, capsys)
    assert code == 0
    assert out.splitlines() == [
        "nonnegative: PASS",
        "zero on comparable pairs: PASS",
        "left cut law (lower bound): PASS",
        "right cut law (upper bound): PASS",
        "derived-table identities: PASS",
        "metric axioms: PASS",
        "separating: yes",
    ]


def test_check_intervaluation_cut_violation(files, capsys):
    # single mass at (4, 0) on a 5-chain: splitting at h in {1, 2, 3} gives
    # zero on both sides, so only the upper cut bound breaks
    w = [[0] * 5 for _ in range(5)]
    w[4][0] = 1
    doc = {"kind": "intervaluation", "op": "add", "w": w}
    argv = ["check", files(CHAIN5, "l.json"), files(doc, "m.json")]
    code, out, _ = run(argv, capsys)
    assert code == 4
    assert out.splitlines() == [
        "nonnegative: PASS",
        "zero on comparable pairs: PASS",
        "left cut law (lower bound): PASS",
        "right cut law (upper bound): FAIL (3 witnesses)",
        "  (4, 0, 1)",
        "  (4, 0, 2)",
        "  (4, 0, 3)",
        "separating: no",
    ]


def test_check_intervaluation_unknown_op(files, capsys):
    doc = {"kind": "intervaluation", "op": "min", "w": W_DIV12}
    argv = ["check", files(DIV12, "l.json"), files(doc, "m.json")]
    code, _, err = run(argv, capsys)
    assert code == 1
    assert "lp2/lp3 tables hold the p-th powers of w" in err


def test_check_intervaluation_size_mismatch(files, capsys):
    doc = {"kind": "intervaluation", "op": "add", "w": [[0, 0], [0, 0]]}
    argv = ["check", files(DIV12, "l.json"), files(doc, "m.json")]
    code, _, err = run(argv, capsys)
    assert code == 3
    assert "w must be a 6x6 table" in err


def test_check_unknown_metric_kind(files, capsys):
    doc = {"kind": "wavelet"}
    argv = ["check", files(DIV12, "l.json"), files(doc, "m.json")]
    code, _, err = run(argv, capsys)
    assert code == 1
    assert "unknown metric kind 'wavelet'" in err


def test_check_json_mode_and_determinism(files, capsys):
    argv = ["--json", "check", files(DIV12, "l.json"), files(OMEGA12, "m.json")]
    code, out1, _ = run(argv, capsys)
    assert code == 0
    payload = json.loads(out1)
    assert payload["separating"] is True
    assert [c["name"] for c in payload["checks"]] == [
        "modular law", "isotone", "additive cut law", "metric axioms",
    ]
    assert all(c["ok"] and c["count"] == 0 for c in payload["checks"])
    _, out2, _ = run(argv, capsys)
    assert out1 == out2


# -- builtin metrics through check -------------------------------------------------


def test_check_builtin_discrete_uncertified(files, capsys):
    argv = [
        "check",
        files(M3, "l.json"),
        files({"kind": "builtin", "name": "discrete"}, "m.json"),
    ]
    code, out, _ = run(argv, capsys)
    assert code == 0
    assert out.splitlines() == [
        "construction [discrete (no ultravaluation certificate on this lattice)]:"
        " PASS",
        "metric axioms: PASS",
        "separating: yes",
    ]


def test_check_builtin_discrete_certified_shows_path(files, capsys):
    # on a distributive lattice the discrete metric comes back as a genuine
    # ultravaluation metric with no construction note, so the label falls
    # back to the metric file path
    mpath = files({"kind": "builtin", "name": "discrete"}, "m.json")
    code, out, _ = run(["check", files(FAMILY23, "l.json"), mpath], capsys)
    assert code == 0
    assert out.splitlines() == [
        f"construction [{mpath}]: PASS",
        "metric axioms: PASS",
        "separating: yes",
    ]


def test_check_builtin_peak(files, capsys):
    argv = [
        "check",
        files(LIP2, "l.json"),
        files({"kind": "builtin", "name": "peak"}, "m.json"),
    ]
    code, out, _ = run(argv, capsys)
    assert code == 0
    assert out.splitlines() == [
        "construction [peak: atom weight = level]: PASS",
        "metric axioms: PASS",
        "separating: yes",
    ]


def test_check_builtin_outer_is_pseudo(files, capsys):
    argv = [
        "check",
        files(LIP2, "l.json"),
        files({"kind": "builtin", "name": "basepoint-outer"}, "m.json"),
    ]
    code, out, _ = run(argv, capsys)
    assert code == 0
    assert out.splitlines()[-1] == "separating: no"


def test_check_builtin_outer_needs_basepoint(files, capsys):
    doc = {k: v for k, v in LIP2.items() if k != "basepoint"}
    argv = [
        "check",
        files(doc, "l.json"),
        files({"kind": "builtin", "name": "basepoint-outer"}, "m.json"),
    ]
    code, _, err = run(argv, capsys)
    assert code == 3
    assert err.startswith("error: ")


def test_check_builtin_sup_needs_point_values(files, capsys):
    argv = [
        "check",
        files(CHAIN5, "l.json"),
        files({"kind": "builtin", "name": "sup"}, "m.json"),
    ]
    code, _, err = run(argv, capsys)
    assert code == 3
    assert "sup needs per-element value tuples" in err


def test_check_builtin_l1_needs_lipschitz(files, capsys):
    argv = [
        "check",
        files(DIV12, "l.json"),
        files({"kind": "builtin", "name": "l1"}, "m.json"),
    ]
    code, _, err = run(argv, capsys)
    assert code == 3
    assert "l1 needs a lipschitz lattice" in err


def test_check_builtin_lp_needs_p(files, capsys):
    argv = [
        "check",
        files(LIP2, "l.json"),
        files({"kind": "builtin", "name": "lp"}, "m.json"),
    ]
    code, _, err = run(argv, capsys)
    assert code == 1
    assert "lp needs a field p (2 or 3)" in err


def test_check_builtin_lp_bad_p(files, capsys):
    argv = [
        "check",
        files(LIP2, "l.json"),
        files({"kind": "builtin", "name": "lp", "p": 4}, "m.json"),
    ]
    code, _, err = run(argv, capsys)
    assert code == 1
    assert "lp supports p = 2 or 3 only" in err


def test_check_builtin_p_rejected_elsewhere(files, capsys):
    argv = [
        "check",
        files(LIP2, "l.json"),
        files({"kind": "builtin", "name": "sup", "p": 2}, "m.json"),
    ]
    code, _, err = run(argv, capsys)
    assert code == 1
    assert "p only applies to the lp builtin" in err


def test_check_builtin_unknown_name(files, capsys):
    argv = [
        "check",
        files(LIP2, "l.json"),
        files({"kind": "builtin", "name": "hausdorff"}, "m.json"),
    ]
    code, _, err = run(argv, capsys)
    assert code == 1
    assert "unknown builtin 'hausdorff'" in err


# -- analyze -----------------------------------------------------------------------


def test_analyze_family_full_output(files, capsys):
    argv = ["analyze", files(FAMILY23, "l.json"), files(KAPPA123, "m.json")]
    code, out, _ = run(argv, capsys)
    assert code == 0
    assert out.splitlines() == [
        "elements: 5",
        "metric: ultravaluation, separating: yes",
        "element  join-irred  d-irred  chain-downset  witness",
        "{}       yes         yes      yes            -",
        "{2}      yes         yes      yes            -",
        "{3}      yes         yes      yes            -",
        "{2,3}    no          no       no             ({2}, {3})",
        "{1,2,3}  yes         no       no             ({2}, {3})",
        "mli (3): {}, {2}, {3}",
        "join-irreducibles: 4 (3 above bottom)",
    ]


def test_analyze_json_payload_and_determinism(files, capsys):
    argv = [
        "analyze", files(FAMILY23, "l.json"), files(KAPPA123, "m.json"), "--json",
    ]
    code, out1, _ = run(argv, capsys)
    assert code == 0
    payload = json.loads(out1)
    assert payload["mli"] == ["{}", "{2}", "{3}"]
    assert payload["join_irreducibles"] == 4
    assert payload["join_irreducibles_above_bottom"] == 3
    assert payload["metric"] == {
        "kind": "ultravaluation", "note": "", "separating": True, "power": 1,
    }
    top = payload["elements"][4]
    assert top["join_irreducible"] is True
    assert top["d_irreducible"] is False
    assert top["witness"] == ["{2}", "{3}"]
    _, out2, _ = run(argv, capsys)
    assert out1 == out2


def test_analyze_lp_reports_power(files, capsys):
    argv = [
        "analyze",
        files(LIP2, "l.json"),
        files({"kind": "builtin", "name": "lp", "p": 2}, "m.json"),
    ]
    code, out, _ = run(argv, capsys)
    assert code == 0
    assert out.splitlines()[1] == (
        "metric: intervaluation [lp2 (entries are p-th powers)], "
        "separating: yes, entries are 2th powers"
    )


# -- bases -------------------------------------------------------------------------


def test_bases_square_plus_top(files, capsys):
    argv = [
        "bases",
        files(SQUARE_PLUS_TOP, "l.json"),
        files({"kind": "builtin", "name": "sup"}, "m.json"),
    ]
    code, out, _ = run(argv, capsys)
    assert code == 0
    assert out.splitlines() == [
        "minimal 0-base (4):",
        "  (0,0)  [mli]",
        "  (0,1)  [mli]",
        "  (1,0)  [mli]",
        "  (2,2)",
        "covered at radius 0: yes",
        "distances from irreducibles to the base:",
        "  (0,0): 0",
        "  (0,1): 0",
        "  (1,0): 0",
    ]


def test_bases_rational_radius(files, capsys):
    argv = [
        "bases",
        files(SQUARE_PLUS_TOP, "l.json"),
        files({"kind": "builtin", "name": "sup"}, "m.json"),
        "--r", "1/2",
    ]
    code, out, _ = run(argv, capsys)
    assert code == 0
    assert "covered at radius 1/2: yes" in out.splitlines()


def test_bases_negative_radius(files, capsys):
    argv = [
        "bases",
        files(SQUARE_PLUS_TOP, "l.json"),
        files({"kind": "builtin", "name": "sup"}, "m.json"),
        "--r", "-1",
    ]
    code, _, err = run(argv, capsys)
    assert code == 1
    assert err == "error: --r: radius must be nonnegative\n"


def test_bases_float_radius_rejected(files, capsys):
    argv = [
        "bases",
        files(SQUARE_PLUS_TOP, "l.json"),
        files({"kind": "builtin", "name": "sup"}, "m.json"),
        "--r", "0.5",
    ]
    code, _, err = run(argv, capsys)
    assert code == 1
    assert err.startswith("error: --r:")


# -- puzzle ------------------------------------------------------------------------


def test_puzzle_family(files, capsys):
    code, out, _ = run(["puzzle", files(FAMILY23, "l.json")], capsys)
    assert code == 0
    assert out.splitlines() == [
        "member   predicted  actual  agree  witness",
        "{}       yes        yes     yes    -",
        "{2}      yes        yes     yes    -",
        "{3}      yes        yes     yes    -",
        "{2,3}    no         no      yes    ({2}, {3})",
        "{1,2,3}  no         no      yes    ({2}, {3})",
        "agreement: 5/5",
    ]


def test_puzzle_needs_subsets_lattice(files, capsys):
    code, _, err = run(["puzzle", files(CHAIN5, "l.json")], capsys)
    assert code == 3
    assert "the puzzle needs a subsets lattice" in err


def test_puzzle_needs_natural_atoms(files, capsys):
    doc = {"kind": "subsets", "ground": ["a", "b"], "generators": [["a"]]}
    code, _, err = run(["puzzle", files(doc, "l.json")], capsys)
    assert code == 3
    assert err.startswith("error: ")


# -- flag handling -----------------------------------------------------------------


def test_global_flags_accepted_on_both_sides(files, capsys):
    path = files(CHAIN5, "l.json")
    before = run(["--json", "--seed", "7", "validate", path], capsys)
    after = run(["validate", path, "--json", "--seed", "7"], capsys)
    assert before == after
    assert before[0] == 0
    assert json.loads(before[1])["ok"] is True


def test_threads_flag_accepted(files, capsys):
    path = files(CHAIN5, "l.json")
    code, out, _ = run(["validate", "--threads", "2", path], capsys)
    assert code == 0
    assert out == "lattice: ok, distributive: yes, 5 elements\n"


def test_no_command_exits_via_argparse(capsys):
    with pytest.raises(SystemExit):
        main([])
