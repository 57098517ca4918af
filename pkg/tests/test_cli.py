"""The CLI: every verb against the library it fronts, plus exit codes."""

import json
from fractions import Fraction

import pytest

from pathforms.cli import main
from pathforms.forms import Chart, OrdinaryForm, dx
from pathforms.generalized import pair_encode
from pathforms.pathspace import (
    Plot,
    chen_integral,
    ev_pullback,
    eval_pathform,
    map_I,
    wedge_prime,
)
from pathforms.polyring import Poly
from pathforms.serialize import (
    dumps,
    expr_to_doc,
    form_from_doc,
    form_to_doc,
    gen_to_doc,
    loads,
    plot_to_doc,
)
from pathforms.verify import SuiteReport

X2 = Chart(("x1", "x2"))


def write_doc(tmp_path, name, doc):
    path = tmp_path / name
    path.write_text(dumps(doc))
    return str(path)


def run(capsys, *argv):
    status = main(list(argv))
    captured = capsys.readouterr()
    return status, captured.out, captured.err


def square_plot():
    cyl = ("t", "u1", "u2")
    t = Poly.var(cyl, "t")
    return Plot(
        X2,
        Chart(("u1", "u2")),
        (t * Poly.var(cyl, "u1"), t * Poly.var(cyl, "u2")),
    )


def test_d_verb(tmp_path, capsys):
    form = dx(X2, 1).scale(X2.var(0))
    path = write_doc(tmp_path, "form.json", form_to_doc(form))
    status, out, err = run(capsys, "d", path)
    assert status == 0
    assert err == ""
    assert out == dumps(form_to_doc(form.d()))
    assert form_from_doc(loads(out)) == form.d()


def test_wedge_verb(tmp_path, capsys):
    left = dx(X2, 0).scale(X2.var(1))
    right = dx(X2, 1)
    lpath = write_doc(tmp_path, "l.json", form_to_doc(left))
    rpath = write_doc(tmp_path, "r.json", form_to_doc(right))
    status, out, _ = run(capsys, "wedge", lpath, rpath)
    assert status == 0
    assert loads(out) == form_to_doc(left.wedge(right))


def test_gwedge_and_gd_verbs(tmp_path, capsys):
    a = pair_encode(dx(X2, 0), OrdinaryForm.zero(X2), 2)
    b = pair_encode(dx(X2, 1), dx(X2, 0).wedge(dx(X2, 1)), 2)
    apath = write_doc(tmp_path, "a.json", gen_to_doc(a))
    bpath = write_doc(tmp_path, "b.json", gen_to_doc(b))
    status, out, _ = run(capsys, "gwedge", apath, bpath)
    assert status == 0
    assert loads(out) == gen_to_doc(a.wedge(b))
    status, out, _ = run(capsys, "gd", bpath)
    assert status == 0
    assert loads(out) == gen_to_doc(b.d())


def test_gd_matches_pair_formula(tmp_path, capsys):
    # d(x1 + x2 dx1 z) with k=2: ((1 - 2 x2) dx1, -dx1^dx2)
    x1 = OrdinaryForm.from_poly(X2, X2.var(0))
    alpha = pair_encode(x1, dx(X2, 0).scale(X2.var(1)), 2)
    path = write_doc(tmp_path, "alpha.json", gen_to_doc(alpha))
    status, out, _ = run(capsys, "gd", path)
    assert status == 0
    expected = pair_encode(
        dx(X2, 0).scale(X2.const(1) - X2.var(1) * 2),
        -dx(X2, 0).wedge(dx(X2, 1)),
        2,
    )
    assert loads(out) == gen_to_doc(expected)


def test_chen_and_ev_verbs(tmp_path, capsys):
    form = dx(X2, 1).scale(X2.var(0))
    plot = square_plot()
    fpath = write_doc(tmp_path, "form.json", form_to_doc(form))
    ppath = write_doc(tmp_path, "plot.json", plot_to_doc(plot))
    status, out, _ = run(capsys, "chen", fpath, ppath)
    assert status == 0
    assert loads(out) == form_to_doc(chen_integral(form, plot))
    for endpoint in (0, 1):
        status, out, _ = run(
            capsys, "ev", fpath, ppath, "--endpoint", str(endpoint)
        )
        assert status == 0
        assert loads(out) == form_to_doc(ev_pullback(endpoint, form, plot))


def test_imap_and_eval_verbs(tmp_path, capsys):
    alpha = pair_encode(dx(X2, 0), dx(X2, 0).wedge(dx(X2, 1)), 3)
    apath = write_doc(tmp_path, "alpha.json", gen_to_doc(alpha))
    status, out, _ = run(capsys, "imap", apath)
    assert status == 0
    assert loads(out) == expr_to_doc(map_I(alpha))

    plot = square_plot()
    epath = write_doc(tmp_path, "expr.json", loads(out))
    ppath = write_doc(tmp_path, "plot.json", plot_to_doc(plot))
    status, out, _ = run(capsys, "eval", epath, ppath)
    assert status == 0
    assert loads(out) == form_to_doc(eval_pathform(map_I(alpha), plot))


def test_eval_retargets_plot_to_expression_chart(tmp_path, capsys):
    chart = Chart(("a", "b"))
    expr = expr_to_doc(map_I(pair_encode(dx(chart, 0), OrdinaryForm.zero(chart), 1)))
    plot = square_plot()  # names x1, x2; dims match, names do not
    epath = write_doc(tmp_path, "expr.json", expr)
    ppath = write_doc(tmp_path, "plot.json", plot_to_doc(plot))
    status, out, _ = run(capsys, "eval", epath, ppath)
    assert status == 0
    value = form_from_doc(loads(out))
    assert value.chart == Chart(("u1", "u2"))


def test_eval_zero_expression(tmp_path, capsys):
    epath = write_doc(tmp_path, "expr.json", {"node": "Sum", "children": []})
    ppath = write_doc(tmp_path, "plot.json", plot_to_doc(square_plot()))
    status, out, _ = run(capsys, "eval", epath, ppath)
    assert status == 0
    assert form_from_doc(loads(out)).is_zero


def test_eval_rejects_mixed_charts(tmp_path, capsys):
    mixed = {
        "node": "Wedge",
        "left": {
            "node": "EvPull",
            "endpoint": 1,
            "form": form_to_doc(dx(Chart(("a",)), 0)),
        },
        "right": {
            "node": "EvPull",
            "endpoint": 1,
            "form": form_to_doc(dx(Chart(("b",)), 0)),
        },
    }
    epath = write_doc(tmp_path, "expr.json", mixed)
    ppath = write_doc(tmp_path, "plot.json", plot_to_doc(square_plot()))
    status, _, err = run(capsys, "eval", epath, ppath)
    assert status == 3
    assert "error:" in err


def test_wedge_prime_verb(tmp_path, capsys):
    a = pair_encode(dx(X2, 0), OrdinaryForm.zero(X2), 1)
    b = pair_encode(dx(X2, 1), dx(X2, 0).wedge(dx(X2, 1)), 1)
    apath = write_doc(tmp_path, "a.json", gen_to_doc(a))
    bpath = write_doc(tmp_path, "b.json", gen_to_doc(b))
    status, out, _ = run(capsys, "wedge-prime", apath, bpath)
    assert status == 0
    assert loads(out) == expr_to_doc(wedge_prime(a, b))


def test_out_flag_writes_file(tmp_path, capsys):
    form = dx(X2, 0)
    fpath = write_doc(tmp_path, "form.json", form_to_doc(form))
    outpath = tmp_path / "result.json"
    status, out, _ = run(capsys, "d", fpath, "--out", str(outpath))
    assert status == 0
    assert out == ""
    assert outpath.read_text() == dumps(form_to_doc(form.d()))


def test_verify_verb_single_suite(tmp_path, capsys):
    status, out, _ = run(
        capsys, "verify", "--suite", "d_squared", "--seed", "5", "--trials", "4"
    )
    assert status == 0
    doc = loads(out)
    assert doc["passed"] is True
    assert len(doc["reports"]) == 1
    assert doc["reports"][0]["suite"] == "d_squared"
    assert doc["reports"][0]["trials"] == 4


def test_verify_verb_all_suites(capsys):
    status, out, _ = run(capsys, "verify", "--trials", "3", "--seed", "2")
    assert status == 0
    doc = loads(out)
    assert doc["passed"] is True
    assert [r["suite"] for r in doc["reports"]] == [
        "d_squared",
        "leibniz",
        "supercomm",
        "pair_equivalence",
        "chain_homotopy",
        "dI_commute",
        "kernel",
        "wedge_prime",
        "injectivity_witness",
    ]


def test_verify_reports_are_deterministic(capsys):
    def normalized():
        status, out, _ = run(capsys, "verify", "--trials", "3", "--seed", "2")
        assert status == 0
        doc = loads(out)
        for report in doc["reports"]:
            report["elapsed"] = 0.0
        return doc

    assert normalized() == normalized()


def test_verify_failure_exits_1(capsys, monkeypatch):
    import pathforms.cli as cli

    def failing(cfg):
        return [SuiteReport("d_squared", 1, [{"trial": 0, "check": "x", "inputs": {}}], 0.0)]

    monkeypatch.setattr(cli, "run_all", failing)
    status, out, _ = run(capsys, "verify", "--trials", "1")
    assert status == 1
    doc = loads(out)
    assert doc["passed"] is False
    assert doc["reports"][0]["failures"]


def test_missing_file_exits_2(capsys):
    status, _, err = run(capsys, "d", "/nonexistent/form.json")
    assert status == 2
    assert "error:" in err


def test_invalid_json_exits_2(tmp_path, capsys):
    path = tmp_path / "bad.json"
    path.write_text("{oops")
    status, _, err = run(capsys, "d", str(path))
    assert status == 2
    assert "error:" in err


def test_malformed_document_exits_2(tmp_path, capsys):
    path = write_doc(
        tmp_path,
        "form.json",
        {"chart": ["x1"], "components": [{"indices": [0], "poly": [{"coeff": "1/1", "exps": [0, 0]}]}]},
    )
    status, _, err = run(capsys, "d", path)
    assert status == 2
    assert "error:" in err


def test_chart_mismatch_exits_3(tmp_path, capsys):
    left = write_doc(tmp_path, "l.json", form_to_doc(dx(Chart(("x1",)), 0)))
    right = write_doc(tmp_path, "r.json", form_to_doc(dx(X2, 0)))
    status, _, err = run(capsys, "wedge", left, right)
    assert status == 3
    assert "error:" in err


def test_plot_dimension_mismatch_exits_3(tmp_path, capsys):
    form = dx(Chart(("x1",)), 0)
    fpath = write_doc(tmp_path, "form.json", form_to_doc(form))
    ppath = write_doc(tmp_path, "plot.json", plot_to_doc(square_plot()))
    status, _, err = run(capsys, "chen", fpath, ppath)
    assert status == 3
    assert "error:" in err


def test_imap_requires_n1_exits_3(tmp_path, capsys):
    doc = gen_to_doc(pair_encode(dx(X2, 0), OrdinaryForm.zero(X2), 1))
    doc["koszul"] = {"n": 2, "k": ["1/1", "1/1"]}
    doc["components"] = [
        {"zetas": [], "form": form_to_doc(dx(X2, 0))},
    ]
    path = write_doc(tmp_path, "gen.json", doc)
    status, _, err = run(capsys, "imap", path)
    assert status == 3
    assert "error:" in err


def test_wedge_prime_domain_violations_exit_3(tmp_path, capsys):
    degree0 = pair_encode(
        OrdinaryForm.from_poly(X2, X2.var(0)), dx(X2, 0), 1
    )
    good = pair_encode(dx(X2, 0), OrdinaryForm.zero(X2), 1)
    k0 = pair_encode(dx(X2, 0), OrdinaryForm.zero(X2), 0)
    lows = write_doc(tmp_path, "low.json", gen_to_doc(degree0))
    goods = write_doc(tmp_path, "good.json", gen_to_doc(good))
    k0s = write_doc(tmp_path, "k0.json", gen_to_doc(k0))
    status, _, err = run(capsys, "wedge-prime", lows, goods)
    assert status == 3
    status, _, err = run(capsys, "wedge-prime", k0s, k0s)
    assert status == 3


def test_argparse_rejects_unknown_verbs_and_flags(tmp_path):
    with pytest.raises(SystemExit) as exc:
        main(["frobnicate"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        main(["ev", "a.json", "b.json", "--endpoint", "2"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        main(["verify", "--suite", "nope"])
    assert exc.value.code == 2


def test_output_documents_are_canonical_bytes(tmp_path, capsys):
    form = dx(X2, 0).scale(X2.var(1) * Fraction(1, 3))
    path = write_doc(tmp_path, "form.json", form_to_doc(form))
    status, out, _ = run(capsys, "d", path)
    assert status == 0
    assert out.endswith("\n")
    assert out == json.dumps(loads(out), indent=2, sort_keys=True) + "\n"
