import io
import json
import os
import subprocess
import sys

import pytest

from adlv import cli


def run_cli(argv):
    buf = io.StringIO()
    args = cli.build_parser().parse_args(argv)
    if args.cmd == "classes":
        code = cli.cmd_classes(args, out=buf)
    elif args.cmd == "query":
        code = cli.cmd_query(args, out=buf)
    elif args.cmd == "survey":
        code = cli.cmd_survey(args, out=buf)
    elif args.cmd == "figure":
        code = cli.cmd_figure(args, out=buf)
    return code, buf.getvalue()


def test_classes_catalog_sl2():
    code, out = run_cli(["classes", "--type", "A", "--rank", "1",
                         "--variant", "SL", "--bound", "2"])
    assert code == 0
    doc = json.loads(out)
    assert len(doc["classes"]) == 4
    basics = [c for c in doc["classes"] if c["basic"]]
    assert len(basics) == 2
    keys = {c["key"] for c in doc["classes"]}
    assert "nu=[1/2,-1/2];kappa=[0,1]" in keys


def test_classes_bound_zero_counts():
    code, out = run_cli(["classes", "--type", "C", "--rank", "2", "--bound", "0"])
    doc = json.loads(out)
    assert len(doc["classes"]) == 2  # |Lambda_G| rows


def test_query_example_94(tmp_path):
    code, out = run_cli([
        "query", "--type", "A", "--rank", "2", "--variant", "SL",
        "--x", "s0*s1*s2*s1*s0*s1*s2*s0*s1*s2*s0",
        "--class-key", "nu=[2,0,-2];kappa=[0,0,0]", "--cutoff", "8",
        "--cache-dir", str(tmp_path / "cache")])
    assert code == 0
    rec = json.loads(out)
    assert rec["x"] == "t[3,1,-4]*s1*s2*s1"
    assert rec["length"] == 11
    assert rec["computed"]["status"] == "empty-up-to-cutoff"
    assert rec["bruhat_geq_some_conjugate"] is True
    assert rec["p_alcove_for_proper_parabolic"] is False


def test_query_translation_nonempty():
    code, out = run_cli([
        "query", "--type", "A", "--rank", "2", "--variant", "SL",
        "--x", "t[1,0,-1]", "--class-key", "nu=[1,0,-1];kappa=[0,0,0]",
        "--cutoff", "6"])
    rec = json.loads(out)
    assert rec["computed"]["status"] == "nonempty"


def test_query_identity_trivial_class():
    code, out = run_cli([
        "query", "--type", "A", "--rank", "2", "--variant", "SL",
        "--x", "e", "--class-key", "trivial", "--cutoff", "2"])
    rec = json.loads(out)
    assert rec["computed"]["status"] == "nonempty"
    assert rec["computed"]["dim"] == 0
    assert rec["computed"]["witness_w"] == "e"


def survey_lines(argv):
    code, out = run_cli(argv)
    lines = [json.loads(l) for l in out.strip().splitlines()]
    summary = lines[-1]["summary"]
    return code, lines[:-1], summary


def test_survey_deterministic_and_checked(tmp_path):
    argv = ["survey", "--type", "C", "--rank", "2", "--class-key", "trivial",
            "--max-len", "5", "--cutoff", "7", "--check"]
    code1, recs1, sum1 = survey_lines(argv)
    code2, recs2, sum2 = survey_lines(argv)
    assert code1 == code2 == 0
    assert recs1 == recs2
    assert sum1 == sum2
    assert sum1["disagree_shrunken"] == 0 and sum1["disagree_levi"] == 0
    assert sum1["count"] == len(recs1)
    # deterministic order: by length then text
    lens = [r["length"] for r in recs1]
    assert lens == sorted(lens)


def test_survey_parallel_matches_serial():
    base = ["survey", "--type", "C", "--rank", "2", "--class-key", "trivial",
            "--max-len", "4", "--cutoff", "6"]
    _, recs1, sum1 = survey_lines(base)
    _, recs2, sum2 = survey_lines(base + ["--jobs", "2"])
    assert recs1 == recs2 and sum1 == sum2


def test_survey_cache_cold_vs_warm(tmp_path):
    cache = str(tmp_path / "c")
    argv = ["survey", "--type", "A", "--rank", "2", "--variant", "SL",
            "--class-key", "trivial", "--max-len", "4", "--cutoff", "6",
            "--cache-dir", cache]
    _, recs_cold, sum_cold = survey_lines(argv)
    assert os.path.exists(os.path.join(cache, "results.jsonl"))
    _, recs_warm, sum_warm = survey_lines(argv)
    assert recs_cold == recs_warm and sum_cold == sum_warm


def test_figure_and_tsv_agree_with_survey(tmp_path):
    svg = tmp_path / "fig.svg"
    tsv = tmp_path / "fig.tsv"
    code, _ = run_cli(["figure", "--type", "C", "--rank", "2",
                       "--class-key", "trivial", "--max-len", "4",
                       "--cutoff", "6", "--out", str(svg), "--tsv", str(tsv)])
    assert code == 0
    body = svg.read_text()
    assert body.startswith("<svg") and "polygon" in body
    rows = [l.split("\t") for l in tsv.read_text().strip().splitlines()[1:]]
    _, recs, _ = survey_lines(["survey", "--type", "C", "--rank", "2",
                               "--class-key", "trivial", "--max-len", "4",
                               "--cutoff", "6"])
    by_x = {r["x"]: r for r in recs}
    assert len(rows) == len(recs)
    for x, ln, shr, status, dim in rows:
        rec = by_x[x]
        assert rec["length"] == int(ln)
        assert rec["computed"]["status"] == status
        want_dim = rec["computed"]["dim"]
        assert (dim == "" and want_dim is None) or int(dim) == want_dim


def test_figure_dims_match_shrunken_formula(tmp_path):
    # the printed dimensions on shrunken alcoves follow the chamber rule
    from adlv import engine as eng
    from adlv import sigma as sg
    from adlv.affine import affine_context
    from adlv.roots import build_root_datum
    tsv = tmp_path / "c2.tsv"
    run_cli(["figure", "--type", "C", "--rank", "2", "--class-key", "trivial",
             "--max-len", "8", "--cutoff", "10",
             "--out", str(tmp_path / "c2.svg"), "--tsv", str(tsv)])
    ctx = affine_context(build_root_datum("C", 2, "adjoint"))
    cls = sg.classify(ctx, ctx.identity)
    count = 0
    for line in tsv.read_text().strip().splitlines()[1:]:
        xtext, _ln, shr, status, dim = line.split("\t")
        if shr != "1":
            continue
        x = ctx.parse(xtext)
        pstat, pdim = eng.predict_shrunken(ctx, x, cls)
        if pstat == "empty":
            assert status == "empty-certified"
        else:
            assert status == "nonempty" and int(dim) == pdim
        count += 1
    assert count >= 20


def test_figure_rejects_higher_rank(tmp_path):
    with pytest.raises(SystemExit):
        run_cli(["figure", "--type", "A", "--rank", "3", "--variant", "SL",
                 "--class-key", "trivial", "--max-len", "2",
                 "--out", str(tmp_path / "x.svg")])


def test_usage_error_exit_code():
    proc = subprocess.run([sys.executable, "-m", "adlv.cli", "survey"],
                          capture_output=True, text=True)
    assert proc.returncode == 1


def test_trivial_figure_single_alcove(tmp_path):
    svg = tmp_path / "one.svg"
    code, _ = run_cli(["figure", "--type", "C", "--rank", "2",
                       "--class-key", "trivial", "--max-len", "0",
                       "--cutoff", "2", "--out", str(svg)])
    body = svg.read_text()
    assert body.count("<polygon") == 1
    assert 'fill="black"' in body
