"""
Command-line front end.

Subcommands:

  classes   print the catalog of sigma-conjugacy classes up to a slope bound
  query     decide one X_x(b), with certificates and predictions
  survey    sweep all x up to a length bound in the class's component,
            comparing the computed status against the predictions
  figure    rank-2 SVG/TSV picture of the emptiness/dimension pattern

Exit codes: 0 = ran, 1 = usage error, 2 = a disagreement was found in
--check mode.  The default cache directory comes from $ADLV_CACHE_DIR.

JSON output schema (version 1).  Survey records and query output carry:
x, length, shrunken, eta1, eta2, class_key, computed {status, dim,
witness_w, cutoff, certificates}, predicted_shrunken {status, dim} | null,
predicted_levi {status} | null, agree_shrunken, agree_levi (null = not
applicable or undecided).  Queries add schema_version, the order flag
bruhat_geq_some_conjugate, p_alcove_for_proper_parabolic, and with
--explain a p_alcove_reports list with per-parabolic violation rows.  The
survey summary line carries schema_version, counts and disagreement
totals.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from . import engine as eng
from . import sigma as sg
from .affine import affine_context
from .alcoves import eta1, eta2, is_shrunken
from .cache import CacheStore, cache_key
from .roots import build_root_datum

SCHEMA_VERSION = 1


def build_parser():
    ap = argparse.ArgumentParser(prog="adlv", description=__doc__,
                                 formatter_class=argparse.RawDescriptionHelpFormatter)
    sub = ap.add_subparsers(dest="cmd", required=True)

    def common(p, with_class=True):
        p.add_argument("--type", required=True, help="Cartan type: A, B, C, D, G, GL")
        p.add_argument("--rank", required=True, type=int)
        p.add_argument("--variant", default="", help="lattice variant (default: adjoint/GL)")
        if with_class:
            p.add_argument("--class-key", dest="class_key", required=True,
                           help='e.g. "nu=[1,-1/2,-1/2];kappa=[0,0,0]", or "trivial"')
        p.add_argument("--cache-dir", default=os.environ.get("ADLV_CACHE_DIR"))

    p = sub.add_parser("classes", help="catalog of classes up to a slope bound")
    common(p, with_class=False)
    p.add_argument("--bound", type=int, required=True,
                   help="max pairing of the Newton point against 2rho")
    p.add_argument("--format", choices=("json", "tsv"), default="json")

    p = sub.add_parser("query", help="decide one affine Deligne-Lusztig variety")
    common(p)
    p.add_argument("--x", required=True, help='element, e.g. "t[3,1,-4]*s1*s2*s1" or "s0*s1*s2"')
    p.add_argument("--cutoff", type=int, default=None)
    p.add_argument("--explain", action="store_true",
                   help="include per-parabolic P-alcove reports with witness rows")

    p = sub.add_parser("survey", help="length-bounded survey with predictions")
    common(p)
    p.add_argument("--max-len", type=int, required=True)
    p.add_argument("--cutoff", type=int, default=None)
    p.add_argument("--jobs", type=int, default=None,
                   help="worker processes (default: all cores)")
    p.add_argument("--format", choices=("json", "tsv"), default="json")
    p.add_argument("--check", action="store_true",
                   help="exit 2 when the computed results contradict a prediction")
    p.add_argument("--out", default=None, help="write records here instead of stdout")

    p = sub.add_parser("figure", help="rank-2 SVG picture")
    common(p)
    p.add_argument("--max-len", type=int, required=True)
    p.add_argument("--cutoff", type=int, default=None)
    p.add_argument("--out", required=True, help="SVG output path")
    p.add_argument("--tsv", default=None, help="optional TSV twin")
    return ap


def parse_class_key(ctx, text: str):
    datum = ctx.datum
    if text.strip() in ("trivial", "1", "one"):
        return sg.classify(ctx, ctx.identity)
    try:
        parts = dict(kv.split("=", 1) for kv in text.split(";"))
        nu = tuple(Fraction(v) for v in parts["nu"].strip("[]").split(","))
        kappa = tuple(int(v) for v in parts["kappa"].strip("[]").split(","))
    except (KeyError, ValueError) as exc:
        raise SystemExit(f"adlv: cannot parse class key {text!r}: {exc}")
    return sg.class_from_invariants(datum, nu, kappa)


def class_row(ctx, cls):
    datum = ctx.datum
    rep = sg.standard_representative(ctx, cls)
    fund, fp = sg.fundamental_representative(ctx, cls)
    return {
        "key": cls.key(),
        "newton": [str(v) for v in cls.newton],
        "kappa": list(cls.kappa),
        "home_levi_simple_roots": sorted(
            datum.simple_idx.index(i) + 1 for i in cls.home_simple),
        "basic": sg.is_basic(datum, cls),
        "defect": sg.defect(ctx, cls),
        "standard_rep": ctx.format(rep),
        "fundamental_rep": ctx.format(fund),
        "fundamental_parabolic": {"conjugator": datum.weyl.words[fp.u],
                                  "levi": sorted(datum.simple_idx.index(i) + 1
                                                 for i in fp.levi_simple)},
    }


def cmd_classes(args, out=sys.stdout):
    datum = build_root_datum(args.type, args.rank, args.variant)
    ctx = affine_context(datum)
    classes = sg.enumerate_classes(ctx, args.bound)
    seen = set()
    for c in classes:
        pair = (c.newton, c.kappa)
        assert pair not in seen, "duplicate (newton, kappa) pair"
        seen.add(pair)
    rows = [class_row(ctx, c) for c in classes]
    if args.format == "json":
        json.dump({"datum": datum.json_descriptor(), "bound": args.bound,
                   "classes": rows}, out, indent=1)
        out.write("\n")
    else:
        out.write("key\tbasic\tdefect\tstandard_rep\tfundamental_rep\n")
        for r in rows:
            out.write("%s\t%d\t%d\t%s\t%s\n" % (r["key"], r["basic"], r["defect"],
                                                r["standard_rep"], r["fundamental_rep"]))
    return 0


def record_for(ctx, cls, xid, result):
    datum = ctx.datum
    basic = sg.is_basic(datum, cls)
    rec = {
        "x": ctx.format(xid),
        "length": ctx.length(xid),
        "shrunken": is_shrunken(ctx, xid),
        "eta1": _wname(datum, eta1(ctx, xid)),
        "eta2": _wname(datum, eta2(ctx, xid)),
        "class_key": cls.key(),
        "computed": result.to_json(ctx),
        "predicted_shrunken": None,
        "predicted_levi": None,
        "agree_shrunken": None,
        "agree_levi": None,
    }
    if basic:
        status, cert = eng.predict_levi(ctx, xid, cls)
        rec["predicted_levi"] = {"status": status}
        if result.status == "nonempty":
            rec["agree_levi"] = status == "nonempty-predicted"
        elif result.status == "empty-certified":
            rec["agree_levi"] = status == "empty"
        # empty-up-to-cutoff stays None: logged, never a disagreement
        if rec["shrunken"]:
            pstat, pdim = eng.predict_shrunken(ctx, xid, cls)
            rec["predicted_shrunken"] = {"status": pstat, "dim": pdim}
            if result.status == "nonempty":
                rec["agree_shrunken"] = (pstat == "nonempty" and pdim == result.dim)
            elif result.status == "empty-certified":
                rec["agree_shrunken"] = pstat == "empty"
    return rec


def _wname(datum, w):
    word = datum.weyl.words[w]
    return "*".join("s%d" % (i + 1) for i in word) if word else "e"


def cmd_query(args, out=sys.stdout):
    datum = build_root_datum(args.type, args.rank, args.variant)
    ctx = affine_context(datum)
    cls = parse_class_key(ctx, args.class_key)
    xid = ctx.parse(args.x)
    cutoff = args.cutoff if args.cutoff is not None else eng.default_cutoff(ctx, xid, cls)
    store = CacheStore(args.cache_dir)
    key = cache_key(datum.json_descriptor(), "solve",
                    {"x": ctx.format(xid), "class": cls.key(), "cutoff": cutoff})
    cached = store.get(key)
    if cached is not None:
        result = _result_from_json(ctx, cached)
    else:
        result = eng.solve(ctx, xid, cls, cutoff)
        store.put(key, result.to_json(ctx))
    rec = record_for(ctx, cls, xid, result)
    rec["schema_version"] = SCHEMA_VERSION
    rec["bruhat_geq_some_conjugate"] = _bruhat_flag(ctx, cls, xid)
    rec["p_alcove_for_proper_parabolic"] = _is_any_proper_p_alcove(ctx, xid)
    if args.explain:
        rec["p_alcove_reports"] = _p_alcove_reports(ctx, xid)
    json.dump(rec, out, indent=1)
    out.write("\n")
    store.close()
    return 0


def _p_alcove_reports(ctx, xid):
    from .alcoves import is_p_alcove
    from .roots import semistandard_parabolics
    datum = ctx.datum
    rows = []
    for p in semistandard_parabolics(datum):
        rep = is_p_alcove(ctx, xid, p)
        entry = {"conjugator": _wname(datum, p.u),
                 "levi": sorted(datum.simple_idx.index(i) + 1 for i in p.levi_simple),
                 "verdict": rep.verdict}
        if not rep.verdict and rep.witnesses and rep.witnesses[0][1] is not None:
            entry["violations"] = rep.rows_json(datum)
        rows.append(entry)
    return rows


def _bruhat_flag(ctx, cls, xid):
    """Is x >= some finite conjugate of the standard representative?"""
    datum = ctx.datum
    b = sg.standard_representative(ctx, cls)
    for u in datum.weyl.elements():
        g = ctx.intern((0,) * datum.d, u)
        if ctx.bruhat_leq(ctx.conj(g, b), xid):
            return True
    return False


def _is_any_proper_p_alcove(ctx, xid):
    from .alcoves import is_p_alcove
    from .roots import semistandard_parabolics
    for p in semistandard_parabolics(ctx.datum):
        if p.is_full:
            continue
        if is_p_alcove(ctx, xid, p).verdict:
            return True
    return False


def _result_from_json(ctx, obj):
    res = eng.AdlvResult(obj["status"], dim=obj.get("dim"), cutoff=obj.get("cutoff"))
    if obj.get("witness_w"):
        res.witness_w = ctx.parse(obj["witness_w"])
    for c in obj.get("certificates", []):
        res.certificates.append(eng.Certificate(c["kind"], c.get("parabolic"),
                                                c.get("detail", "")))
    return res


def survey_elements(ctx, cls, max_len):
    """All x with ell <= max_len in the component of the class, sorted."""
    ball = eng.affine_ball(ctx, max_len)
    om = eng.omega_window(ctx, cls, [sg.standard_representative(ctx, cls)])
    xs = {ctx.mul(u, t) for u in ball for t in om}
    xs = [x for x in xs if ctx.omega_class(x) == cls.kappa]
    return sorted(xs, key=lambda z: (ctx.length(z), ctx.format(z)))


_worker_state = {}


def _survey_worker(payload):
    spec, class_key, cutoff, chunk = payload
    key = (spec, class_key)
    if key not in _worker_state:
        datum = build_root_datum(*spec)
        ctx = affine_context(datum)
        cls = parse_class_key(ctx, class_key)
        _worker_state[key] = (ctx, cls)
    ctx, cls = _worker_state[key]
    xids = [ctx.parse(t) for t in chunk]
    res = eng.survey_batch(ctx, cls, xids, cutoff)
    return {ctx.format(x): r.to_json(ctx) for x, r in res.items()}


def cmd_survey(args, out=sys.stdout):
    datum = build_root_datum(args.type, args.rank, args.variant)
    ctx = affine_context(datum)
    cls = parse_class_key(ctx, args.class_key)
    xs = survey_elements(ctx, cls, args.max_len)
    cutoff = args.cutoff if args.cutoff is not None else (
        args.max_len + 2 * eng.coxeter_number(datum))
    store = CacheStore(args.cache_dir)
    results = {}
    todo = []
    for x in xs:
        key = cache_key(datum.json_descriptor(), "solve",
                        {"x": ctx.format(x), "class": cls.key(), "cutoff": cutoff})
        cached = store.get(key)
        if cached is not None:
            results[x] = _result_from_json(ctx, cached)
        else:
            todo.append(x)
    jobs = args.jobs if args.jobs is not None else (os.cpu_count() or 1)
    # work in length shells so interrupted runs resume at shell granularity
    shells: dict[int, list] = {}
    for x in todo:
        shells.setdefault(ctx.length(x), []).append(x)
    for ln in sorted(shells):
        chunk_xs = shells[ln]
        if jobs > 1 and len(chunk_xs) > 8:
            import multiprocessing as mp
            chunks = [chunk_xs[i::jobs] for i in range(jobs)]
            spec = (datum.spec.ctype, datum.spec.rank, datum.spec.variant)
            payloads = [(spec, cls.key(), cutoff, [ctx.format(x) for x in ch])
                        for ch in chunks if ch]
            with mp.get_context("fork").Pool(jobs) as pool:
                for part in pool.map(_survey_worker, payloads):
                    for xt, obj in part.items():
                        results[ctx.parse(xt)] = _result_from_json(ctx, obj)
        else:
            results.update(eng.survey_batch(ctx, cls, chunk_xs, cutoff))
        for x in chunk_xs:
            key = cache_key(datum.json_descriptor(), "solve",
                            {"x": ctx.format(x), "class": cls.key(), "cutoff": cutoff})
            store.put(key, results[x].to_json(ctx))
    recs = [record_for(ctx, cls, x, results[x]) for x in xs]
    summary = {
        "schema_version": SCHEMA_VERSION,
        "datum": datum.json_descriptor(), "class": cls.key(),
        "max_len": args.max_len, "cutoff": cutoff, "count": len(recs),
        "nonempty": sum(1 for r in recs if r["computed"]["status"] == "nonempty"),
        "empty_certified": sum(1 for r in recs
                               if r["computed"]["status"] == "empty-certified"),
        "undecided": sum(1 for r in recs
                         if r["computed"]["status"] == "empty-up-to-cutoff"),
        "disagree_shrunken": sum(1 for r in recs if r["agree_shrunken"] is False),
        "disagree_levi": sum(1 for r in recs if r["agree_levi"] is False),
    }
    sink = open(args.out, "w", encoding="utf-8") if args.out else out
    try:
        if args.format == "json":
            for r in recs:
                sink.write(json.dumps(r, sort_keys=True) + "\n")
            sink.write(json.dumps({"summary": summary}, sort_keys=True) + "\n")
        else:
            from .figure import render_tsv
            data = [{"x": ctx.parse(r["x"]), "status": r["computed"]["status"],
                     "dim": r["computed"]["dim"]} for r in recs]
            sink.write(render_tsv(ctx, data))
    finally:
        if args.out:
            sink.close()
    store.close()
    if args.check and (summary["disagree_shrunken"] or summary["disagree_levi"]):
        return 2
    return 0


def cmd_figure(args, out=sys.stdout):
    datum = build_root_datum(args.type, args.rank, args.variant)
    if datum.weyl.rank != 2:
        raise SystemExit("adlv: figures need a rank-2 type (A2, B2, C2, G2)")
    ctx = affine_context(datum)
    cls = parse_class_key(ctx, args.class_key)
    xs = survey_elements(ctx, cls, args.max_len)
    cutoff = args.cutoff if args.cutoff is not None else (
        args.max_len + 2 * eng.coxeter_number(datum))
    results = eng.survey_batch(ctx, cls, xs, cutoff)
    records = [{"x": x, "status": results[x].status, "dim": results[x].dim}
               for x in xs]
    from .figure import render_svg, render_tsv
    with open(args.out, "w", encoding="utf-8") as fh:
        fh.write(render_svg(ctx, records))
    if args.tsv:
        with open(args.tsv, "w", encoding="utf-8") as fh:
            fh.write(render_tsv(ctx, records))
    print(f"wrote {args.out}" + (f" and {args.tsv}" if args.tsv else ""), file=out)
    return 0


def main(argv=None):
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        # argparse uses exit code 2 for usage errors; our contract says 1
        raise SystemExit(1 if exc.code not in (0,) else 0)
    try:
        if args.cmd == "classes":
            return cmd_classes(args)
        if args.cmd == "query":
            return cmd_query(args)
        if args.cmd == "survey":
            return cmd_survey(args)
        if args.cmd == "figure":
            return cmd_figure(args)
    except SystemExit:
        raise
    raise SystemExit(1)


if __name__ == "__main__":
    sys.exit(main())
