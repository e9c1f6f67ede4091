"""Command-line interface.

Every subcommand prints one JSON report (schema fgx-report/1, keys sorted).
Reports are deterministic for fixed inputs and seeds apart from the timing
fields. Input mistakes and violated contracts exit with code 2 and a
structured {"error", "type"} payload; a failing verification run exits 1.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from pathlib import Path

from fgx import adversary, bpcore, convert, editdist, kernels, ov, pathcost, reduction, verify

SCHEMA = "fgx-report/1"

_TOOL_ERRORS = (
    bpcore.BPFormatError,
    bpcore.BPEvalError,
    pathcost.ConstantsError,
    pathcost.PathError,
    editdist.AlignmentError,
    reduction.GadgetError,
    reduction.GadgetContractError,
    reduction.PromiseGapError,
    convert.ConvertError,
    ov.CNFError,
    adversary.AdvError,
    OSError,
)


_T0: float | None = None


def _read(path: str) -> str:
    return Path(path).read_text()


def _emit(report: dict, out: str | None, raw: str | None = None) -> None:
    """Print the report; when --out is given, write the raw payload (or the
    report itself) there instead of inlining it. Every report carries the
    wall-clock seconds since the command started."""
    if _T0 is not None:
        report = dict(report)
        report["seconds"] = round(time.perf_counter() - _T0, 6)
    if out is not None:
        Path(out).write_text((raw if raw is not None else json.dumps(report, indent=2, sort_keys=True)) + "\n")
        report = dict(report)
        report["out"] = out
    print(json.dumps(report, indent=2, sort_keys=True))


def _report(command: str, **payload) -> dict:
    rep = {"schema": SCHEMA, "command": command}
    rep.update(payload)
    return rep


# ------------------------------------------------------------------ bp


def _cmd_bp_eval(args) -> int:
    bp = bpcore.parse_bp(_read(args.bp))
    assignment = tuple(int(ch) for ch in args.assignment)
    rep = _report("bp eval", n=bp.n, value=bpcore.evaluate(bp, assignment))
    if args.brute:
        rep["brute"] = bpcore.eval_paths_brute(bp, assignment)
    _emit(rep, args.out)
    return 0


def _cmd_bp_tt(args) -> int:
    bp = bpcore.parse_bp(_read(args.bp))
    tt = bpcore.truth_table(bp)
    _emit(_report("bp tt", n=tt.n, bits=tt.bits), args.out)
    return 0


def _cmd_bp_random(args) -> int:
    bp = bpcore.random_bp(args.n, Z=args.layers, W=args.width, edge_density=args.density, seed=args.seed)
    raw = bpcore.serialize_bp(bp)
    rep = _report("bp random", n=bp.n, Z=bp.Z, width=bp.width, size=bp.size, bp=json.loads(raw))
    _emit(rep, args.out, raw=raw)
    return 0


def _cmd_bp_validate(args) -> int:
    try:
        bp = bpcore.parse_bp(_read(args.bp))
    except bpcore.BPFormatError as exc:
        _emit(_report("bp validate", ok=False, violations=[str(exc)]), args.out)
        return 1
    _emit(_report("bp validate", ok=True, n=bp.n, Z=bp.Z, size=bp.size), args.out)
    return 0


# -------------------------------------------------------------- encoding


def _cmd_encode(args) -> int:
    if (args.bp is None) == (args.table is None):
        raise bpcore.BPFormatError("encode needs exactly one of --bp or --table")
    if args.bp is not None:
        tt = bpcore.truth_table(bpcore.parse_bp(_read(args.bp)))
    else:
        n = (len(args.table) - 1).bit_length()
        tt = bpcore.TruthTable(n=n, bits=args.table)
    m = bpcore.matrix_encode(tt)
    raw = bpcore.serialize_matrix(m)
    _emit(_report("encode", n=tt.n, K=m.K, L=m.L, table=tt.bits, matrix=json.loads(raw)), args.out, raw=raw)
    return 0


# ---------------------------------------------------------------- ppedit


def _constants_for(args, L: int) -> pathcost.CostConstants:
    return pathcost.make_constants(Q=args.Q, rho=args.rho, S_G=args.sg, T=args.sep, L=L)


def _cmd_ppedit_eval(args) -> int:
    m = bpcore.parse_matrix(_read(args.matrix))
    c = _constants_for(args, m.L)
    cost = pathcost.min_path_cost(m, args.mu, c)
    rep = _report(
        "ppedit eval",
        mu=args.mu,
        min_cost=cost,
        threshold=c.T_r,
        accepts=1 if cost < c.T_r else 0,
        constants=pathcost.constants_manifest(c),
    )
    _emit(rep, args.out)
    return 0


def _cmd_ppedit_promise(args) -> int:
    m = bpcore.parse_matrix(_read(args.matrix))
    c = _constants_for(args, m.L)
    rep = _report(
        "ppedit promise",
        promise=pathcost.pp_edit_promise(m, c),
        min_cost_mu0=pathcost.min_path_cost(m, 0, c),
        min_cost_muQ=pathcost.min_path_cost(m, c.Q, c),
        threshold=c.T_r,
    )
    _emit(rep, args.out)
    return 0


# ---------------------------------------------------------------- reduce


def _params(args) -> reduction.GadgetParams:
    return reduction.GadgetParams(marker_width=args.marker_width, sep_mult=args.sep_mult)


def _cmd_reduce_build(args) -> int:
    bp = bpcore.parse_bp(_read(args.bp))
    inst = reduction.build_instance(bp, _params(args))
    raw = json.dumps(
        {"x": inst.x, "y": inst.y, "manifest": inst.manifest()}, indent=2, sort_keys=True
    )
    _emit(_report("reduce build", manifest=inst.manifest()), args.out, raw=raw)
    return 0


def _cmd_reduce_verify(args) -> int:
    bp = bpcore.parse_bp(_read(args.bp))
    rep = reduction.verify_gadget_contract(bp, _params(args))
    _emit(_report("reduce verify", **rep), args.out)
    return 0


def _cmd_reduce_decide(args) -> int:
    bp = bpcore.parse_bp(_read(args.bp))
    inst = reduction.build_instance(bp, _params(args))
    rep = reduction.decide_via_editdist(inst, use_band=args.band)
    _emit(_report("reduce decide", banded=args.band, **rep), args.out)
    return 0


# -------------------------------------------------------------- editdist


def _string_arg(inline: str | None, path: str | None, name: str) -> str:
    if (inline is None) == (path is None):
        raise editdist.AlignmentError(f"need exactly one of --{name} or --{name}-file")
    return inline if inline is not None else _read(path).strip()


def _cmd_editdist_dist(args) -> int:
    a = _string_arg(args.a, args.a_file, "a")
    b = _string_arg(args.b, args.b_file, "b")
    _emit(_report("editdist dist", distance=editdist.edit_distance(a, b), backend=kernels.backend_name()), args.out)
    return 0


def _cmd_editdist_banded(args) -> int:
    a = _string_arg(args.a, args.a_file, "a")
    b = _string_arg(args.b, args.b_file, "b")
    d = editdist.edit_distance_banded(a, b, args.bound)
    _emit(
        _report(
            "editdist banded",
            bound=args.bound,
            distance=d,
            exceeded=d is None,
            backend=kernels.backend_name(),
        ),
        args.out,
    )
    return 0


def _cmd_editdist_coarse_check(args) -> int:
    bp = bpcore.parse_bp(_read(args.bp))
    inst = reduction.build_instance(bp, _params(args))
    lhs = editdist.edit_distance(inst.x, inst.y)
    coarse = editdist.coarse_min_brute(inst)
    rhs = 2 * len(inst.x) + coarse
    _emit(
        _report(
            "editdist coarse-check",
            distance=lhs,
            coarse_min=coarse,
            block_formula=rhs,
            ok=lhs == rhs,
        ),
        args.out,
    )
    return 0 if lhs == rhs else 1


# --------------------------------------------------------------- convert


def _parse_coarse(text: str):
    obj = json.loads(text)
    return tuple((tuple(p), tuple(q)) for p, q in obj)


def _cmd_convert_p2c(args) -> int:
    path = tuple(tuple(pt) for pt in json.loads(args.path))
    C = convert.path_to_coarse(path, args.K, args.L)
    n_lo, n_hi, m = convert.coarse_window(C)
    _emit(
        _report(
            "convert p2c",
            coarse=[[list(p), list(q)] for p, q in C],
            window=[n_lo, n_hi],
            y_blocks=m,
            terms=len(C),
        ),
        args.out,
    )
    return 0


def _cmd_convert_c2p(args) -> int:
    C = _parse_coarse(args.coarse)
    path = convert.coarse_to_path(C, K=args.K)
    _emit(_report("convert c2p", path=[list(pt) for pt in path], points=len(path)), args.out)
    return 0


def _cmd_convert_classify(args) -> int:
    C = _parse_coarse(args.coarse)
    labels = convert.classify_terms(C, args.K, args.L)
    _emit(
        _report(
            "convert classify",
            labels=list(labels),
            all_good=all(lab == convert.TERM_GOOD for lab in labels),
        ),
        args.out,
    )
    return 0


# -------------------------------------------------------------------- ov


def _cmd_ov_build(args) -> int:
    cnf = ov.parse_dimacs(_read(args.cnf))
    inst = ov.williams_vectors(cnf)
    _emit(
        _report(
            "ov build",
            d=inst.d,
            U=["".join(str(b) for b in u) for u in inst.U],
            V=["".join(str(b) for b in v) for v in inst.V],
        ),
        args.out,
    )
    return 0


def _cmd_ov_count(args) -> int:
    cnf = ov.parse_dimacs(_read(args.cnf))
    count = ov.count_orthogonal(ov.williams_vectors(cnf))
    rep = _report("ov count", orthogonal_pairs=count)
    if args.brute:
        rep["sat_count_brute"] = ov.sat_count_brute(cnf)
        rep["ok"] = rep["sat_count_brute"] == count
    _emit(rep, args.out)
    return 0


def _cmd_ov_parity(args) -> int:
    cnf = ov.parse_dimacs(_read(args.cnf))
    _emit(_report("ov parity", parity=ov.parity_ov(ov.williams_vectors(cnf))), args.out)
    return 0


def _cmd_ov_bit(args) -> int:
    cnf = ov.parse_dimacs(_read(args.cnf))
    bit = ov.vector_bit(cnf, args.side, args.index, args.clause)
    _emit(_report("ov bit", side=args.side, index=args.index, clause=args.clause, bit=bit), args.out)
    return 0


# ------------------------------------------------------------- adversary


def _cmd_adv_gen(args) -> int:
    gen = adversary.gen_X_matrix if args.family == "X" else adversary.gen_Y_matrix
    mat = gen(args.k, args.t, seed=args.seed)
    raw = json.dumps(
        {"K": mat.side, "L": mat.side, "rows": list(mat.rows), "k": mat.k, "t": mat.t, "family": mat.family},
        indent=2,
        sort_keys=True,
    )
    member = adversary.is_member_X(mat) if args.family == "X" else adversary.is_member_Y(mat)
    _emit(
        _report("adv gen", k=args.k, t=args.t, family=args.family, side=mat.side, member=member, rows=list(mat.rows)),
        args.out,
        raw=raw,
    )
    return 0


def _cmd_adv_stats(args) -> int:
    rep = adversary.relation_stats(args.k, args.t, sample_budget=args.budget, seed=args.seed)
    _emit(_report("adv stats", **rep), args.out)
    return 0 if rep["ok"] else 1


def _cmd_adv_dyck(args) -> int:
    profile = adversary.prefix_imbalance_profile(args.row)
    pad = args.pad if args.pad is not None else profile
    bound = args.bound if args.bound is not None else 2 * pad
    wrapped = adversary.dyck_wrap(args.row, pad)
    _emit(
        _report(
            "adv dyck",
            profile=profile,
            pad=pad,
            bound=bound,
            wrapped=wrapped,
            accepted=adversary.dyck_check(wrapped, bound),
        ),
        args.out,
    )
    return 0


# --------------------------------------------------------------- corpus


def _cmd_corpus_make(args) -> int:
    out_dir = Path(args.out)
    out_dir.mkdir(parents=True, exist_ok=True)
    files = []
    for idx, bp in enumerate(verify.corpus_bps(args.n, args.count, seed=args.seed)):
        path = out_dir / f"bp_n{args.n}_{idx:03d}.json"
        path.write_text(bpcore.serialize_bp(bp) + "\n")
        files.append(path.name)
    _emit(
        _report("corpus make", n=args.n, count=len(files), seed=args.seed, dir=str(out_dir), files=files),
        None,
    )
    return 0


# --------------------------------------------------------------- verify


def _cmd_verify_all(args) -> int:
    names = args.check if args.check else None
    rep = verify.run_all(
        names=names, workers=args.workers, seed=args.seed, n=args.n, seeds=args.seeds
    )
    rep["command"] = "verify all"
    rep.setdefault("schema", SCHEMA)
    _emit(rep, args.out)
    return 0 if rep["ok"] else 1


def _cmd_verify_throughput(args) -> int:
    rep = _report("verify throughput", backends=verify.kernel_throughput(size=args.size))
    _emit(rep, args.out)
    return 0


# ---------------------------------------------------------------- parser


def _add_out(p: argparse.ArgumentParser):
    p.add_argument("--out", help="write the payload to this file")


def _add_params(p: argparse.ArgumentParser):
    p.add_argument("--marker-width", type=int, default=None, help="gadget marker run length (default 4L)")
    p.add_argument("--sep-mult", type=int, default=reduction.DEFAULT_SEP_MULT, help="separator length multiplier T/S_G")


def _add_constants(p: argparse.ArgumentParser):
    p.add_argument("--Q", type=int, default=4)
    p.add_argument("--rho", type=int, default=2)
    p.add_argument("--sg", type=int, default=9, help="gadget length constant S_G")
    p.add_argument("--sep", type=int, default=10, help="separator length constant T")


def build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(prog="fgx", description=__doc__)
    groups = top.add_subparsers(dest="group", required=True)

    bp = groups.add_parser("bp", help="branching programs").add_subparsers(dest="cmd", required=True)
    p = bp.add_parser("eval", help="accept bit on one assignment")
    p.add_argument("--bp", required=True)
    p.add_argument("--assignment", required=True)
    p.add_argument("--brute", action="store_true", help="also run the path-enumeration oracle")
    _add_out(p)
    p.set_defaults(func=_cmd_bp_eval)
    p = bp.add_parser("tt", help="full truth table")
    p.add_argument("--bp", required=True)
    _add_out(p)
    p.set_defaults(func=_cmd_bp_tt)
    p = bp.add_parser("random", help="seeded random program")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--layers", type=int, default=4)
    p.add_argument("--width", type=int, default=3)
    p.add_argument("--density", type=float, default=0.5)
    p.add_argument("--seed", type=int, default=0)
    _add_out(p)
    p.set_defaults(func=_cmd_bp_random)
    p = bp.add_parser("validate", help="structural invariants")
    p.add_argument("--bp", required=True)
    _add_out(p)
    p.set_defaults(func=_cmd_bp_validate)

    p = groups.add_parser("encode", help="truth table to staircase matrix")
    p.add_argument("--bp")
    p.add_argument("--table", help="2^n bits, lexicographic")
    _add_out(p)
    p.set_defaults(func=_cmd_encode)

    pp = groups.add_parser("ppedit", help="path-cost promise problem").add_subparsers(dest="cmd", required=True)
    p = pp.add_parser("eval", help="minimum path cost at one mu")
    p.add_argument("--matrix", required=True)
    p.add_argument("--mu", type=int, required=True)
    _add_constants(p)
    _add_out(p)
    p.set_defaults(func=_cmd_ppedit_eval)
    p = pp.add_parser("promise", help="promise label of a matrix")
    p.add_argument("--matrix", required=True)
    _add_constants(p)
    _add_out(p)
    p.set_defaults(func=_cmd_ppedit_promise)

    rd = groups.add_parser("reduce", help="program to string-pair reduction").add_subparsers(dest="cmd", required=True)
    p = rd.add_parser("build", help="build the string pair")
    p.add_argument("--bp", required=True)
    _add_params(p)
    _add_out(p)
    p.set_defaults(func=_cmd_reduce_build)
    p = rd.add_parser("verify", help="recheck the gadget distance contract")
    p.add_argument("--bp", required=True)
    _add_params(p)
    _add_out(p)
    p.set_defaults(func=_cmd_reduce_verify)
    p = rd.add_parser("decide", help="decide via the string distance")
    p.add_argument("--bp", required=True)
    p.add_argument("--band", action=argparse.BooleanOptionalAction, default=True)
    _add_params(p)
    _add_out(p)
    p.set_defaults(func=_cmd_reduce_decide)

    ed = groups.add_parser("editdist", help="string distances").add_subparsers(dest="cmd", required=True)
    p = ed.add_parser("dist", help="exact distance")
    p.add_argument("--a")
    p.add_argument("--b")
    p.add_argument("--a-file")
    p.add_argument("--b-file")
    _add_out(p)
    p.set_defaults(func=_cmd_editdist_dist)
    p = ed.add_parser("banded", help="distance within a bound, else exceeded")
    p.add_argument("--a")
    p.add_argument("--b")
    p.add_argument("--a-file")
    p.add_argument("--b-file")
    p.add_argument("--bound", type=int, required=True)
    _add_out(p)
    p.set_defaults(func=_cmd_editdist_banded)
    p = ed.add_parser("coarse-check", help="block identity on one instance")
    p.add_argument("--bp", required=True)
    _add_params(p)
    _add_out(p)
    p.set_defaults(func=_cmd_editdist_coarse_check)

    cv = groups.add_parser("convert", help="paths vs coarse alignments").add_subparsers(dest="cmd", required=True)
    p = cv.add_parser("p2c", help="path to coarse alignment")
    p.add_argument("--path", required=True, help='JSON, e.g. [[1,1],[1,2]]')
    p.add_argument("--K", type=int, required=True)
    p.add_argument("--L", type=int, required=True)
    _add_out(p)
    p.set_defaults(func=_cmd_convert_p2c)
    p = cv.add_parser("c2p", help="coarse alignment to path")
    p.add_argument("--coarse", required=True, help='JSON, e.g. [[[1],[1]],[[2],[2]]]')
    p.add_argument("--K", type=int, default=None)
    _add_out(p)
    p.set_defaults(func=_cmd_convert_c2p)
    p = cv.add_parser("classify", help="label terms against the band")
    p.add_argument("--coarse", required=True)
    p.add_argument("--K", type=int, required=True)
    p.add_argument("--L", type=int, required=True)
    _add_out(p)
    p.set_defaults(func=_cmd_convert_classify)

    ovp = groups.add_parser("ov", help="clause-satisfaction vectors").add_subparsers(dest="cmd", required=True)
    p = ovp.add_parser("build", help="vector families from a formula")
    p.add_argument("--cnf", required=True)
    _add_out(p)
    p.set_defaults(func=_cmd_ov_build)
    p = ovp.add_parser("count", help="orthogonal pair count")
    p.add_argument("--cnf", required=True)
    p.add_argument("--brute", action="store_true", help="also count satisfying assignments directly")
    _add_out(p)
    p.set_defaults(func=_cmd_ov_count)
    p = ovp.add_parser("parity", help="orthogonal pair parity")
    p.add_argument("--cnf", required=True)
    _add_out(p)
    p.set_defaults(func=_cmd_ov_parity)
    p = ovp.add_parser("bit", help="one vector bit on demand")
    p.add_argument("--cnf", required=True)
    p.add_argument("--side", choices=("u", "v"), required=True)
    p.add_argument("--index", type=int, required=True)
    p.add_argument("--clause", type=int, required=True)
    _add_out(p)
    p.set_defaults(func=_cmd_ov_bit)

    adv = groups.add_parser("adv", help="adversarial matrix families").add_subparsers(dest="cmd", required=True)
    p = adv.add_parser("gen", help="generate a family member")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--t", type=int, default=0)
    p.add_argument("--family", choices=("X", "Y"), required=True)
    p.add_argument("--seed", type=int, default=0)
    _add_out(p)
    p.set_defaults(func=_cmd_adv_gen)
    p = adv.add_parser("stats", help="distance-one relation statistics")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--t", type=int, default=0)
    p.add_argument("--budget", type=int, default=50)
    p.add_argument("--seed", type=int, default=0)
    _add_out(p)
    p.set_defaults(func=_cmd_adv_stats)
    p = adv.add_parser("dyck", help="wrap a row and run the depth-bounded check")
    p.add_argument("--row", required=True)
    p.add_argument("--pad", type=int, default=None, help="default: the row's imbalance profile")
    p.add_argument("--bound", type=int, default=None, help="default: twice the pad")
    _add_out(p)
    p.set_defaults(func=_cmd_adv_dyck)

    cp = groups.add_parser("corpus", help="program corpora").add_subparsers(dest="cmd", required=True)
    p = cp.add_parser("make", help="write a deterministic program corpus")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--count", type=int, default=20)
    p.add_argument("--seed", type=int, default=verify.DEFAULT_SEED)
    p.add_argument("--out", default="corpus")
    p.set_defaults(func=_cmd_corpus_make)

    vf = groups.add_parser("verify", help="operational checks").add_subparsers(dest="cmd", required=True)
    p = vf.add_parser("all", help="run the checks and bundle a report")
    p.add_argument("--check", action="append", choices=verify.CHECK_NAMES, help="repeatable; default all")
    p.add_argument("--seed", type=int, default=verify.DEFAULT_SEED)
    p.add_argument("--n", type=int, default=None, help="restrict the decision corpus to this variable count")
    p.add_argument("--seeds", type=int, default=None, help="decision corpus size (programs per variable count)")
    p.add_argument("--workers", type=int, default=None, help="default: FGX_WORKERS, then 1")
    _add_out(p)
    p.set_defaults(func=_cmd_verify_all)
    p = vf.add_parser("throughput", help="kernel cells per second, both backends")
    p.add_argument("--size", type=int, default=4000)
    _add_out(p)
    p.set_defaults(func=_cmd_verify_throughput)

    return top


def main(argv=None) -> int:
    global _T0
    _T0 = time.perf_counter()
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except _TOOL_ERRORS as exc:
        print(json.dumps({"schema": SCHEMA, "error": str(exc), "type": type(exc).__name__}, sort_keys=True))
        return 2


if __name__ == "__main__":
    sys.exit(main())
