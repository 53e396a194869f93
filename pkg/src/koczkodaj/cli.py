"""Command-line interface.

Subcommands: index, compare, axioms, table1, reduce, gen.  Exit codes are 0 on
success, 2 for unreadable or invalid input, 3 for an unknown ranking id and 4
when the reproduced independence table differs from the published one.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import axioms as ax
from .core import RECIPROCITY_TOL, TriadLocation, is_consistent
from .errors import PCMError, UnknownRanking
from .gen import DEFAULT_BOUNDS, MODES, GenSpec, generate
from .indices import koczkodaj_index, per_triad_report, triad_ratio_score
from .matrixfile import format_matrix, read_matrix
from .rankings import RANKING_IDS, Ordering, get_ranking
from .reduce import reduce_matrix

EXIT_OK, EXIT_INPUT, EXIT_RANKING, EXIT_TABLE = 0, 2, 3, 4

VERDICT_TEXT = {
    Ordering.LESS_INCONSISTENT: "A less inconsistent",
    Ordering.EQUIVALENT: "equivalent",
    Ordering.MORE_INCONSISTENT: "A more inconsistent",
}


def _loc_json(loc: TriadLocation | None):
    if loc is None:
        return None
    return {"i": loc.i, "j": loc.j, "k": loc.k, "triad": list(loc.triad)}


def _emit(obj, as_json: bool, lines):
    if as_json:
        print(json.dumps(obj, indent=2))
    else:
        for ln in lines:
            print(ln)


def cmd_index(args) -> int:
    A = read_matrix(args.path, args.tolerance)
    s = koczkodaj_index(A)
    consistent = is_consistent(A, args.tolerance)
    report = {
        "n": A.n,
        "kii": s.kii,
        "ratio_score": s.ratio_score,
        "log_ratio_score": s.log_ratio_score,
        "consistent": consistent,
        "worst_triad": _loc_json(s.worst),
    }
    lines = [
        f"n            {A.n}",
        f"kii          {s.kii!r}",
        f"ratio score  {s.ratio_score!r}",
        f"consistent   {str(consistent).lower()}",
        "worst triad  " + (f"({s.worst.i},{s.worst.j},{s.worst.k}) = {tuple(s.worst.triad)}" if s.worst else "none"),
    ]
    if args.per_triad and A.n >= 3:
        rows = per_triad_report(A)
        report["per_triad"] = [
            {**_loc_json(d.location), "ratio_score": d.ratio_score, "kii": d.kii_contribution} for d in rows
        ]
        lines.append("")
        lines.append(f"{'triad':<12} {'ratio score':<22} kii")
        for d in rows:
            loc = d.location
            lines.append(f"{f'({loc.i},{loc.j},{loc.k})':<12} {d.ratio_score!r:<22} {d.kii_contribution!r}")
    _emit(report, args.json, lines)
    return EXIT_OK


def cmd_compare(args) -> int:
    r = get_ranking(args.ranking)
    A, B = read_matrix(args.a, args.tolerance), read_matrix(args.b, args.tolerance)
    order = r.compare(A, B)
    report = {
        "ranking": r.id,
        "ordering": order.value,
        "verdict": VERDICT_TEXT[order],
        "score_a": r.score(A),
        "score_b": r.score(B),
        "key_a": r.key(A),
        "key_b": r.key(B),
    }
    lines = [
        VERDICT_TEXT[order],
        f"ranking  {r.id}",
        f"score A  {report['score_a']!r}" + (f"  (n*log = {report['key_a']!r})" if r.size_power else ""),
        f"score B  {report['score_b']!r}" + (f"  (n*log = {report['key_b']!r})" if r.size_power else ""),
    ]
    _emit(report, args.json, lines)
    return EXIT_OK


def _config(args) -> ax.SuiteConfig:
    return ax.SuiteConfig(seed=args.seed, trials_per_cell=args.trials, max_n=args.max_n)


def _verdict_lines(v: ax.AxiomVerdict) -> list[str]:
    out = [f"{v.axiom.value:<4} {v.label()}"]
    if v.witness is not None:
        out.append(f"     {v.witness.detail}")
        for name, M in v.witness.matrices.items():
            shown = M.upper() if M.n == 3 else M.tolist()
            out.append(f"     {name} = {shown}  score {v.witness.scores.get(name)!r}")
        if v.witness.params:
            out.append(f"     params {v.witness.params}")
    return out


def cmd_axioms(args) -> int:
    r = get_ranking(args.ranking)
    cfg = _config(args)
    verdicts = [ax.check_axiom(a, r, cfg) for a in ax.TABLE_AXIOMS]
    report = {"ranking": r.id, "seed": cfg.seed, "trials": cfg.trials_per_cell,
              "verdicts": [v.to_json() for v in verdicts]}
    lines = [f"ranking {r.id} (seed {cfg.seed})"]
    for v in verdicts:
        lines.extend(_verdict_lines(v))
    _emit(report, args.json, lines)
    return EXIT_OK


def cmd_table1(args) -> int:
    cfg = _config(args)
    table = ax.independence_table(cfg, workers=args.workers)
    report = {"seed": cfg.seed, "trials": cfg.trials_per_cell, **table.to_json()}
    header = f"{'ranking':<10}" + "".join(f"{a.value:>6}" for a in table.axioms)
    lines = [header]
    for rid, row in table.pattern().items():
        lines.append(f"{rid:<10}" + "".join(f"{('pass' if ok else 'FAIL'):>6}" for ok in row.values()))
    if table.matches_expected():
        lines.append("pattern matches the published table")
    else:
        lines.append("pattern differs from the published table:")
        for r, a, exp, got in table.mismatches():
            v = table[(r, a)]
            lines.append(f"  ({r}, {a.value}): expected {'pass' if exp else 'violation'}, got {v.outcome}")
            if v.witness is not None:
                lines.append(f"    {v.witness.detail}")
    _emit(report, args.json, lines)
    return EXIT_OK if table.matches_expected() else EXIT_TABLE


def cmd_reduce(args) -> int:
    A = read_matrix(args.path, args.tolerance)
    tr = reduce_matrix(A)
    loc = tr.step_red
    steps = [{"step": name, "triad": list(T), "ratio_score": triad_ratio_score(T)} for name, T in tr.steps()]
    report = {
        "source": A.tolist(),
        "location": [loc.i, loc.j, loc.k],
        "steps": steps,
        "canonical_value": tr.canonical_value,
    }
    lines = [f"RED  triad ({loc.i},{loc.j},{loc.k})"]
    for s in steps:
        lines.append(f"{s['step']:<4} {tuple(s['triad'])}  ratio score {s['ratio_score']!r}")
    lines.append(f"x = {tr.canonical_value!r}")
    _emit(report, args.json, lines)
    return EXIT_OK


def cmd_gen(args) -> int:
    spec = GenSpec(n=args.n, seed=args.seed, entry_bounds=tuple(args.bounds), mode=args.mode, delta=args.delta)
    A = generate(spec)
    comment = f"mode={args.mode} n={args.n} seed={args.seed}"
    if args.mode == "perturbed":
        comment += f" delta={args.delta}"
    text = format_matrix(A, "full" if args.full else "upper", comment=comment)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="koczkodaj", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True)

    def tol(p):
        p.add_argument("--tolerance", type=float, default=RECIPROCITY_TOL,
                       help="reciprocity and consistency tolerance (default %(default)g)")

    def suite(p, trials=10_000):
        p.add_argument("--seed", type=int, default=0)
        p.add_argument("--trials", type=int, default=trials, help="fuzz trials per axiom")
        p.add_argument("--max-n", type=int, default=7, help="largest fuzzed matrix size")
        p.add_argument("--json", action="store_true")

    p = sub.add_parser("index", help="Koczkodaj index of a matrix file")
    p.add_argument("path")
    p.add_argument("--json", action="store_true")
    p.add_argument("--per-triad", action="store_true", help="list every triad")
    tol(p)
    p.set_defaults(func=cmd_index)

    p = sub.add_parser("compare", help="compare two matrix files under a ranking")
    p.add_argument("a")
    p.add_argument("b")
    p.add_argument("--ranking", default="koczkodaj", help=f"one of {', '.join(RANKING_IDS)}")
    p.add_argument("--json", action="store_true")
    tol(p)
    p.set_defaults(func=cmd_compare)

    p = sub.add_parser("axioms", help="check the six axioms for one ranking")
    p.add_argument("--ranking", default="koczkodaj")
    suite(p)
    p.set_defaults(func=cmd_axioms)

    p = sub.add_parser("table1", help="reproduce the axiom independence table")
    suite(p)
    p.add_argument("--workers", type=int, default=None, help="run cells in this many processes")
    p.set_defaults(func=cmd_table1)

    p = sub.add_parser("reduce", help="canonical triad trace of a matrix file")
    p.add_argument("path")
    p.add_argument("--json", action="store_true")
    tol(p)
    p.set_defaults(func=cmd_reduce)

    p = sub.add_parser("gen", help="write a random matrix file")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--mode", choices=MODES, default="random")
    p.add_argument("--delta", type=float, default=0.1, help="perturbation half-width in log space")
    p.add_argument("--bounds", type=float, nargs=2, default=DEFAULT_BOUNDS, metavar=("LO", "HI"))
    p.add_argument("--full", action="store_true", help="write the full n x n form")
    p.add_argument("--out", default=None, help="output path (default stdout)")
    p.set_defaults(func=cmd_gen)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except UnknownRanking as exc:
        print(f"error: UnknownRanking: {exc}", file=sys.stderr)
        return EXIT_RANKING
    except PCMError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    raise SystemExit(main())
