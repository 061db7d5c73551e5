"""Batch command line front end.

Subcommands: gen (graph generation to graph6/DIMACS), check (property
checks with certificates), verify-paper (bundled result-verification
suites), sweep (corpus sweeps with counterexample dumps). Every command is
deterministic, emits a versioned JSON report, and uses exit codes
0 = success/verified, 1 = property fails (with certificate),
2 = input error, 3 = resource exhaustion.

The environment variable TPERF_CYCLE_CAP overrides the induced odd cycle
cap; --force-long unlocks full-oracle runs above 13 vertices.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from fractions import Fraction

from . import __version__
from .colouring import (
    check_chi_f_formula,
    colour_near_bipartite_4,
    k_colouring,
    three_colour_p5_free_tperfect,
)
from .corpus import graphs_upto, verify_generator_counts
from .errors import (
    CycleCapExceeded,
    DimensionGuard,
    InvalidParameter,
    ResourceExhausted,
    TperfError,
)
from .formats import from_graph6, to_dimacs, to_graph6
from .graphs import (
    DEFAULT_CYCLE_CAP,
    AntiwebSpec,
    Graph,
    antiweb,
    enumerate_induced_odd_cycles,
    gen_antiweb,
    gen_cycle,
    gen_cycle_power,
    gen_complete,
    gen_path,
    gen_wheel,
    graph_minus_neighbourhood,
    is_almost_bipartite,
    is_bipartite,
    is_near_bipartite,
    odd_girth,
)
from .isomorphism import contains_induced, is_p5_free
from .named import NAMED_IDS, gen_named
from .polytope import (
    fractional_chromatic,
    fractional_chromatic_dual,
    in_ssp,
    in_tstab,
    is_t_perfect_oracle,
    stable_sets,
)
from .recognition import (
    find_harmonious_cutset,
    induced_paths_between,
    is_t_perfect_near_bipartite,
    is_t_perfect_p5_free,
    verify_odd_pair,
)
from .simplex import OPTIMAL, solve_lp
from .tminor import one_step_t_minors, replay_steps, steps_to_json_obj
from .named import FIGURE_RECIPES
from .tminor import DELETE, TCONTRACT, has_t_minor
from .isomorphism import are_isomorphic

EXIT_OK = 0
EXIT_PROPERTY_FAILS = 1
EXIT_INPUT_ERROR = 2
EXIT_RESOURCES = 3

GENERATORS = ("antiweb", "wheel", "cyclepower", "cycle", "path", "complete", "named")


def _cycle_cap():
    raw = os.environ.get("TPERF_CYCLE_CAP")
    if raw is None:
        return DEFAULT_CYCLE_CAP
    try:
        return int(raw)
    except ValueError:
        raise InvalidParameter(f"TPERF_CYCLE_CAP is not an integer: {raw!r}")


def _frac(x) -> str:
    return str(Fraction(x))


def _vec(xs):
    return [_frac(x) for x in xs]


def _tag(tag):
    return [list(t) if isinstance(t, tuple) else t for t in tag]


def build_generated(family: str, args):
    if family == "antiweb":
        n, k = (int(a) for a in args)
        return gen_antiweb(AntiwebSpec(n, k))
    if family == "wheel":
        (n,) = (int(a) for a in args)
        return gen_wheel(n)
    if family == "cyclepower":
        n, k = (int(a) for a in args)
        return gen_cycle_power(n, k)
    if family == "cycle":
        (n,) = (int(a) for a in args)
        return gen_cycle(n)
    if family == "path":
        (n,) = (int(a) for a in args)
        return gen_path(n)
    if family == "complete":
        (n,) = (int(a) for a in args)
        return gen_complete(n)
    if family == "named":
        (name,) = args
        return gen_named(name)
    raise InvalidParameter(f"unknown generator family {family!r}; known: {GENERATORS}")


def parse_graph_arg(value: str):
    """Graph from a CLI argument: generator spec, '-', file path, or graph6."""
    if value == "-":
        data = sys.stdin.readline().strip()
        return from_graph6(data), {"kind": "stdin", "value": data}
    if ":" in value:
        family, _, rest = value.partition(":")
        if family in GENERATORS:
            args = [a for a in rest.split(",") if a]
            return build_generated(family, args), {"kind": "generator", "value": value}
    if os.path.exists(value):
        with open(value) as fh:
            for line in fh:
                line = line.strip()
                if line:
                    return from_graph6(line), {"kind": "file", "value": value}
        raise InvalidParameter(f"file {value} contains no graph6 line")
    return from_graph6(value), {"kind": "graph6", "value": value}


def make_report(command: str, input_obj=None):
    return {
        "schema": 1,
        "tool": {"name": "tperf", "version": __version__},
        "command": command,
        "input": input_obj or {},
        "verdicts": [],
        "timings": {},
    }


def emit(report, out_path, started):
    report["timings"]["total_sec"] = round(time.perf_counter() - started, 6)
    text = json.dumps(report, indent=2, sort_keys=False)
    if out_path:
        with open(out_path, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)


# -- check: property handlers -----------------------------------------------------


def _verdict(prop, value, mode, certificate, t0):
    return {
        "property": prop,
        "value": value,
        "mode": mode,
        "certificate": certificate,
        "runtime_sec": round(time.perf_counter() - t0, 6),
    }


def _exhaustive(method, **extra):
    cert = {"type": "exhaustive", "method": method}
    cert.update(extra)
    return cert


def check_p5free(g, args, opts):
    t0 = time.perf_counter()
    emb = contains_induced(g, gen_path(5))
    if emb is None:
        return _verdict("p5free", True, "search", _exhaustive("induced-subgraph-search"), t0), True
    cert = {
        "type": "embedding",
        "pattern": "P5",
        "pattern_graph6": to_graph6(gen_path(5)),
        "map": list(emb.map),
    }
    return _verdict("p5free", False, "search", cert, t0), False


def check_nearbip(g, args, opts):
    t0 = time.perf_counter()
    for v in range(g.n):
        keep = [u for u in range(g.n) if u == v or not g.has_edge(u, v)]
        sub = g.induced(keep)
        if is_bipartite(sub) is None:
            cyc = enumerate_induced_odd_cycles(sub, cap=_cycle_cap())[0]
            cert = {
                "type": "nearbip_violation",
                "v": v,
                "cycle": [keep[i] for i in cyc],
            }
            return _verdict("nearbip", False, "search", cert, t0), False
    return _verdict("nearbip", True, "search", _exhaustive("per-vertex-bipartiteness"), t0), True


def check_tperfect(g, args, opts):
    t0 = time.perf_counter()
    cap = _cycle_cap()
    if not opts.oracle:
        if is_p5_free(g):
            ok, witness = is_t_perfect_p5_free(g)
            mode = "recognizer-p5free"
        elif is_near_bipartite(g):
            ok, witness = is_t_perfect_near_bipartite(g)
            mode = "recognizer-near-bipartite"
        else:
            raise InvalidParameter(
                "input is neither P5-free nor near-bipartite; "
                "pass --oracle for the full polytope oracle"
            )
        if ok:
            return _verdict("tperfect", True, mode, _exhaustive("forbidden-pattern-list"), t0), True
        cert = {
            "type": "embedding",
            "pattern": witness.which,
            "pattern_graph6": to_graph6(witness.pattern),
            "map": list(witness.embedding.map),
        }
        return _verdict("tperfect", False, mode, cert, t0), False
    verdict = is_t_perfect_oracle(g, force_long=opts.force_long, cycle_cap=cap)
    if verdict.t_perfect:
        cert = _exhaustive("oracle", vertex_count=verdict.vertex_count)
        return _verdict("tperfect", True, "oracle", cert, t0), True
    cert = {
        "type": "fractional_vertex",
        "x": _vec(verdict.witness),
        "tight_rows": [_tag(t) for t in verdict.tight_rows],
    }
    return _verdict("tperfect", False, "oracle", cert, t0), False


def check_oddgirth(g, args, opts):
    t0 = time.perf_counter()
    og = odd_girth(g)
    if og is None:
        sides = is_bipartite(g)
        cert = {"type": "bipartition", "sides": [sides[0], sides[1]]}
        return _verdict("oddgirth", None, "search", cert, t0), True
    cyc = next(c for c in enumerate_induced_odd_cycles(g, cap=_cycle_cap()) if len(c) == og)
    cert = {"type": "odd_cycle", "cycle": list(cyc)}
    return _verdict("oddgirth", og, "search", cert, t0), True


def chi_f_with_certificate(g):
    """Exact value plus a primal cover and dual packing of equal value."""
    sets = [s for s in stable_sets(g) if s]
    cols = len(sets)
    A = []
    for v in range(g.n):
        A.append([1 if v in s else 0 for s in sets] + [0] * g.n)
        A[v][cols + v] = -1
    res = solve_lp(A, [1] * g.n, [1] * cols + [0] * g.n)
    assert res.status == OPTIMAL
    cover = [
        {"set": list(sets[j]), "weight": _frac(res.x[j])}
        for j in range(cols)
        if res.x[j] > 0
    ]
    value = res.objective
    dual_value = fractional_chromatic_dual(g)
    assert dual_value == value
    rows = len(sets)
    A2 = []
    for i, s in enumerate(sets):
        A2.append([1 if v in s else 0 for v in range(g.n)] + [0] * rows)
        A2[i][g.n + i] = 1
    res2 = solve_lp(A2, [1] * rows, [-1] * g.n + [0] * rows)
    packing = _vec(res2.x[: g.n])
    return value, cover, packing


def check_chif(g, args, opts):
    t0 = time.perf_counter()
    if g.n == 0:
        return _verdict("chif", "0", "lp", _exhaustive("empty"), t0), True
    value, cover, packing = chi_f_with_certificate(g)
    og = odd_girth(g)
    cert = {"type": "lp_duality", "value": _frac(value), "cover": cover, "packing": packing}
    result = {"chi_f": _frac(value)}
    if og is not None:
        formula = Fraction(2 * og, og - 1)
        result.update(
            {"og": og, "formula_value": _frac(formula), "matches": value == formula}
        )
    return _verdict("chif", result, "lp", cert, t0), True


def check_colour(g, args, opts):
    if len(args) != 1:
        raise InvalidParameter("property colour needs one argument: k")
    k = int(args[0])
    t0 = time.perf_counter()
    col = k_colouring(g, k)
    if col is None:
        return (
            _verdict("colour", False, "backtracking", _exhaustive("exact-search", k=k), t0),
            False,
        )
    cert = {"type": "colouring", "k": k, "colours": {str(v): c for v, c in col.items()}}
    return _verdict("colour", True, "backtracking", cert, t0), True


def check_harmonious(g, args, opts):
    t0 = time.perf_counter()
    tup = find_harmonious_cutset(g)
    if tup is None:
        return (
            _verdict("harmonious", False, "exhaustive-search", _exhaustive("cutset-search"), t0),
            False,
        )
    cert = {
        "type": "harmonious_tuple",
        "parts": [list(p) for p in tup.parts],
        "separation": [list(s) for s in tup.separation],
    }
    return _verdict("harmonious", True, "exhaustive-search", cert, t0), True


def check_oddpair(g, args, opts):
    if len(args) != 2:
        raise InvalidParameter("property oddpair needs two arguments: u v")
    u, v = int(args[0]), int(args[1])
    if not (0 <= u < g.n and 0 <= v < g.n):
        raise InvalidParameter(f"vertices ({u},{v}) out of range")
    t0 = time.perf_counter()
    for path in induced_paths_between(g, u, v):
        if (len(path) - 1) % 2 == 0 and u != v:
            cert = {"type": "violating_path", "path": list(path), "expected_parity": "odd"}
            return _verdict("oddpair", False, "path-enumeration", cert, t0), False
    ok = verify_odd_pair(g, u, v)
    return (
        _verdict("oddpair", ok, "path-enumeration", _exhaustive("induced-path-enumeration"), t0),
        ok,
    )


PROPERTY_HANDLERS = {
    "p5free": check_p5free,
    "nearbip": check_nearbip,
    "tperfect": check_tperfect,
    "oddgirth": check_oddgirth,
    "chif": check_chif,
    "colour": check_colour,
    "harmonious": check_harmonious,
    "oddpair": check_oddpair,
}


def cmd_check(opts) -> int:
    started = time.perf_counter()
    g, descriptor = parse_graph_arg(opts.graph)
    descriptor.update({"graph6": to_graph6(g), "n": g.n, "m": g.m})
    report = make_report("check", descriptor)
    prop, *prop_args = opts.property
    handler = PROPERTY_HANDLERS.get(prop)
    if handler is None:
        raise InvalidParameter(
            f"unknown property {prop!r}; known: {', '.join(PROPERTY_HANDLERS)}"
        )
    verdict, ok = handler(g, prop_args, opts)
    report["verdicts"].append(verdict)
    if opts.figures:
        os.makedirs(opts.figures, exist_ok=True)
        from .render import save_graph_figure

        highlight = None
        cert = verdict.get("certificate") or {}
        if cert.get("type") == "embedding":
            highlight = set(cert["map"])
        fig_path = os.path.join(opts.figures, f"check_{prop}.png")
        save_graph_figure(g, fig_path, highlight=highlight, title=f"{prop}: {verdict['value']}")
        report["figures"] = [fig_path]
    emit(report, opts.out, started)
    return EXIT_OK if ok else EXIT_PROPERTY_FAILS


# -- gen ---------------------------------------------------------------------------


def cmd_gen(opts) -> int:
    g = build_generated(opts.family, opts.args)
    if opts.format == "graph6":
        text = to_graph6(g)
    else:
        text = to_dimacs(g).rstrip("\n")
    print(text)
    if opts.figures:
        os.makedirs(opts.figures, exist_ok=True)
        from .render import save_graph_figure

        name = "_".join([opts.family, *opts.args])
        save_graph_figure(g, os.path.join(opts.figures, f"gen_{name}.png"), title=name)
    return EXIT_OK


# -- verify-paper suites -------------------------------------------------------------


def _assertion(results, name, ok, detail=""):
    results.append({"assertion": name, "ok": bool(ok), "detail": detail})
    return ok


def suite_minimality(results, quick=False):
    """The three antiwebs are t-imperfect with every one-step t-minor
    t-perfect; the two 13-vertex ones oracle-checked, the 19-vertex one
    recognizer-checked."""
    third = None
    for n, k in ((13, 3), (13, 4), (19, 7)):
        g = antiweb(n, k)
        third = [Fraction(1, 3)] * g.n
        ok_t, _ = in_tstab(g, third)
        ssp = in_ssp(g, third)
        _assertion(
            results,
            f"AW({n},{k}) all-1/3 in TSTAB minus SSP",
            ok_t and not ssp.member,
        )
    for n, k in ((13, 3), (13, 4)):
        g = antiweb(n, k)
        steps = one_step_t_minors(g)
        kinds = sorted(s.op for s in steps)
        expect = ["delete"] if (n, k) == (13, 3) else ["delete", "tcontract"]
        _assertion(results, f"AW({n},{k}) one-step classes {expect}", kinds == expect)
        for s in steps:
            ok_r, w = is_t_perfect_near_bipartite(s.result)
            _assertion(
                results,
                f"AW({n},{k}) minor {s.op}({s.v}) recognizer t-perfect",
                ok_r,
                "" if ok_r else w.which,
            )
            if not quick:
                verdict = is_t_perfect_oracle(s.result)
                _assertion(
                    results,
                    f"AW({n},{k}) minor {s.op}({s.v}) oracle t-perfect",
                    verdict.t_perfect,
                )
    g = antiweb(19, 7)
    for s in one_step_t_minors(g):
        ok_r, w = is_t_perfect_near_bipartite(s.result)
        _assertion(
            results,
            f"AW(19,7) minor {s.op}({s.v}) recognizer t-perfect",
            ok_r,
            "" if ok_r else w.which,
        )


def suite_theorem1(results, quick=False):
    """Recognizer equals oracle on the exhaustive P5-free corpus, and the
    five forbidden graphs are t-imperfect."""
    for name, g in (
        ("K4", gen_complete(4)),
        ("W5", gen_wheel(5)),
        ("C7sq", gen_cycle_power(7, 2)),
    ):
        _assertion(results, f"{name} oracle t-imperfect", not is_t_perfect_oracle(g).t_perfect)
    for n, k in ((10, 2), (13, 3)):
        g = antiweb(n, k)
        x = [Fraction(1, 3)] * g.n
        ok_t, _ = in_tstab(g, x)
        _assertion(
            results,
            f"AW({n},{k}) t-imperfect by membership witness",
            ok_t and not in_ssp(g, x).member,
        )
    max_n = 6 if quick else 7
    mismatches = 0
    total = 0
    for _n, level in graphs_upto(max_n, hereditary_filter=is_p5_free):
        for g in level:
            total += 1
            if is_t_perfect_p5_free(g)[0] != is_t_perfect_oracle(g).t_perfect:
                mismatches += 1
    _assertion(
        results,
        f"recognizer == oracle on all {total} P5-free graphs with n <= {max_n}",
        mismatches == 0,
        f"{mismatches} mismatches",
    )


def suite_colouring(results, quick=False):
    """Figure recipes land on K4; t-perfect P5-free graphs are
    3-colourable; near-bipartite t-perfect graphs 4-colour constructively."""
    k4 = gen_complete(4)
    for name, recipe in FIGURE_RECIPES.items():
        g = gen_named(name)
        ops = [(DELETE, v) for v in recipe.greys] + [(TCONTRACT, v) for v in recipe.blacks]
        _assertion(results, f"{name} recipe reaches K4", are_isomorphic(replay_steps(g, ops), k4))
        search = has_t_minor(g, k4)
        _assertion(results, f"{name} search finds K4 t-minor", search.found)
    max_n = 6 if quick else 7
    bad = 0
    total = 0
    for _n, level in graphs_upto(max_n, hereditary_filter=is_p5_free):
        for g in level:
            if is_t_perfect_p5_free(g)[0]:
                total += 1
                if k_colouring(g, 3) is None:
                    bad += 1
    _assertion(results, f"all {total} t-perfect P5-free graphs (n <= {max_n}) 3-colourable", bad == 0)
    bad = 0
    total = 0
    for _n, level in graphs_upto(max_n, hereditary_filter=is_near_bipartite):
        for g in level:
            if is_t_perfect_near_bipartite(g)[0]:
                total += 1
                col = colour_near_bipartite_4(g)
                if len(set(col.values())) > 4 or any(
                    col[u] == col[v] for u, v in g.edges()
                ):
                    bad += 1
    _assertion(
        results,
        f"constructive 4-colouring works on all {total} t-perfect near-bipartite graphs (n <= {max_n})",
        bad == 0,
    )


def suite_conjecture2(results, quick=False):
    """chi_f == 2og/(og-1) on t-perfect non-bipartite graphs; strict excess
    on the known minimally t-imperfect graphs."""
    max_n = 6 if quick else 7
    bad = 0
    total = 0
    for _n, level in graphs_upto(max_n):
        for g in level:
            if odd_girth(g) is None:
                continue
            if not is_t_perfect_oracle(g).t_perfect:
                continue
            total += 1
            if not check_chi_f_formula(g).matches:
                bad += 1
    _assertion(
        results, f"formula exact on all {total} t-perfect non-bipartite graphs (n <= {max_n})", bad == 0
    )
    desk = [
        ("K4", gen_complete(4)),
        ("W5", gen_wheel(5)),
        ("C7sq", gen_cycle_power(7, 2)),
        ("AW(8,2)", antiweb(8, 2)),
        ("AW(10,2)", antiweb(10, 2)),
        ("AW(13,3)", antiweb(13, 3)),
        ("AW(13,4)", antiweb(13, 4)),
    ]
    if not quick:
        desk.append(("AW(19,7)", antiweb(19, 7)))
    for name, g in desk:
        rep = check_chi_f_formula(g)
        _assertion(
            results,
            f"{name}: chi_f {rep.chi_f} strictly above formula {rep.formula_value}",
            rep.chi_f > rep.formula_value,
        )


def suite_harmonious(results, quick=False):
    """Gluing along verified harmonious cutsets preserves t-perfection."""
    from .compose import glued_instances

    instances = glued_instances()
    _assertion(results, f"constructed {len(instances)} glued instances", len(instances) >= 20)
    for idx, inst in enumerate(instances):
        ok, _ = inst.verify()
        _assertion(results, f"instance {idx}: cutset harmonious, sides t-perfect", ok)
        _assertion(
            results,
            f"instance {idx}: glued graph oracle t-perfect",
            is_t_perfect_oracle(inst.glued).t_perfect,
        )


SUITES = {
    "minimality": suite_minimality,
    "theorem1": suite_theorem1,
    "colouring": suite_colouring,
    "conjecture2": suite_conjecture2,
    "harmonious": suite_harmonious,
}


def cmd_verify_paper(opts) -> int:
    started = time.perf_counter()
    report = make_report("verify-paper", {"suite": opts.suite})
    results = []
    SUITES[opts.suite](results, quick=opts.quick)
    report["assertions"] = results
    failed = [r for r in results if not r["ok"]]
    report["verdicts"].append(
        {
            "property": f"suite:{opts.suite}",
            "value": not failed,
            "mode": "suite",
            "certificate": {
                "type": "exhaustive",
                "method": "assertion-suite",
                "passed": len(results) - len(failed),
                "failed": len(failed),
            },
            "runtime_sec": round(time.perf_counter() - started, 6),
        }
    )
    for r in failed:
        print(f"FAIL {r['assertion']} {r['detail']}", file=sys.stderr)
    emit(report, opts.out, started)
    return EXIT_OK if not failed else EXIT_PROPERTY_FAILS


# -- sweep ---------------------------------------------------------------------------


def _sweep_tminor_closure(g, opts):
    verdict = is_t_perfect_oracle(g)
    if not verdict.t_perfect:
        return None
    for step in one_step_t_minors(g):
        if not is_t_perfect_oracle(step.result).t_perfect:
            return {"reason": "t-minor not t-perfect", "step": step.to_json_obj()}
    return None


def _sweep_p5free_closure(g, opts):
    if not is_p5_free(g):
        return None
    for step in one_step_t_minors(g):
        if not is_p5_free(step.result):
            return {"reason": "t-minor not P5-free", "step": step.to_json_obj()}
    return None


def _sweep_recognizer_matches_oracle(g, opts):
    if opts.filter == "p5free":
        rec = is_t_perfect_p5_free(g)[0]
    elif opts.filter == "nearbip":
        rec = is_t_perfect_near_bipartite(g)[0]
    else:
        raise InvalidParameter(
            "assert recognizer-matches-oracle needs --filter p5free or nearbip"
        )
    oracle = is_t_perfect_oracle(g).t_perfect
    if rec != oracle:
        return {"reason": f"recognizer={rec} oracle={oracle}"}
    return None


def _sweep_almost_bipartite(g, opts):
    if not is_almost_bipartite(g):
        return None
    if not is_t_perfect_oracle(g).t_perfect:
        return {"reason": "almost-bipartite graph not t-perfect"}
    return None


def _sweep_tperfect_3col(g, opts):
    if opts.filter != "p5free":
        raise InvalidParameter("assert tperfect-3colourable needs --filter p5free")
    if not is_t_perfect_p5_free(g)[0]:
        return None
    if k_colouring(g, 3) is None:
        return {"reason": "t-perfect P5-free graph not 3-colourable"}
    return None


def _sweep_chif_formula(g, opts):
    if odd_girth(g) is None or not is_t_perfect_oracle(g).t_perfect:
        return None
    rep = check_chi_f_formula(g)
    if not rep.matches:
        return {
            "reason": "formula mismatch",
            "chi_f": _frac(rep.chi_f),
            "formula": _frac(rep.formula_value),
        }
    return None


SWEEP_ASSERTS = {
    "tminor-closure": _sweep_tminor_closure,
    "p5free-closure": _sweep_p5free_closure,
    "recognizer-matches-oracle": _sweep_recognizer_matches_oracle,
    "almost-bipartite-implies-tperfect": _sweep_almost_bipartite,
    "tperfect-3colourable": _sweep_tperfect_3col,
    "chif-formula": _sweep_chif_formula,
}

SWEEP_FILTERS = {
    "all": None,
    "p5free": is_p5_free,
    "nearbip": is_near_bipartite,
}


def _sweep_corpus(opts):
    if opts.input:
        graphs = []
        with open(opts.input) as fh:
            for line in fh:
                line = line.strip()
                if line:
                    graphs.append(from_graph6(line))
        flt = SWEEP_FILTERS[opts.filter]
        if flt is not None:
            graphs = [g for g in graphs if flt(g)]
        return graphs
    if not verify_generator_counts(min(opts.max_n, 7)):
        raise AssertionError("internal corpus generator failed its count self-test")
    out = []
    for _n, level in graphs_upto(opts.max_n, hereditary_filter=SWEEP_FILTERS[opts.filter]):
        out.extend(level)
    return out


def cmd_sweep(opts) -> int:
    started = time.perf_counter()
    checker = SWEEP_ASSERTS.get(getattr(opts, "assert_name"))
    if checker is None:
        raise InvalidParameter(
            f"unknown assert; known: {', '.join(SWEEP_ASSERTS)}"
        )
    report = make_report(
        "sweep",
        {
            "max_n": opts.max_n,
            "filter": opts.filter,
            "assert": opts.assert_name,
            "input": opts.input,
        },
    )
    graphs = _sweep_corpus(opts)
    counterexamples = []
    skipped = []
    checked = 0
    for g in graphs:
        try:
            bad = checker(g, opts)
        except (ResourceExhausted, CycleCapExceeded, DimensionGuard) as exc:
            skipped.append({"graph6": to_graph6(g), "reason": str(exc)})
            continue
        checked += 1
        if bad is not None:
            bad["graph6"] = to_graph6(g)
            counterexamples.append(bad)
    report["verdicts"].append(
        {
            "property": f"sweep:{opts.assert_name}",
            "value": not counterexamples,
            "mode": "sweep",
            "certificate": {
                "type": "exhaustive",
                "method": "corpus-sweep",
                "graphs": len(graphs),
                "checked": checked,
                "skipped": len(skipped),
            },
            "runtime_sec": round(time.perf_counter() - started, 6),
        }
    )
    report["counterexamples"] = counterexamples
    report["skipped"] = skipped
    emit(report, opts.out, started)
    return EXIT_PROPERTY_FAILS if counterexamples else EXIT_OK


# -- entry point -----------------------------------------------------------------------


def build_parser():
    parser = argparse.ArgumentParser(
        prog="tperf",
        description="Exact t-perfection toolkit: generation, checks, "
        "verification suites, and corpus sweeps with JSON reports.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_gen = sub.add_parser("gen", help="generate a named or parametric graph")
    p_gen.add_argument("family", choices=GENERATORS)
    p_gen.add_argument("args", nargs="*", help="family parameters, e.g. 13 3")
    p_gen.add_argument("--format", choices=("graph6", "dimacs"), default="graph6")
    p_gen.add_argument("--figures", help="directory for rendered figures")
    p_gen.set_defaults(func=cmd_gen)

    p_check = sub.add_parser("check", help="check one property with certificate")
    p_check.add_argument("graph", help="graph6, '-', file, or generator spec like antiweb:13,3")
    p_check.add_argument(
        "--property",
        nargs="+",
        required=True,
        metavar="P",
        help="p5free | nearbip | tperfect | oddgirth | chif | colour K | harmonious | oddpair U V",
    )
    p_check.add_argument("--oracle", action="store_true", help="force the full polytope oracle")
    p_check.add_argument("--force-long", action="store_true", help="lift the n>13 oracle guard")
    p_check.add_argument("--out", help="write the JSON report to a file")
    p_check.add_argument("--figures", help="directory for rendered figures")
    p_check.set_defaults(func=cmd_check)

    p_vp = sub.add_parser("verify-paper", help="run a bundled verification suite")
    p_vp.add_argument("--suite", choices=sorted(SUITES), required=True)
    p_vp.add_argument("--quick", action="store_true", help="recognizer-level checks only")
    p_vp.add_argument("--out", help="write the JSON report to a file")
    p_vp.set_defaults(func=cmd_verify_paper)

    p_sweep = sub.add_parser("sweep", help="assert a property over a graph corpus")
    p_sweep.add_argument("--max-n", type=int, default=6, dest="max_n")
    p_sweep.add_argument("--filter", choices=sorted(SWEEP_FILTERS), default="all")
    p_sweep.add_argument(
        "--assert",
        dest="assert_name",
        required=True,
        help=" | ".join(SWEEP_ASSERTS),
    )
    p_sweep.add_argument("--input", help="graph6 file as corpus instead of the generator")
    p_sweep.add_argument("--out", help="write the JSON report to a file")
    p_sweep.set_defaults(func=cmd_sweep)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    opts = parser.parse_args(argv)
    try:
        return opts.func(opts)
    except (ResourceExhausted, CycleCapExceeded) as exc:
        print(f"resource exhausted: {exc}", file=sys.stderr)
        return EXIT_RESOURCES
    except (InvalidParameter, DimensionGuard, TperfError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT_ERROR


if __name__ == "__main__":
    raise SystemExit(main())
