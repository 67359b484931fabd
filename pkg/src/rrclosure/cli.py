"""Command-line front end: ``rrclosure <command> [instance] [options]``.

Exit codes: 0 on success, 1 when a property check fails or a cross-check
finds a mismatch (or stays inconclusive), 2 on usage or input errors.
"""

import argparse
import csv
import io
import json
import os
import sys

from . import ass, closure, module as mod, oracle, reductions
from .errors import RRError
from .instance import GenParams, corpus, format_element, format_instance, format_submodule, parse_instance

COMMANDS = ("closure", "ass-seq", "power-seq", "quotient-seq", "lemma21", "reduction", "grade",
            "cor25", "eventual-eq", "verify", "props", "gen")
NEEDS_INSTANCE = {"closure", "ass-seq", "power-seq", "quotient-seq", "lemma21", "reduction",
                  "grade", "cor25", "eventual-eq", "verify"}


class UsageError(Exception):
    pass


def _parser():
    p = argparse.ArgumentParser(prog="rrclosure", description=__doc__.splitlines()[0])
    p.add_argument("command", choices=COMMANDS)
    p.add_argument("instance", nargs="?", help="instance file ('-' for stdin)")
    p.add_argument("--nmax", type=int, default=6)
    p.add_argument("--window", type=int, default=closure.DEFAULT_WINDOW)
    p.add_argument("--cap", type=int, default=closure.DEFAULT_CAP)
    p.add_argument("--m", type=int)
    p.add_argument("--n", type=int)
    p.add_argument("--truncation-degree", type=int, default=12)
    p.add_argument("--kmax", type=int, default=6, help="chain depth for verify")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--count", type=int, default=1)
    p.add_argument("--format", choices=("text", "json", "csv"), default="text")
    p.add_argument("--out", help="output file (gen: output directory)")
    return p


def _primes(S, names):
    return sorted(p.names(names) for p in S) if S is not None else None


def _seq_flags(rep):
    return {"increasing": rep.increasing, "stabilization_candidate": rep.stabilization_candidate,
            "certified": rep.certified}


def _read_instance(path):
    if path is None:
        raise UsageError("this command needs an instance file")
    try:
        text = sys.stdin.read() if path == "-" else open(path, encoding="utf-8").read()
    except OSError as exc:
        raise UsageError(str(exc))
    return parse_instance(text)


# --- commands: each returns (results, flags, exit code) ----------------------

def cmd_closure(inst, a):
    n = 1 if a.n is None else a.n
    res = closure.rr_power(inst.I, n, inst.presentation, a.window, a.cap)
    results = {
        "n": n,
        "generators": format_submodule(res.value, inst.names).split(", ") if not res.value.is_zero else [],
        "stabilized_at": res.stabilized_at,
        "saturation": format_submodule(res.saturation, inst.names),
    }
    return results, {"increasing": None, "stabilization_candidate": res.stabilized_at,
                     "certified": res.certified}, 0


def _seq(fn):
    def run(inst, a):
        rep = fn(inst.I, inst.presentation, a.nmax, a.window, *([a.cap] if fn is not ass.ass_power_sequence else []))
        results = {"per_n": [_primes(s, inst.names) for s in rep.per_n],
                   "stable_set": _primes(rep.stable_set, inst.names),
                   "degenerate": list(rep.degenerate)}
        return results, _seq_flags(rep), 0
    return run


def cmd_lemma21(inst, a):
    if (a.n is None) != (a.m is None):
        raise UsageError("--n and --m go together")
    pairs = [(a.n, a.m)] if a.n is not None else [
        (n, m) for n in range(1, a.nmax + 1) for m in range(1, n + 1)]
    rows, ok, cert = [], True, True
    for n, m in pairs:
        rep = closure.lemma21_check(inst.I, inst.presentation, n, m, a.window, a.cap)
        rows.append({"n": n, "m": m, "holds": rep.holds,
                     "closure_eq_power": rep.closure_eq_power, "power_eq_lower": rep.power_eq_lower,
                     "certified": rep.certified})
        ok &= rep.holds
        cert &= rep.certified
    return {"checks": rows, "holds": ok}, {"increasing": None, "stabilization_candidate": None,
                                          "certified": cert}, 0 if ok else 1


def cmd_reduction(inst, a):
    if inst.N1 is None or inst.N2 is None:
        raise UsageError("the reduction command needs 'submodule N1' and 'submodule N2' lines")
    P = inst.presentation
    v = reductions.is_rr_reduction(inst.N1, inst.N2, inst.I, P, a.window, a.cap)
    s = reductions.uniform_reduction_index(inst.N1, inst.N2, inst.I, P, a.cap) if v.holds else None
    ce = None
    if v.counterexample is not None:
        ce = format_element(v.counterexample.coord, v.counterexample.mono, inst.names)
    results = {"holds": v.holds, "witness_index": v.witness_index, "uniform_index": s,
               "counterexample": ce}
    return results, {"increasing": None, "stabilization_candidate": None, "certified": v.certified}, 0


def cmd_grade(inst, a):
    g = ass.grade_positive(inst.I, inst.presentation)
    assE = ass.ass_module_quotient(inst.presentation.F, inst.N)
    return ({"grade_positive": g, "ass_E": _primes(assE, inst.names)},
            {"increasing": None, "stabilization_candidate": None, "certified": True}, 0)


def cmd_cor25(inst, a):
    rep = ass.corollary25_check(inst.I, a.nmax, a.window, a.cap, inst.presentation)
    results = {"quotient": [_primes(s, inst.names) for s in rep.quotient.per_n],
               "successive": [_primes(s, inst.names) for s in rep.successive.per_n],
               "equal": list(rep.equal), "n0": rep.n0}
    flags = {"increasing": rep.quotient.increasing and rep.successive.increasing,
             "stabilization_candidate": rep.n0,
             "certified": rep.quotient.closure_certified}
    return results, flags, 0 if rep.found else 1


def cmd_eventual(inst, a):
    rep = ass.eventual_equality_check(inst.I, inst.presentation, a.nmax, a.window, a.cap)
    return ({"equal": list(rep.equal), "n0": rep.n0},
            {"increasing": None, "stabilization_candidate": rep.n0, "certified": rep.certified},
            0 if rep.found else 1)


def cmd_verify(inst, a):
    rep = oracle.cross_check(inst, D=a.truncation_degree, k_max=a.kmax)
    rows = [{"op": c.op, "label": c.label, "status": c.status, "D": c.D, "exact": c.exact,
             "reproducer": c.reproducer} for c in rep.comparisons]
    bad = [r for r in rows if r["status"] != "agree"]
    results = {"comparisons": rows, "mismatches": len(rep.mismatches),
               "inconclusive": len(rep.inconclusive)}
    if bad:
        results["reason"] = (f"{len(rep.mismatches)} mismatch(es), "
                             f"{len(rep.inconclusive)} inconclusive comparison(s)")
    return results, {"increasing": None, "stabilization_candidate": None, "certified": not bad}, \
        0 if not bad else 1


def instance_properties(inst, a):
    """Per-instance property verdicts used by ``props``."""
    P, I = inst.presentation, inst.I
    out = {}
    out["lemma21"] = all(closure.lemma21_check(I, P, n, m, a.window, a.cap).holds
                         for n in range(1, min(a.nmax, 5) + 1) for m in range(1, n + 1))
    out["rr_ass_increasing"] = ass.ass_rr_sequence(I, P, a.nmax, a.window, a.cap).increasing
    out["successive_increasing"] = ass.ass_successive_rr(I, P, a.nmax, a.window, a.cap).increasing
    out["brodmann"] = ass.brodmann_inclusion(I, P, a.nmax, a.window, a.cap).holds
    if ass.grade_positive(I, P):
        out["eventual_equality"] = ass.eventual_equality_check(I, P, 10, a.window, a.cap).found
    if P.is_ring:
        out["cor25"] = ass.corollary25_check(I, a.nmax, a.window, a.cap).found
    return out


def cmd_props(inst, a):
    if inst is not None:
        insts = [inst]
    else:
        insts = corpus(a.seed, a.count)
    rows, ok = [], True
    for i, x in enumerate(insts):
        verdicts = instance_properties(x, a)
        ok &= all(verdicts.values())
        rows.append({"index": i, **verdicts})
    return {"instances": rows, "holds": ok}, {"increasing": None, "stabilization_candidate": None,
                                              "certified": ok}, 0 if ok else 1


HANDLERS = {
    "closure": cmd_closure,
    "ass-seq": _seq(ass.ass_rr_sequence),
    "power-seq": _seq(ass.ass_power_sequence),
    "quotient-seq": _seq(ass.ass_successive_rr),
    "lemma21": cmd_lemma21,
    "reduction": cmd_reduction,
    "grade": cmd_grade,
    "cor25": cmd_cor25,
    "eventual-eq": cmd_eventual,
    "verify": cmd_verify,
    "props": cmd_props,
}


# --- output -----------------------------------------------------------------

def _text(command, results, flags):
    lines = [f"command: {command}"]
    for key, val in results.items():
        if key == "per_n":
            for n, s in enumerate(val, start=1):
                shown = "excluded" if s is None else "{" + ", ".join("(" + ",".join(p) + ")" for p in s) + "}"
                lines.append(f"n={n}: {shown}")
        elif isinstance(val, list) and val and isinstance(val[0], dict):
            for row in val:
                lines.append("  " + " ".join(f"{k}={v}" for k, v in row.items() if k != "reproducer"))
                if row.get("reproducer"):
                    lines.append("  reproducer:\n" + row["reproducer"])
        else:
            lines.append(f"{key}: {val}")
    for key, val in flags.items():
        lines.append(f"{key}: {val}")
    return "\n".join(lines) + "\n"


def _csv(results, flags):
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    if "per_n" in results:
        w.writerow(["n", "primes"])
        for n, s in enumerate(results["per_n"], start=1):
            w.writerow([n, "" if s is None else ";".join("(" + ",".join(p) + ")" for p in s)])
    else:
        rows = next((v for v in results.values() if isinstance(v, list) and v and isinstance(v[0], dict)), None)
        if rows is not None:
            w.writerow(list(rows[0]))
            for r in rows:
                w.writerow([r[k] for k in rows[0]])
        else:
            w.writerow(["key", "value"])
            for k, v in results.items():
                w.writerow([k, json.dumps(v) if isinstance(v, (list, dict)) else v])
    for k, v in flags.items():
        w.writerow([k, v])
    return buf.getvalue()


def _emit(text, out):
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_gen(a):
    if a.count < 1:
        raise UsageError("--count must be positive")
    insts = corpus(a.seed, a.count, GenParams())
    texts = [format_instance(x) for x in insts]
    if a.out:
        os.makedirs(a.out, exist_ok=True)
        width = max(3, len(str(a.count - 1)))
        for i, t in enumerate(texts):
            with open(os.path.join(a.out, f"instance_{i:0{width}d}.txt"), "w", encoding="utf-8") as fh:
                fh.write(t)
    else:
        sys.stdout.write("\n".join(f"# instance {i}\n{t}" for i, t in enumerate(texts)))
    return 0


def main(argv=None):
    parser = _parser()
    try:
        a = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        if a.window < 1 or a.cap < a.window or a.nmax < 2:
            raise UsageError("need --window >= 1, --cap >= --window and --nmax >= 2")
        if a.command == "gen":
            return cmd_gen(a)
        inst = _read_instance(a.instance) if (a.command in NEEDS_INSTANCE or a.instance) else None
        results, flags, code = HANDLERS[a.command](inst, a)
    except (UsageError, RRError) as exc:
        print(f"rrclosure: error: {exc}", file=sys.stderr)
        return 2
    params = {k: v for k, v in vars(a).items() if k not in ("command", "instance", "format", "out")}
    if a.format == "json":
        doc = {"instance": format_instance(inst) if inst is not None else None, "command": a.command,
               "params": params, "results": results, "flags": flags}
        text = json.dumps(doc, indent=2, sort_keys=False) + "\n"
    elif a.format == "csv":
        text = _csv(results, flags)
    else:
        text = _text(a.command, results, flags)
    _emit(text, a.out)
    return code


if __name__ == "__main__":
    sys.exit(main())
