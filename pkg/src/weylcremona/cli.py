"""Command-line front end.

    weylcremona [--config PATH] [--format text|latex|json] [--out PATH] [--seed N] VERB ...

Verbs: verify, formula, orbit, flow, scan-conjecture.  Exit status is 0
when every requested check passes, 1 when a check fails and 2 on
configuration errors.  Command-line options override the config file.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from fractions import Fraction
from typing import Any, Sequence

from . import __version__
from .birep import Representation, apply_word, parse_word, verify_coxeter_relations
from .latticedyn import (
    DP2Params,
    a1l_representation,
    dal_line_text,
    dp2_orbit,
    dp2_versus_group_orbit,
    evolution_formula,
    g_continued_fraction,
    g_text,
    orbit_iterate,
    orbit_to_csv,
    start_state,
    translation_word,
    verify_dAl,
    verify_sublattice_symmetry,
    verify_translations,
    verify_w_equivariance,
)
from .report import Report
from .rootdata import (
    CartanError,
    OrientationError,
    OrientationMatrix,
    cartan_affine_A,
    cartan_finite_A,
    cyclic_orientation,
    parse_u_entry,
    symbolic_skew_orientation,
    validate_cartan,
    validate_orientation,
)
from .symfield import PoleError
from .taucocycle import cocycle_of_word, cocycle_suite, conjecture_scan, fundamental_weight

try:
    import tomllib
except ImportError:  # Python < 3.11
    import tomli as tomllib

EXIT_OK, EXIT_FAIL, EXIT_CONFIG = 0, 1, 2

SUITES = (
    "coxeter",
    "cocycle",
    "shift",
    "dal",
    "sublattice",
    "w-action",
    "dp2",
    "equivariance",
    "integrals",
    "conservation",
    "backlund",
    "continuum",
)


class ConfigError(ValueError):
    pass


# ---------------------------------------------------------------------------
# configuration


def load_config(path: str | None) -> dict:
    if not path:
        return {}
    try:
        with open(path, "rb") as fh:
            return tomllib.load(fh)
    except OSError as exc:
        raise ConfigError(f"cannot read config: {exc}") from exc
    except tomllib.TOMLDecodeError as exc:
        raise ConfigError(f"bad config {path}: {exc}") from exc


_NAMED = {
    "A1xA1": [[2, 0], [0, 2]],
    "B2": [[2, -2], [-1, 2]],
    "G2": [[2, -3], [-1, 2]],
}


def cartan_from_spec(spec) -> Any:
    if isinstance(spec, list):
        return validate_cartan(spec)
    s = str(spec).strip()
    if s.startswith("A1l:"):
        return cartan_affine_A(int(s[4:]))
    if s.startswith("A:"):
        return cartan_finite_A(int(s[2:]))
    if s in _NAMED:
        return validate_cartan(_NAMED[s], s)
    if ";" in s or "," in s:
        try:
            rows = [[int(v) for v in _csv_values(row)] for row in s.split(";")]
        except ValueError as exc:
            raise ConfigError(f"bad Cartan matrix {spec!r}") from exc
        return validate_cartan(rows)
    raise ConfigError(f"unknown Cartan preset {spec!r} (use A1l:<l>, A:<l>, A1xA1, B2, G2 or a matrix)")


def representation_from_config(root: dict) -> Representation:
    """[root] section: cartan, u, mode.  mode = "none" skips validation."""
    A = cartan_from_spec(root.get("cartan", "A1l:2"))
    u = root.get("u", "cyclic")
    mode = root.get("mode", "thmB")
    if u == "cyclic":
        if not A.name.startswith("A1_") or A.size < 3:
            raise ConfigError("the cyclic orientation needs an A1l:<l> Cartan matrix with l >= 2")
        if mode == "thmB":
            return a1l_representation(A.size - 1)
        entries = cyclic_orientation(A.size - 1)
    elif u == "symbolic":
        entries = symbolic_skew_orientation(A)
        if mode == "thmB":
            mode = "conjecture"
    elif isinstance(u, list):
        entries = u
    else:
        raise ConfigError(f"unknown orientation {u!r} (use cyclic, symbolic or an explicit matrix)")
    if mode == "none":
        return Representation(A, OrientationMatrix(tuple(tuple(parse_u_entry(x) for x in row) for row in entries), "none"))
    return Representation(A, validate_orientation(entries, A, mode))


def _q(x, exact: bool):
    if exact:
        return Fraction(str(x))
    return float(Fraction(str(x))) if isinstance(x, str) else float(x)


def _csv_values(text) -> list[str]:
    if isinstance(text, (list, tuple)):
        return [str(t) for t in text]
    return [t.strip() for t in str(text).split(",") if t.strip()]


def _weight(text, n: int) -> tuple[int, ...]:
    t = str(text).strip()
    if t[:1] in ("L", "l", "w"):
        return fundamental_weight(int(t[1:]), n)
    vals = tuple(int(v) for v in _csv_values(t))
    if len(vals) != n:
        raise ConfigError(f"weight {text!r} has the wrong length")
    return vals


# ---------------------------------------------------------------------------
# output


class Output:
    def __init__(self, fmt: str, out: str | None):
        self.fmt = fmt
        self.out = out
        self.chunks: list[str] = []
        self.structs: list[Any] = []

    def report(self, rep: Report) -> None:
        if self.fmt == "json":
            self.structs.append(rep.to_struct())
        else:
            self.chunks.append(rep.to_text())

    def text(self, text: str, struct: Any = None, latex: str | None = None) -> None:
        if self.fmt == "json":
            self.structs.append(struct if struct is not None else text)
        elif self.fmt == "latex" and latex is not None:
            self.chunks.append(latex)
        else:
            self.chunks.append(text)

    def render(self) -> str:
        if self.fmt == "json":
            data = self.structs[0] if len(self.structs) == 1 else self.structs
            return json.dumps(data, indent=2, sort_keys=True, default=str)
        return "\n".join(self.chunks)

    def flush(self, write_file: bool = True) -> None:
        text = self.render()
        print(text)
        if self.out and write_file:
            with open(self.out, "w") as fh:
                fh.write(text + "\n")


# ---------------------------------------------------------------------------
# verify


def _flow_spec(cfg: dict, family: str | None, n: int | None, rng: random.Random):
    from .flows import FlowSpec

    fam = family or cfg.get("family", "A_even")
    n = n or int(cfg.get("n", 1))
    size = 2 * n + 1 if fam == "A_even" else 2 * n + 2
    alpha = cfg.get("alpha")
    if alpha is None:
        alpha = [round(rng.uniform(0.1, 0.6), 3) for _ in range(size)]
    alpha = [_q(a, False) for a in _csv_values(alpha)]
    return FlowSpec(fam, n, tuple(alpha))


def _generic_start(size: int, rng: random.Random) -> list[float]:
    return [round(rng.uniform(0.4, 1.2), 3) for _ in range(size)]


def _root_section(args, cfg: dict) -> dict:
    root = dict(cfg.get("root", {}))
    if getattr(args, "cartan", None):
        root["cartan"] = args.cartan
    if getattr(args, "u", None):
        u = args.u
        root["u"] = u if u in ("cyclic", "symbolic") else [_csv_values(row) for row in u.split(";")]
    if getattr(args, "mode", None):
        root["mode"] = args.mode
    if "cartan" not in root and getattr(args, "l", None):
        root["cartan"] = f"A1l:{args.l}"
    return root


def _suite_reports(name: str, args, cfg: dict, rng: random.Random) -> list[Report]:
    root = _root_section(args, cfg)
    if name == "coxeter":
        return [verify_coxeter_relations(representation_from_config(root))]
    if name == "cocycle":
        rep = representation_from_config(root)
        return [cocycle_suite(rep, int(cfg.get("cocycle", {}).get("max_pair_len", 3)))]
    l = args.l or int(cfg.get("l", 2))
    if name == "shift":
        return [verify_translations(l)]
    if name == "dal":
        return [verify_dAl(l)]
    if name == "sublattice":
        return [verify_sublattice_symmetry(l)]
    if name == "w-action":
        return [verify_w_equivariance(l)]
    if name == "dp2":
        d = cfg.get("dp2", {})
        p = _dp2_params(d, True)
        steps = int(d.get("steps", 20))
        f0, f1 = Fraction(str(d.get("f0", "1"))), Fraction(str(d.get("f1", "1/2")))
        rep = dp2_versus_group_orbit(f0, f1, p, steps)
        from .latticedyn import verify_generalized_symmetry

        sym = verify_generalized_symmetry(2, 1)
        rep.extend(sym)
        return [rep]
    from . import flows

    fcfg = cfg.get("flow", {})
    if name in ("equivariance", "integrals"):
        fam = args.family or fcfg.get("family", "A_even")
        n = args.n or int(fcfg.get("n", 1))
        fn = flows.verify_derivation_equivariance if name == "equivariance" else flows.verify_first_integrals
        return [fn(fam, n)]
    if name == "conservation":
        spec = _flow_spec(fcfg, args.family, args.n, rng)
        return [_conservation_report(spec, rng)]
    if name == "backlund":
        spec = _flow_spec(fcfg, args.family, args.n, rng)
        init = _generic_start(spec.size, rng)
        rep = Report(f"Backlund transformations versus the {spec.label()} flow")
        rep.info["start"] = init
        for w in list(range(spec.size)) + ["pi"]:
            dev = flows.backlund_flow_commutation(spec, w, init, (0.0, 0.5), 1e-3)
            rep.add(f"{'s' + str(w) if w != 'pi' else 'pi'}: max deviation {dev:.3e} < 1e-6", dev < 1e-6)
        return [rep]
    if name == "continuum":
        c = cfg.get("continuum", {})
        res = flows.continuum_limit_experiment(float(c.get("eps", 0.1)), matching=c.get("matching", "fd"))
        rep = Report("dP_II -> P2 continuum limit")
        for r in res.runs:
            rep.info[f"max error at eps={r.eps:g}"] = f"{r.error:.6e}"
        rep.add(f"error ratio {res.ratio:.4f} in [1.5, 2.5]", 1.5 <= res.ratio <= 2.5)
        return [rep]
    raise ConfigError(f"unknown suite {name!r}")


def _conservation_report(spec, rng: random.Random) -> Report:
    import numpy as np

    from . import flows

    init = _generic_start(spec.size, rng)
    tr = flows.rk4_integrate(spec, init, (0.0, 1.0), 1e-3)
    rep = Report(f"numeric integrals of {spec.label()}")
    rep.info["start"] = init
    if not tr.complete:
        rep.add("trajectory complete", False, tr.diagnostic)
        return rep
    if spec.family == "A_even":
        s = tr.y.sum(axis=1)
        drift = float(np.max(np.abs(s - (s[0] + spec.delta * tr.x))))
        rep.add(f"|sum f - (sum f(0) + delta x)| = {drift:.3e} < 1e-8", drift < 1e-8)
    else:
        for parity in (0, 1):
            q = tr.y[:, parity::2].sum(axis=1) * np.exp(-spec.delta * tr.x / 2)
            dev = float(np.max(np.abs(q - q[0])) / abs(q[0]))
            rep.add(f"parity {parity} exponential integral: relative drift {dev:.3e} < 1e-6", dev < 1e-6)
    ratio = flows.self_convergence(spec, init, (0.0, 1.0), 0.1)
    rep.add(f"RK4 self-convergence ratio {ratio:.2f} in [12, 20]", 12 <= ratio <= 20)
    return rep


def cmd_verify(args, cfg: dict, out: Output) -> int:
    rng = random.Random(args.seed)
    suites = args.suites or cfg.get("verify", {}).get("suites", ["coxeter"])
    if "all" in suites:
        suites = list(SUITES)
    ok = True
    for name in suites:
        for rep in _suite_reports(name, args, cfg, rng):
            out.report(rep)
            ok = ok and rep.passed
    out.flush()
    return EXIT_OK if ok else EXIT_FAIL


# ---------------------------------------------------------------------------
# formula


def cmd_formula(args, cfg: dict, out: Output) -> int:
    target = args.target
    fcfg = cfg.get("formula", {})
    if target == "word":
        rep = representation_from_config(_root_section(args, cfg))
        w = parse_word(args.word or fcfg.get("word", "s0"), rep.A)
        st = apply_word(rep, w)
        lines = [f"{w}({name}) = {img.reduced().to_text()}" for name, img in st.images()]
        latex = [f"{w}({name}) = {img.reduced().to_latex()}" for name, img in st.images()]
        struct = {"word": str(w), "images": {name: img.reduced().to_text() for name, img in st.images()}}
        out.text("\n".join(lines), struct, "\n".join(latex))
    elif target == "cocycle":
        rep = representation_from_config(_root_section(args, cfg))
        w = parse_word(args.word or fcfg.get("word", "s0 s1"), rep.A)
        lam = _weight(args.weight or fcfg.get("weight", "L1"), rep.size)
        v = cocycle_of_word(w, lam, rep).value.reduced()
        out.text(f"phi_{{{w}}}({lam}) = {v.to_text()}", {"word": str(w), "weight": list(lam), "value": v.to_text()}, v.to_latex())
    elif target == "g":
        l = args.l or 2
        g = g_continued_fraction(args.k, args.r, l)
        n = l + 1
        out.text(
            f"g_{{{args.k},{args.r}}} = {g_text(args.k, args.r, n)} = {g.value.to_text()}  [identity {'holds' if g.agrees else 'FAILS'}]",
            {"k": args.k, "r": args.r, "continued_fraction": g_text(args.k, args.r, n), "value": g.value.to_text(), "identity": g.agrees},
            g_text(args.k, args.r, n, latex=True),
        )
        out.flush()
        return EXIT_OK if g.agrees else EXIT_FAIL
    elif target == "family":
        from .flows import symbolic_rhs

        fam = args.family or "A_even"
        n = args.n or 1
        rhs = symbolic_rhs(fam, n)
        lines = [f"f{j}' = {r.to_text()}" for j, r in enumerate(rhs)]
        out.text("\n".join(lines), {"family": fam, "n": n, "rhs": [r.to_text() for r in rhs]}, "\n".join(f"f_{{{j}}}' = {r.to_latex()}" for j, r in enumerate(rhs)))
    elif target.startswith("T") and target[1:].isdigit():
        l = args.l or 2
        tw = translation_word(l, int(target[1:]))
        ev = evolution_formula(tw)
        text = [f"{tw}", f"alpha shift <nu, alpha_j>: {list(tw.shift)}"]
        if target == "T1":
            text += [dal_line_text(j, l) for j in range(l + 1)]
        text.append(ev.to_text())
        latex = [dal_line_text(j, l, latex=True) for j in range(l + 1)] if target == "T1" else []
        latex.append(ev.to_latex())
        struct = ev.to_struct()
        if target == "T1":
            struct["closed_form"] = [dal_line_text(j, l) for j in range(l + 1)]
        out.text("\n".join(text), struct, "\n".join(latex))
    else:
        raise ConfigError(f"unknown formula target {target!r}")
    out.flush()
    return EXIT_OK


# ---------------------------------------------------------------------------
# orbit


def _dp2_params(d: dict, exact: bool) -> DP2Params:
    return DP2Params(
        _q(d.get("c", "2"), exact),
        _q(d.get("alpha0", "1/4"), exact),
        _q(d.get("alpha1", "1/4"), exact),
        _q(d.get("alpha2", "0"), exact),
    )


def cmd_orbit(args, cfg: dict, out: Output) -> int:
    ocfg = cfg.get("orbit", {})
    exact = not args.float and ocfg.get("exact", True)
    steps = args.steps if args.steps is not None else int(ocfg.get("steps", 10))
    if args.target == "dp2":
        d = dict(cfg.get("dp2", {}))
        p = _dp2_params(d, exact)
        f0 = _q(args.f[0] if args.f else d.get("f0", "1"), exact)
        f1 = _q(args.f[1] if args.f else d.get("f1", "1/2"), exact)
        try:
            seq = dp2_orbit(f0, f1, p, steps)
        except PoleError as exc:
            print(f"pole: {exc}", file=sys.stderr)
            return EXIT_FAIL
        rows = ["n,f0,f1,f2"]
        fmt = (lambda x: str(x)) if exact else (lambda x: repr(float(x)))
        for n, (a, b) in enumerate(seq):
            rows.append(f"{n},{fmt(a)},{fmt(b)},{fmt(p.c - a - b)}")
        csv_text = "\n".join(rows) + "\n"
        summary = dp2_versus_group_orbit(f0, f1, p, steps)
    else:
        l = args.l or int(ocfg.get("l", 2))
        tw = translation_word(l, int(args.target[1:]))
        alpha = _csv_values(args.alpha or ocfg.get("alpha", ",".join(["1/4"] * l + ["1/2"])))
        f = _csv_values(args.f_values or ocfg.get("f", ",".join(str(j + 1) for j in range(l + 1))))
        start = start_state([_q(a, exact) for a in alpha], [_q(x, exact) for x in f], exact)
        orbit = orbit_iterate(start, tw, steps)
        csv_text = orbit_to_csv(orbit)
        summary = Report(f"orbit of {tw.label} on A1_{l} ({'exact' if exact else 'float'})")
        summary.info["steps"] = len(orbit) - 1
        summary.add("orbit pole-free", orbit.complete, str(orbit.pole) if orbit.pole else "")
        if l == 2:
            drift = [s.total() - start.total() for s in orbit]
            summary.add("f0 + f1 + f2 conserved", all(x == 0 for x in drift) if exact else max(map(abs, drift)) < 1e-9)
    if args.out:
        with open(args.out, "w", newline="") as fh:
            fh.write(csv_text)
    else:
        sys.stdout.write(csv_text)
    out.out = None
    out.report(summary)
    if args.out:
        out.flush()
    else:
        print(out.render(), file=sys.stderr)
    return EXIT_OK if summary.passed else EXIT_FAIL


# ---------------------------------------------------------------------------
# flow


def cmd_flow(args, cfg: dict, out: Output) -> int:
    from . import flows

    fcfg = cfg.get("flow", {})
    rng = random.Random(args.seed)
    if args.target == "continuum":
        c = cfg.get("continuum", {})
        res = flows.continuum_limit_experiment(
            args.eps or float(c.get("eps", 0.1)),
            a0=float(c.get("a0", 0.3)),
            a1=float(c.get("a1", 0.1)),
            b1=float(c.get("b1", 0.6)),
            psi0=float(c.get("psi0", 0.1)),
            dpsi0=float(c.get("dpsi0", 0.0)),
            matching=c.get("matching", "fd"),
        )
        ok = 1.5 <= res.ratio <= 2.5
        out.text(res.to_text(), res.to_struct())
        out.flush()
        return EXIT_OK if ok else EXIT_FAIL
    if args.family == "P2" or fcfg.get("family") == "P2":
        spec = flows.FlowSpec.p2(float(fcfg.get("b1", 0.6)))
    else:
        spec = _flow_spec(fcfg, args.family, args.n, rng)
    init = args.initial or fcfg.get("initial")
    init = [float(x) for x in _csv_values(init)] if init else _generic_start(spec.size, rng)
    x0, x1 = args.x or fcfg.get("x", [0.0, 1.0])
    step = args.step or float(fcfg.get("step", 1e-3))
    tr = flows.rk4_integrate(spec, init, (float(x0), float(x1)), step)
    drift = spec.family == "A_even"
    text = flows.trajectory_to_csv(tr, drift=drift)
    if args.out:
        with open(args.out, "w", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    summary = Report(f"{spec.label()} trajectory")
    summary.info["samples"] = len(tr)
    summary.add("trajectory complete", tr.complete, tr.diagnostic)
    if drift and tr.complete:
        s = tr.y.sum(axis=1)
        d = float(abs(s - (s[0] + float(spec.delta) * tr.x)).max())
        summary.info["max sum-f drift"] = f"{d:.3e}"
    out.out = None
    out.report(summary)
    print(out.render(), file=sys.stderr if not args.out else sys.stdout)
    return EXIT_OK if summary.passed else EXIT_FAIL


# ---------------------------------------------------------------------------
# scan


def cmd_scan(args, cfg: dict, out: Output) -> int:
    scfg = cfg.get("scan", {})
    l = args.l or int(scfg.get("l", 2))
    root = dict(cfg.get("root", {}))
    root.setdefault("cartan", f"A1l:{l}")
    root["u"] = "symbolic"
    root["mode"] = "conjecture"
    rep = representation_from_config(root)
    max_len = args.max_len or int(scfg.get("max_len", 6))
    report, results = conjecture_scan(rep, max_len, args.workers)
    if args.out:
        import csv

        with open(args.out, "w", newline="") as fh:
            w = csv.DictWriter(fh, ["word", "k", "terms", "max_degree", "is_polynomial", "integer_coefficients"], lineterminator="\n")
            w.writeheader()
            for r in results:
                w.writerow(r.to_row())
    out.out = None
    out.report(report)
    out.flush()
    return EXIT_OK if report.passed else EXIT_FAIL


# ---------------------------------------------------------------------------
# parser


def _root_options(p: argparse.ArgumentParser) -> None:
    p.add_argument("--cartan", help="A1l:<l>, A:<l>, A1xA1, B2, G2")
    p.add_argument("--u", help="cyclic, symbolic, or rows like '0,1;-1,0'")
    p.add_argument("--mode", choices=("thmA", "thmB", "conjecture", "none"))


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", default=argparse.SUPPRESS, help="TOML configuration file")
    common.add_argument("--format", choices=("text", "latex", "json"), default=argparse.SUPPRESS)
    common.add_argument("--out", default=argparse.SUPPRESS, help="write the report or CSV here")
    common.add_argument("--seed", type=int, default=argparse.SUPPRESS, help="seed for randomized checks")

    p = argparse.ArgumentParser(prog="weylcremona", description=__doc__.splitlines()[0], parents=[common])
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = p.add_subparsers(dest="verb", required=True)

    v = sub.add_parser("verify", parents=[common], help="run verification suites")
    v.add_argument("suites", nargs="*", help=f"suites: {', '.join(SUITES)}, all")
    v.add_argument("--l", type=int)
    v.add_argument("--family", choices=("A_even", "A_odd"))
    v.add_argument("--n", type=int)
    _root_options(v)
    v.set_defaults(func=cmd_verify)

    f = sub.add_parser("formula", parents=[common], help="print images, evolution formulas, cocycles")
    f.add_argument("target", help="word | T<i> | cocycle | g | family")
    f.add_argument("word_arg", nargs="?", help="word for the 'word' target")
    f.add_argument("--word")
    f.add_argument("--weight", help="L<k> or comma-separated integers")
    f.add_argument("--l", type=int)
    f.add_argument("--k", type=int, default=0)
    f.add_argument("--r", type=int, default=0)
    f.add_argument("--family", choices=("A_even", "A_odd"))
    f.add_argument("--n", type=int)
    _root_options(f)
    f.set_defaults(func=cmd_formula)

    o = sub.add_parser("orbit", parents=[common], help="iterate a translation or dP_II")
    o.add_argument("target", help="T<i> or dp2")
    o.add_argument("--l", type=int)
    o.add_argument("--steps", type=int)
    o.add_argument("--float", action="store_true", help="float instead of exact arithmetic")
    o.add_argument("--alpha", help="comma-separated alpha_j (rationals like 1/4 allowed)")
    o.add_argument("--f", dest="f_values", help="comma-separated f_j")
    o.set_defaults(func=cmd_orbit, f=None)

    fl = sub.add_parser("flow", parents=[common], help="integrate a flow or run the continuum limit")
    fl.add_argument("target", choices=("integrate", "continuum"))
    fl.add_argument("--family", choices=("A_even", "A_odd", "P2"))
    fl.add_argument("--n", type=int)
    fl.add_argument("--initial")
    fl.add_argument("--x", type=float, nargs=2)
    fl.add_argument("--step", type=float)
    fl.add_argument("--eps", type=float)
    fl.set_defaults(func=cmd_flow)

    s = sub.add_parser("scan-conjecture", parents=[common], help="polynomiality scan of phi_w(Lambda_k)")
    s.add_argument("--l", type=int)
    s.add_argument("--max-len", type=int)
    s.add_argument("--workers", type=int, default=1)
    s.set_defaults(func=cmd_scan)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    for name, default in (("config", None), ("format", "text"), ("out", None), ("seed", 0)):
        if not hasattr(args, name):
            setattr(args, name, default)
    if args.verb == "formula" and args.target == "word" and args.word_arg and not args.word:
        args.word = args.word_arg
    try:
        cfg = load_config(args.config)
        g = cfg.get("output", {})
        if args.format == "text" and g.get("format"):
            args.format = g["format"]
        if args.seed == 0 and "seed" in cfg:
            args.seed = int(cfg["seed"])
        return args.func(args, cfg, Output(args.format, args.out))
    except (ConfigError, CartanError, OrientationError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONFIG


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
