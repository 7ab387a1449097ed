"""Command-line surface: named verification suites, single evaluations,
and CSV table exports.

Grammar:  lflab eval <object> --s a+bi [...]
          lflab verify <suite|all> [--tol T] [--tmax T] [--X N] [--quick]
          lflab table <kind> [--out FILE] [...]

Reports stream as line-delimited JSON, one object per check:
{"check", "grid", "max_abs_error", "tolerance", "pass", "runtime_ms",
 "details"}.  Exit code 0 iff every check passes, 1 on any failure, 2 on
usage errors.  Identical invocations produce byte-identical output: all
grids and seeds are fixed, reduction order is deterministic, and
runtime_ms is 0 unless --timings is given (wall-clock timings are the one
irreproducible field).  LFL_THREADS caps suite parallelism; output is
buffered per suite and emitted in registration order either way.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys
import time
from concurrent.futures import ThreadPoolExecutor

import numpy as np

from . import diophantine, eisenstein, hecke_l, langlands, mellin_converse
from . import modular_forms as mf
from . import primes as _primes
from . import tate_local, zeta_core
from .dirichlet import characters_mod
from .report import VerificationReport, from_residuals
from .special_fn import theta as theta_fn


def _parse_complex(text: str) -> complex:
    """Accept 'a+bi' (or 'a+bj', bare reals, pure imaginaries)."""
    cleaned = text.strip().replace("i", "j")
    try:
        return complex(cleaned)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"cannot parse complex number {text!r}") from exc


# ---------------------------------------------------------------------------
# verification suites (ordered registry; order fixes the output stream)
# ---------------------------------------------------------------------------

def _suite_zeta_fe(a) -> list[VerificationReport]:
    tmax = a.tmax if a.tmax is not None else 30.0
    pairs = []
    for sigma in np.arange(-2.0, 3.001, 0.25):
        for t in np.arange(0.0, tmax + 1e-9, 0.5):
            s = complex(round(float(sigma), 6), float(t))
            if s in (0, 1) or (1 - s) in (0, 1):
                continue
            resid = abs(zeta_core.xi(s).value - zeta_core.xi(1 - s).value)
            pairs.append((f"s={s}", resid))
    return [from_residuals("zeta-fe", f"sigma in [-2,3] step 0.25 x t in [0,{tmax}] step 0.5",
                           pairs, 1e-10)]


def _suite_jacobi(a) -> list[VerificationReport]:
    ts = np.logspace(math.log10(0.05), math.log10(20.0), 60)
    pairs = [(f"t={t:.6f}", abs(theta_fn(float(t)) - theta_fn(1.0 / float(t)) / math.sqrt(float(t))))
             for t in ts]
    return [from_residuals("jacobi-identity", "60 log-spaced t in [0.05, 20]", pairs, 1e-12)]


def _suite_zeta_values(a) -> list[VerificationReport]:
    pairs = [("zeta(2) vs pi^2/6", abs(zeta_core.zeta(2.0) - math.pi**2 / 6.0))]
    r1 = from_residuals("zeta-value-2", "single point s=2", pairs, 1e-12)
    pairs = [("zeta(-1) vs -1/12", abs(zeta_core.zeta(-1.0) + 1.0 / 12.0))]
    r2 = from_residuals("zeta-value-minus1", "single point s=-1", pairs, 1e-11)
    return [r1, r2]


def _suite_hecke_fe(a) -> list[VerificationReport]:
    tmax = a.tmax if a.tmax is not None else 20.0
    delta = mf.delta_q_expansion(64)
    sig = np.arange(3.0, 9.001, 0.5)
    ts = np.arange(-tmax, tmax + 1e-9, 2.0)
    S = (sig[:, None] + 1j * ts[None, :]).ravel()
    vals = hecke_l.phi_completed_many(S, delta)
    refl = hecke_l.phi_completed_many(12.0 - S, delta)
    resid = np.abs(vals - refl)
    pairs = [(f"s={S[i]}", float(resid[i])) for i in range(len(S))]
    return [from_residuals("hecke-fe-delta", f"sigma in [3,9] step 0.5 x |t| <= {tmax} step 2",
                           pairs, 1e-9)]


def _suite_weil_twist(a) -> list[VerificationReport]:
    n_terms = a.terms if a.terms is not None else 60000
    delta = mf.delta_q_expansion(max(n_terms, 2000))
    s_points = (8.0, 8.5, 9.0)
    out = []
    for r in (3, 4, 5, 7):
        chi = next(c for c in characters_mod(r) if c.is_primitive)
        pairs = []
        for s in s_points:
            rep = hecke_l.weil_twist_check(delta, chi, s, N_direct=n_terms)
            pairs.append((f"r={r} s={s}", rep.max_abs_error))
        out.append(from_residuals("weil-twist", f"Delta, primitive chi mod {r}, s in {s_points}",
                                  pairs, 1e-6))
    return out


def _suite_mellin(a) -> list[VerificationReport]:
    th = mf.theta_q_expansion(144)
    th_desc = hecke_l.descriptor_from_qexpansion(th)
    phi_th = lambda s: hecke_l.phi_completed_many(s, th)
    spec_th = mellin_converse.ContourSpec(c=2.0, t_cut=40.0)
    pairs = []
    for x in (0.7, 1.0, 1.3, 2.0, 3.5):
        rec = mellin_converse.reconstruct(th_desc, phi_th, x, spec_th)
        pairs.append((f"theta x={x}", abs(rec.value - theta_fn(x))))
    delta = mf.delta_q_expansion(300)
    d_desc = hecke_l.descriptor_from_qexpansion(delta)
    phi_d = lambda s: hecke_l.phi_completed_many(s, delta)
    spec_d = mellin_converse.ContourSpec(c=8.0, t_cut=60.0)
    for x in (0.5, 0.9, 1.0, 1.2, 2.0):
        rec = mellin_converse.reconstruct(d_desc, phi_d, x, spec_d)
        direct = mf.evaluate(delta, complex(0.0, x), 1e-10)
        pairs.append((f"Delta x={x}", abs(rec.value - direct)))
    r1 = from_residuals("mellin-reconstruction", "theta (c=2,T=40) and Delta (c=8,T=60), 5 x each",
                        pairs, 1e-6)
    pairs = []
    for x in (1.0, 1.3):
        direct = mellin_converse.reconstruct(d_desc, phi_d, x, spec_d).value
        shifted = mellin_converse.reconstruct_shifted(d_desc, phi_d, x, spec_d).value
        pairs.append((f"Delta shift x={x}", abs(direct - shifted)))
        direct = mellin_converse.reconstruct(th_desc, phi_th, x, spec_th).value
        shifted = mellin_converse.reconstruct_shifted(th_desc, phi_th, x, spec_th).value
        pairs.append((f"theta shift x={x}", abs(direct - shifted)))
    r2 = from_residuals("mellin-contour-shift", "residue-corrected contour at k-c", pairs, 1e-6)
    return [r1, r2]


def _suite_eisenstein_fe(a) -> list[VerificationReport]:
    zs = (1j, 0.3 + 1.2j, 2j)
    ss = (0.25 + 0j, 0.5 + 3j, 2.0 + 0j, 1.7 - 2j)
    pairs = [(f"z={z} s={s}", eisenstein.verify_eis_fe(z, s)) for z in zs for s in ss]
    r1 = from_residuals("eisenstein-fe", "12-point (z, s) grid", pairs, 1e-8)
    pairs = []
    for (z, s) in ((1j, 3.0), (2j, 3.0), (0.3 + 1.2j, 2.5), (1.5j, 2.5), (0.25 + 0.9j, 4.0), (0.5 + 1.1j, 4.0)):
        lat = eisenstein.eisenstein_lattice(z, complex(s), tol=2e-9)
        fo = eisenstein.eisenstein_fourier(z, complex(s), 20)
        pairs.append((f"z={z} s={s}", abs(lat.value - fo)))
    r2 = from_residuals("eisenstein-lattice-vs-fourier", "Re s in {2.5, 3, 4}, auto lattice radius",
                        pairs, 1e-8)
    sps = (0.4 + 6j, 0.3 + 0j, 2.2 + 1j, -0.7 + 2j, 0.9 + 4j, 0.25 + 2j, 1.5 - 3j, -0.2 + 0.5j, 0.6 + 7j, 2.0 - 1j)
    pairs = [(f"s'={sp}", eisenstein.zeta_fe_from_a1(complex(sp))) for sp in sps]
    r3 = from_residuals("zeta-fe-via-a1", "10 points through the first Fourier coefficient",
                        pairs, 1e-9)
    return [r1, r2, r3]


def _suite_laplacian(a) -> list[VerificationReport]:
    pairs = []
    for (z, s) in ((1j, 2.0 + 0j), (0.2 + 1.4j, 3.0 + 0j), (1.5j, 0.5 + 4j)):
        r_coarse = eisenstein.laplacian_check(z, s, 1e-2)
        r_fine = eisenstein.laplacian_check(z, s, 5e-3)
        slope = math.log2(r_coarse / r_fine)
        pairs.append((f"z={z} s={s} slope={slope:.3f}", abs(slope - 2.0)))
    return [from_residuals("laplacian-eigenvalue", "Richardson slope at 3 (z, s) pairs, h=1e-2 vs 5e-3",
                           pairs, 0.2)]


def _suite_tau_exact(a) -> list[VerificationReport]:
    limit = a.X if a.X is not None else 10**4
    tau = mf.tau_coefficients(max(300 * 300, limit))
    bad = 0.0
    worst_desc = "all identities hold exactly"
    for m in range(1, 301):
        for n in range(m + 1, 301):
            if math.gcd(m, n) == 1 and tau[m * n] != tau[m] * tau[n]:
                bad += 1
                worst_desc = f"tau({m}*{n}) != tau({m})tau({n})"
    for p in _primes.primes(100):
        p = int(p)
        if tau[p * p] != tau[p] ** 2 - p**11:
            bad += 1
            worst_desc = f"tau({p}^2) identity fails"
    for p in _primes.primes(limit):
        p = int(p)
        if tau[p] ** 2 > 4 * p**11:
            bad += 1
            worst_desc = f"Deligne bound fails at p={p}"
    return [VerificationReport(
        check_name="tau-exact-arithmetic",
        grid_description=f"multiplicativity to 300, tau(p^2) to 100, Deligne to {limit} (exact ints)",
        max_abs_error=bad, tolerance=0.0, passed=bad == 0.0,
        details=[(worst_desc, bad)],
    )]


def _suite_tate_local(a) -> list[VerificationReport]:
    pairs = []
    grid = (0.5 + 0j, 1.0 + 0j, 2.0 + 0j, 1.0 + 1j, 0.5 + 2j)
    for p in _primes.primes(100):
        p = int(p)
        for s in grid:
            K = 200 if s.real < 1 else 80
            total, closed = tate_local.local_factor_p(p, s, K)
            pairs.append((f"p={p} s={s}", abs(total - closed)))
    r1 = from_residuals("tate-local-p", "p <= 100, 5-point s grid with Re s >= 0.5", pairs, 1e-12)
    pairs = []
    for s in (0.3, 0.7, 1.0, 1.5, 2.0, 3.0, 4.5, 6.0, 0.5 + 1j, 2.0 + 2j):
        q, closed = tate_local.archimedean_factor(complex(s))
        pairs.append((f"s={s}", abs(q - closed)))
    r2 = from_residuals("tate-archimedean", "10 points in the quadrature comfort zone", pairs, 1e-9)
    return [r1, r2]


def _suite_sato_tate(a) -> list[VerificationReport]:
    X = a.X if a.X is not None else 10**5
    ps, ap = langlands.delta_ap(X)
    _, _, rep = langlands.sato_tate_report(ap, X, m_max=4)
    cat = (1.0, 1.0, 2.0, 5.0, 14.0)
    pairs = [(f"moment {2 * k} vs Catalan", abs(langlands.semicircle_moment(2 * k) - cat[k]))
             for k in range(5)]
    pairs += [(f"moment {m} (odd)", abs(langlands.semicircle_moment(m))) for m in (1, 3, 5)]
    r2 = from_residuals("semicircle-moments", "Catalan values through m=8", pairs, 1e-10)
    _, taus = langlands.delta_ap_integer(min(X, 10**4))
    r3 = langlands.sarnak_integrality_test(taus, min(X, 10**4))
    return [rep, r2, r3]


def _suite_three_squares(a) -> list[VerificationReport]:
    limit = a.X if a.X is not None else 10**4
    table = diophantine.representable_table(limit)
    bad = sum(1 for n in range(1, limit + 1) if bool(table[n]) != diophantine.gauss_condition(n))
    return [VerificationReport(
        check_name="three-squares-criterion",
        grid_description=f"exhaustive n <= {limit} vs 4^a(8b+7)",
        max_abs_error=float(bad), tolerance=0.0, passed=bad == 0,
        details=[("exceptions", float(bad))],
    )]


def _suite_convexity(a) -> list[VerificationReport]:
    tmax = a.tmax if a.tmax is not None else 100.0
    return [zeta_core.convexity_probe(tmax, 0.1)]


SUITES = {
    "zeta-fe": _suite_zeta_fe,
    "jacobi": _suite_jacobi,
    "zeta-values": _suite_zeta_values,
    "hecke-fe": _suite_hecke_fe,
    "weil-twist": _suite_weil_twist,
    "mellin": _suite_mellin,
    "eisenstein-fe": _suite_eisenstein_fe,
    "laplacian": _suite_laplacian,
    "tau-exact": _suite_tau_exact,
    "tate-local": _suite_tate_local,
    "sato-tate": _suite_sato_tate,
    "three-squares": _suite_three_squares,
    "convexity": _suite_convexity,
}


# ---------------------------------------------------------------------------
# eval / table
# ---------------------------------------------------------------------------

def _eval_object(name: str, a) -> dict:
    s = a.s if a.s is not None else 2.0 + 0j
    if name == "xi":
        val = zeta_core.xi(s)
        return {"re": val.value.real, "im": val.value.imag, "attained_error": val.attained_error}
    if name == "zeta":
        v = zeta_core.zeta(s)
        return {"re": v.real, "im": v.imag, "attained_error": 1e-12}
    if name == "theta":
        t = s.real
        v = theta_fn(t)
        return {"re": v, "im": 0.0, "attained_error": 1e-13}
    if name == "scattering-phi":
        v = eisenstein.scattering_phi(s)
        return {"re": v.real, "im": v.imag, "attained_error": 1e-11}
    if name == "eisenstein":
        z = a.z if a.z is not None else 1j
        v = eisenstein.eisenstein_fourier(z, s)
        return {"re": v.real, "im": v.imag, "attained_error": 1e-10}
    raise KeyError(name)


def _write_csv(rows, header: str, comment: str, out):
    print(comment, file=out)
    print(header, file=out)
    for row in rows:
        print(",".join(_fmt(v) for v in row), file=out)


def _fmt(v) -> str:
    if isinstance(v, complex):
        return f"{v.real!r}+{v.imag!r}i" if v.imag >= 0 else f"{v.real!r}{v.imag!r}i"
    if isinstance(v, float):
        return repr(v)
    return str(v)


def _table(kind: str, a, out) -> None:
    if kind == "tau":
        limit = a.max if a.max is not None else 100
        rows = mf.coefficient_rows(mf.delta_q_expansion(limit))
        rows = [(n, an, norm.real) for n, an, norm in rows]
        _write_csv(rows, "n,tau,tau_normalized",
                   "# tau(n): coefficient of q^n in q prod(1-q^m)^24; normalized by n^(11/2)", out)
    elif kind == "satotake-moments":
        X = a.X if a.X is not None else 10**5
        _, ap = langlands.delta_ap(X)
        moments, _, _ = langlands.sato_tate_report(ap, X, m_max=a.mmax if a.mmax else 8)
        _write_csv(moments, "m,empirical,target",
                   "# empirical: sum_{p<=X} a_p^m / pi(X); target: (1/2pi) int x^m sqrt(4-x^2) dx", out)
    elif kind == "histogram":
        X = a.X if a.X is not None else 10**5
        bins = a.bins if a.bins is not None else 40
        _, ap = langlands.delta_ap(X)
        _, hist, _ = langlands.sato_tate_report(ap, X, bins=bins)
        _write_csv([tuple(r) for r in hist], "bin_center,empirical_density,target_density",
                   "# theta_p histogram (a_p = 2 cos theta_p) vs density (2/pi) sin^2(theta)", out)
    elif kind == "eisenstein-grid":
        s = a.s if a.s is not None else 2.5 + 0j
        rows = []
        for x in np.linspace(-0.5, 0.5, 5):
            for y in (0.8, 1.0, 1.5, 2.0):
                z = complex(round(float(x), 6), y)
                v = eisenstein.eisenstein_fourier(z, s)
                rows.append((z.real, z.imag, s.real, s.imag, v.real, v.imag))
        _write_csv(rows, "x,y,s_re,s_im,E_re,E_im",
                   "# E(x+iy, s) by the K-Bessel Fourier expansion with constant term y^s + phi(s) y^(1-s)", out)
    elif kind == "three-squares":
        n = a.n if a.n is not None else 50
        rows = diophantine.three_squares_solutions(n)
        _write_csv(rows, "x,y,z", f"# integer solutions of x^2 + y^2 + z^2 = {n}", out)
    else:
        raise KeyError(kind)


# ---------------------------------------------------------------------------
# entry point
# ---------------------------------------------------------------------------

def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="lflab", description=__doc__,
                                     formatter_class=argparse.RawDescriptionHelpFormatter)
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p):
        p.add_argument("--tol", type=float, default=None, help="override the suite tolerance")
        p.add_argument("--tmax", type=float, default=None)
        p.add_argument("--terms", type=int, default=None)
        p.add_argument("--X", type=int, default=None)
        p.add_argument("--s", type=_parse_complex, default=None, help="complex point a+bi")
        p.add_argument("--z", type=_parse_complex, default=None, help="upper-half-plane point")
        p.add_argument("--seed", type=int, default=0)
        p.add_argument("--out", type=str, default=None)
        p.add_argument("--timings", action="store_true",
                       help="include wall-clock runtime_ms (breaks byte-reproducibility)")

    p_eval = sub.add_parser("eval", help="evaluate a single object")
    p_eval.add_argument("object", choices=["xi", "zeta", "theta", "scattering-phi", "eisenstein"])
    add_common(p_eval)

    p_verify = sub.add_parser("verify", help="run a named verification suite")
    p_verify.add_argument("suite", choices=sorted(SUITES) + ["all"])
    add_common(p_verify)
    p_verify.add_argument("--quick", action="store_true", help="reduced grids for smoke runs")

    p_table = sub.add_parser("table", help="emit a CSV table")
    p_table.add_argument("kind", choices=["tau", "satotake-moments", "histogram",
                                          "eisenstein-grid", "three-squares"])
    add_common(p_table)
    p_table.add_argument("--max", type=int, default=None)
    p_table.add_argument("--mmax", type=int, default=None)
    p_table.add_argument("--bins", type=int, default=None)
    p_table.add_argument("--n", type=int, default=None)
    return parser


def _run_suite(name: str, args) -> list[VerificationReport]:
    t0 = time.perf_counter()
    reports = SUITES[name](args)
    elapsed_ms = int((time.perf_counter() - t0) * 1000)
    for rep in reports:
        rep.runtime_ms = elapsed_ms if args.timings else 0
        if args.tol is not None:
            rep.tolerance = args.tol
            rep.passed = rep.max_abs_error <= args.tol
    return reports


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0

    out = open(args.out, "w") if getattr(args, "out", None) else sys.stdout
    try:
        if args.command == "eval":
            try:
                record = _eval_object(args.object, args)
            except Exception as exc:
                print(f"error: {exc}", file=sys.stderr)
                return 2
            print(json.dumps(record), file=out)
            return 0

        if args.command == "table":
            try:
                _table(args.kind, args, out)
            except Exception as exc:
                print(f"error: {exc}", file=sys.stderr)
                return 2
            return 0

        # verify
        if args.quick:
            args.tmax = args.tmax if args.tmax is not None else 8.0
            args.X = args.X if args.X is not None else 2000
            args.terms = args.terms if args.terms is not None else 20000
        names = list(SUITES) if args.suite == "all" else [args.suite]
        if args.suite == "all":
            # shared caches built once, before any suite (or thread) runs
            mf.tau_coefficients(max(90000, args.X or 10**5))
            _primes.primes()
        workers_env = os.environ.get("LFL_THREADS", "")
        workers = int(workers_env) if workers_env.isdigit() and int(workers_env) > 0 else 1
        all_pass = True
        if workers > 1 and len(names) > 1:
            with ThreadPoolExecutor(max_workers=workers) as pool:
                futures = [pool.submit(_run_suite, n, args) for n in names]
                results = [f.result() for f in futures]  # registration order
        else:
            results = [_run_suite(n, args) for n in names]
        for reports in results:
            for rep in reports:
                print(json.dumps(rep.to_json_dict()), file=out)
                all_pass = all_pass and rep.passed
        return 0 if all_pass else 1
    finally:
        if out is not sys.stdout:
            out.close()


if __name__ == "__main__":
    sys.exit(main())
