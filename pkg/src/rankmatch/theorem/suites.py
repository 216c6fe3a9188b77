"""Randomised and exhaustive verification suites.

Every trial is a pure function of ``(params, seed, trial index)``: it draws
from its own SplitMix64 stream, so results do not depend on worker count.
"""

from __future__ import annotations

from collections.abc import Callable
from concurrent.futures import ProcessPoolExecutor
from functools import partial
from itertools import product
from math import prod

from ..errors import HypothesisViolation
from ..field import FieldSpec
from ..graph import LoopGraph, all_edges, enumerate_graphs, mu, nu, u_a, u_s
from ..matrix import Matrix, det, rank
from ..rng import trial_rng
from ..space import (
    DEFAULT_CAP,
    SPAN_CHECK_CAP,
    AffineSpace,
    ambient_dimension,
    canonicalize,
    double_symmetric,
    extremal,
    extremal_dimension,
    extremal_max_rank_member,
    extremal_region,
    leading_graph,
    max_rank_oracle,
    random_low_rank_space,
    random_space,
    restrict,
    serialize_space,
    span_violation,
    structural_rank_bound,
)
from .polymethod import (
    WitnessNotFound,
    coeff_check_pf,
    det_polynomial,
    pf_closed_form,
    pf_polynomial,
    witness_search_alt,
    witness_search_ws,
)
from .report import TrialOutcome, VerificationReport

SUITES = ("thm1", "thm2", "cor3", "thm4", "thm5", "erdos-gallai", "counterexamples")
PROP1_MAX_ORDER = 5
CLAIM_MAX_T = 4
PF_SQUARE_MAX_ORDER = 6
RANDOM_MEMBERS_CAP = 1 << 12
TIGHT_ORACLE_CAP = 1 << 16
EXHAUSTIVE_GRAPH_LIMIT = {False: 6, True: 5}


def counterexample_spaces(p: int = 2) -> tuple[AffineSpace, AffineSpace]:
    """The two small symmetric spaces where rho < mu over GF(2).

    (i)  {[[x, x], [x, 1]]},  (ii)  {[[x, x, 0], [x, 0, y], [0, y, y]]}.
    """
    spec = FieldSpec(p)
    one = AffineSpace(
        spec, 2,
        Matrix(spec, [[0, 0], [0, 1]]),
        (Matrix(spec, [[1, 1], [1, 0]]),),
        "symmetric",
    )
    two = AffineSpace(
        spec, 3,
        Matrix.zeros(spec, 3),
        (Matrix(spec, [[1, 1, 0], [1, 0, 0], [0, 0, 0]]),
         Matrix(spec, [[0, 0, 0], [0, 0, 1], [0, 1, 1]])),
        "symmetric",
    )
    return one, two


def _run(name: str, params: dict, trial: Callable[[int], TrialOutcome], trials: int,
         workers: int = 1) -> VerificationReport:
    report = VerificationReport(name, params)
    if workers > 1 and trials > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            outcomes = list(pool.map(trial, range(trials), chunksize=max(1, trials // (4 * workers))))
    else:
        outcomes = [trial(i) for i in range(trials)]
    for outcome in outcomes:
        report.add(outcome)
    return report


def _oracle_ok(S: AffineSpace, cap: int) -> bool:
    return S.size <= cap


# ---------------------------------------------------------------- weakly symmetric lower bound

def _thm1_trial(n: int, p: int, d: int, seed: int, cap: int, coeff_order: int, i: int) -> TrialOutcome:
    rng = trial_rng(seed, i)
    out = TrialOutcome()
    kinds = [k for k in ("symmetric", "disjoint_support_ws", "alternating") if d <= ambient_dimension(k, n)]
    kind = rng.choice(kinds)
    S = random_space(kind, n, d, p, rng, base="general")
    text = serialize_space(S)
    ck = partial(out.check, space_text=text, trial=i)
    if kind == "disjoint_support_ws" and S.size <= SPAN_CHECK_CAP:
        bad = span_violation(S)
        if bad is not None:
            out.skip("span_not_weakly_symmetric", space_text=text + "# offending member\n" + str(bad), trial=i)
            return out
    canon = canonicalize(S)
    G = leading_graph(canon)
    m = mu(G)
    ck("dim_equals_edges", len(G) == canon.d == d, expected=d, got=len(G))
    try:
        w = witness_search_ws(canon)
    except WitnessNotFound as exc:
        ck("witness_found", False, expected=f"rank >= {m}", got=str(exc))
        return out
    grid = prod(delta + 1 for delta in w.selection.deltas) if w.selection else 1
    ck("witness_found", w.search_size <= grid, expected=f"<= {grid} evaluations", got=w.search_size)
    ck("witness_rank_ge_mu", w.achieved_rank >= m, expected=f">= {m}", got=w.achieved_rank)
    if w.selection and w.selection.order <= coeff_order:
        R, rsel = restrict(canon, w.selection)
        f = det_polynomial(R, rsel)
        coeff = f.coefficient(rsel.deltas)
        ck("prop1_coefficient_nonzero", bool(coeff), expected="nonzero", got=coeff.value)
        ck("det_poly_matches_eval", f.evaluate(w.point) == det(R.member(w.point)),
           expected=det(R.member(w.point)).value, got=f.evaluate(w.point).value)
    if _oracle_ok(canon, cap):
        rho = max_rank_oracle(canon, cap)
        ck("oracle_rho_ge_mu", rho >= m, expected=f">= {m}", got=rho)
        ck("oracle_rho_ge_witness", rho >= w.achieved_rank, expected=f">= {w.achieved_rank}", got=rho)
    return out


def verify_thm1(n: int = 5, p: int = 3, d: int = 4, trials: int = 200, seed: int = 42,
                cap: int = DEFAULT_CAP, workers: int = 1,
                coeff_order: int = PROP1_MAX_ORDER) -> VerificationReport:
    """rho(S) >= mu(G_S) on random weakly symmetric translates over GF(p), p >= 3."""
    if p < 3:
        raise ValueError(f"thm1 needs |F| >= 3 (got p={p}); over GF(2) the bound fails, see counterexamples")
    FieldSpec(p)
    if d > ambient_dimension("symmetric", n):
        raise ValueError(f"d={d} exceeds dim H_{n} = {ambient_dimension('symmetric', n)}")
    params = {"n": n, "p": p, "d": d, "trials": trials, "seed": seed}
    return _run("thm1", params, partial(_thm1_trial, n, p, d, seed, cap, coeff_order), trials, workers)


# ---------------------------------------------------------------- alternating lower bound

def _thm2_trial(n: int, p: int, d: int, seed: int, cap: int, i: int) -> TrialOutcome:
    rng = trial_rng(seed, i)
    out = TrialOutcome()
    S = random_space("alternating", n, d, p, rng, base="kind")
    text = serialize_space(S)
    ck = partial(out.check, space_text=text, trial=i)
    canon = canonicalize(S)
    G = leading_graph(canon)
    m = mu(G)
    ck("dim_equals_edges", len(G) == canon.d == d, expected=d, got=len(G))
    ck("loopless", not G.has_loops and m == 2 * nu(G), expected=2 * nu(G), got=m)
    try:
        w = witness_search_alt(canon)
    except WitnessNotFound as exc:
        ck("witness_found", False, expected=f"rank >= {m}", got=str(exc))
        return out
    t = w.selection.t if w.selection else 0
    ck("witness_found", w.search_size <= 2**t, expected=f"<= {2 ** t} evaluations", got=w.search_size)
    ck("witness_in_01_grid", all(x in (0, 1) for x in w.point), expected="{0,1}^t", got=w.point)
    ck("witness_rank_ge_mu", w.achieved_rank >= m, expected=f">= {m}", got=w.achieved_rank)
    if w.selection and t <= CLAIM_MAX_T:
        R, rsel = restrict(canon, w.selection)
        coeff = coeff_check_pf(R, rsel)
        closed = pf_closed_form(R, rsel)
        ck("claim_coefficient_nonzero", bool(coeff), expected="nonzero", got=coeff.value)
        ck("claim_closed_form", coeff == closed, expected=closed.value, got=coeff.value)
        if R.n <= PF_SQUARE_MAX_ORDER:
            f = pf_polynomial(R, rsel)
            g = det_polynomial(R, rsel)
            fsq = f * f
            on_grid = all(fsq.evaluate(pt) == g.evaluate(pt) for pt in product(range(p), repeat=t))
            ck("pf_squared_equals_det_on_grid", on_grid, expected=str(g), got=str(fsq))
            # pf^2 = det already holds over the integers, so it survives reduction mod p
            ck("pf_squared_equals_det_poly", fsq == g, expected=str(g), got=str(fsq))
    if _oracle_ok(canon, cap):
        rho = max_rank_oracle(canon, cap)
        ck("oracle_rho_ge_mu", rho >= m, expected=f">= {m}", got=rho)
        ck("oracle_rho_ge_witness", rho >= w.achieved_rank, expected=f">= {w.achieved_rank}", got=rho)
    return out


def verify_thm2(n: int = 6, p: int = 2, d: int = 5, trials: int = 200, seed: int = 42,
                cap: int = DEFAULT_CAP, workers: int = 1) -> VerificationReport:
    """rho(S) >= mu(G_S) on random affine spaces of alternating matrices, any p."""
    FieldSpec(p)
    if d > ambient_dimension("alternating", n):
        raise ValueError(f"d={d} exceeds dim A_{n} = {ambient_dimension('alternating', n)}")
    params = {"n": n, "p": p, "d": d, "trials": trials, "seed": seed}
    return _run("thm2", params, partial(_thm2_trial, n, p, d, seed, cap), trials, workers)


# ---------------------------------------------------------------- GF(2) symmetric via doubling

def _cor3_trial(n: int, d: int, seed: int, cap: int, i: int) -> TrialOutcome:
    rng = trial_rng(seed, i)
    out = TrialOutcome()
    S = canonicalize(random_space("symmetric", n, d, 2, rng, base="kind"))
    text = serialize_space(S)
    ck = partial(out.check, space_text=text, trial=i)
    D = canonicalize(double_symmetric(S))
    G, GD = leading_graph(S), leading_graph(D)
    nu_s, nu_d, mu_d = nu(G), nu(GD), mu(GD)
    ck("doubled_loopless", not GD.has_loops, expected="no loops", got=GD)
    ck("mu_double_eq_2nu_double", mu_d == 2 * nu_d, expected=2 * nu_d, got=mu_d)
    # edges {i,j} -> {i,j+n} keep disjoint edges disjoint, so only >= is automatic;
    # the equality link is checked as stated and fails on some spaces
    ck("nu_double_ge_nu", nu_d >= nu_s, expected=f">= {nu_s}", got=nu_d)
    ck("nu_preserved", nu_d == nu_s, expected=nu_s, got=nu_d)
    w = witness_search_alt(D)
    ck("witness_rank_ge_mu", w.achieved_rank >= mu_d, expected=f">= {mu_d}", got=w.achieved_rank)
    if _oracle_ok(D, cap):
        rho_s, rho_d = max_rank_oracle(S, cap), max_rank_oracle(D, cap)
        ck("rho_double_eq_2rho", rho_d == 2 * rho_s, expected=2 * rho_s, got=rho_d)
        ck("rho_double_ge_mu_double", rho_d >= mu_d, expected=f">= {mu_d}", got=rho_d)
        ck("rho_ge_nu_double", rho_s >= nu_d, expected=f">= {nu_d}", got=rho_s)
        ck("rho_ge_nu", rho_s >= nu_s, expected=f">= {nu_s}", got=rho_s)
    return out


def verify_cor3(n: int = 4, d: int = 3, trials: int = 200, seed: int = 42,
                cap: int = DEFAULT_CAP, workers: int = 1) -> VerificationReport:
    """rho(S) >= nu(G_S) for affine symmetric spaces over GF(2), via the doubled space."""
    if d > ambient_dimension("symmetric", n):
        raise ValueError(f"d={d} exceeds dim H_{n} = {ambient_dimension('symmetric', n)}")
    params = {"n": n, "p": 2, "d": d, "trials": trials, "seed": seed}
    return _run("cor3", params, partial(_cor3_trial, n, d, seed, cap), trials, workers)


# ---------------------------------------------------------------- GF(2) counterexamples

def verify_counterexamples_f2() -> VerificationReport:
    report = VerificationReport("counterexamples", {"p": 2})
    for label, S, (mu_want, rho_want) in zip(("i", "ii"), counterexample_spaces(2), ((2, 1), (3, 2))):
        out = TrialOutcome()
        ck = partial(out.check, space_text=serialize_space(S), trial=label)
        G = leading_graph(S)
        m, v, rho = mu(G), nu(G), max_rank_oracle(S)
        ck("mu", m == mu_want, expected=mu_want, got=m)
        ck("rho", rho == rho_want, expected=rho_want, got=rho)
        ck("mu_exceeds_rho", m > rho, expected=f"> {rho}", got=m)
        ck("nu_equals_rho", v == rho, expected=rho, got=v)
        report.add(out)
    return report


# ---------------------------------------------------------------- dimension bounds

def _tightness(family: str, n: int, ks: list[int], p: int, cap: int) -> VerificationReport:
    spec = FieldSpec(p)
    kinds = ("u1a", "u2a") if family == "alternating" else ("u1s", "u2s")
    bound = u_a if family == "alternating" else u_s
    report = VerificationReport("tightness", {})
    for k in ks:
        dims = {}
        for kind in kinds:
            try:
                extremal_region(kind, n, k)
            except ValueError:
                continue
            out = TrialOutcome()
            U = extremal(kind, n, k, spec)
            ck = partial(out.check, space_text=serialize_space(U), trial=f"{kind}({n},{k})")
            want = extremal_dimension(kind, n, k)
            ck("extremal_dim", U.d == want, expected=want, got=U.d)
            dims[kind] = U.d
            M = extremal_max_rank_member(kind, n, k, spec)
            allowed = extremal_region(kind, n, k)
            ck("member_in_space", all(allowed(i, j) for i, j in M.support()), expected="in region", got=M)
            ck("member_rank_eq_k", rank(M) == k, expected=k, got=rank(M))
            ck("structural_bound_eq_k", structural_rank_bound(kind, n, k, U) == k, expected=k, got="bound")
            G = leading_graph(U)
            ck("graph_edges_eq_dim", len(G) == U.d, expected=U.d, got=len(G))
            ck("graph_mu_le_k", mu(G) <= k, expected=f"<= {k}", got=mu(G))
            if U.size <= min(cap, TIGHT_ORACLE_CAP):
                rho = max_rank_oracle(U, cap)
                ck("oracle_rho_eq_k", rho == k, expected=k, got=rho)
            report.add(out)
        if family == "alternating" and k >= n:
            continue
        out = TrialOutcome()
        top = max(dims.values())
        out.check("bound_attained", top == bound(n, k), expected=bound(n, k), got=top, trial=f"k={k}")
        report.add(out)
    return report


def _bound_trial(family: str, n: int, p: int, seed: int, cap: int, i: int) -> TrialOutcome:
    rng = trial_rng(seed, i)
    out = TrialOutcome()
    if rng.randbelow(4):
        S = random_low_rank_space(family, n, p, rng, RANDOM_MEMBERS_CAP)
    else:
        kind = "alternating" if family == "alternating" else rng.choice(("symmetric", "disjoint_support_ws"))
        top = ambient_dimension(kind, n)
        while top and p**top > RANDOM_MEMBERS_CAP:
            top -= 1
        S = canonicalize(random_space(kind, n, rng.randint(0, top), p, rng))
    text = serialize_space(S)
    ck = partial(out.check, space_text=text, trial=i)
    G = leading_graph(S)
    rho = max_rank_oracle(S, cap)
    ck("dim_equals_edges", len(G) == S.d, expected=S.d, got=len(G))
    ck("mu_le_rho", mu(G) <= rho, expected=f"<= {rho}", got=mu(G))
    if family == "alternating":
        if rho < n:
            ck("dim_le_u_a", S.d <= u_a(n, rho), expected=f"<= {u_a(n, rho)}", got=S.d)
    else:
        ck("dim_le_u_s", S.d <= u_s(n, rho), expected=f"<= {u_s(n, rho)}", got=S.d)
    return out


def _verify_bounds(name: str, family: str, n: int, k: int | None, p: int, trials: int, seed: int,
                   cap: int, workers: int) -> VerificationReport:
    if family == "alternating":
        ks = [k] if k is not None else list(range(0, n + 1, 2))
        if k is not None and k % 2:
            raise ValueError(f"{name} needs even k, got {k}")
    else:
        ks = [k] if k is not None else list(range(n + 1))
    if k is not None and not 0 <= k <= n:
        raise ValueError(f"need 0 <= k <= n, got n={n}, k={k}")
    params = {"n": n, "k": "all" if k is None else k, "p": p, "trials": trials, "seed": seed}
    report = _run(name, params, partial(_bound_trial, family, n, p, seed, cap), trials, workers)
    report.merge(_tightness(family, n, ks, p, cap))
    return report


def verify_thm4(n: int = 5, k: int | None = None, p: int = 2, trials: int = 200, seed: int = 42,
                cap: int = DEFAULT_CAP, workers: int = 1) -> VerificationReport:
    """Affine alternating spaces with rho = k < n have dim <= u_a(n, k); U_1, U_2 are tight."""
    FieldSpec(p)
    return _verify_bounds("thm4", "alternating", n, k, p, trials, seed, cap, workers)


def verify_thm5(n: int = 4, k: int | None = None, p: int = 3, trials: int = 200, seed: int = 42,
                cap: int = DEFAULT_CAP, workers: int = 1) -> VerificationReport:
    """Weakly symmetric translates with rho = k have dim <= u_s(n, k) when p >= 3."""
    if p < 3:
        raise ValueError(f"thm5 needs |F| >= 3 (got p={p})")
    FieldSpec(p)
    return _verify_bounds("thm5", "symmetric", n, k, p, trials, seed, cap, workers)


# ---------------------------------------------------------------- Erdos-Gallai

def _sample_graphs(n: int, loops: bool, trials: int, seed: int):
    universe = all_edges(n, loops)
    for i in range(trials):
        rng = trial_rng(seed, i)
        density = rng.randint(0, 100)
        yield LoopGraph(n, [e for e in universe if rng.randbelow(100) < density])


def verify_erdos_gallai(n: int = 6, loops: bool = False, trials: int = 200,
                        seed: int = 42) -> VerificationReport:
    """Edge-count bounds for graphs (with or without loops) of bounded mu.

    Exhaustive up to the enumeration limit, sampled above it; tightness is
    checked against the exhaustive maxima and, always, against the leading
    graphs of the extremal spaces.
    """
    exhaustive = n <= EXHAUSTIVE_GRAPH_LIMIT[loops]
    params = {"n": n, "loops": loops, "mode": "exhaustive" if exhaustive else "sampled"}
    if not exhaustive:
        params.update(trials=trials, seed=seed)
    report = VerificationReport("erdos-gallai-loops" if loops else "erdos-gallai", params)
    graphs = enumerate_graphs(n, loops) if exhaustive else _sample_graphs(n, loops, trials, seed)
    best: dict[int, int] = {}
    for G in graphs:
        out = TrialOutcome()
        k = mu(G)
        best[k] = max(best.get(k, 0), len(G))
        if loops:
            out.check("edges_le_u_s", len(G) <= u_s(n, k), expected=f"<= {u_s(n, k)}", got=len(G),
                      trial=str(G))
        elif k < n:
            out.check("edges_le_u_a", len(G) <= u_a(n, k), expected=f"<= {u_a(n, k)}", got=len(G),
                      trial=str(G))
        report.add(out)
    feasible = range(n + 1) if loops else range(0, n, 2)
    kinds = ("u1s", "u2s") if loops else ("u1a", "u2a")
    bound = u_s if loops else u_a
    for k in feasible:
        out = TrialOutcome()
        if exhaustive:
            out.check("tight_exhaustive", best.get(k) == bound(n, k), expected=bound(n, k),
                      got=best.get(k), trial=f"k={k}")
        graphs = []
        for kind in kinds:
            try:
                graphs.append(leading_graph(extremal(kind, n, k)))
            except ValueError:
                pass
        top = max(graphs, key=len)
        out.check("tight_extremal_graph", mu(top) == k and len(top) == bound(n, k),
                  expected=f"mu={k} edges={bound(n, k)}", got=f"mu={mu(top)} edges={len(top)}",
                  trial=f"k={k}")
        report.add(out)
    return report


# ---------------------------------------------------------------- all

def verify_all(trials: int = 200, seed: int = 42, cap: int = DEFAULT_CAP,
               workers: int = 1) -> list[VerificationReport]:
    """Every suite at its default parameters."""
    return [
        verify_counterexamples_f2(),
        verify_thm1(trials=trials, seed=seed, cap=cap, workers=workers),
        verify_thm2(trials=trials, seed=seed, cap=cap, workers=workers),
        verify_cor3(trials=trials, seed=seed, cap=cap, workers=workers),
        verify_thm4(trials=trials, seed=seed, cap=cap, workers=workers),
        verify_thm5(trials=trials, seed=seed, cap=cap, workers=workers),
        verify_erdos_gallai(6, loops=False),
        verify_erdos_gallai(5, loops=True),
    ]


def hypothesis_guard(S: AffineSpace) -> None:
    """Raise HypothesisViolation if a weakly symmetric span leaves W_n (checked up to the cap)."""
    if S.kind == "weakly_symmetric" and S.size <= SPAN_CHECK_CAP:
        bad = span_violation(S)
        if bad is not None:
            raise HypothesisViolation("span contains a member that is not weakly symmetric", member=bad)


__all__ = [
    "SUITES", "counterexample_spaces", "verify_thm1", "verify_thm2", "verify_cor3",
    "verify_counterexamples_f2", "verify_thm4", "verify_thm5", "verify_erdos_gallai",
    "verify_all", "hypothesis_guard",
]
