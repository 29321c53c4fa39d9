"""The assembly loop: exactly e hyperedges on few vertices via repeated
find-candidate / unpack / remove / recurse, with a greedy base case.

Paper mode uses the literal thresholds (which at desk scale collapse every
run to the base case); practical mode takes small configurable thresholds so
the recursive machinery is actually exercised.
"""

from __future__ import annotations

from dataclasses import dataclass

from .auxgraph import build_aux, simple_subgraph
from .core import Configuration, TripartiteLinearSystem, verify_configuration
from .degsearch import find_dense_2deg
from .errors import ExhaustionError, ParameterError
from .unpack import unpack


def paper_constant_d(t, k0):
    """The deficiency constant max{24*k0, 3(4t + 10^4 t^3)}."""
    if t < 1 or k0 < 1:
        raise ParameterError("t and k0 must be positive")
    return max(24 * k0, 3 * (4 * t + 10**4 * t**3))


@dataclass(frozen=True)
class DriverParams:
    t: int = 4
    k0: int = 1
    tau_max: int = 4
    base_e: int = 4
    paper_mode: bool = False
    seed: int = 0
    budget_ms: int = None
    strategy: str = "peel"

    def __post_init__(self):
        if self.tau_max < 0:
            raise ParameterError("tau_max must be non-negative")
        if self.base_e < 1:
            raise ParameterError("base_e must be positive")

    @property
    def base_threshold(self):
        if self.paper_mode:
            return max(8 * self.k0, 4 * self.t + 10**4 * self.t**3)
        return self.base_e


@dataclass(frozen=True)
class FrameReport:
    e_prime: int
    branch: str  # base | top_up | recurse
    flagged: bool
    residual_edges: int
    k: int = 0
    f_edges: int = 0
    achieved_t: int = 0
    unpack_v: int = 0
    unpack_e: int = 0
    note: str = ""

    def to_json_dict(self):
        return {
            "e_prime": self.e_prime,
            "branch": self.branch,
            "flagged": self.flagged,
            "residual_edges": self.residual_edges,
            "k": self.k,
            "f_edges": self.f_edges,
            "achieved_t": self.achieved_t,
            "unpack_v": self.unpack_v,
            "unpack_e": self.unpack_e,
            "note": self.note,
        }


@dataclass(frozen=True)
class DriverReport:
    e: int
    configuration: Configuration
    d_achieved: int
    d_paper: int
    frames: tuple
    any_flagged: bool

    @property
    def span(self):
        return self.configuration.v

    def to_json_dict(self):
        return {
            "e": self.e,
            "span": self.span,
            "d_achieved": self.d_achieved,
            "d_paper": self.d_paper,
            "edges": [list(x) for x in self.configuration.edges],
            "frames": [f.to_json_dict() for f in self.frames],
            "any_flagged": self.any_flagged,
        }


def _greedy_pick(available, count, span, edge_keys):
    """Pick `count` edges, each maximizing overlap with the running span;
    ties go to the lexicographically smallest edge."""
    if len(available) < count:
        raise ExhaustionError(count, len(available))
    chosen = []
    span = set(span)
    pool = sorted(available)
    for _ in range(count):
        best = None
        best_ov = -1
        for x in pool:
            ov = sum(1 for key in edge_keys(x) if key in span)
            if ov > best_ov:
                best_ov = ov
                best = x
        chosen.append(best)
        pool.remove(best)
        span.update(edge_keys(best))
    return chosen


def find_be_s_configuration(lts, e, params=None):
    """Produce exactly e hyperedges of lts with small span; see module docstring."""
    if params is None:
        params = DriverParams()
    if e < 1:
        raise ParameterError("e must be positive")
    if lts.m < e:
        raise ExhaustionError(e, lts.m)

    residual = list(lts.edges)
    chosen = []
    frames = []
    e_prime = e
    frame_idx = 0

    def base_frame(count, flagged, note=""):
        span = {key for x in chosen for key in lts.edge_keys(x)}
        avail = [x for x in residual if x not in set(chosen)]
        try:
            picked = _greedy_pick(avail, count, span, lts.edge_keys)
        except ExhaustionError as err:
            err.partial = _report(flag_extra=True)
            raise
        chosen.extend(picked)
        frames.append(
            FrameReport(count, "base", flagged, len(avail), note=note)
        )

    def _report(flag_extra=False):
        cfg = Configuration.from_edges(lts, chosen)
        flagged_any = flag_extra or any(f.flagged for f in frames)
        return DriverReport(
            e=e,
            configuration=cfg,
            d_achieved=cfg.v - cfg.e,
            d_paper=paper_constant_d(params.t, params.k0),
            frames=tuple(frames),
            any_flagged=flagged_any,
        )

    while e_prime > 0:
        if e_prime <= params.base_threshold:
            base_frame(e_prime, flagged=False)
            e_prime = 0
            break
        k = e_prime // 4
        if k < max(2, params.k0):
            base_frame(e_prime, flagged=True, note="k below minimum; base fallback")
            e_prime = 0
            break
        sub = TripartiteLinearSystem(lts.sizes, tuple(residual))
        aux = build_aux(sub)
        simple = simple_subgraph(aux)
        if simple.graph.n < k or simple.graph.m == 0:
            base_frame(e_prime, flagged=True, note="pair graph too small; base fallback")
            e_prime = 0
            break
        result = find_dense_2deg(
            simple.graph,
            k,
            params.t,
            strategy=params.strategy,
            seed=params.seed + frame_idx,
            budget_ms=params.budget_ms,
        )
        cand = result.candidate
        cfg, trace = unpack(cand, aux, sub, simple=simple)
        fe = trace.e_total
        flagged = not result.success
        if e_prime - fe <= params.tau_max:
            chosen.extend(cfg.edges)
            frames.append(
                FrameReport(
                    e_prime, "top_up", flagged, len(residual),
                    k=k, f_edges=len(cand.edges), achieved_t=cand.achieved_t,
                    unpack_v=trace.v_total, unpack_e=fe,
                )
            )
            remaining = e_prime - fe
            if remaining > 0:
                span = {key for x in chosen for key in lts.edge_keys(x)}
                avail = [x for x in residual if x not in set(chosen)]
                picked = _greedy_pick(avail, remaining, span, lts.edge_keys)
                chosen.extend(picked)
            e_prime = 0
            break
        if fe >= trace.v_total and fe > 0:
            chosen.extend(cfg.edges)
            cfg_set = set(cfg.edges)
            residual = [x for x in residual if x not in cfg_set]
            frames.append(
                FrameReport(
                    e_prime, "recurse", flagged, len(residual),
                    k=k, f_edges=len(cand.edges), achieved_t=cand.achieved_t,
                    unpack_v=trace.v_total, unpack_e=fe,
                )
            )
            e_prime -= fe
            frame_idx += 1
            continue
        base_frame(
            e_prime, flagged=True, note="candidate neither dense nor self-sustaining"
        )
        e_prime = 0
        break

    report = _report()
    assert report.configuration.e == e
    assert verify_configuration(lts, report.configuration, report.configuration.v, e)
    return report
