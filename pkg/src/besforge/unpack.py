"""Unpack a 2-degenerate pair-graph candidate into a hyperedge configuration.

Processing the candidate's vertices in certificate order, each step adds the
pair's two part elements and, per new candidate edge, the annotated apex and
its two hyperedges. Every step is recorded, classified and checked against
the per-step accounting rules, which are theorems for well-formed inputs.
"""

from __future__ import annotations

from dataclasses import dataclass

from .auxgraph import simple_subgraph
from .core import Configuration
from .errors import AuditError, IntegrityError
from .graphs import canon_edge

CLASS_SINGULAR = "singular"
CLASS_ZERO = "zero_step"
CLASS_FOUR = "four_step"
CLASS_GOOD = "good_regular"


@dataclass(frozen=True)
class StepRecord:
    i: int  # 1-based step index
    vertex: tuple  # the pair-vertex added
    side: str
    d: int  # back-degree (0, 1 or 2)
    cls: str
    delta_e: int
    delta_v: int
    apexes: tuple  # apexes of the step's annotations (<= 2)
    involved: tuple  # all hyperedges playing a role, new or not (<= 4)
    new_edges: tuple
    new_vertices: tuple

    @property
    def is_regular(self):
        return self.d == 2

    @property
    def is_good(self):
        """Good in the aggregate-counting sense: good regular or singular."""
        return self.cls in (CLASS_GOOD, CLASS_SINGULAR)

    def to_json_dict(self):
        return {
            "i": self.i,
            "vertex": list(self.vertex[1:]),
            "side": self.side,
            "d": self.d,
            "class": self.cls,
            "dE": self.delta_e,
            "dV": self.delta_v,
            "apexes": list(self.apexes),
            "new_edges": [list(e) for e in self.new_edges],
            "new_vertices": [list(v) for v in self.new_vertices],
        }


@dataclass(frozen=True)
class UnpackTrace:
    steps: tuple
    configuration: Configuration
    v_total: int  # includes pair elements of isolated candidate vertices
    e_total: int

    def class_counts(self):
        counts = {CLASS_SINGULAR: 0, CLASS_ZERO: 0, CLASS_FOUR: 0, CLASS_GOOD: 0}
        for s in self.steps:
            counts[s.cls] += 1
        return counts

    def running_difference(self):
        """The series |E_i| - |V_i| after each step."""
        series = []
        e = v = 0
        for s in self.steps:
            e += s.delta_e
            v += s.delta_v
            series.append(e - v)
        return series


@dataclass(frozen=True)
class LemmaBoundsReport:
    k: int
    t: int
    v_count: int
    e_count: int
    assertion1_ok: bool
    assertion2_branch: str  # near_4k | self_sustaining | violated | empty
    s_threshold: int  # 6t(12t+2)^2
    singular_count: int
    good_count: int
    zero_count: int
    four_count: int
    within_hypotheses: bool


@dataclass(frozen=True)
class InvolvementAudit:
    apex_steps: dict  # apex -> tuple of step indices involving it
    pair_steps: dict  # frozenset{h1, h2} -> tuple of step indices
    zero_apexes: frozenset  # Z: apexes involved in 0-steps
    zero_apex_bound: int  # the 12t threshold
    zero_apex_within_bound: bool
    apex_first_new: dict  # apex -> (j0, tuple J) over steps adding a hyperedge at the apex


def _classify(d, delta_e, delta_v):
    if d <= 1:
        return CLASS_SINGULAR
    if delta_e == 0:
        return CLASS_ZERO
    if delta_e == 4 and delta_v == 4:
        return CLASS_FOUR
    return CLASS_GOOD


def _check_step_laws(rec):
    if not 0 <= rec.delta_e <= 2 * rec.d <= 4:
        raise IntegrityError(f"step {rec.i}: dE={rec.delta_e} out of range for d={rec.d}")
    if rec.is_regular:
        cap = {4: 4, 3: 2, 2: 1, 1: 0, 0: 0}[rec.delta_e]
        if rec.delta_v > cap:
            raise IntegrityError(
                f"step {rec.i}: regular with dE={rec.delta_e} but dV={rec.delta_v} > {cap}"
            )
        if len(set(rec.apexes)) != 2:
            raise IntegrityError(f"step {rec.i}: regular step must involve two distinct apexes")
    else:
        if rec.delta_e < rec.delta_v - 2:
            raise IntegrityError(
                f"step {rec.i}: singular with dE={rec.delta_e} < dV-2={rec.delta_v - 2}"
            )


def unpack(candidate, aux, host, simple=None):
    """Run the unpacking process and return (Configuration, UnpackTrace)."""
    if simple is None:
        simple = simple_subgraph(aux)
    annot = simple.annot
    host_edges = set(host.edges)

    pos = {v: i for i, v in enumerate(candidate.vertices)}
    by_later = {v: [] for v in candidate.vertices}
    for u, w in candidate.edges:
        later = max(u, w, key=pos.get)
        by_later[later].append(canon_edge(u, w))

    span_keys = set()
    hyperedges = set()
    steps = []
    for i, v in enumerate(candidate.vertices, start=1):
        anns = []
        for fe in by_later[v]:
            ann = annot.get(fe)
            if ann is None:
                raise IntegrityError(f"candidate edge {fe} has no pair-graph annotation")
            for h in ann.hyperedges():
                if h not in host_edges:
                    raise IntegrityError(f"hyperedge {h} absent from the host system")
            anns.append(ann)
        anns.sort(key=lambda a: a.apex)

        side = v[0]
        new_vertices = []
        for key in ((side, v[1]), (side, v[2])):
            if key not in span_keys:
                span_keys.add(key)
                new_vertices.append(key)
        new_edges = []
        involved = []
        apexes = []
        for ann in anns:
            apexes.append(ann.apex)
            for h in ann.hyperedges():
                involved.append(h)
                if h not in hyperedges:
                    hyperedges.add(h)
                    new_edges.append(h)
            ckey = ("C", ann.apex)
            if ckey not in span_keys:
                span_keys.add(ckey)
                new_vertices.append(ckey)

        rec = StepRecord(
            i=i,
            vertex=v,
            side=side,
            d=len(anns),
            cls=_classify(len(anns), len(new_edges), len(new_vertices)),
            delta_e=len(new_edges),
            delta_v=len(new_vertices),
            apexes=tuple(apexes),
            involved=tuple(involved),
            new_edges=tuple(new_edges),
            new_vertices=tuple(new_vertices),
        )
        _check_step_laws(rec)
        steps.append(rec)

    cfg = Configuration.from_edges(host, sorted(hyperedges))
    return cfg, UnpackTrace(tuple(steps), cfg, len(span_keys), len(hyperedges))


def check_lemma_bounds(trace, k, t):
    """Evaluate the two lemma assertions literally on a trace.

    The guarantee assumes k >= t >= 4; smaller parameters are still processed
    but flagged as outside the hypotheses.
    """
    counts = trace.class_counts()
    v_count = trace.v_total
    e_count = trace.e_total
    s_threshold = 6 * t * (12 * t + 2) ** 2
    within = t >= 4 and k >= t
    if k == 0:
        return LemmaBoundsReport(
            k, t, v_count, e_count, True, "empty", s_threshold,
            counts[CLASS_SINGULAR],
            counts[CLASS_GOOD] + counts[CLASS_SINGULAR],
            counts[CLASS_ZERO], counts[CLASS_FOUR], within,
        )
    assertion1 = v_count - 4 * t <= e_count <= 4 * k
    if e_count >= 4 * k - 10**4 * t**3:
        branch = "near_4k"
    elif e_count >= v_count > 0:
        branch = "self_sustaining"
    else:
        branch = "violated"
    return LemmaBoundsReport(
        k, t, v_count, e_count, assertion1, branch, s_threshold,
        counts[CLASS_SINGULAR],
        counts[CLASS_GOOD] + counts[CLASS_SINGULAR],
        counts[CLASS_ZERO], counts[CLASS_FOUR], within,
    )


def audit_involvement(trace):
    """Verify the involvement theorems and compile the apex bookkeeping.

    (i) no apex-sharing hyperedge pair is involved in two steps;
    (ii) every 0-step apex was involved in an earlier good (good-regular or
    singular) step. Violations raise AuditError naming the steps.
    """
    apex_steps = {}
    pair_steps = {}
    apex_first_new = {}
    step_by_index = {s.i: s for s in trace.steps}
    for s in trace.steps:
        for apex in set(s.apexes):
            apex_steps.setdefault(apex, []).append(s.i)
        seen_pairs = set()
        for j in range(0, len(s.involved), 2):
            pair = frozenset(s.involved[j : j + 2])
            if pair in seen_pairs:
                continue
            seen_pairs.add(pair)
            pair_steps.setdefault(pair, []).append(s.i)
        for h in s.new_edges:
            apex = h[2]
            apex_first_new.setdefault(apex, []).append(s.i)

    for pair, where in pair_steps.items():
        if len(where) > 1:
            raise AuditError(
                f"hyperedge pair {tuple(sorted(pair))} involved in steps {where}", where
            )

    t = 2 * len(trace.steps) - sum(s.d for s in trace.steps)
    zero_apexes = set()
    for s in trace.steps:
        if s.cls != CLASS_ZERO:
            continue
        zero_apexes.update(s.apexes)
        for apex in set(s.apexes):
            earlier_good = [
                j
                for j in apex_steps[apex]
                if j < s.i and step_by_index[j].is_good
            ]
            if not earlier_good:
                raise AuditError(
                    f"0-step {s.i} involves apex {apex} with no preceding good step",
                    (s.i,),
                )

    bound = 12 * t
    first_new = {
        apex: (min(js), tuple(sorted(set(js)))) for apex, js in apex_first_new.items()
    }
    return InvolvementAudit(
        apex_steps={a: tuple(js) for a, js in apex_steps.items()},
        pair_steps={p: tuple(js) for p, js in pair_steps.items()},
        zero_apexes=frozenset(zero_apexes),
        zero_apex_bound=bound,
        zero_apex_within_bound=len(zero_apexes) <= bound,
        apex_first_new=first_new,
    )
