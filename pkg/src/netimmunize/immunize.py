"""Node selection: submodular surrogate score, incremental greedy, baselines.

The surrogate favors vertices carrying many closed 6-walks while penalizing
adjacent picks:

    score(S) = gamma * sum_{v in S} W(v)^2 - sum_{u,v in S} W(v) A(u,v) W(u)

The double sum runs over ordered pairs, so each adjacent pair counts twice.
score is monotone once gamma >= k * max W and submodular for any gamma > 0,
which is what buys the greedy its (1 - 1/e) guarantee.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable

import numpy as np

from .graph import Graph, as_node_set, remove_nodes
from .sketch import WalkEstimates, default_alpha, estimate_walks
from .spectral import EigendropReport, PowerIterConfig, eigendrop, lambda_max

# marginal_gain sentinel for already-selected candidates; cannot collide with a
# real gain (gains are finite, and can legitimately be negative under
# gamma_mode="max")
EXCLUDED = float("-inf")

GAMMA_MODES = ("k_times_max", "max", "explicit")


class InfeasibleError(RuntimeError):
    """Requested computation exceeds the method's practicality guard."""


def _weights(W) -> np.ndarray:
    if isinstance(W, WalkEstimates):
        return W.W
    return np.asarray(W, dtype=np.float64)


@dataclass(frozen=True)
class ScoreParams:
    """Resolved gamma plus the mode it came from."""

    gamma: float
    gamma_mode: str = "explicit"

    def __post_init__(self):
        if self.gamma_mode not in GAMMA_MODES:
            raise ValueError(f"unknown gamma_mode {self.gamma_mode!r}")
        if not self.gamma > 0:
            raise ValueError("gamma must be positive")

    @classmethod
    def resolve(cls, W, k: int, gamma_mode: str = "k_times_max",
                gamma: float | None = None) -> "ScoreParams":
        """gamma = k * max W (monotonicity condition), max W, or an explicit value.

        All-zero W (edgeless graph) would give gamma = 0; fall back to 1.0,
        which leaves every score at zero and selection to the index tie-break.
        """
        if gamma_mode == "explicit":
            if gamma is None:
                raise ValueError("explicit gamma_mode needs a gamma value")
            return cls(gamma=float(gamma), gamma_mode=gamma_mode)
        w = _weights(W)
        top = float(w.max()) if w.size else 0.0
        value = k * top if gamma_mode == "k_times_max" else top
        return cls(gamma=value if value > 0 else 1.0, gamma_mode=gamma_mode)


def score(g: Graph, W, s: Iterable[int], params: ScoreParams) -> float:
    """score(S) over ordered pairs; empty set scores 0."""
    s = as_node_set(g, s)
    w = _weights(W)
    in_s = np.zeros(g.n, dtype=bool)
    in_s[s] = True
    quad = float((w[s] * w[s]).sum())
    cross = 0.0
    for v in s:
        nb = g.neighbors(v)
        sel = nb[in_s[nb]]
        cross += float(w[v] * w[sel].sum())
    return params.gamma * quad - cross


@dataclass
class GreedyState:
    """Incremental scoring state: a_s[u] = sum_{v selected} A(u,v) W(v)."""

    g: Graph
    w: np.ndarray
    params: ScoreParams
    selected: list[int] = field(default_factory=list)
    selected_mask: np.ndarray = None  # type: ignore[assignment]
    a_s: np.ndarray = None  # type: ignore[assignment]
    w2: np.ndarray = None  # type: ignore[assignment]

    @classmethod
    def fresh(cls, g: Graph, W, params: ScoreParams) -> "GreedyState":
        w = _weights(W)
        return cls(g=g, w=w, params=params,
                   selected_mask=np.zeros(g.n, dtype=bool),
                   a_s=np.zeros(g.n, dtype=np.float64),
                   w2=params.gamma * w * w)

    def add(self, node: int) -> None:
        if self.selected_mask[node]:
            raise ValueError(f"node {node} already selected")
        self.selected.append(node)
        self.selected_mask[node] = True
        self.a_s[self.g.neighbors(node)] += self.w[node]

    def recompute_a_s(self) -> np.ndarray:
        """a_s from scratch, accumulated in selection order (bitwise-comparable)."""
        fresh = np.zeros(self.g.n, dtype=np.float64)
        for v in self.selected:
            fresh[self.g.neighbors(v)] += self.w[v]
        return fresh


def marginal_gain(state: GreedyState, candidate: int, W=None,
                  params: ScoreParams | None = None) -> float:
    """score(S + {j}) - score(S) = gamma W(j)^2 - 2 W(j) a_s(j).

    Returns EXCLUDED (-inf) for already-selected candidates.  W and params
    default to the state's own; passing them re-derives the gain explicitly.
    """
    w = state.w if W is None else _weights(W)
    gamma = state.params.gamma if params is None else params.gamma
    if state.selected_mask[candidate]:
        return EXCLUDED
    return float(gamma * w[candidate] * w[candidate] - 2.0 * w[candidate] * state.a_s[candidate])


@dataclass(frozen=True)
class StepRecord:
    node: int
    gain: float
    cumulative: float


@dataclass
class ImmunizationResult:
    method: str
    selected: list[int]
    selected_labels: list[int]
    per_step: list[StepRecord]
    spectra: EigendropReport | None
    timings: dict[str, float]
    walk_estimates: WalkEstimates | None = None
    params: ScoreParams | None = None


def _finish(g: Graph, method: str, picks: list[int], per_step: list[StepRecord],
            timings: dict[str, float], cfg: PowerIterConfig | None, evaluate: bool,
            W: WalkEstimates | None = None,
            params: ScoreParams | None = None) -> ImmunizationResult:
    spectra = None
    if evaluate:
        t0 = time.perf_counter()
        spectra = eigendrop(g, picks, cfg)
        timings["eval_s"] = time.perf_counter() - t0
    labels = [int(g.labels[v]) for v in picks]
    return ImmunizationResult(method=method, selected=list(picks), selected_labels=labels,
                              per_step=per_step, spectra=spectra, timings=timings,
                              walk_estimates=W, params=params)


def greedy_select(g: Graph, k: int, *, alpha: int | None = None, beta: int = 5,
                  base_seed: int = 0, gamma_mode: str = "k_times_max",
                  gamma: float | None = None, power_cfg: PowerIterConfig | None = None,
                  evaluate: bool = True) -> ImmunizationResult:
    """Estimate walks, then greedily take k argmax-marginal-gain nodes.

    a_s is updated incrementally (O(d(picked) + n) per round); ties go to the
    smallest node index.  The result records the marginal gain actually
    maximized at each step.
    """
    if not 1 <= k <= g.n:
        raise ValueError(f"k={k} out of range for n={g.n}")
    timings: dict[str, float] = {}
    t0 = time.perf_counter()
    W = estimate_walks(g, alpha if alpha is not None else default_alpha(g.n), beta, base_seed)
    timings["estimate_s"] = time.perf_counter() - t0

    t0 = time.perf_counter()
    params = ScoreParams.resolve(W, k, gamma_mode, gamma)
    state = GreedyState.fresh(g, W, params)
    per_step: list[StepRecord] = []
    cumulative = 0.0
    for _ in range(k):
        gains = state.w2 - 2.0 * state.a_s * state.w
        gains[state.selected_mask] = EXCLUDED
        j = int(np.argmax(gains))  # first hit wins: smallest index on ties
        cumulative += float(gains[j])
        per_step.append(StepRecord(node=j, gain=float(gains[j]), cumulative=cumulative))
        state.add(j)
    timings["select_s"] = time.perf_counter() - t0
    return _finish(g, "greedy-walk6", state.selected, per_step, timings,
                   power_cfg, evaluate, W=W, params=params)


def greedy1_baseline(g: Graph, k: int, cfg: PowerIterConfig | None = None, *,
                     max_cost: float = 2e8, evaluate: bool = True) -> ImmunizationResult:
    """Literal eigendrop greedy: each round removes the node minimizing the
    remaining spectral radius.  Exact but O(k n) eigensolves; guarded."""
    if not 1 <= k <= g.n:
        raise ValueError(f"k={k} out of range for n={g.n}")
    if k * g.n * (g.n + g.m) > max_cost:
        raise InfeasibleError(
            f"greedy1 cost guard tripped (k*n*(n+m) = {k * g.n * (g.n + g.m):.2g} > {max_cost:.2g})")
    timings: dict[str, float] = {}
    t0 = time.perf_counter()
    lam0 = lambda_max(g, cfg).lambda_max
    picks: list[int] = []
    per_step: list[StepRecord] = []
    current = lam0
    for _ in range(k):
        sub, kept = remove_nodes(g, picks)
        best_after = np.inf
        best_node = -1
        for sub_id, orig in enumerate(kept):  # ascending: strict < keeps smallest index
            trial, _ = remove_nodes(sub, [sub_id])
            lam = lambda_max(trial, cfg).lambda_max
            if lam < best_after:
                best_after = lam
                best_node = int(orig)
        picks.append(best_node)
        per_step.append(StepRecord(node=best_node, gain=current - best_after,
                                   cumulative=lam0 - best_after))
        current = best_after
    timings["select_s"] = time.perf_counter() - t0
    return _finish(g, "greedy1", picks, per_step, timings, cfg, evaluate)


def exhaustive_best_score(g: Graph, W, k: int, params: ScoreParams, *,
                          max_sets: int = 10**6) -> tuple[np.ndarray, float]:
    """True score maximizer by enumerating all C(n, k) subsets (guarded)."""
    if not 1 <= k <= g.n:
        raise ValueError(f"k={k} out of range for n={g.n}")
    total = math.comb(g.n, k)
    if total > max_sets:
        raise InfeasibleError(f"C({g.n},{k}) = {total} exceeds the enumeration guard {max_sets}")
    w = _weights(W)
    bitadj = [0] * g.n
    for v in range(g.n):
        for u in g.neighbors(v):
            bitadj[v] |= 1 << int(u)
    gamma = params.gamma
    best_set: tuple[int, ...] = ()
    best = -np.inf
    for combo in combinations(range(g.n), k):
        val = 0.0
        for i, u in enumerate(combo):
            val += gamma * w[u] * w[u]
            for v in combo[i + 1:]:
                if bitadj[u] >> v & 1:
                    val -= 2.0 * w[u] * w[v]
        if val > best:  # strict: lexicographically first optimum wins
            best = val
            best_set = combo
    return np.asarray(best_set, dtype=np.int64), float(best)


def baseline_select(g: Graph, k: int, method: str, *, seed: int = 0,
                    power_cfg: PowerIterConfig | None = None,
                    evaluate: bool = True) -> ImmunizationResult:
    """Comparator selectors: top-k by degree, or a uniform random k-set."""
    if not 1 <= k <= g.n:
        raise ValueError(f"k={k} out of range for n={g.n}")
    timings: dict[str, float] = {}
    t0 = time.perf_counter()
    if method == "degree":
        order = np.lexsort((np.arange(g.n), -g.degrees))
        picks = [int(v) for v in order[:k]]
        per_step = [StepRecord(node=v, gain=float(g.degrees[v]), cumulative=0.0)
                    for v in picks]
    elif method == "random":
        rng = np.random.default_rng(seed)
        picks = sorted(int(v) for v in rng.choice(g.n, size=k, replace=False))
        per_step = [StepRecord(node=v, gain=0.0, cumulative=0.0) for v in picks]
    else:
        raise ValueError(f"unknown baseline method {method!r}")
    timings["select_s"] = time.perf_counter() - t0
    return _finish(g, method, picks, per_step, timings, power_cfg, evaluate)
