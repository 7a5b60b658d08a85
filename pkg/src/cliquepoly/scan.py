"""Batch scans over graph families with resumable checkpoints.

A scan walks a deterministic population, analyses every graph and keeps
aggregate counts plus the full report of each graph that violates the
scanned claim. Checkpoints hold the stream cursor and the aggregates, so a
resumed scan writes the same bytes as an uninterrupted one. Wall-clock
time is therefore kept out of the report file.
"""

from __future__ import annotations

import json
import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from pathlib import Path
from typing import Iterator

from .analyze import ConsistencyError, GraphReport, analyze_graph
from .gen import GeneratorConfig, SplitMix64, derive_seed, exhaustive_catalog, generate_chordal_pasting, generate_k_tree
from .graph import Graph

CONJECTURES = ("theorem1_k4", "c1_three_trees", "c2_k5_free_mult2")
SCHEMA_ID = "cliquepoly.scan_report/1"

CLAIMS = {
    "theorem1_k4": "connected K4-free chordal graphs are real-rooted with a root at -1",
    "c1_three_trees": "3-trees are real-rooted",
    "c2_k5_free_mult2": "connected K5-free chordal graphs with -1 of multiplicity 2 are real-rooted",
}

DEFAULT_SIZES = {
    "theorem1_k4": (1, 7),
    "c1_three_trees": (4, 12),
    "c2_k5_free_mult2": (2, 16),
}


# give up on a filtered population after this many draws per requested graph
SPARSE_LIMIT = 200


class ScanError(ValueError):
    """Bad scan configuration or unusable checkpoint/output path."""


@dataclass
class ScanConfig:
    conjecture: str
    n_min: int | None = None
    n_max: int | None = None
    count: int = 500
    seed: int = 0
    catalog: str | None = None
    max_summands: int = 8

    def __post_init__(self) -> None:
        if self.conjecture not in CONJECTURES:
            raise ScanError(f"unknown conjecture id {self.conjecture!r}; choose from {', '.join(CONJECTURES)}")
        lo, hi = DEFAULT_SIZES[self.conjecture]
        if self.n_min is None:
            self.n_min = lo
        if self.n_max is None:
            self.n_max = hi
        if self.n_min > self.n_max:
            raise ScanError("n_min > n_max")
        if self.conjecture == "c1_three_trees" and self.n_min < 4:
            raise ScanError("3-trees have at least 4 vertices")
        if self.conjecture == "c2_k5_free_mult2" and self.n_max < 2:
            raise ScanError("multiplicity 2 needs at least 2 vertices")
        if self.count < 0:
            raise ScanError("count must be non-negative")

    def to_json(self) -> dict:
        d = asdict(self)
        if self.conjecture == "theorem1_k4":
            # exhaustive: seed and count play no part
            d.pop("seed")
            d.pop("count")
            d.pop("max_summands")
        elif self.conjecture == "c1_three_trees":
            d.pop("catalog")
            d.pop("max_summands")
        else:
            d.pop("catalog")
        return {k: (v if v is None or isinstance(v, str) else str(v)) for k, v in d.items()}


def population(cfg: ScanConfig, start: int = 0) -> Iterator[tuple[int, str, Graph]]:
    """Yield (cursor, graph_id, graph); resuming at ``start`` skips earlier cursors."""
    if cfg.conjecture == "theorem1_k4":
        cursor = 0
        for n in range(cfg.n_min, cfg.n_max + 1):
            for i, g in enumerate(exhaustive_catalog(n, ["connected", "chordal", "k4_free"], cfg.catalog)):
                if cursor >= start:
                    yield cursor, f"n{n}-{i}", g
                cursor += 1
    elif cfg.conjecture == "c1_three_trees":
        for i in range(start, cfg.count):
            s = derive_seed(cfg.seed, i)
            n = cfg.n_min + SplitMix64(s).below(cfg.n_max - cfg.n_min + 1)
            yield i, f"3tree-{i}", generate_k_tree(3, n, s)
    else:
        attempt = start
        while True:
            s = derive_seed(cfg.seed, attempt)
            rng = SplitMix64(s)
            gc = GeneratorConfig(
                family="chordal_pasting",
                summands=1 + rng.below(cfg.max_summands),
                max_summand_size=4,
                min_separator=2,
                clique_cap=5,
                max_vertices=cfg.n_max,
                seed=rng.next_u64(),
            )
            g, _ = generate_chordal_pasting(gc)
            yield attempt, f"paste-{attempt}", g
            attempt += 1


def in_population(cfg: ScanConfig, rep: GraphReport) -> bool:
    if cfg.conjecture == "c2_k5_free_mult2":
        return (rep.connected and rep.chordal and rep.k5_free and cfg.n_min <= rep.n <= cfg.n_max
                and rep.root_analysis.multiplicity_at_minus_one == 2)
    return True


def violates(cfg: ScanConfig, rep: GraphReport) -> bool:
    if cfg.conjecture == "theorem1_k4":
        return rep.theorem1_consistent is not True
    return not rep.root_analysis.is_real_rooted


def _check_shape(cfg: ScanConfig, rep: GraphReport) -> None:
    if cfg.conjecture == "c1_three_trees":
        if not (rep.chordal and rep.omega == 4 and rep.m == 3 * rep.n - 6):
            raise ConsistencyError(f"{rep.graph_id}: generated graph is not a 3-tree")


@dataclass
class ScanState:
    cursor: int = 0  # next stream position to read
    processed: int = 0
    real_rooted: int = 0
    not_real_rooted: int = 0
    mult_hist: dict[int, int] = field(default_factory=dict)
    counterexamples: list[dict] = field(default_factory=list)

    def add(self, cfg: ScanConfig, rep: GraphReport) -> None:
        self.processed += 1
        if rep.root_analysis.is_real_rooted:
            self.real_rooted += 1
        else:
            self.not_real_rooted += 1
        k = rep.root_analysis.multiplicity_at_minus_one
        self.mult_hist[k] = self.mult_hist.get(k, 0) + 1
        if violates(cfg, rep):
            self.counterexamples.append({"graph6": rep.graph6, "report": rep.to_json()})

    def to_json(self) -> dict:
        return {
            "cursor": str(self.cursor),
            "processed": str(self.processed),
            "real_rooted": str(self.real_rooted),
            "not_real_rooted": str(self.not_real_rooted),
            "mult_hist": {str(k): str(v) for k, v in sorted(self.mult_hist.items())},
            "counterexamples": self.counterexamples,
        }

    @classmethod
    def from_json(cls, d: dict) -> ScanState:
        return cls(
            cursor=int(d["cursor"]),
            processed=int(d["processed"]),
            real_rooted=int(d["real_rooted"]),
            not_real_rooted=int(d["not_real_rooted"]),
            mult_hist={int(k): int(v) for k, v in d["mult_hist"].items()},
            counterexamples=list(d["counterexamples"]),
        )


@dataclass
class ScanReport:
    config: ScanConfig
    state: ScanState
    elapsed: float = 0.0

    @property
    def total_graphs(self) -> int:
        return self.state.processed

    @property
    def counterexamples(self) -> list[dict]:
        return self.state.counterexamples

    def to_json(self) -> dict:
        s = self.state
        return {
            "schema": SCHEMA_ID,
            "config": self.config.to_json(),
            "claim": CLAIMS[self.config.conjecture],
            "total_graphs": str(s.processed),
            "counts": {
                "real_rooted": str(s.real_rooted),
                "not_real_rooted": str(s.not_real_rooted),
                "mult_at_minus_one": {str(k): str(v) for k, v in sorted(s.mult_hist.items())},
            },
            "counterexamples": s.counterexamples,
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=2, sort_keys=True) + "\n"


def _atomic_write(path: Path, text: str) -> None:
    tmp = path.with_name(path.name + ".tmp")
    tmp.write_text(text, encoding="utf-8")
    os.replace(tmp, path)


def _load_checkpoint(path: Path, cfg: ScanConfig) -> ScanState | None:
    if not path.exists():
        return None
    try:
        data = json.loads(path.read_text(encoding="utf-8"))
    except (OSError, json.JSONDecodeError) as exc:
        raise ScanError(f"unreadable checkpoint {path}: {exc}") from exc
    if data.get("config") != cfg.to_json():
        raise ScanError(f"checkpoint {path} was written for a different scan configuration")
    return ScanState.from_json(data["state"])


def _save_checkpoint(path: Path, cfg: ScanConfig, state: ScanState) -> None:
    _atomic_write(path, json.dumps({"config": cfg.to_json(), "state": state.to_json()}, indent=1, sort_keys=True))


def _analyze_item(item: tuple[str, Graph]) -> GraphReport:
    gid, g = item
    return analyze_graph(g, gid)


def _target(cfg: ScanConfig) -> int | None:
    return None if cfg.conjecture == "theorem1_k4" else cfg.count


def run_scan(
    cfg: ScanConfig,
    checkpoint: str | Path | None = None,
    checkpoint_every: int = 50,
    jobs: int = 1,
    stop_after: int | None = None,
) -> ScanReport | None:
    """Run (or resume) a scan. Returns None when halted early by ``stop_after``."""
    t0 = time.perf_counter()
    ckpt = Path(checkpoint) if checkpoint else None
    state = (_load_checkpoint(ckpt, cfg) if ckpt else None) or ScanState()
    target = _target(cfg)
    stream = population(cfg, state.cursor)
    budget = stop_after
    pool = ProcessPoolExecutor(jobs) if jobs > 1 else None
    try:
        done = False
        while not done:
            batch: list[tuple[int, str, Graph]] = []
            want = checkpoint_every
            if target is not None:
                want = min(want, target - state.processed)
            if budget is not None:
                want = min(want, budget)
            for item in stream:
                batch.append(item)
                if len(batch) >= want:
                    break
            if not batch:
                break
            items = [(gid, g) for _, gid, g in batch]
            reports = list(pool.map(_analyze_item, items)) if pool else [_analyze_item(it) for it in items]
            if target is not None and state.cursor > SPARSE_LIMIT * (target + 1):
                raise ScanError(f"population too sparse: {state.processed} hits in {state.cursor} draws")
            for (cursor, _, _), rep in zip(batch, reports):
                state.cursor = cursor + 1
                if not in_population(cfg, rep):
                    continue
                _check_shape(cfg, rep)
                state.add(cfg, rep)
                if budget is not None:
                    budget -= 1
                if target is not None and state.processed >= target:
                    done = True
                    break
            if ckpt:
                _save_checkpoint(ckpt, cfg, state)
            if budget is not None and budget <= 0 and not done:
                return None
            if target is not None and state.processed >= target:
                done = True
    finally:
        if pool:
            pool.shutdown()
    return ScanReport(cfg, state, time.perf_counter() - t0)


SCAN_REPORT_SCHEMA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "type": "object",
    "required": ["schema", "config", "claim", "total_graphs", "counts", "counterexamples"],
    "additionalProperties": False,
    "properties": {
        "schema": {"const": SCHEMA_ID},
        "config": {
            "type": "object",
            "required": ["conjecture", "n_min", "n_max"],
            "properties": {"conjecture": {"enum": list(CONJECTURES)}},
        },
        "claim": {"type": "string"},
        "total_graphs": {"type": "string", "pattern": "^[0-9]+$"},
        "counts": {
            "type": "object",
            "required": ["real_rooted", "not_real_rooted", "mult_at_minus_one"],
            "additionalProperties": False,
            "properties": {
                "real_rooted": {"type": "string", "pattern": "^[0-9]+$"},
                "not_real_rooted": {"type": "string", "pattern": "^[0-9]+$"},
                "mult_at_minus_one": {
                    "type": "object",
                    "patternProperties": {"^[0-9]+$": {"type": "string", "pattern": "^[0-9]+$"}},
                    "additionalProperties": False,
                },
            },
        },
        "counterexamples": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["graph6", "report"],
                "properties": {
                    "graph6": {"type": "string", "minLength": 1},
                    "report": {"type": "object", "required": ["graph6", "n", "m", "clique_polynomial", "root_analysis"]},
                },
            },
        },
    },
}
