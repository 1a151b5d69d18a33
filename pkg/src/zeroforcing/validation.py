"""Corpus cross-validation: formulas against the exact solver.

Each generated instance is solved by its family formula and by brute
force; rows record agreement, witness validity, and the lower bounds.
Failures carry the seed and the full edge list so they replay exactly.
"""

from __future__ import annotations

import csv
import io
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .blocks import classify_family
from .exact import connected_forcing_number_exact
from .families import (
    block_graph_zc,
    cactus_zc,
    greedy_zc,
    tree_zc,
    unicyclic_zc,
)
from .forcing import is_connected_set, is_forcing_set
from .generators import GeneratorSpec, generate
from .graph_io import write_edge_list
from .structure import lower_bounds, structural_sets
from .blocks import block_decomposition

__all__ = ["CorpusConfig", "ValidationRow", "ValidationReport", "validate_corpus"]

_SOLVERS = {
    "random_tree": tree_zc,
    "random_unicyclic": unicyclic_zc,
    "random_cactus": cactus_zc,
    "random_block": block_graph_zc,
    "random_outer_cactus": greedy_zc,
}


@dataclass(frozen=True)
class CorpusConfig:
    trees: int = 0
    unicyclic: int = 0
    cactus: int = 0
    block: int = 0
    outer_cactus: int = 0
    n_min: int = 4
    n_max: int = 12
    seed: int = 0
    jobs: int = 1
    check_bounds: bool = True


@dataclass(frozen=True)
class ValidationRow:
    spec: str
    n: int
    family_value: int
    exact_value: int
    bound_m: int | None
    bound_blocks: int | None
    ok: bool
    seed: int
    detail: str = ""
    edge_list: str | None = None


@dataclass
class ValidationReport:
    rows: list[ValidationRow] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(r.ok for r in self.rows)

    @property
    def failures(self) -> list[ValidationRow]:
        return [r for r in self.rows if not r.ok]

    def to_text(self) -> str:
        header = f"{'spec':<44} {'n':>3} {'family':>6} {'exact':>5} {'bm':>3} {'bb':>3}  status"
        lines = [header, "-" * len(header)]
        for r in self.rows:
            bm = "-" if r.bound_m is None else str(r.bound_m)
            bb = "-" if r.bound_blocks is None else str(r.bound_blocks)
            status = "ok" if r.ok else f"FAIL {r.detail}"
            lines.append(
                f"{r.spec:<44} {r.n:>3} {r.family_value:>6} {r.exact_value:>5} {bm:>3} {bb:>3}  {status}"
            )
        lines.append(
            f"{len(self.rows)} instances, {len(self.failures)} failures"
        )
        return "\n".join(lines)

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf)
        writer.writerow(
            ["spec", "n", "family_value", "exact_value", "bound_m", "bound_blocks", "ok", "seed", "detail"]
        )
        for r in self.rows:
            writer.writerow(
                [r.spec, r.n, r.family_value, r.exact_value, r.bound_m, r.bound_blocks, r.ok, r.seed, r.detail]
            )
        return buf.getvalue()

    def to_json_obj(self) -> dict:
        return {
            "ok": self.ok,
            "instances": len(self.rows),
            "failures": len(self.failures),
            "rows": [
                {
                    "spec": r.spec,
                    "n": r.n,
                    "family_value": r.family_value,
                    "exact_value": r.exact_value,
                    "bound_m": r.bound_m,
                    "bound_blocks": r.bound_blocks,
                    "ok": r.ok,
                    "seed": r.seed,
                    "detail": r.detail,
                    "edge_list": r.edge_list,
                }
                for r in self.rows
            ],
        }


def _run_instance(args: tuple[str, int, int, bool]) -> ValidationRow:
    family, n, seed, check_bounds = args
    spec = GeneratorSpec(family, n=n, seed=seed)
    g = generate(spec)
    fam_res = _SOLVERS[family](g)
    exact = connected_forcing_number_exact(g)
    problems = []
    if family == "random_outer_cactus":
        # Greedy is only guaranteed minimal in general; on this corpus
        # (all cycles outer) it must match the optimum.
        if fam_res.value != exact.value:
            problems.append(f"greedy {fam_res.value} != exact {exact.value}")
    elif fam_res.value != exact.value:
        problems.append(f"formula {fam_res.value} != exact {exact.value}")
    if not is_connected_set(g, fam_res.witness):
        problems.append("witness not connected")
    if not is_forcing_set(g, fam_res.witness):
        problems.append("witness not forcing")
    info = classify_family(g)
    bound_m = bound_blocks = None
    if check_bounds and not info.is_path:
        ss = structural_sets(g)
        dec = block_decomposition(g)
        bound_m, bound_blocks = lower_bounds(g, dec, ss)
        if exact.value < max(bound_m, bound_blocks):
            problems.append("exact value below lower bound")
        if not ss.m_set <= set(fam_res.witness):
            problems.append("witness misses required set M")
    ok = not problems
    return ValidationRow(
        spec=spec.label(),
        n=g.n,
        family_value=fam_res.value,
        exact_value=exact.value,
        bound_m=bound_m,
        bound_blocks=bound_blocks,
        ok=ok,
        seed=seed,
        detail="; ".join(problems),
        edge_list=None if ok else write_edge_list(g),
    )


def validate_corpus(config: CorpusConfig) -> ValidationReport:
    """Generate the corpus and cross-validate every instance."""
    tasks: list[tuple[str, int, int, bool]] = []
    counts = {
        "random_tree": config.trees,
        "random_unicyclic": config.unicyclic,
        "random_cactus": config.cactus,
        "random_block": config.block,
        "random_outer_cactus": config.outer_cactus,
    }
    for fam_idx, (family, count) in enumerate(sorted(counts.items())):
        for i in range(count):
            seed = config.seed * 1_000_003 + fam_idx * 100_019 + i
            rng = random.Random(seed)
            n_min = config.n_min
            if family == "random_outer_cactus":
                n_min = max(n_min, 5)
            n = rng.randint(n_min, max(n_min, config.n_max))
            tasks.append((family, n, seed, config.check_bounds))
    if config.jobs > 1:
        with ProcessPoolExecutor(max_workers=config.jobs) as pool:
            rows = list(pool.map(_run_instance, tasks))
    else:
        rows = [_run_instance(t) for t in tasks]
    rows.sort(key=lambda r: r.spec)
    return ValidationReport(rows=rows)
