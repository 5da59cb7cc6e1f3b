from __future__ import annotations

import hashlib
import platform
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from lyndon_sa import __version__
from lyndon_sa.config import CliConfig, GenConfig
from lyndon_sa.errors import ExitCodes, LyndonSaError
from lyndon_sa.formats import read_sa, resolve_read_format, write_sa
from lyndon_sa.generators import generate
from lyndon_sa.logging_utils import log_suppressed_exception, run_fields, track_event
from lyndon_sa.oracles import brute_force_sa, canonical_lyndon_grouping, oracle_pss_nss
from lyndon_sa.pipeline import RunStats, suffix_array, suffix_array_with_stats, verify_suffix_array
from lyndon_sa.reporting.bench_report import BenchSummary, summarize_runs
from lyndon_sa.reporting.inspect_report import format_grouping, format_row, oracle_verdict
from lyndon_sa.saca.lyndon import build_marked_pss, derive_nss
from lyndon_sa.saca.phase1 import initial_grouping, run_phase1
from lyndon_sa.saca.phase2 import run_phase2_bfs
from lyndon_sa.text import Text, make_text, width_for_bits


@dataclass(frozen=True)
class BuildResult:
    output_path: Path
    format: str
    m: int
    stats: RunStats


@dataclass(frozen=True)
class VerifyResult:
    ok: bool
    m: int
    format: str


@dataclass(frozen=True)
class InspectLine:
    kind: str
    row: str
    oracle_row: str | None = None

    @property
    def verdict(self) -> str | None:
        if self.oracle_row is None:
            return None
        return oracle_verdict(self.row, self.oracle_row)


def _require(path: Path | None, what: str) -> Path:
    if path is None:
        raise LyndonSaError(f"missing {what} path")
    return path


def load_text(cfg: CliConfig) -> Text:
    path = _require(cfg.input_path, "input")
    return make_text(path.read_bytes(), cfg.sentinel_policy)


def do_build(cfg: CliConfig) -> BuildResult:
    text = load_text(cfg)
    out = _require(cfg.output_path, "output")
    sa, stats = suffix_array_with_stats(text, cfg.run)
    fmt = write_sa(out, sa.without_sentinel(), cfg.format)
    m = text.n - 1
    # n counts input bytes here, not the terminated text
    track_event("build.completed", **{**run_fields(stats), "n": m, "format": fmt})
    return BuildResult(output_path=out, format=fmt, m=m, stats=stats)


def do_verify(cfg: CliConfig) -> VerifyResult:
    text = load_text(cfg)
    sa_path = _require(cfg.sa_path, "suffix array")
    m = text.n - 1
    fmt = resolve_read_format(cfg.format, sa_path, m)
    external = read_sa(sa_path, m, fmt)
    # put the terminal entry back in front to check the internal text
    internal = np.empty(m + 1, dtype=np.int64)
    internal[0] = m
    internal[1:] = external
    ok = verify_suffix_array(text, internal)
    track_event("verify.completed", n=m, ok=ok, format=fmt)
    return VerifyResult(ok=ok, m=m, format=fmt)


def do_bench(cfg: CliConfig) -> BenchSummary:
    text = load_text(cfg)
    for _ in range(cfg.warmup):
        suffix_array_with_stats(text, cfg.run)

    runs: list[RunStats] = []
    checksum = ""
    for _ in range(cfg.iterations):
        sa, stats = suffix_array_with_stats(text, cfg.run)
        runs.append(stats)
        checksum = sa.checksum()
    summary = summarize_runs(runs, queue_capacity=cfg.run.queue_capacity, sa_sha256=checksum)
    track_event(
        "bench.completed",
        n=summary.n,
        iterations=summary.iterations,
        total_s=summary.total_s,
        aux_bytes_per_char=summary.aux_bytes_per_char,
        sa_sha256=summary.sa_sha256,
    )
    return summary


def _oracle_flags(pss: list[int]) -> list[int]:
    last: dict[int, int] = {}
    for i, p in enumerate(pss):
        last[p] = i
    return [int(last[p] == i) for i, p in enumerate(pss)]


def do_inspect(cfg: CliConfig) -> list[InspectLine]:
    text = load_text(cfg)
    dumps = cfg.dumps or ["pss", "nss"]
    width = width_for_bits(cfg.run.forced_width, text.n)
    mpss = build_marked_pss(text, width)
    nss = derive_nss(mpss)

    rows: dict[str, str] = {}
    for kind in dumps:
        if kind == "pss":
            rows[kind] = format_row(mpss.parents())
        elif kind == "nss":
            rows[kind] = format_row(nss.values)
        elif kind == "lyndon":
            rows[kind] = format_row(nss.lyndon_lengths())
        elif kind == "flags":
            rows[kind] = format_row(mpss.last_child_flags())
        elif kind == "grouping":
            grouping = run_phase1(initial_grouping(text, mpss), mpss)
            rows[kind] = format_grouping(grouping.members())
        elif kind == "sa":
            grouping = run_phase1(initial_grouping(text, mpss), mpss)
            rows[kind] = format_row(run_phase2_bfs(grouping, mpss, cfg.run.queue_capacity).indices)

    if not cfg.oracle:
        return [InspectLine(kind=k, row=rows[k]) for k in dumps]

    o_pss, o_nss = oracle_pss_nss(text)
    oracle_rows = {
        "pss": lambda: format_row(o_pss),
        "nss": lambda: format_row(o_nss),
        "lyndon": lambda: format_row(v - i for i, v in enumerate(o_nss)),
        "flags": lambda: format_row(_oracle_flags(o_pss)),
        "grouping": lambda: format_grouping(canonical_lyndon_grouping(text).members()),
        "sa": lambda: format_row(brute_force_sa(text)),
    }
    return [InspectLine(kind=k, row=rows[k], oracle_row=oracle_rows[k]()) for k in dumps]


def do_gen(gen: GenConfig, out: Path) -> Path:
    data = generate(gen)
    out.parent.mkdir(parents=True, exist_ok=True)
    out.write_bytes(data)
    track_event(
        "gen.completed",
        kind=gen.kind,
        size=gen.size,
        seed=gen.seed,
        sha256=hashlib.sha256(data).hexdigest(),
    )
    return out


def do_version() -> str:
    return __version__


def do_doctor() -> dict[str, str]:
    out: dict[str, str] = {"version": __version__, "python": platform.python_version()}
    out["numpy"] = np.__version__
    try:
        from lyndon_sa.saca.cells import JIT_AVAILABLE, jit_enabled

        if JIT_AVAILABLE:
            import numba

            out["numba"] = numba.__version__
            out["jit"] = "enabled" if jit_enabled() else "disabled (NUMBA_DISABLE_JIT)"
        else:
            out["numba"] = "not installed"
            out["jit"] = "disabled (kernels run as plain Python)"
    except Exception as e:
        log_suppressed_exception(context="commands.doctor.numba", error=e)
        out["numba"] = f"error: {e}"

    try:
        from lyndon_sa.paths import default_state_dir, events_path

        out["state_dir"] = str(default_state_dir())
        out["events_log"] = str(events_path())
    except Exception as e:
        out["paths"] = f"error: {e}"

    # smoke run on a tiny text
    try:
        sample = make_text(b"acedcebceece")
        got = suffix_array(sample).tolist()
        out["self_test"] = "ok" if got == [12, 0, 6, 10, 4, 1, 7, 3, 11, 5, 9, 2, 8] else f"mismatch: {got}"
    except Exception as e:
        out["self_test"] = f"error: {e}"
    return out


def exit_code_for_verify(result: VerifyResult) -> int:
    return ExitCodes.OK if result.ok else ExitCodes.VERIFY_FAILED
