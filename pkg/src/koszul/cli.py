"""Command-line entry point: ``koszul <command> ...``.

Every command works entry by entry. Output for one entry is assembled in a
buffer and written in one piece, so runs with ``--jobs > 1`` print exactly
what a serial run prints.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import warnings
from concurrent.futures import ProcessPoolExecutor
from contextlib import contextmanager
from dataclasses import dataclass
from functools import partial
from pathlib import Path
from typing import Callable, Sequence

from .complexes import homology
from .groebner import GBCache, use_cache
from .invariants import free_resolution, hilbert_series
from .ring import FieldSpec, ParseError
from .verifier import (
    THEOREMS,
    CorpusEntry,
    EntryAnalysis,
    Summary,
    TheoremVerdict,
    load_corpus,
    parse_entry_file,
    verify_entry,
)

EXIT_OK, EXIT_FAIL, EXIT_ERROR = 0, 1, 2
CACHE_ENV = "KOSZUL_CACHE_DIR"


class UsageError(Exception):
    pass


@dataclass(frozen=True)
class RunConfig:
    field: FieldSpec | None = None
    degree_max: int | None = None
    cache_dir: str | None = None
    jobs: int = 1
    fmt: str = "json"

    def __post_init__(self):
        if self.jobs < 1:
            raise UsageError("--jobs must be at least 1")
        if self.degree_max is not None and self.degree_max < 0:
            raise UsageError("--degree-max must be nonnegative (the window [0, N] must be nonempty)")
        if self.fmt not in ("json", "table"):
            raise UsageError(f"unknown format {self.fmt!r}")

    @property
    def window(self) -> tuple[int, int] | None:
        return None if self.degree_max is None else (0, self.degree_max)

    def prepare(self, entry: CorpusEntry) -> CorpusEntry:
        return entry.with_field(self.field) if self.field else entry

    @contextmanager
    def cache(self):
        """Route Groebner basis calls through the configured cache while active."""
        if not self.cache_dir:
            yield
            return
        prev = use_cache(GBCache(self.cache_dir))
        try:
            yield
        finally:
            use_cache(prev)


@dataclass
class EntryOutput:
    entry_id: str
    text: str = ""
    error: str | None = None
    failed: bool = False


def _dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def _fmt_num(x) -> str:
    return "-" if x is None else str(x)


# ---------------------------------------------------------------- per-entry work


def _invariants_text(a: EntryAnalysis, cfg: RunConfig) -> str:
    rows = []
    for i in range(a.l + 1):
        rep = a.report(i).to_json()
        zero = i > 0 and not a.H_nonzero(i)
        rows.append({"entry": a.entry.id, "module": "R/I" if i == 0 else f"H_{i}",
                     "index": i, "zero": zero, "l": a.l, "g": a.g, **rep})
    if cfg.fmt == "json":
        return "".join(_dumps(r) + "\n" for r in rows)
    lines = [f"# {a.entry.id}  l={a.l}  g={a.g}",
             f"{'module':<8}{'dim':>6}{'depth':>7}{'projdim':>9}{'grade':>7}  flags"]
    for r in rows:
        flags = ",".join(k for k, v in r["flags"].items() if v)
        lines.append(f"{r['module']:<8}{_fmt_num(r['dim']):>6}{_fmt_num(r['depth']):>7}"
                     f"{_fmt_num(r['projdim']):>9}{_fmt_num(r['grade']):>7}  {flags}")
    return "\n".join(lines) + "\n"


def _homology_text(a: EntryAnalysis, cfg: RunConfig) -> str:
    lo, hi = a.window
    rows = []
    for i in range(a.l + 1):
        H = a.H(i)
        hs = hilbert_series(H)
        rows.append({
            "entry": a.entry.id,
            "index": i,
            "zero": hs.is_zero(),
            "generator_degrees": list(H.cover.shifts),
            "relations": H.relations.source.rank,
            "hilbert_numerator": [[k, v] for k, v in hs.numerator.items()],
            "window": [lo, hi],
            "hf": hs.values(lo, hi),
        })
    if cfg.fmt == "json":
        return "".join(_dumps(r) + "\n" for r in rows)
    lines = [f"# {a.entry.id}  l={a.l}  window=[{lo}, {hi}]"]
    for r in rows:
        lines.append(f"H_{r['index']}: gens={r['generator_degrees']} relations={r['relations']} "
                     f"hf={r['hf']}")
    return "\n".join(lines) + "\n"


def _resolve_text(a: EntryAnalysis, cfg: RunConfig, index: int) -> str:
    M = a.A if index == 0 else a.H(index)
    C, betti = free_resolution(M)
    row = {
        "entry": a.entry.id,
        "module": "R/I" if index == 0 else f"H_{index}",
        "betti": betti.to_list(),
        "ranks": betti.totals(),
        "complex": json.loads(C.to_json()),
    }
    if cfg.fmt == "json":
        return _dumps(row) + "\n"
    return f"# {a.entry.id} {row['module']}  ranks={row['ranks']}\n{betti}\n"


def _verify_text(a: EntryAnalysis, cfg: RunConfig, theorems: Sequence[str]) -> tuple[str, list]:
    verdicts = verify_entry(a.entry, theorems, cfg.window)
    if cfg.fmt == "json":
        text = "".join(_dumps(v.to_json()) + "\n" for v in verdicts)
    else:
        text = "".join(f"{v.entry_id:<32}{v.theorem_id:<14}{v.status}\n" for v in verdicts)
    return text, [(v.theorem_id, v.status) for v in verdicts]


def _entry_job(entry: CorpusEntry, cfg: RunConfig, task: Callable) -> tuple[EntryOutput, list]:
    out = EntryOutput(entry.id)
    statuses: list = []
    try:
        with cfg.cache(), warnings.catch_warnings():
            warnings.simplefilter("ignore")
            a = EntryAnalysis(cfg.prepare(entry), cfg.window)
            res = task(a, cfg)
        if isinstance(res, tuple):
            out.text, statuses = res
        else:
            out.text = res
    except Exception as exc:  # one bad entry must not take down the run
        out.error = f"{entry.id}: {type(exc).__name__}: {exc}"
    return out, statuses


def _run(entries: Sequence[CorpusEntry], cfg: RunConfig, task: Callable):
    job = partial(_entry_job, cfg=cfg, task=task)
    ordered = sorted(entries, key=lambda e: e.id)
    if cfg.jobs > 1 and len(ordered) > 1:
        with ProcessPoolExecutor(max_workers=cfg.jobs) as pool:
            yield from pool.map(job, ordered)
    else:
        for e in ordered:
            yield job(e)


def _emit(results, out, err) -> tuple[int, list]:
    errors = 0
    statuses = []
    for res, st in results:
        if res.error:
            errors += 1
            print(f"error: {res.error}", file=err)
        else:
            out.write(res.text)
            out.flush()
        statuses.extend(st)
    return errors, statuses


# ---------------------------------------------------------------- commands


def _load_entries(paths: Sequence[str]) -> list[CorpusEntry]:
    entries = []
    for p in paths:
        path = Path(p)
        if path.is_dir():
            entries.extend(load_corpus(path))
        elif path.exists():
            entries.append(parse_entry_file(path))
        else:
            raise UsageError(f"no such file or directory: {p}")
    if not entries:
        raise UsageError(f"no *.ideal entries found in {', '.join(paths)}")
    return entries


def cmd_invariants(args, cfg: RunConfig, out, err) -> int:
    errors, _ = _emit(_run(_load_entries(args.paths), cfg, _invariants_text), out, err)
    return EXIT_ERROR if errors else EXIT_OK


def cmd_homology(args, cfg: RunConfig, out, err) -> int:
    errors, _ = _emit(_run(_load_entries(args.paths), cfg, _homology_text), out, err)
    return EXIT_ERROR if errors else EXIT_OK


def cmd_resolve(args, cfg: RunConfig, out, err) -> int:
    task = partial(_resolve_text, index=args.index)
    errors, _ = _emit(_run(_load_entries(args.paths), cfg, task), out, err)
    return EXIT_ERROR if errors else EXIT_OK


def cmd_verify(args, cfg: RunConfig, out, err) -> int:
    theorems = args.theorem or list(THEOREMS)
    task = partial(_verify_text, theorems=theorems)
    errors, statuses = _emit(_run(_load_entries(args.paths), cfg, task), out, err)
    summary = Summary.of(TheoremVerdict(t, "", s != "vacuous", {}, s == "pass") for t, s in statuses)
    counts = {"pass": summary.passed, "fail": summary.failed, "vacuous": summary.vacuous,
              "errors": errors}
    if cfg.fmt == "json":
        out.write(_dumps({"summary": counts, "by_theorem": summary.by_theorem}) + "\n")
    else:
        out.write("\n" + f"{'theorem':<14}{'pass':>6}{'fail':>6}{'vacuous':>9}\n")
        for t in THEOREMS:
            if t in summary.by_theorem:
                r = summary.by_theorem[t]
                out.write(f"{t:<14}{r['pass']:>6}{r['fail']:>6}{r['vacuous']:>9}\n")
        out.write(f"{'total':<14}{counts['pass']:>6}{counts['fail']:>6}{counts['vacuous']:>9}"
                  f"  errors={errors}\n")
    if errors:
        return EXIT_ERROR
    return EXIT_FAIL if summary.failed else EXIT_OK


def cmd_cache(args, cfg: RunConfig, out, err) -> int:
    if not cfg.cache_dir:
        raise UsageError(f"no cache directory: pass --cache-dir or set {CACHE_ENV}")
    cache = GBCache(cfg.cache_dir)
    if args.action == "clear":
        out.write(_dumps({"removed": cache.clear()}) + "\n")
    else:
        out.write(_dumps(cache.stats()) + "\n")
    return EXIT_OK


def _field(text: str) -> FieldSpec:
    try:
        return FieldSpec.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from exc


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--field", type=_field, help="override the coefficient field: QQ or Fp(p)")
    common.add_argument("--degree-max", type=int, help="degree window [0, N] for Hilbert-function comparisons")
    common.add_argument("--jobs", type=int, default=1, help="worker processes (default 1)")
    common.add_argument("--cache-dir", help=f"Groebner basis cache (default ${CACHE_ENV})")
    common.add_argument("--format", dest="fmt", choices=("json", "table"), default="json")

    p = argparse.ArgumentParser(prog="koszul", description="Koszul homology and invariants of graded ideals.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("invariants", parents=[common], help="invariant reports for R/I and every H_i")
    s.add_argument("paths", nargs="+", help="*.ideal files or corpus directories")
    s.set_defaults(func=cmd_invariants)

    s = sub.add_parser("homology", parents=[common], help="presentations and Hilbert functions of H_i")
    s.add_argument("paths", nargs="+")
    s.set_defaults(func=cmd_homology)

    s = sub.add_parser("resolve", parents=[common], help="minimal free resolution of R/I or H_i")
    s.add_argument("paths", nargs="+")
    s.add_argument("--index", type=int, default=0, help="resolve H_i instead of R/I (0 means R/I)")
    s.set_defaults(func=cmd_resolve)

    s = sub.add_parser("verify", parents=[common], help="check the theorems on a corpus")
    s.add_argument("paths", nargs="+")
    s.add_argument("--theorem", action="append", choices=THEOREMS,
                   help="restrict to one theorem id; repeatable")
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("cache", parents=[common], help="inspect or clear the Groebner basis cache")
    s.add_argument("action", choices=("clear", "stats"))
    s.set_defaults(func=cmd_cache)
    return p


def main(argv: Sequence[str] | None = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    args = build_parser().parse_args(argv)
    try:
        cfg = RunConfig(field=args.field, degree_max=args.degree_max,
                        cache_dir=args.cache_dir or os.environ.get(CACHE_ENV) or None,
                        jobs=args.jobs, fmt=args.fmt)
        return args.func(args, cfg, out, err)
    except (UsageError, ParseError) as exc:
        print(f"error: {exc}", file=err)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
