"""Command-line frontend for dataset generation, distribution analysis,
comparison/timing benchmarks, join, and single-key lookup.

Exit codes: 0 success, 1 usage error, 2 I/O or dataset-format error,
3 join verification mismatch. CSV output uses comma/LF/UTF-8 and always
starts with a header row; JSON output is one object with "rows" and
"meta". MLHT_SEED provides the default seed where --seed is omitted.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Sequence

from .analysis import dist_stats, histogram
from .bench import comparison_table, lookup_timing
from .datagen import DatasetFormatError, gen_ipv4, gen_matric, load_dataset
from .hashers import AP, JENKINS, PJW, Algorithm, HasherSpec, universal
from .join import hash_join, nested_loop_join
from .table import TableConfig, MultiLevelTable

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_IO = 2
EXIT_VERIFY = 3

_NAMED_HASHERS = {"jenkins": JENKINS, "pjw": PJW, "ap": AP}


class _Parser(argparse.ArgumentParser):
    # the contract is exit 1 on usage errors, not argparse's default 2
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        sys.exit(EXIT_USAGE)


def _default_seed(value: int | None) -> int:
    if value is not None:
        return value
    env = os.environ.get("MLHT_SEED", "0")
    try:
        return int(env)
    except ValueError:
        raise ValueError(f"MLHT_SEED must be an integer, got {env!r}") from None


def _parse_int_list(text: str, flag: str) -> tuple[int, ...]:
    try:
        values = tuple(int(part) for part in text.split(","))
    except ValueError:
        raise ValueError(f"{flag} expects a comma-separated list of integers") from None
    if not values:
        raise ValueError(f"{flag} must not be empty")
    return values


def _level_hashers(names: str | None, buckets: tuple[int, ...], seed: int) -> tuple[HasherSpec, ...]:
    if names is None:
        parts = "jenkins,pjw,ap".split(",")[:len(buckets)]
    else:
        parts = names.split(",")
    if len(parts) != len(buckets):
        raise ValueError(f"--hashers needs {len(buckets)} names for {len(buckets)} bucket counts")
    specs = []
    for level, name in enumerate(parts):
        name = name.strip().lower()
        if name in _NAMED_HASHERS:
            specs.append(_NAMED_HASHERS[name])
        elif name == "universal":
            # per-level seed offset keeps stacked universal levels decorrelated
            specs.append(universal(modulus=buckets[level], seed=seed + level))
        else:
            raise ValueError(f"unknown hasher {name!r}")
    return tuple(specs)


def _geometry(args, depths: Sequence[int] | None = None) -> list[TableConfig]:
    buckets = _parse_int_list(args.buckets, "--buckets")
    seed = _default_seed(getattr(args, "seed", None))
    hashers = _level_hashers(getattr(args, "hashers", None), buckets, seed)
    if depths is None:
        depths = [len(buckets) - 1]
    configs = []
    for depth in depths:
        if not 0 <= depth <= len(buckets) - 1:
            raise ValueError(f"depth {depth} needs {depth + 1} bucket counts, "
                             f"--buckets gave {len(buckets)}")
        configs.append(TableConfig(depth=depth, bucket_counts=buckets[:depth + 1],
                                   hashers=hashers[:depth + 1]))
    return configs


def _write(args, text: str) -> None:
    if getattr(args, "out", None):
        with open(args.out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _json_doc(rows: list[dict], meta: dict) -> str:
    return json.dumps({"meta": meta, "rows": rows}, indent=2) + "\n"


def _cmd_gen(args) -> int:
    seed = _default_seed(args.seed)
    if args.kind == "matric":
        keys = gen_matric(args.count, seed)
    else:
        keys = gen_ipv4(args.count, seed, args.octet_max)
    _write(args, "".join(f"{k}\n" for k in keys))
    return EXIT_OK


def _cmd_dist(args) -> int:
    keys = load_dataset(args.input)
    seed = _default_seed(args.seed)
    name = args.hasher.lower()
    if name in _NAMED_HASHERS:
        spec = _NAMED_HASHERS[name]
    elif name == "universal":
        spec = universal(modulus=args.buckets, seed=seed)
    else:
        raise ValueError(f"unknown hasher {name!r}")
    hist = histogram(spec, keys, args.buckets)
    stats = dist_stats(hist)
    if args.format == "json":
        rows = [{"bucket": i, "count": c} for i, c in enumerate(hist.counts)]
        meta = {
            "command": "dist", "input": args.input, "hasher": name,
            "buckets": args.buckets, "seed": seed,
            "stats": {
                "total": hist.total, "mean": stats.mean,
                "min": stats.min_load, "max": stats.max_load,
                "stddev": round(stats.stddev, 4),
                "chi_square": round(stats.chi_square, 4),
                "dof": stats.degrees_of_freedom,
            },
        }
        _write(args, _json_doc(rows, meta))
    else:
        lines = ["bucket,count"]
        lines += [f"{i},{c}" for i, c in enumerate(hist.counts)]
        lines.append(f"# total={hist.total} mean={stats.mean:.4f} min={stats.min_load}"
                     f" max={stats.max_load} stddev={stats.stddev:.4f}"
                     f" chi_square={stats.chi_square:.4f} dof={stats.degrees_of_freedom}")
        _write(args, "\n".join(lines) + "\n")
    return EXIT_OK


def _cmd_bench(args) -> int:
    keys = load_dataset(args.input)
    depths = _parse_int_list(args.depths, "--depths") if args.depths else None
    configs = _geometry(args, depths)
    results = comparison_table(keys, configs)
    if args.format == "json":
        rows = [{"level": s.depth, "size": s.size,
                 "average": round(float(s.average), 1), "worst": s.worst}
                for s in results]
        meta = {"command": "bench", "input": args.input,
                "buckets": list(configs[-1].bucket_counts),
                "depths": [c.depth for c in configs],
                "hashers": (args.hashers or "jenkins,pjw,ap").split(",")}
        _write(args, _json_doc(rows, meta))
    else:
        lines = ["level,size,average,worst"]
        lines += [f"{s.depth},{s.size},{float(s.average):.1f},{s.worst}" for s in results]
        _write(args, "\n".join(lines) + "\n")
    return EXIT_OK


def _cmd_timing(args) -> int:
    keys = load_dataset(args.input)
    probes = load_dataset(args.probes)
    depths = _parse_int_list(args.depths, "--depths") if args.depths else None
    configs = _geometry(args, depths)
    reports = [lookup_timing(keys, probes, config, repetitions=args.reps,
                             parallel=args.parallel) for config in configs]
    if args.format == "json":
        rows = [{"depth": r.depth, "probes": r.probe_count, "reps": r.repetitions,
                 "elapsed_ns": r.elapsed_ns, "comparisons": r.comparisons}
                for r in reports]
        meta = {"command": "timing", "input": args.input, "probes": args.probes,
                "buckets": list(configs[-1].bucket_counts), "reps": args.reps}
        _write(args, _json_doc(rows, meta))
    else:
        lines = ["depth,probes,reps,elapsed_ns,comparisons"]
        lines += [f"{r.depth},{r.probe_count},{r.repetitions},{r.elapsed_ns},{r.comparisons}"
                  for r in reports]
        _write(args, "\n".join(lines) + "\n")
    return EXIT_OK


def _cmd_join(args) -> int:
    left = [(k, k) for k in load_dataset(args.left)]
    right = [(k, k) for k in load_dataset(args.right)]
    config = _geometry(args)[0]
    result = hash_join(left, right, config)
    if args.verify:
        oracle = nested_loop_join(left, right)
        if sorted(m[0] for m in result.matches) != sorted(m[0] for m in oracle.matches):
            print("mlht join: hash join disagrees with nested-loop oracle", file=sys.stderr)
            return EXIT_VERIFY
    lines = ["key"]
    lines += [match[0] for match in result.matches]
    lines.append(f"# build_side={result.build_side.value} matches={len(result.matches)}"
                 f" probe_comparisons={result.probe_comparisons}"
                 f" verified={'true' if args.verify else 'false'}")
    _write(args, "\n".join(lines) + "\n")
    return EXIT_OK


def _cmd_lookup(args) -> int:
    keys = load_dataset(args.input)
    config = _geometry(args)[0]
    table = MultiLevelTable(config)
    for key in keys:
        table.insert(key)
    result = table.lookup(args.key)
    status = "found" if result.found else "absent"
    path = ",".join(str(p) for p in result.path)
    _write(args, f"status: {status}\ncomparisons: {result.comparisons}\npath: {path}\n")
    return EXIT_OK


def _build_parser() -> _Parser:
    parser = _Parser(prog="mlht", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    gen = sub.add_parser("gen", help="generate a seeded key dataset")
    gen.add_argument("--kind", choices=["matric", "ipv4"], required=True)
    gen.add_argument("--count", type=int, required=True)
    gen.add_argument("--seed", type=int, default=None)
    gen.add_argument("--octet-max", type=int, default=255, dest="octet_max")
    gen.add_argument("--out")
    gen.set_defaults(func=_cmd_gen)

    dist = sub.add_parser("dist", help="bucket distribution of one hasher")
    dist.add_argument("--hasher", required=True,
                      choices=["jenkins", "pjw", "ap", "universal"])
    dist.add_argument("--buckets", type=int, required=True)
    dist.add_argument("--input", required=True)
    dist.add_argument("--seed", type=int, default=None)
    dist.add_argument("--format", choices=["csv", "json"], default="csv")
    dist.add_argument("--out")
    dist.set_defaults(func=_cmd_dist)

    bench = sub.add_parser("bench", help="comparison counts per table geometry")
    bench.add_argument("--input", required=True)
    bench.add_argument("--buckets", required=True, help="e.g. 7,5,3")
    bench.add_argument("--depths", help="prefix depths to run, e.g. 0,1,2")
    bench.add_argument("--hashers", help="per-level hashers, default jenkins,pjw,ap")
    bench.add_argument("--seed", type=int, default=None)
    bench.add_argument("--format", choices=["csv", "json"], default="csv")
    bench.add_argument("--out")
    bench.set_defaults(func=_cmd_bench)

    timing = sub.add_parser("timing", help="lookup wall-clock and comparison totals")
    timing.add_argument("--input", required=True)
    timing.add_argument("--probes", required=True)
    timing.add_argument("--buckets", required=True)
    timing.add_argument("--reps", type=int, default=1)
    timing.add_argument("--depths")
    timing.add_argument("--hashers")
    timing.add_argument("--seed", type=int, default=None)
    timing.add_argument("--parallel", type=int, default=0)
    timing.add_argument("--format", choices=["csv", "json"], default="csv")
    timing.add_argument("--out")
    timing.set_defaults(func=_cmd_timing)

    join = sub.add_parser("join", help="hash join two datasets on their keys")
    join.add_argument("--left", required=True)
    join.add_argument("--right", required=True)
    join.add_argument("--buckets", required=True)
    join.add_argument("--hashers")
    join.add_argument("--seed", type=int, default=None)
    join.add_argument("--verify", action="store_true",
                      help="cross-check against the nested-loop oracle")
    join.add_argument("--out")
    join.set_defaults(func=_cmd_join)

    lookup = sub.add_parser("lookup", help="lookup one key, report comparisons and path")
    lookup.add_argument("--input", required=True)
    lookup.add_argument("--key", required=True)
    lookup.add_argument("--buckets", required=True)
    lookup.add_argument("--hashers")
    lookup.add_argument("--seed", type=int, default=None)
    lookup.add_argument("--out")
    lookup.set_defaults(func=_cmd_lookup)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except DatasetFormatError as exc:
        print(f"mlht: {exc}", file=sys.stderr)
        return EXIT_IO
    except OSError as exc:
        print(f"mlht: {exc}", file=sys.stderr)
        return EXIT_IO
    except ValueError as exc:
        print(f"mlht: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
