"""Multilevel chained hash tables with one hash function per level, plus
the distribution, comparison-count, timing and join benchmarks built on
them."""

from .analysis import DistStats, Histogram, dist_stats, histogram
from .bench import TimingReport, build_from_keys, comparison_table, flat_baseline, lookup_timing
from .datagen import (DatasetFormatError, gen_ipv4, gen_matric, load_dataset,
                      save_dataset)
from .hashers import (AP, JENKINS, PJW, Algorithm, HasherSpec, SplitMix64,
                      ap_hash, bucket_index, hash_key, jenkins_oaat, pjw_hash,
                      universal, universal_hash)
from .join import JoinResult, Side, hash_join, nested_loop_join
from .table import (Entry, LevelStats, LookupResult, MultiLevelTable,
                    TableConfig, build)

__all__ = [
    "Algorithm", "HasherSpec", "SplitMix64", "JENKINS", "PJW", "AP",
    "jenkins_oaat", "pjw_hash", "ap_hash", "universal", "universal_hash",
    "bucket_index", "hash_key",
    "TableConfig", "Entry", "LookupResult", "LevelStats", "MultiLevelTable", "build",
    "Histogram", "DistStats", "histogram", "dist_stats",
    "gen_matric", "gen_ipv4", "save_dataset", "load_dataset", "DatasetFormatError",
    "TimingReport", "build_from_keys", "comparison_table", "flat_baseline", "lookup_timing",
    "JoinResult", "Side", "hash_join", "nested_loop_join",
]
