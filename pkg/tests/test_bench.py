import math
from fractions import Fraction

import pytest

from mlht.bench import (build_from_keys, comparison_table, flat_baseline,
                        lookup_timing)
from mlht.datagen import gen_ipv4, gen_matric
from mlht.hashers import JENKINS, jenkins_oaat
from mlht.table import TableConfig


def _prefix_config(depth, buckets=(7, 5, 3)):
    base = TableConfig()
    return TableConfig(depth=depth, bucket_counts=buckets[:depth + 1],
                       hashers=base.hashers[:depth + 1])


def _injective_keys(bucket_count):
    """One key per bucket of a flat jenkins-hashed table, found by search."""
    found = {}
    i = 0
    while len(found) < bucket_count:
        key = f"probe{i}"
        found.setdefault(jenkins_oaat(key) % bucket_count, key)
        i += 1
    return [found[b] for b in range(bucket_count)]


class TestComparisonTable:
    def test_one_stats_per_geometry(self):
        keys = gen_matric(300, seed=21)
        stats = comparison_table(keys, [_prefix_config(d) for d in (0, 1, 2)])
        assert [s.depth for s in stats] == [0, 1, 2]
        assert all(s.size == 300 for s in stats)

    def test_perfect_assignment_is_one_comparison(self):
        keys = _injective_keys(8)
        config = TableConfig(depth=0, bucket_counts=(8,))
        stats = comparison_table(keys, [config])[0]
        assert stats.average == 1
        assert stats.worst == 1

    def test_average_recomputable_from_histogram(self):
        keys = gen_ipv4(700, seed=13)
        for stats in comparison_table(keys, [_prefix_config(d) for d in (0, 1, 2)]):
            position_mass = sum(count * length * (length + 1) // 2
                                for length, count in stats.histogram.items())
            assert stats.average == Fraction(position_mass, stats.size)

    def test_level_stats_bounds(self):
        keys = gen_ipv4(900, seed=23)
        for stats in comparison_table(keys, [_prefix_config(d) for d in (0, 1, 2)]):
            leaf_count = 1
            for b in stats.bucket_counts:
                leaf_count *= b
            assert stats.worst >= math.ceil(stats.size / leaf_count)
            assert stats.average <= stats.worst
            # unevenness can only raise the key-weighted average
            assert stats.average >= (Fraction(stats.size, leaf_count) + 1) / 2

    def test_average_improves_with_depth(self):
        keys = gen_matric(1_000, seed=17)
        stats = comparison_table(keys, [_prefix_config(d) for d in (0, 1, 2)])
        assert stats[2].average < stats[1].average < stats[0].average
        assert stats[2].worst <= stats[1].worst <= stats[0].worst


class TestFlatBaseline:
    def test_empty_keys(self):
        stats = flat_baseline([], 35, JENKINS)
        assert stats.average == 0
        assert stats.worst == 0

    def test_matches_depth0_config(self):
        keys = gen_ipv4(400, seed=3)
        direct = comparison_table(
            keys, [TableConfig(depth=0, bucket_counts=(35,), hashers=(JENKINS,))])[0]
        assert flat_baseline(keys, 35, JENKINS) == direct


class TestLookupTiming:
    def test_all_misses_single_chain(self):
        keys = [f"k{i}" for i in range(40)]
        probes = ["missing1", "missing2", "missing3"]
        config = TableConfig(depth=0, bucket_counts=(1,))
        report = lookup_timing(keys, probes, config, repetitions=5)
        assert report.comparisons == 5 * 3 * 40
        assert report.probe_count == 3
        assert report.repetitions == 5

    def test_repetitions_scale_comparisons_exactly(self):
        keys = gen_matric(200, seed=2)
        probes = keys[:50]
        config = _prefix_config(1)
        once = lookup_timing(keys, probes, config, repetitions=1)
        twice = lookup_timing(keys, probes, config, repetitions=2)
        assert twice.comparisons == 2 * once.comparisons

    def test_deeper_table_needs_fewer_comparisons(self):
        keys = gen_ipv4(2_000, seed=29)
        probes = keys[::4]
        shallow = lookup_timing(keys, probes, _prefix_config(0))
        deep = lookup_timing(keys, probes, _prefix_config(2))
        assert deep.comparisons < shallow.comparisons

    def test_parallel_probe_totals_identical(self):
        keys = gen_matric(500, seed=31)
        probes = keys[::3] + ["zz0000"]
        config = _prefix_config(2)
        serial = lookup_timing(keys, probes, config, repetitions=2)
        threaded = lookup_timing(keys, probes, config, repetitions=2, parallel=4)
        assert threaded.comparisons == serial.comparisons

    def test_elapsed_accounting(self):
        keys = ["a", "b"]
        report = lookup_timing(keys, ["a"], _prefix_config(0), repetitions=3)
        assert report.elapsed_ns >= 0
        assert report.per_probe_ns == report.elapsed_ns / 3

    def test_bad_repetitions(self):
        with pytest.raises(ValueError):
            lookup_timing(["a"], ["a"], _prefix_config(0), repetitions=0)

    def test_empty_probes(self):
        with pytest.raises(ValueError):
            lookup_timing(["a"], [], _prefix_config(0))


def test_build_from_keys_size():
    table = build_from_keys(gen_matric(150, seed=1), TableConfig())
    assert table.size == 150
