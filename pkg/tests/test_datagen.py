import re
from itertools import product

import pytest

from mlht.datagen import (MATRIC_KEYSPACE, DatasetFormatError, gen_ipv4,
                          gen_matric, load_dataset, save_dataset)

MATRIC_PATTERN = re.compile(r"^[a-z]{2}[0-9]{4}$")


class TestGenMatric:
    def test_empty(self):
        assert gen_matric(0, seed=1) == []

    def test_pattern_and_uniqueness(self):
        keys = gen_matric(500, seed=42)
        assert len(keys) == 500
        assert len(set(keys)) == 500
        assert all(MATRIC_PATTERN.match(k) for k in keys)

    def test_deterministic(self):
        assert gen_matric(300, seed=9) == gen_matric(300, seed=9)

    def test_seed_changes_output(self):
        assert gen_matric(50, seed=1) != gen_matric(50, seed=2)

    def test_count_above_keyspace_rejected(self):
        with pytest.raises(ValueError):
            gen_matric(MATRIC_KEYSPACE + 1, seed=0)

    def test_negative_count_rejected(self):
        with pytest.raises(ValueError):
            gen_matric(-1, seed=0)


class TestGenIpv4:
    def test_single_key_space(self):
        assert gen_ipv4(1, seed=0, octet_max=0) == ["0.0.0.0"]

    def test_full_enumeration_octet_max_1(self):
        keys = gen_ipv4(16, seed=3, octet_max=1)
        expected = {f"{a}.{b}.{c}.{d}" for a, b, c, d in product((0, 1), repeat=4)}
        assert set(keys) == expected

    def test_well_formed_and_unique(self):
        keys = gen_ipv4(10_000, seed=7)
        assert len(set(keys)) == 10_000
        for key in keys[:200]:
            octets = key.split(".")
            assert len(octets) == 4
            for part in octets:
                assert part == str(int(part))  # no leading zeros
                assert 0 <= int(part) <= 255

    def test_octet_max_respected(self):
        keys = gen_ipv4(2_000, seed=4, octet_max=125)
        assert all(int(p) <= 125 for key in keys for p in key.split("."))

    def test_deterministic(self):
        assert gen_ipv4(100, seed=11) == gen_ipv4(100, seed=11)

    def test_count_above_space_rejected(self):
        with pytest.raises(ValueError):
            gen_ipv4(17, seed=0, octet_max=1)

    def test_bad_octet_max_rejected(self):
        with pytest.raises(ValueError):
            gen_ipv4(1, seed=0, octet_max=256)


class TestDatasetFile:
    def test_round_trip_empty(self, tmp_path):
        path = tmp_path / "empty.txt"
        save_dataset(path, [])
        assert path.read_bytes() == b""
        assert load_dataset(path) == []

    def test_round_trip_preserves_order(self, tmp_path):
        path = tmp_path / "d.txt"
        save_dataset(path, ["sj3099", "ab0001"])
        assert path.read_bytes() == b"sj3099\nab0001\n"
        assert load_dataset(path) == ["sj3099", "ab0001"]

    def test_round_trip_generated(self, tmp_path):
        path = tmp_path / "ips.txt"
        keys = gen_ipv4(250, seed=6)
        save_dataset(path, keys)
        assert load_dataset(path) == keys

    def test_blank_interior_line_reports_number(self, tmp_path):
        path = tmp_path / "bad.txt"
        path.write_bytes(b"a\n\nb\n")
        with pytest.raises(DatasetFormatError) as exc:
            load_dataset(path)
        assert exc.value.line_number == 2

    def test_trailing_blank_line_rejected(self, tmp_path):
        path = tmp_path / "bad.txt"
        path.write_bytes(b"a\n\n")
        with pytest.raises(DatasetFormatError):
            load_dataset(path)

    def test_control_character_rejected(self, tmp_path):
        path = tmp_path / "bad.txt"
        path.write_bytes(b"ok\nbad\tkey\n")
        with pytest.raises(DatasetFormatError) as exc:
            load_dataset(path)
        assert exc.value.line_number == 2

    def test_crlf_rejected(self, tmp_path):
        path = tmp_path / "bad.txt"
        path.write_bytes(b"a\r\nb\r\n")
        with pytest.raises(DatasetFormatError):
            load_dataset(path)

    def test_missing_file_is_io_error(self, tmp_path):
        with pytest.raises(OSError):
            load_dataset(tmp_path / "nope.txt")

    def test_same_seed_same_bytes(self, tmp_path):
        first, second = tmp_path / "a.txt", tmp_path / "b.txt"
        save_dataset(first, gen_matric(400, seed=5))
        save_dataset(second, gen_matric(400, seed=5))
        assert first.read_bytes() == second.read_bytes()
