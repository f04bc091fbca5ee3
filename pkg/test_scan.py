"""Tests for scan enumeration, configuration and the JSONL runner."""
import json
from itertools import product
from math import gcd

import pytest

from cyclo_algebra.domain.arithmetic import gcd_all
from scan.application.services import ScanApplicationService, evaluate_task
from scan.domain.entities import ScanConfig, ScanSummary
from scan.domain.services import EnumerationService
from scan.infrastructure.config import build_scan_config, load_config_file
from scan.infrastructure.repositories import ScanRecordRepository
from weight_systems.domain.entities import WeightSystem
from weight_systems.domain.services import WeightSystemService


def brute_force(n, d_max, mu_max):
    found = set()
    for d in range(2, d_max + 1):
        for v in product(range(1, d), repeat=n):
            if gcd(gcd_all(v), d) != 1:
                continue
            ws = WeightSystem(sorted(v), d)
            if WeightSystemService.check_conditions(ws).c1 and WeightSystemService.milnor_number(ws) <= mu_max:
                found.add(ws)
    return sorted(found, key=lambda ws: (ws.d, ws.v))


def small_cycle_config(out, **overrides):
    values = dict(mode='family', family='cycle', n=2, a_max=4, mu_max=100, out=out)
    values.update(overrides)
    return ScanConfig(**values).validate()


class TestEnumeration:

    @pytest.mark.parametrize("n", [1, 2])
    def test_matches_brute_force(self, n):
        cfg = ScanConfig(n=n, d_max=20, mu_max=10 ** 6, mode='exhaustive')
        assert list(EnumerationService.enumerate_weight_systems(cfg)) == brute_force(n, 20, 10 ** 6)

    def test_milnor_bound_filters(self):
        cfg = ScanConfig(n=2, d_max=20, mu_max=10, mode='exhaustive')
        assert list(EnumerationService.enumerate_weight_systems(cfg)) == brute_force(2, 20, 10)

    def test_single_variable_systems(self):
        cfg = ScanConfig(n=1, d_max=12, mu_max=100, mode='exhaustive')
        assert [(ws.v, ws.d) for ws in EnumerationService.enumerate_weight_systems(cfg)] == [
            ((1,), d) for d in range(2, 13)
        ]

    def test_saito_family_tasks(self):
        tasks = EnumerationService.tasks(ScanConfig(mode='family', family='saito', mu_max=500))
        assert len(tasks) == 25
        assert tasks[0].source.startswith("ts:")
        assert len({t.key for t in tasks}) == 25

    def test_family_tasks_are_canonical_and_unique(self):
        tasks = EnumerationService.tasks(small_cycle_config("unused.jsonl"))
        keys = [t.key for t in tasks]
        assert len(keys) == len(set(keys))
        for key in keys:
            assert WeightSystemService.parse(key).key == key

    def test_degenerate_family_gives_no_tasks(self):
        assert EnumerationService.tasks(small_cycle_config("unused.jsonl", a_max=1)) == []


class TestScanConfig:

    @pytest.mark.parametrize("values, message", [
        (dict(mode='random'), "mode must be one of"),
        (dict(family='sporadic'), "family must be one of"),
        (dict(n=0), "n must be >= 1"),
        (dict(jobs=0), "jobs must be >= 1"),
        (dict(mode='exhaustive', n=4), "allow-exhaustive-n4"),
    ])
    def test_invalid_configs(self, values, message):
        with pytest.raises(ValueError, match=message):
            ScanConfig(**values).validate()

    def test_n4_override(self):
        assert ScanConfig(mode='exhaustive', n=4, allow_exhaustive_n4=True).validate().n == 4

    def test_precedence(self, tmp_path, monkeypatch):
        monkeypatch.setenv("ORLIK_JOBS", "3")
        assert build_scan_config().jobs == 3

        path = tmp_path / "scan.conf"
        path.write_text("jobs=2\nmu-max=80\nresume=yes\n")
        cfg = build_scan_config(str(path))
        assert (cfg.jobs, cfg.mu_max, cfg.resume) == (2, 80, True)

        cfg = build_scan_config(str(path), {'jobs': 4, 'mu_max': None})
        assert (cfg.jobs, cfg.mu_max) == (4, 80)

    def test_unknown_key(self, tmp_path):
        path = tmp_path / "scan.conf"
        path.write_text("colour=blue\n")
        with pytest.raises(ValueError, match="unknown scan config key"):
            load_config_file(str(path))

    @pytest.mark.parametrize("line, message", [("n=two", "must be an integer"), ("resume=maybe", "must be a boolean")])
    def test_ill_typed_values(self, tmp_path, line, message):
        path = tmp_path / "scan.conf"
        path.write_text(line + "\n")
        with pytest.raises(ValueError, match=message):
            load_config_file(str(path))

    def test_missing_file(self, tmp_path):
        with pytest.raises(OSError):
            build_scan_config(str(tmp_path / "absent.conf"))


class TestEvaluateTask:

    def test_ivlev_record(self):
        record = evaluate_task(("1,24,33,58:265", "exhaustive"))
        assert list(record)[:3] == ['ws', 'source', 'n']
        assert record['mu'] == 66516
        assert record['d_mon'] == 265
        assert record['D_w_lambda'] == "1*Lambda(1) + 251*Lambda(265)"
        assert record['conditions']['c1'] is False
        assert record['conjecture14']['verdict'] == 'pass'

    def test_non_integral_divisor_is_not_applicable(self):
        record = evaluate_task(("2:5", "exhaustive"))
        assert record['d_mon'] is None
        assert record['conjecture14']['verdict'] == 'not-applicable'
        assert record['saito']['eq54_applicable'] is False

    def test_summary_counts(self):
        summary = ScanSummary()
        summary.add(evaluate_task(("1:3", "exhaustive")))
        summary.add(evaluate_task(("2:5", "exhaustive")), resumed=True)
        data = summary.to_dict()
        assert data['total'] == 2
        assert data['skipped'] == 1
        assert data['conjecture14'] == {'pass': 1, 'fail': 0, 'not-applicable': 1}
        assert data['counterexamples'] == 0


class TestRunScan:

    def test_writes_one_record_per_task(self, scan_output):
        cfg = small_cycle_config(scan_output)
        summary = ScanApplicationService().run_scan(cfg)
        records = list(ScanRecordRepository(scan_output).find_all())
        assert summary['total'] == len(records) == len(EnumerationService.tasks(cfg))
        assert [r['ws'] for r in records] == [t.key for t in EnumerationService.tasks(cfg)]
        assert summary['counterexamples'] == 0

    def test_parallel_run_is_byte_identical(self, tmp_path):
        serial, parallel = str(tmp_path / "serial.jsonl"), str(tmp_path / "parallel.jsonl")
        ScanApplicationService().run_scan(small_cycle_config(serial, jobs=1))
        ScanApplicationService().run_scan(small_cycle_config(parallel, jobs=2))
        with open(serial, 'rb') as a, open(parallel, 'rb') as b:
            assert a.read() == b.read()

    def test_resume_after_interruption(self, tmp_path):
        complete, interrupted = tmp_path / "complete.jsonl", tmp_path / "interrupted.jsonl"
        ScanApplicationService().run_scan(small_cycle_config(str(complete)))
        lines = complete.read_text(encoding='utf-8').splitlines(keepends=True)
        assert len(lines) > 3
        interrupted.write_text(lines[0] + lines[1] + lines[2][:10], encoding='utf-8')

        summary = ScanApplicationService().run_scan(small_cycle_config(str(interrupted), resume=True))
        assert interrupted.read_text(encoding='utf-8') == complete.read_text(encoding='utf-8')
        assert summary['total'] == len(lines)
        assert summary['skipped'] == 2

    def test_resume_without_previous_output(self, scan_output):
        summary = ScanApplicationService().run_scan(small_cycle_config(scan_output, resume=True))
        assert summary['skipped'] == 0
        assert summary['total'] > 0

    def test_fresh_run_truncates(self, scan_output):
        cfg = small_cycle_config(scan_output)
        ScanApplicationService().run_scan(cfg)
        first = open(scan_output, encoding='utf-8').read()
        ScanApplicationService().run_scan(cfg)
        assert open(scan_output, encoding='utf-8').read() == first

    def test_empty_scan(self, scan_output):
        summary = ScanApplicationService().run_scan(small_cycle_config(scan_output, a_max=1))
        assert summary['total'] == 0
        assert summary['counterexamples'] == 0
        assert open(scan_output, encoding='utf-8').read() == ""


class TestScanRecordRepository:

    def test_repair_drops_truncated_tail(self, tmp_path):
        path = tmp_path / "records.jsonl"
        path.write_text(json.dumps({'ws': '1:3'}) + "\n" + '{"ws": "1:', encoding='utf-8')
        repository = ScanRecordRepository(str(path))
        assert repository.repair() == 1
        assert repository.find_keys() == ['1:3']
        assert path.read_text(encoding='utf-8').endswith("\n")

    def test_repair_completes_unterminated_record(self, tmp_path):
        path = tmp_path / "records.jsonl"
        path.write_text(json.dumps({'ws': '1:3'}), encoding='utf-8')
        assert ScanRecordRepository(str(path)).repair() == 1
        assert path.read_text(encoding='utf-8') == json.dumps({'ws': '1:3'}) + "\n"
