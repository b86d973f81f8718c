import csv
from fractions import Fraction
import json

import pytest

from cl33.core.config import DEFAULT_TOLERANCE, get_tolerance, make_rng
from cl33.core.constants import generator
from cl33.core.exceptions import BadInput, BadType
from cl33.core.report import Check, VerificationReport, measure, prefixed
from cl33.exporters import ToCsv, ToTable
from cl33.exporters.to_csv import CSV_HEADER
from cl33.waves.packet import SampledField


def test_exact_residuals_must_vanish():
    assert measure('zero', generator('t1') - generator('t1')).exact_zero
    check = measure('tiny', Fraction(1, 10 ** 30))
    assert check.status == 'fail'
    assert check.tolerance is None


def test_double_residuals_use_tolerance():
    assert measure('small', 1e-14).passed
    assert not measure('large', 1e-6).passed
    assert measure('loose', 1e-6, tol=1e-5).passed
    check = measure('vector', [0.0, -3e-13, 1e-13j])
    assert check.residual == pytest.approx(3e-13)


def test_measure_rejects_unknown_values():
    with pytest.raises(BadInput):
        measure('text', 'residual')


def test_check_constructors():
    assert Check.flag('ok', True).get_dict()['residual'] == 'exact-zero'
    assert Check.flag('bad', False).status == 'fail'
    info = Check.info('note', detail={'k': 1})
    assert info.passed and info.get_dict()['detail'] == {'k': 1}
    with pytest.raises(BadInput):
        Check('x', 'maybe')
    with pytest.raises(BadType):
        Check(3, 'pass')


def test_prefixed_renames_in_place():
    checks = prefixed('library', [Check.flag('a', True)])
    assert checks[0].name == 'library.a'


def test_report_status_and_exit_code():
    report = VerificationReport('axioms', seed=0)
    report.add(Check.flag('a', True))
    report.add(Check.info('b'))
    assert report.exit_code == 0
    report.add(Check.flag('c', False))
    assert report.status == 'fail'
    assert report.exit_code == 1
    assert [c.name for c in report.failures()] == ['c']
    assert report.get('b').status == 'info'
    assert report.get('missing') is None
    with pytest.raises(BadType):
        report.add('not a check')


def test_report_json_reload(tmp_path):
    report = VerificationReport('rotors', seed=7)
    report.extend([measure('exact', 0), measure('double', 2e-13),
                   Check.info('meta', detail=[1, 2])])
    path = tmp_path / 'report.json'
    report.to_file(str(path))
    data = json.loads(path.read_text())
    assert data['report_version'] == 1
    assert data['status'] == 'pass'
    assert data['checks'][0]['residual'] == 'exact-zero'
    again = VerificationReport.from_str(report.to_str())
    assert again.to_str() == report.to_str()


def test_tolerance_from_environment(monkeypatch):
    monkeypatch.delenv('CL33_TOLERANCE', raising=False)
    assert get_tolerance() == DEFAULT_TOLERANCE
    monkeypatch.setenv('CL33_TOLERANCE', '1e-8')
    assert get_tolerance() == 1e-8
    assert measure('loose', 1e-9).passed
    monkeypatch.setenv('CL33_TOLERANCE', '-1')
    assert get_tolerance() == DEFAULT_TOLERANCE
    monkeypatch.setenv('CL33_TOLERANCE', 'tight')
    assert get_tolerance() == DEFAULT_TOLERANCE


def test_named_generator_is_deterministic():
    assert make_rng(5).normal() == make_rng(5).normal()


def test_csv_export(tmp_path):
    sampled = SampledField([0.0, 0.5], [[1 + 2j, 0, 0], [0, 0, 1j]],
                           [[0, 1, 0], [0, 0, 0]])
    path = tmp_path / 'packet.csv'
    ToCsv().to_csv(sampled, str(path))
    with open(str(path), newline='') as fio:
        rows = list(csv.reader(fio))
    assert rows[0] == CSV_HEADER
    assert len(rows) == 3
    assert [float(v) for v in rows[1][:3]] == [0.0, 1.0, 2.0]
    assert float(rows[2][6]) == 1.0
    with pytest.raises(BadType):
        ToCsv().to_csv([1, 2, 3], str(path))


def test_table_summary():
    report = VerificationReport('charges')
    report.extend([measure('exact', 0), Check.flag('broken', False)])
    text = ToTable().to_str(report)
    assert 'exact-zero' in text
    assert 'charges: fail (2 checks, 1 failed)' in text
    only = ToTable(failures_only=True).to_str(report)
    assert 'broken' in only and 'exact-zero' not in only
    with pytest.raises(BadType):
        ToTable().to_str({'command': 'charges'})
