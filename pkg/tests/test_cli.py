import csv
import json
import os

import pytest

from cl33.cli import main

SAMPLE_SPEC = os.path.join(os.path.dirname(__file__), '..', 'scripts',
                           'samples', 'plane_wave_spec.txt')


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def report_of(out):
    return json.loads(out)


def test_axioms_pass(capsys):
    code, out, _ = run(capsys, 'axioms')
    assert code == 0
    report = report_of(out)
    assert report['command'] == 'axioms'
    assert report['status'] == 'pass'
    assert report['seed'] == 0


def test_corrupt_metric_fails(capsys):
    code, out, _ = run(capsys, 'axioms', '--corrupt-metric')
    assert code == 1
    failed = {c['name'] for c in report_of(out)['checks']
              if c['status'] == 'fail'}
    assert 'square.s3' in failed


def test_usage_errors_exit_two(capsys):
    assert run(capsys)[0] == 2
    assert run(capsys, 'charges')[0] == 2
    assert run(capsys, 'rotors', '--b', '1,2')[0] == 2
    assert run(capsys, '--help')[0] == 0


@pytest.mark.parametrize('argv', [
    ('--seed', '5', 'rotors'),
    ('rotors', '--seed', '5'),
    ('--seed', '2', 'rotors', '--seed', '5'),
    ('--verbose', 'rotors', '--seed', '5'),
    ('rotors', '--verbose', '--seed', '5'),
])
def test_global_flags_on_either_side_of_the_command(capsys, argv):
    code, out, _ = run(capsys, *argv)
    assert code == 0
    assert report_of(out)['seed'] == 5


@pytest.mark.parametrize('before', [True, False])
def test_json_out_on_either_side_of_the_command(capsys, tmp_path, before):
    path = str(tmp_path / 'charges.json')
    command = ('charges', '--q', '(t)')
    argv = ('--json-out', path) + command if before else \
        command + ('--json-out', path)
    code, out, _ = run(capsys, *argv)
    assert code == 0
    assert 'charges: pass' in out
    with open(path) as fio:
        assert json.load(fio)['command'] == 'charges'


def test_seed_after_derive_maxwell(capsys):
    code, out, _ = run(capsys, 'derive-maxwell', '--spec-file', SAMPLE_SPEC,
                       '--seed', '11')
    assert code == 0
    assert report_of(out)['seed'] == 11


def test_charges_report(capsys):
    code, out, _ = run(capsys, 'charges', '--q', '(t-0.2)/(t+0.3i)')
    assert code == 0
    report = report_of(out)
    names = {c['name'] for c in report['checks']}
    assert {'argument_principle', 'conjugate_negation', 'xi_closed_form',
            'xi_convergence'} <= names


def test_charges_parse_error_reports_offset(capsys):
    code, _, err = run(capsys, 'charges', '--q', '(t-1)*(t-1)')
    assert code == 2
    assert 'error at byte 6' in err


def test_charges_contour_through_zero(capsys):
    code, _, err = run(capsys, 'charges', '--q', '(t-1)')
    assert code == 2
    assert err.startswith('error')


def test_charges_quadrature_failure(capsys):
    code, out, _ = run(capsys, 'charges', '--q', '(t)/(t-1.05)',
                       '--samples', '64')
    assert code == 1
    report = report_of(out)
    assert report['checks'][0]['name'] == 'quadrature'


def test_charges_coarse_rerun_is_informational(capsys):
    # 48 zeros near the center: the phase step is 0.75 pi at 128 samples
    # and 1.5 pi at 64
    q = '*'.join('(t-{:.3f})'.format(0.001 * n) for n in range(1, 49))
    code, out, _ = run(capsys, 'charges', '--q', q, '--samples', '128')
    checks = {c['name']: c for c in report_of(out)['checks']}
    assert 'quadrature' not in checks
    assert checks['argument_principle']['status'] == 'pass'
    assert checks['xi_convergence']['status'] == 'info'
    assert checks['charge']['detail']['N'] == 48


def test_rotors(capsys):
    code, out, _ = run(capsys, '--seed', '3', 'rotors', '--alpha', '0.7',
                       '--b', '0,0.6,0.8')
    assert code == 0
    assert report_of(out)['seed'] == 3


def test_rotors_reject_non_unit_direction(capsys):
    code, _, _ = run(capsys, 'rotors', '--b', '0,0,2')
    assert code == 2


def test_planewave(capsys):
    code, out, _ = run(capsys, 'planewave', '--alpha', '-0.4')
    assert code == 0
    names = {c['name'] for c in report_of(out)['checks']}
    assert 'chirality.conjugated' in names
    assert 'boosted_left.boost_covariance' in names


def test_wavepacket_writes_csv_and_table(capsys, tmp_path):
    csv_path = tmp_path / 'packet.csv'
    json_path = tmp_path / 'report.json'
    code, out, _ = run(capsys, '--json-out', str(json_path), 'wavepacket',
                       '--N', '2', '--csv-out', str(csv_path))
    assert code == 0
    assert 'wavepacket: pass' in out
    report = json.loads(json_path.read_text())
    assert report['status'] == 'pass'
    with open(str(csv_path), newline='') as fio:
        rows = list(csv.reader(fio))
    assert rows[0][0] == 'u'
    assert len(rows) == 1025


def test_detuned_packet_is_an_input_error(capsys):
    code, _, err = run(capsys, 'wavepacket', '--fg', '0.6')
    assert code == 2
    assert 'allow_detuned' in err


def test_detuned_packet_allowed(capsys):
    code, out, _ = run(capsys, 'wavepacket', '--fN', '1.3',
                       '--allow-detuned')
    assert code == 0
    statuses = {c['name']: c['status'] for c in report_of(out)['checks']}
    assert statuses['edge_B.end'] == 'info'


def test_undersampled_packet_fails(capsys):
    code, out, _ = run(capsys, 'wavepacket', '--samples', '10')
    assert code == 1
    assert report_of(out)['status'] == 'fail'


def test_derive_maxwell_from_spec_file(capsys):
    code, out, _ = run(capsys, 'derive-maxwell', '--spec-file', SAMPLE_SPEC)
    assert code == 0
    names = {c['name'] for c in report_of(out)['checks']}
    assert 'spec.gauss' in names


def test_derive_maxwell_bad_spec_file(capsys, tmp_path):
    path = tmp_path / 'bad.txt'
    path.write_text('K1 = x1\nQ = 1\n')
    code, _, err = run(capsys, 'derive-maxwell', '--spec-file', str(path))
    assert code == 2
    assert 'error at byte 8' in err
    code, _, _ = run(capsys, 'derive-maxwell', '--spec-file',
                     str(tmp_path / 'missing.txt'))
    assert code == 2


@pytest.mark.slow
def test_derive_maxwell_full_run(capsys):
    code, out, _ = run(capsys, 'derive-maxwell', '--seed', '11')
    assert code == 0
    names = {c['name'] for c in report_of(out)['checks']}
    assert 'primed_plane_wave.primed_gauss' in names
    assert any(n.startswith('sta.ramp.') for n in names)
