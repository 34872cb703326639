#!/usr/bin/env python3

import json

import pytest
from biregkit.cli import main
from biregkit.documents import IdealDocument, Report
from biregkit.errors import MathError, ParseError
from biregkit.ring import RingSignature


XBI = {
    'ring': {'n': 3, 'm': 3, 'field': 'Q'},
    'generators': ['y2*x2 - y1*x3', 'y3*x1 - y1*x3'],
    'metadata': {'name': 'xbi'},
}


def _write(tmp_path, data, name='ideal.json'):
    path = tmp_path / name
    path.write_text(json.dumps(data) if not isinstance(data, str) else data)
    return str(path)


def test_document_loading():
    """Test reading the worked example document"""
    document = IdealDocument.from_json(XBI)
    assert document.ring == RingSignature(3, 3)
    assert len(document.ideal()) == 2
    assert json.loads(document.dumps())['generators'] == XBI['generators']


def test_document_errors():
    """Test malformed documents and generators"""
    with pytest.raises(ParseError) as err:
        IdealDocument.loads('{\n  "ring": ')
    assert err.value.line == 2

    with pytest.raises(ParseError):
        IdealDocument.from_json({'generators': []})
    with pytest.raises(ParseError):
        IdealDocument.from_json({'ring': {'n': 1}, 'generators': []})
    with pytest.raises(ParseError):
        IdealDocument.from_json({'ring': {'n': 1, 'm': 1}, 'generators': [3]})

    bad = IdealDocument.from_json({'ring': {'n': 1, 'm': 1}, 'generators': ['x1', 'x1 + y1^2']})
    with pytest.raises(MathError):
        bad.ideal()
    assert len(bad.ideal(allow_inhomogeneous=True)) == 2

    with pytest.raises(ParseError) as err:
        IdealDocument.from_json({'ring': {'n': 1, 'm': 1}, 'generators': ['x1', 'x1 +']}).ideal()
    assert err.value.line == 2


def test_report_json():
    """Test the report layout"""
    report = Report('betti', {'seed': 0}, {'entries': []}, seed=0, elapsed=0.1234)
    data = json.loads(report.dumps())
    assert data['command'] == 'betti'
    assert data['elapsed'] == 0.123
    assert data['complete'] is True


def test_cli_betti(tmp_path, capsys):
    """Test `biregkit betti` on the worked example"""
    assert main(['betti', '--input', _write(tmp_path, XBI)]) == 0
    output = json.loads(capsys.readouterr().out)
    assert output['complete']
    entries = {(e['i'], e['a'], e['b']): e['beta'] for e in output['results']['entries']}
    assert entries == {(0, 0, 0): 1, (1, 1, 1): 2, (2, 2, 2): 1}


def test_cli_reg_and_veronese(tmp_path, capsys):
    """Test `biregkit reg` and `biregkit veronese` on S/(x1y1)"""
    path = _write(tmp_path, {'ring': {'n': 1, 'm': 1}, 'generators': ['x1*y1']})
    assert main(['reg', '--input', path, '--via', 'betti']) == 0
    output = json.loads(capsys.readouterr().out)
    assert (output['results']['reg_x'], output['results']['reg_y']) == (0, 0)

    assert main(['veronese', '--input', path, '--s', '2', '--t', '1', '--method', 'taylor']) == 0
    output = json.loads(capsys.readouterr().out)
    assert output['results']['s_star'] == 1


def test_cli_error_exit_codes(tmp_path, capsys):
    """Test exit codes 2 (parse) and 3 (math)"""
    assert main(['betti', '--input', _write(tmp_path, '{"ring": ', 'broken.json')]) == 2
    assert json.loads(capsys.readouterr().out)['error']['type'] == 'ParseError'

    path = _write(tmp_path, {'ring': {'n': 2, 'm': 0}, 'generators': ['x1', 'x2^2']})
    assert main(['powers', '--input', path, '--jmax', '2']) == 3
    assert json.loads(capsys.readouterr().out)['error']['type'] == 'MathError'

    assert main(['betti', '--input', _write(tmp_path, XBI), '--field', 'Fp:9']) == 3


def test_cli_corpus(tmp_path, capsys):
    """Test `biregkit corpus` writing documents"""
    out = tmp_path / 'corpus'
    assert main(['corpus', '--flavor', 'bistable', '--seed', '4', '--count', '2', '--out', str(out)]) == 0
    output = json.loads(capsys.readouterr().out)
    assert len(output['results']['written']) == 2
    assert len(list(out.glob('*.json'))) == 2


def test_cli_zero_ideal(tmp_path, capsys):
    """Test `biregkit reg` on J = 0"""
    path = _write(tmp_path, {'ring': {'n': 2, 'm': 1}, 'generators': []})
    assert main(['reg', '--input', path]) == 0
    output = json.loads(capsys.readouterr().out)
    assert (output['results']['reg_x'], output['results']['reg_y']) == (0, 0)
