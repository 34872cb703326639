#!/usr/bin/env python3

import os

from biregkit.utils import get_data_path, get_test_limit, is_smoke_test_mode, is_test_mode, limit_count


def test_production_mode(monkeypatch, tmp_path):
    """Test defaults without BIREGKIT_TEST"""
    monkeypatch.delenv('BIREGKIT_TEST', raising=False)
    monkeypatch.chdir(tmp_path)
    assert not is_test_mode()
    assert get_test_limit() is None
    assert limit_count(20) == 20
    assert get_data_path('powers.json') == os.path.join('data', 'powers.json')


def test_test_modes(monkeypatch, tmp_path):
    """Test corpus caps and output directories in test and smoke modes"""
    monkeypatch.chdir(tmp_path)
    monkeypatch.setenv('BIREGKIT_TEST', '1')
    assert is_test_mode() and not is_smoke_test_mode()
    assert limit_count(20) == 5
    assert limit_count(3) == 3
    assert get_data_path('x.json') == os.path.join('data/test', 'x.json')

    monkeypatch.setenv('BIREGKIT_TEST', '2')
    assert is_smoke_test_mode()
    assert limit_count(20) == 1
    assert get_data_path('x.json') == os.path.join('data/smoke', 'x.json')
    assert (tmp_path / 'data' / 'smoke').is_dir()
