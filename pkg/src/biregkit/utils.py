#!/usr/bin/env python3
"""
Common utilities for the biregkit project.
"""

import os
from datetime import datetime


# Test mode configuration
def is_test_mode():
    """Check if running in test mode"""
    return bool(os.environ.get('BIREGKIT_TEST'))


def is_smoke_test_mode():
    """Check if running in smoke test mode (single ideal per corpus)"""
    return os.environ.get('BIREGKIT_TEST') == '2'


def get_test_limit():
    """Get the corpus size limit for test modes"""
    test_env = os.environ.get('BIREGKIT_TEST')
    if test_env == '2':
        return 1  # Single ideal for smoke tests
    elif test_env:
        return 5  # Small corpora for regular tests
    else:
        return None  # No limit for production


def limit_count(count):
    """Cap a requested corpus size by the test-mode limit"""
    limit = get_test_limit()
    if limit is None:
        return count
    return min(count, limit)


def get_data_path(filename):
    """Get the appropriate data path (test or production)"""
    if is_smoke_test_mode():
        smoke_dir = 'data/smoke'
        os.makedirs(smoke_dir, exist_ok=True)
        return os.path.join(smoke_dir, filename)
    elif is_test_mode():
        test_dir = 'data/test'
        os.makedirs(test_dir, exist_ok=True)
        return os.path.join(test_dir, filename)
    else:
        os.makedirs('data', exist_ok=True)
        return os.path.join('data', filename)


def get_current_timestamp():
    """Get current timestamp in ISO 8601 format"""
    return datetime.now().isoformat()
