"""Memo tables for the deletion-contraction recurrences.

A plain ``dict`` is the default, scoped to one top-level call. A
:class:`SharedCache` can be passed explicitly to reuse results across calls
and threads.
"""

import threading


class SharedCache:
    """Lock-protected dict usable from several threads at once."""

    def __init__(self):
        self._data = {}
        self._lock = threading.Lock()

    def get(self, key, default=None):
        with self._lock:
            return self._data.get(key, default)

    def __setitem__(self, key, value):
        with self._lock:
            self._data.setdefault(key, value)

    def __len__(self):
        with self._lock:
            return len(self._data)

    def clear(self):
        with self._lock:
            self._data.clear()
