"""Pure-numpy orbit enumeration, same contract as the compiled kernel."""

from __future__ import annotations

import numpy as np

_SCAN = 1 << 16


def _powers(B: int, k: int) -> np.ndarray:
    return np.array([B ** (k - 1 - i) for i in range(k)], dtype=np.int64)


def _images(tables, tops, pw, B, pts):
    out = []
    for g in range(tables.shape[0]):
        img = np.zeros_like(pts)
        for i in range(tables.shape[1]):
            img += tables[g, i][(pts // pw[i]) % B].astype(np.int64) * pw[tops[g, i]]
        out.append(img)
    return np.concatenate(out) if out else pts[:0]


def _bfs(tables, tops, pw, B, seed, label, labels):
    labels[seed] = label
    frontier = np.array([seed], dtype=np.int64)
    size = 1
    while frontier.size:
        imgs = _images(tables, tops, pw, B, frontier)
        new = np.unique(imgs[labels[imgs] < 0])
        labels[new] = label
        size += new.size
        frontier = new
    return size


def orbit_labels(tables, tops, B: int, k: int, threads: int = 1):
    tables = np.asarray(tables, dtype=np.int32)
    tops = np.asarray(tops, dtype=np.int32)
    N = B ** k
    pw = _powers(B, k)
    labels = np.full(N, -1, dtype=np.int32)
    reps, sizes = [], []
    cursor = 0
    while cursor < N:
        window = np.flatnonzero(labels[cursor:cursor + _SCAN] < 0)
        if window.size == 0:
            cursor += _SCAN
            continue
        s = cursor + int(window[0])
        sizes.append(_bfs(tables, tops, pw, B, s, len(reps), labels))
        reps.append(s)
        cursor = s + 1
    return labels, reps, sizes


def orbit_size(tables, tops, B: int, k: int, seed: int, threads: int = 1) -> int:
    tables = np.asarray(tables, dtype=np.int32)
    tops = np.asarray(tops, dtype=np.int32)
    labels = np.full(B ** k, -1, dtype=np.int32)
    return _bfs(tables, tops, _powers(B, k), B, seed, 0, labels)
