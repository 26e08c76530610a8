"""Compiled enumeration kernel for the genus polynomial.

Walks the subsets of loops in Gray-code order, toggling one occurrence sign
per step, and re-traces the boundary from scratch each time.  Endpoint
encoding matches :mod:`bouquet_petrial.boundary`.
"""

import numpy as np
from numba import njit


@njit(cache=True, nogil=True)
def _count_faces(signs, partner, visited):
    m = signs.shape[0]
    ne = 2 * m
    for k in range(ne):
        visited[k] = False
    faces = 0
    for start in range(ne):
        if visited[start]:
            continue
        faces += 1
        x = start
        while True:
            i = x >> 1
            side = x & 1
            j = partner[i]
            if signs[i] == signs[j]:
                y = 2 * j + 1 - side
            else:
                y = 2 * j + side
            visited[x] = True
            visited[y] = True
            # vertex segment: b_i -- a_{i+1}
            if y & 1:
                x = 2 * (((y >> 1) + 1) % m)
            else:
                x = 2 * (((y >> 1) - 1) % m) + 1
            if x == start:
                break
    return faces


@njit(cache=True, nogil=True)
def enumerate_block(signs0, partner, toggle_pos, fixed_mask, low_bits):
    """Genus counts over all subsets whose high bits equal ``fixed_mask``.

    ``toggle_pos[b]`` is the occurrence flipped when loop ``b`` is in the
    subset.  Bits below ``low_bits`` are enumerated; the rest are fixed.
    Returns an array indexed by Euler genus.
    """
    m = signs0.shape[0]
    n = m // 2
    signs = signs0.copy()
    for b in range(n):
        if (fixed_mask >> b) & 1:
            signs[toggle_pos[b]] = -signs[toggle_pos[b]]
    visited = np.zeros(2 * m, dtype=np.bool_)
    counts = np.zeros(n + 1, dtype=np.int64)
    f = _count_faces(signs, partner, visited)
    counts[1 + n - f] += 1
    total = np.int64(1) << low_bits
    for t in range(1, total):
        # lowest set bit of t is the loop that changes between Gray codes
        b = 0
        while not (t >> b) & 1:
            b += 1
        p = toggle_pos[b]
        signs[p] = -signs[p]
        f = _count_faces(signs, partner, visited)
        counts[1 + n - f] += 1
    return counts
