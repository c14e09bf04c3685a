"""Plain word combinatorics: factors, scattered subwords, Thue-Morse.

Words are ordinary strings over single-character letters.  "Factor" always
means a contiguous block; "scattered subword" means a not necessarily
contiguous subsequence.  The two notions are never mixed up under a shared
name here.
"""

import numpy as np


def scattered_subword(u, v):
    """True iff u embeds in v as a subsequence (greedy two-pointer scan)."""
    it = iter(v)
    return all(ch in it for ch in u)


def factors_up_to(w, k):
    """All nonempty factors of w of length <= k."""
    out = set()
    n = len(w)
    for i in range(n):
        top = min(k, n - i)
        for l in range(1, top + 1):
            out.add(w[i:i + l])
    return out


def count_occurrences(w, f):
    """Number of (possibly overlapping) occurrences of the factor f in w."""
    if not f:
        raise ValueError("factor must be nonempty")
    count = 0
    start = 0
    while True:
        pos = w.find(f, start)
        if pos < 0:
            return count
        count += 1
        start = pos + 1


def disjoint_occurrences(w, f):
    """Greatest number of pairwise disjoint occurrences of f in w.

    The greedy left-to-right scan is optimal for a single pattern.
    """
    if not f:
        raise ValueError("factor must be nonempty")
    count = 0
    start = 0
    while True:
        pos = w.find(f, start)
        if pos < 0:
            return count
        count += 1
        start = pos + len(f)


def apply_morphism(w, images):
    return "".join(images[ch] for ch in w)


THUE_MORSE = {"x": "xy", "y": "yx"}


def ptm_iterate(n):
    """The n-th iterate of the Prouhet-Thue-Morse substitution on x."""
    if n < 0:
        raise ValueError("iteration count must be >= 0")
    w = "x"
    for _ in range(n):
        w = apply_morphism(w, THUE_MORSE)
    return w


def is_cube_free(w):
    """True iff no factor of w has the shape fff.

    Vectorised over the candidate period: for each l, positions where
    w[i] == w[i+l] are found in one pass, and a cube of period l exists iff
    2l consecutive positions all match.
    """
    n = len(w)
    if n < 3:
        return True
    arr = np.frombuffer(w.encode("utf-8"), dtype=np.uint8)
    if len(arr) != n:
        # non-ascii letters: fall back to integer codes
        arr = np.fromiter((ord(c) for c in w), dtype=np.int64, count=n)
    for l in range(1, n // 3 + 1):
        eq = arr[:-l] == arr[l:]
        c = np.concatenate(([0], np.cumsum(eq)))
        # a cube starting at i needs eq[i .. i+2l-1] all true
        width = 2 * l
        if np.any(c[width:] - c[:-width] == width):
            return False
    return True


def _cube_at(w, i, l):
    return w[i:i + l] == w[i + l:i + 2 * l] == w[i + 2 * l:i + 3 * l]


def end_factors_doubled(w, flen=4, end_distance=8):
    """Every length-flen factor near the end recurs disjointly.

    Checks that each factor of length flen whose start lies within
    end_distance of the end of w has at least two disjoint occurrences in w.
    """
    n = len(w)
    for i in range(max(0, n - flen - end_distance + 1), n - flen + 1):
        if disjoint_occurrences(w, w[i:i + flen]) < 2:
            return False
    return True
