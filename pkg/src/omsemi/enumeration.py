"""Exhaustive enumeration of small semigroups up to isomorphism."""

from itertools import permutations

from .errors import SizeTooLarge
from .semigroup import FiniteSemigroup

_CACHE = {}


def enumerate_semigroups(n, predicate=None, allow_large=False):
    """Yield one semigroup per isomorphism class of order n.

    Each class is represented by its lexicographically smallest table, and
    classes come out in lexicographic table order, so the stream is
    deterministic.  `predicate` may be a callable on semigroups or a pair of
    terms (lhs, rhs) filtering by the identity lhs = rhs.  Orders above 4
    take long enough that 5 sits behind `allow_large`.
    """
    if not 1 <= n <= 5:
        raise SizeTooLarge(f"can only enumerate orders 1..5, got {n}")
    if n == 5 and not allow_large:
        raise SizeTooLarge("order 5 enumeration is slow; pass allow_large=True")
    if isinstance(predicate, tuple):
        from .terms import satisfies_identity
        lhs, rhs = predicate
        predicate = lambda S: satisfies_identity(S, lhs, rhs)
    if n not in _CACHE:
        _CACHE[n] = _canonical_tables(n)
    for table in _CACHE[n]:
        S = FiniteSemigroup([list(row) for row in table])
        if predicate is None or predicate(S):
            yield S


def _canonical_tables(n):
    perms = [p for p in permutations(range(n)) if p != tuple(range(n))]
    inverses = []
    for p in perms:
        inv = [0] * n
        for a, pa in enumerate(p):
            inv[pa] = a
        inverses.append((p, inv))

    table = [[None] * n for _ in range(n)]
    cells = [(i, j) for i in range(n) for j in range(n)]
    out = []

    def consistent(i, j):
        # recheck only the triples that mention the cell just assigned
        t = table
        k = t[i][j]
        for c in range(n):
            lhs = t[k][c]
            q = t[j][c]
            if lhs is not None and q is not None:
                rhs = t[i][q]
                if rhs is not None and lhs != rhs:
                    return False
        for a in range(n):
            rhs = t[a][k]
            p = t[a][i]
            if rhs is not None and p is not None:
                lhs = t[p][j]
                if lhs is not None and lhs != rhs:
                    return False
        for a in range(n):
            row = t[a]
            for b in range(n):
                if row[b] == i:
                    q = t[b][j]
                    if q is not None:
                        rhs = t[a][q]
                        if rhs is not None and rhs != k:
                            return False
        for b in range(n):
            rowb = table[b]
            for c in range(n):
                if rowb[c] == j:
                    p = table[i][b]
                    if p is not None:
                        lhs = table[p][c]
                        if lhs is not None and lhs != k:
                            return False
        return True

    def is_canonical():
        t = table
        for perm, inv in inverses:
            for x in range(n):
                tx = t[inv[x]]
                row = t[x]
                for y in range(n):
                    v = perm[tx[inv[y]]]
                    w = row[y]
                    if v < w:
                        return False
                    if v > w:
                        break
                else:
                    continue
                break
        return True

    def fill(idx):
        if idx == len(cells):
            if is_canonical():
                out.append(tuple(tuple(row) for row in table))
            return
        i, j = cells[idx]
        for k in range(n):
            table[i][j] = k
            if consistent(i, j):
                fill(idx + 1)
        table[i][j] = None

    fill(0)
    return out
