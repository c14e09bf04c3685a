"""Shared helpers for the test suite."""

import random

from omsemi.semigroup import FiniteSemigroup


def transformation_closure(gens):
    """Closure of a set of transformations (tuples) under composition.

    Composition order matches word reading: the product of f and g acts as
    f first, then g.  Returns (elements, table) with elements in discovery
    order.
    """
    k = len(gens[0])
    elems = []
    index = {}
    for g in gens:
        if g not in index:
            index[g] = len(elems)
            elems.append(g)
    frontier = list(elems)
    while frontier:
        new = []
        for f in frontier:
            for g in list(elems):
                for h in (tuple(g[f[i]] for i in range(k)),
                          tuple(f[g[i]] for i in range(k))):
                    if h not in index:
                        index[h] = len(elems)
                        elems.append(h)
                        new.append(h)
        frontier = new
    table = [[index[tuple(g[f[i]] for i in range(k))] for g in elems]
             for f in elems]
    return elems, table


def transformation_semigroup(gens):
    elems, table = transformation_closure(gens)
    return FiniteSemigroup(table)


def full_transformation_monoid(k):
    """All k^k transformations of {0..k-1}."""
    import itertools
    gens = [tuple(t) for t in itertools.product(range(k), repeat=k)]
    elems, table = transformation_closure(gens)
    S = FiniteSemigroup(table)
    S.identity = elems.index(tuple(range(k)))
    return S, elems


def rectangular_band(r, c):
    """(i,j)(k,l) = (i,l) on r*c elements."""
    n = r * c
    table = [[(a // c) * c + (b % c) for b in range(n)] for a in range(n)]
    return FiniteSemigroup(table)


def random_small_semigroup(rng):
    """A deterministic pseudo-random semigroup of order <= 6."""
    kind = rng.randrange(3)
    if kind == 0:
        i = rng.randrange(1, 6)
        p = rng.randrange(1, 7 - i)
        return FiniteSemigroup.cyclic(i, p)
    if kind == 1:
        a = FiniteSemigroup.cyclic(rng.randrange(1, 3), rng.randrange(1, 3))
        b = FiniteSemigroup.cyclic(rng.randrange(1, 3), rng.randrange(1, 3))
        if a.n * b.n <= 6:
            return FiniteSemigroup.direct_product(a, b)
        return a
    while True:
        k = rng.randrange(2, 4)
        gens = [tuple(rng.randrange(k) for _ in range(k))
                for _ in range(rng.randrange(1, 3))]
        elems, table = transformation_closure(gens)
        if len(elems) <= 6:
            return FiniteSemigroup(table)


def naive_power(S, s, k):
    """s^k by plain left-to-right multiplication."""
    e = s
    for _ in range(k - 1):
        e = S.table[e][s]
    return e


def random_term(rng, alphabet="xy", depth=3, offsets=(0, 1, -1), primes=()):
    from omsemi.terms import (Concat, FinitePower, Letter, OmegaPower,
                              PrimeOmegaPower)
    if depth == 0 or rng.random() < 0.35:
        return Letter(rng.choice(alphabet))
    k = rng.randrange(8)
    sub = lambda: random_term(rng, alphabet, depth - 1, offsets, primes)
    if k <= 3:
        return Concat(sub(), sub())
    if k <= 5:
        return OmegaPower(sub(), rng.choice(offsets))
    if k == 6:
        return FinitePower(sub(), rng.randrange(1, 4))
    if primes and rng.random() < 0.5:
        return PrimeOmegaPower(sub(), rng.choice(primes))
    return OmegaPower(sub(), rng.choice(offsets))


def random_generator_map(rng, S, alphabet="xy"):
    from omsemi.semigroup import GeneratorMap
    return GeneratorMap(S, {ch: rng.randrange(S.n) for ch in alphabet})


def random_dfa(rng, max_states=6, alphabet="ab"):
    """A random complete DFA with at least one accepting and one rejecting
    state, so its minimal form is never the trivial automaton."""
    from omsemi.dfa import Dfa
    while True:
        n = rng.randrange(2, max_states + 1)
        transitions = [[rng.randrange(n) for _ in alphabet] for _ in range(n)]
        accepting = {q for q in range(n) if rng.random() < 0.4}
        if 0 < len(accepting) < n:
            return Dfa(alphabet, transitions, 0, accepting)


def random_transition_monoid(rng, max_states=6, alphabet="ab",
                             max_elements=300):
    """Transition monoid of a random language, resampled until it fits
    under max_elements.  Returns (monoid, letter -> element map)."""
    from omsemi.errors import SizeTooLarge
    from omsemi.syntactic import syntactic_semigroup
    while True:
        d = random_dfa(rng, max_states, alphabet)
        try:
            pres = syntactic_semigroup(d, max_elements=max_elements)
        except SizeTooLarge:
            continue
        m = pres.monoid_completion()
        if m.n <= max_elements:
            return m, pres.monoid_generator_map()


def term_spine(t):
    """Top-level concatenation factors of a term, left to right."""
    from omsemi.terms import Concat
    if isinstance(t, Concat):
        return term_spine(t.left) + term_spine(t.right)
    return [t]


def concat_all(parts):
    from omsemi.terms import Concat
    out = parts[0]
    for p in parts[1:]:
        out = Concat(out, p)
    return out


def commuted_copy(rng, t):
    """A copy of t with concatenation children randomly swapped; the
    commutative image is unchanged."""
    from omsemi.terms import (Concat, FinitePower, OmegaPower,
                              PrimeOmegaPower)
    if isinstance(t, Concat):
        left = commuted_copy(rng, t.left)
        right = commuted_copy(rng, t.right)
        return Concat(right, left) if rng.random() < 0.5 else Concat(left, right)
    if isinstance(t, OmegaPower):
        return OmegaPower(commuted_copy(rng, t.base), t.k)
    if isinstance(t, PrimeOmegaPower):
        return PrimeOmegaPower(commuted_copy(rng, t.base), t.p)
    if isinstance(t, FinitePower):
        return FinitePower(commuted_copy(rng, t.base), t.m)
    return t


def random_superterm(rng, t, alphabet="xy", max_insert=3):
    """A term containing t: random short words interleaved into t's
    top-level concatenation spine.  Unrolling the result always contains
    an unrolling of t as a scattered subword."""
    from omsemi.terms import Letter
    word = lambda: concat_all([Letter(rng.choice(alphabet))
                               for _ in range(rng.randrange(1, max_insert + 1))])
    out = []
    for part in term_spine(t):
        while rng.random() < 0.4:
            out.append(word())
        out.append(part)
    while rng.random() < 0.6:
        out.append(word())
    return concat_all(out)
