"""Regular expressions: abstract syntax, parser, Thompson automaton.

Concrete syntax is ASCII: single-character letters, juxtaposition for
concatenation, ``|`` for union, postfix ``*`` and ``+``, parentheses.
Whitespace is ignored.  An empty branch denotes the empty word, so ``""``
and ``(|a)`` are both valid.
"""

from dataclasses import dataclass

from .errors import ParseError

_SPECIAL = set("|*+()")


@dataclass(frozen=True)
class Empty:
    """The empty word."""


@dataclass(frozen=True)
class Sym:
    ch: str


@dataclass(frozen=True)
class Union:
    left: object
    right: object


@dataclass(frozen=True)
class Concat:
    left: object
    right: object


@dataclass(frozen=True)
class Star:
    body: object


@dataclass(frozen=True)
class Plus:
    body: object


def regex_alphabet(r):
    if isinstance(r, Sym):
        return {r.ch}
    if isinstance(r, (Union, Concat)):
        return regex_alphabet(r.left) | regex_alphabet(r.right)
    if isinstance(r, (Star, Plus)):
        return regex_alphabet(r.body)
    return set()


class _Parser:
    def __init__(self, text):
        self.text = text
        self.pos = 0

    def peek(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1
        if self.pos < len(self.text):
            return self.text[self.pos]
        return None

    def take(self):
        ch = self.peek()
        self.pos += 1
        return ch

    def parse(self):
        r = self.alternation()
        if self.peek() is not None:
            raise ParseError("unexpected %r at position %d"
                             % (self.peek(), self.pos))
        return r

    def alternation(self):
        r = self.concatenation()
        while self.peek() == "|":
            self.take()
            r = Union(r, self.concatenation())
        return r

    def concatenation(self):
        parts = []
        while True:
            ch = self.peek()
            if ch is None or ch in "|)":
                break
            parts.append(self.postfixed())
        if not parts:
            return Empty()
        r = parts[0]
        for p in parts[1:]:
            r = Concat(r, p)
        return r

    def postfixed(self):
        r = self.atom()
        while self.peek() in ("*", "+"):
            r = Star(r) if self.take() == "*" else Plus(r)
        return r

    def atom(self):
        ch = self.take()
        if ch == "(":
            r = self.alternation()
            if self.take() != ")":
                raise ParseError("missing closing parenthesis")
            return r
        if ch is None or ch in _SPECIAL:
            raise ParseError("unexpected %r" % (ch,))
        return Sym(ch)


def parse_regex(text):
    return _Parser(text).parse()


def _thompson(r, trans, counter):
    """Build an epsilon-NFA fragment; returns (start, end) state ids."""

    def fresh():
        counter[0] += 1
        return counter[0] - 1

    if isinstance(r, Empty):
        s = fresh()
        return s, s
    if isinstance(r, Sym):
        s, e = fresh(), fresh()
        trans.append((s, r.ch, e))
        return s, e
    if isinstance(r, Union):
        s, e = fresh(), fresh()
        s1, e1 = _thompson(r.left, trans, counter)
        s2, e2 = _thompson(r.right, trans, counter)
        trans.extend([(s, None, s1), (s, None, s2),
                      (e1, None, e), (e2, None, e)])
        return s, e
    if isinstance(r, Concat):
        s1, e1 = _thompson(r.left, trans, counter)
        s2, e2 = _thompson(r.right, trans, counter)
        trans.append((e1, None, s2))
        return s1, e2
    if isinstance(r, Star):
        s, e = fresh(), fresh()
        s1, e1 = _thompson(r.body, trans, counter)
        trans.extend([(s, None, s1), (s, None, e),
                      (e1, None, s1), (e1, None, e)])
        return s, e
    if isinstance(r, Plus):
        # e+ = e e*, sharing one copy of the body via the loop edge
        s, e = fresh(), fresh()
        s1, e1 = _thompson(r.body, trans, counter)
        trans.extend([(s, None, s1), (e1, None, s1), (e1, None, e)])
        return s, e
    raise TypeError("not a regex node: %r" % (r,))


def nfa_of_regex(r):
    """Epsilon-NFA as (n_states, transitions, start, accept)."""
    trans = []
    counter = [0]
    start, accept = _thompson(r, trans, counter)
    return counter[0], trans, start, accept


def format_regex(r):
    """Concrete syntax for a regex tree; parse_regex inverts it."""

    def go(r, prec):
        if isinstance(r, Empty):
            return "()"
        if isinstance(r, Sym):
            return r.ch
        if isinstance(r, Union):
            s = go(r.left, 0) + "|" + go(r.right, 0)
            return "(" + s + ")" if prec > 0 else s
        if isinstance(r, Concat):
            s = go(r.left, 1) + go(r.right, 1)
            return "(" + s + ")" if prec > 1 else s
        if isinstance(r, (Star, Plus)):
            return go(r.body, 2) + ("*" if isinstance(r, Star) else "+")
        raise TypeError("not a regex node: %r" % (r,))

    return go(r, 0)


def _alt(a, b):
    """Union with None standing for the empty language."""
    if a is None:
        return b
    if b is None or a == b:
        return a
    return Union(a, b)


def _cat(a, b):
    if a is None or b is None:
        return None
    if isinstance(a, Empty):
        return b
    if isinstance(b, Empty):
        return a
    return Concat(a, b)


def _star(a):
    if a is None or isinstance(a, Empty):
        return Empty()
    if isinstance(a, Star):
        return a
    if isinstance(a, Plus):
        return Star(a.body)
    return Star(a)


def dfa_to_regex(d):
    """A regex tree for the language of a DFA, or None if it is empty.

    Classic state elimination on the generalized automaton, removing DFA
    states in index order; the output is deterministic in the input."""
    n = d.n_states
    start, accept = n, n + 1
    edges = {}

    def put(i, j, r):
        edges[i, j] = _alt(edges.get((i, j)), r)

    for q in range(n):
        for i, ch in enumerate(d.alphabet):
            put(q, d.transitions[q][i], Sym(ch))
    put(start, d.initial, Empty())
    for q in d.accepting:
        put(q, accept, Empty())

    for k in range(n):
        loop = _star(edges.pop((k, k), None))
        into = [(i, r) for (i, j), r in edges.items() if j == k]
        out = [(j, r) for (i, j), r in edges.items() if i == k]
        for i, _ in into:
            edges.pop((i, k))
        for j, _ in out:
            edges.pop((k, j))
        for i, rin in into:
            for j, rout in out:
                put(i, j, _cat(rin, _cat(loop, rout)))
    return edges.get((start, accept))
