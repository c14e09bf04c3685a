"""Complete deterministic finite automata.

States are 0..n-1; transitions are total.  ``compile_min_dfa`` takes a
regex (string or syntax tree) to the minimal complete DFA, renumbered
canonically by breadth-first search from the initial state, so equal
languages over the same alphabet give byte-identical dumps.
"""

from .errors import AlphabetMismatch, EmptyAlphabet, ParseError
from .regex import nfa_of_regex, parse_regex, regex_alphabet


class Dfa:
    def __init__(self, alphabet, transitions, initial, accepting,
                 minimal=False):
        self.alphabet = tuple(alphabet)
        self.letter_index = {a: i for i, a in enumerate(self.alphabet)}
        self.transitions = [list(row) for row in transitions]
        self.n_states = len(self.transitions)
        self.initial = initial
        self.accepting = frozenset(accepting)
        self.minimal = minimal
        for row in self.transitions:
            if len(row) != len(self.alphabet):
                raise ValueError("transition row has wrong arity")
            for q in row:
                if not (0 <= q < self.n_states):
                    raise ValueError("transition target out of range")

    def step(self, state, letter):
        return self.transitions[state][self.letter_index[letter]]

    def run(self, word, start=None):
        q = self.initial if start is None else start
        for ch in word:
            i = self.letter_index.get(ch)
            if i is None:
                raise KeyError("letter %r not in alphabet" % ch)
            q = self.transitions[q][i]
        return q

    def accepts(self, word):
        return self.run(word) in self.accepting

    def reachable_states(self):
        seen = [False] * self.n_states
        seen[self.initial] = True
        stack = [self.initial]
        while stack:
            q = stack.pop()
            for r in self.transitions[q]:
                if not seen[r]:
                    seen[r] = True
                    stack.append(r)
        return [q for q in range(self.n_states) if seen[q]]

    def coaccessible_states(self):
        back = [[] for _ in range(self.n_states)]
        for q in range(self.n_states):
            for r in self.transitions[q]:
                back[r].append(q)
        seen = [False] * self.n_states
        stack = list(self.accepting)
        for q in stack:
            seen[q] = True
        while stack:
            q = stack.pop()
            for r in back[q]:
                if not seen[r]:
                    seen[r] = True
                    stack.append(r)
        return [q for q in range(self.n_states) if seen[q]]

    def minimize(self):
        if self.minimal:
            return self
        reach = self.reachable_states()
        pos = {q: i for i, q in enumerate(reach)}
        trans = [[pos[self.transitions[q][a]]
                  for a in range(len(self.alphabet))] for q in reach]
        accept = {pos[q] for q in self.accepting if q in pos}
        n = len(reach)
        # Moore partition refinement
        cls = [1 if q in accept else 0 for q in range(n)]
        while True:
            sig = {}
            new = [0] * n
            for q in range(n):
                key = (cls[q], tuple(cls[r] for r in trans[q]))
                if key not in sig:
                    sig[key] = len(sig)
                new[q] = sig[key]
            if new == cls:
                break
            cls = new
        k = len(set(cls))
        qtrans = [None] * k
        for q in range(n):
            if qtrans[cls[q]] is None:
                qtrans[cls[q]] = [cls[r] for r in trans[q]]
        qaccept = {cls[q] for q in accept}
        d = Dfa(self.alphabet, qtrans, cls[pos[self.initial]], qaccept)
        return d._canonical_renumber()

    def _canonical_renumber(self):
        order = [self.initial]
        pos = {self.initial: 0}
        i = 0
        while i < len(order):
            q = order[i]
            i += 1
            for a in range(len(self.alphabet)):
                r = self.transitions[q][a]
                if r not in pos:
                    pos[r] = len(order)
                    order.append(r)
        trans = [[pos[self.transitions[q][a]]
                  for a in range(len(self.alphabet))] for q in order]
        accept = {pos[q] for q in self.accepting if q in pos}
        return Dfa(self.alphabet, trans, 0, accept, minimal=True)


def compile_min_dfa(r, alphabet=None):
    """Minimal complete DFA of a regex over the given (or inferred) alphabet."""
    if isinstance(r, str):
        r = parse_regex(r)
    letters = regex_alphabet(r)
    if alphabet is not None:
        extra = letters - set(alphabet)
        if extra:
            raise AlphabetMismatch("letters %s not in declared alphabet"
                                   % sorted(extra))
        letters = set(alphabet)
    if not letters:
        raise EmptyAlphabet("regex has no letters and no alphabet was given")
    alpha = tuple(sorted(letters))
    n, trans, start, accept = nfa_of_regex(r)
    eps = [[] for _ in range(n)]
    by_letter = [{} for _ in range(n)]
    for s, ch, t in trans:
        if ch is None:
            eps[s].append(t)
        else:
            by_letter[s].setdefault(ch, []).append(t)

    def closure(states):
        seen = set(states)
        stack = list(states)
        while stack:
            q = stack.pop()
            for r2 in eps[q]:
                if r2 not in seen:
                    seen.add(r2)
                    stack.append(r2)
        return frozenset(seen)

    start_set = closure([start])
    subsets = {start_set: 0}
    order = [start_set]
    dtrans = []
    i = 0
    while i < len(order):
        cur = order[i]
        i += 1
        row = []
        for ch in alpha:
            nxt = closure([t for q in cur for t in by_letter[q].get(ch, ())])
            if nxt not in subsets:
                subsets[nxt] = len(order)
                order.append(nxt)
            row.append(subsets[nxt])
        dtrans.append(row)
    daccept = {subsets[s] for s in order if accept in s}
    d = Dfa(alpha, dtrans, 0, daccept)
    return d.minimize()


def languages_equal(d1, d2):
    """Language equality by search for a separating word on the pair graph."""
    if d1.alphabet != d2.alphabet:
        raise AlphabetMismatch("%r vs %r" % (d1.alphabet, d2.alphabet))
    seen = {(d1.initial, d2.initial)}
    queue = [(d1.initial, d2.initial)]
    while queue:
        p, q = queue.pop()
        if (p in d1.accepting) != (q in d2.accepting):
            return False
        for a in range(len(d1.alphabet)):
            nxt = (d1.transitions[p][a], d2.transitions[q][a])
            if nxt not in seen:
                seen.add(nxt)
                queue.append(nxt)
    return True


def has_common_word(d1, d2):
    """True iff the two automata accept some word in common."""
    if d1.alphabet != d2.alphabet:
        raise AlphabetMismatch("%r vs %r" % (d1.alphabet, d2.alphabet))
    seen = {(d1.initial, d2.initial)}
    queue = [(d1.initial, d2.initial)]
    while queue:
        p, q = queue.pop()
        if p in d1.accepting and q in d2.accepting:
            return True
        for a in range(len(d1.alphabet)):
            nxt = (d1.transitions[p][a], d2.transitions[q][a])
            if nxt not in seen:
                seen.add(nxt)
                queue.append(nxt)
    return False


def is_empty(d):
    return not any(q in d.accepting for q in d.reachable_states())


def is_finite_language(d):
    """True iff the accepted language is finite (no useful cycle)."""
    useful = set(d.reachable_states()) & set(d.coaccessible_states())
    color = {}

    def has_cycle(q):
        color[q] = 1
        for r in d.transitions[q]:
            if r not in useful:
                continue
            c = color.get(r)
            if c == 1:
                return True
            if c is None and has_cycle(r):
                return True
        color[q] = 2
        return False

    return not any(has_cycle(q) for q in sorted(useful) if q not in color)


def enumerate_accepted(d, max_len):
    """Accepted words in length-lexicographic order, up to max_len.

    Prunes prefixes that cannot reach an accepting state; intended for
    thin languages.
    """
    useful = set(d.coaccessible_states())
    out = []
    level = [("", d.initial)]
    for _ in range(max_len + 1):
        nxt = []
        for w, q in level:
            if q in d.accepting:
                out.append(w)
            for a, ch in enumerate(d.alphabet):
                r = d.transitions[q][a]
                if r in useful:
                    nxt.append((w + ch, r))
        level = nxt
    return out


def dfa_to_text(d):
    lines = ["states %d" % d.n_states,
             "alphabet %s" % " ".join(d.alphabet),
             "initial %d" % d.initial,
             "accepting %s" % " ".join(str(q) for q in sorted(d.accepting)),
             "trans:"]
    for q in range(d.n_states):
        for a, ch in enumerate(d.alphabet):
            lines.append("%d %s %d" % (q, ch, d.transitions[q][a]))
    return "\n".join(lines) + "\n"


def dfa_from_text(text):
    lines = [ln.strip() for ln in text.strip().splitlines() if ln.strip()]
    fields = {}
    trans_lines = []
    in_trans = False
    for ln in lines:
        if ln == "trans:":
            in_trans = True
            continue
        if in_trans:
            trans_lines.append(ln)
        else:
            key, _, rest = ln.partition(" ")
            fields[key] = rest.strip()
    n = int(fields["states"])
    alphabet = tuple(fields["alphabet"].split())
    initial = int(fields["initial"])
    accepting = {int(v) for v in fields.get("accepting", "").split()}
    letter_index = {ch: i for i, ch in enumerate(alphabet)}
    trans = [[-1] * len(alphabet) for _ in range(n)]
    for ln in trans_lines:
        src, ch, dst = ln.split()
        trans[int(src)][letter_index[ch]] = int(dst)
    for row in trans:
        if -1 in row:
            raise ParseError("incomplete transition table")
    return Dfa(alphabet, trans, initial, accepting)
