"""Identity decision procedures for the varieties with finite normal forms
(abelian groups, commutative semigroups, groups, subword-ordered monoids)
plus an enumeration-backed sampler for completely regular semigroups."""

from .enumeration import enumerate_semigroups
from .errors import SizeTooLarge
from .groups_catalog import all_groups_up_to_24
from .semigroup import FiniteSemigroup, GeneratorMap
from .terms import (
    Fin,
    Inf,
    ab_image,
    com_exponents,
    eval_term,
    find_identity_failure,
    free_group_normal_form,
    parse_term,
    term_alphabet,
)
from .words import scattered_subword

_CR_CACHE = {}
_CR_IDENTITY = (parse_term("x^(w+1)"), parse_term("x"))


def ab_satisfies(u, v):
    """Equality over all finite abelian groups: matching letter multiplicities
    in the integer completion (absent letters count 0)."""
    iu, iv = ab_image(u), ab_image(v)
    for ch in set(iu) | set(iv):
        if iu.get(ch, 0) != iv.get(ch, 0):
            return False
    return True


def com_satisfies(u, v):
    """Equality over all finite commutative semigroups: matching exponent
    vectors in the extended exponent algebra."""
    eu, ev = com_exponents(u), com_exponents(v)
    for ch in set(eu) | set(ev):
        if eu.get(ch, Fin(0)) != ev.get(ch, Fin(0)):
            return False
    return True


def g_satisfies(u, v):
    """Equality over all finite groups, via free-group word reduction."""
    return free_group_normal_form(u) == free_group_normal_form(v)


def jplus_leq(u, v):
    """u <= v over subword-ordered monoids: every scattered subword of u is
    one of v, which for words just means u embeds in v."""
    return scattered_subword(u, v)


def cr_semigroups(bound):
    """All semigroups of order <= bound satisfying x^(w+1) = x, cached."""
    if not 1 <= bound <= 5:
        raise SizeTooLarge(f"completely regular sample bound must be 1..5, "
                           f"got {bound}")
    if bound not in _CR_CACHE:
        from .terms import satisfies_identity
        found = []
        for n in range(1, bound + 1):
            for S in enumerate_semigroups(n, allow_large=True):
                if satisfies_identity(S, *_CR_IDENTITY):
                    found.append(S)
        _CR_CACHE[bound] = found
    return _CR_CACHE[bound]


def cr_sample_satisfies(u, v, bound=4):
    """Necessary-condition sampler: does u = v hold in every completely
    regular semigroup of order <= bound under every assignment?"""
    return cr_witness(u, v, bound) is None


def cr_witness(u, v, bound=4):
    for S in cr_semigroups(bound):
        bad = find_identity_failure(S, u, v)
        if bad is not None:
            return _semigroup_witness(S, bad, u, v)
    return None


def ab_witness(u, v):
    """A separating abelian group among the cyclic groups of order <= 12."""
    alphabet = sorted(term_alphabet(u) | term_alphabet(v))
    for m in range(2, 13):
        G = FiniteSemigroup.cyclic(1, m)
        witness = _single_letter_witness(G, alphabet, u, v)
        if witness is not None:
            return witness
    return None


def com_witness(u, v):
    """A separating commutative monoid among monogenic-with-identity
    C(i,p)^1 for i, p <= 7, one letter at the generator."""
    alphabet = sorted(term_alphabet(u) | term_alphabet(v))
    for i in range(1, 8):
        for p in range(1, 8):
            S = FiniteSemigroup.cyclic(i, p).with_identity_adjoined()
            witness = _single_letter_witness(S, alphabet, u, v)
            if witness is not None:
                return witness
    return None


def _single_letter_witness(S, alphabet, u, v):
    """Try assignments sending one letter to the generator and the rest to
    the identity; S must be monogenic-with-identity (generator element 0)."""
    for ch in alphabet:
        assignment = {b: S.identity for b in alphabet}
        assignment[ch] = 0
        g = GeneratorMap(S, assignment)
        lhs, rhs = eval_term(S, g, u), eval_term(S, g, v)
        if lhs != rhs:
            return _semigroup_witness(S, assignment, u, v)
    return None


def g_witness(u, v):
    """A separating group from the order-<=24 catalog, smallest first."""
    for name, G in all_groups_up_to_24():
        bad = find_identity_failure(G, u, v)
        if bad is not None:
            witness = _semigroup_witness(G, bad, u, v)
            witness["group"] = name
            return witness
    return None


def _semigroup_witness(S, assignment, u, v):
    g = GeneratorMap(S, assignment)
    return {
        "order": S.n,
        "table": [list(row) for row in S.table],
        "assignment": {ch: assignment[ch] for ch in sorted(assignment)},
        "lhs_value": eval_term(S, g, u),
        "rhs_value": eval_term(S, g, v),
    }


def check_identity(variety, lhs, rhs, leq=False):
    """Decide lhs = rhs (or lhs <= rhs for jplus) over the named variety.

    `variety` is one of ab | com | g | jplus | cr:N.  Returns a JSON-ready
    dict with the verdict and, when the verdict is false and the witness
    pools find one, a concrete separating structure."""
    if leq and variety != "jplus":
        raise ValueError("--leq only applies to the jplus variety")
    result = {"variety": variety, "lhs": lhs, "rhs": rhs}
    if variety == "ab":
        u, v = parse_term(lhs), parse_term(rhs)
        result["verdict"] = ab_satisfies(u, v)
        result["witness"] = None if result["verdict"] else ab_witness(u, v)
    elif variety == "com":
        u, v = parse_term(lhs), parse_term(rhs)
        result["verdict"] = com_satisfies(u, v)
        result["witness"] = None if result["verdict"] else com_witness(u, v)
    elif variety == "g":
        u, v = parse_term(lhs), parse_term(rhs)
        result["verdict"] = g_satisfies(u, v)
        result["witness"] = None if result["verdict"] else g_witness(u, v)
    elif variety == "jplus":
        if leq:
            result["verdict"] = jplus_leq(lhs, rhs)
        else:
            result["verdict"] = jplus_leq(lhs, rhs) and jplus_leq(rhs, lhs)
        if not result["verdict"]:
            bad = lhs if not jplus_leq(lhs, rhs) else rhs
            result["witness"] = {"obstruction_word": bad}
        else:
            result["witness"] = None
    elif variety.startswith("cr:"):
        try:
            bound = int(variety.split(":", 1)[1])
        except ValueError:
            raise ValueError(f"bad bound in variety tag {variety!r}")
        u, v = parse_term(lhs), parse_term(rhs)
        result["witness"] = cr_witness(u, v, bound)
        result["verdict"] = result["witness"] is None
    else:
        raise ValueError(f"unknown variety {variety!r}")
    return {k: result[k] for k in ("variety", "lhs", "rhs", "verdict",
                                   "witness")}
