"""Finite-type character oracles and the surjection-existence criterion.

Irreducible characters come from the multiplicity recursion over the weight
diagram (the primary route); a second, independent route applies the
divided-difference operators along a reduced word for the longest Weyl
element.  The two share no algorithmic step, which is what makes their exact
agreement a meaningful cross-check.

Tensor product multiplicities are obtained by iterated extraction of maximal
isotypic components, and the surjection criterion is multiplicity domination:
for finite-dimensional modules over a simple Lie algebra a surjective
equivariant map exists exactly when every isotypic multiplicity of the
target is at most the corresponding multiplicity of the source.
"""

from __future__ import annotations

from .affine import demazure_operator
from .charalg import GradedCharacter

__all__ = [
    "weyl_character",
    "demazure_weyl_character",
    "weyl_dimension",
    "tensor_decompose",
    "surjection_exists",
    "conjecture_conditions",
]

_char_cache = {}


def _weight_diagram(rs, top):
    """All weights of the irreducible module of highest weight ``top``:
    the closure of {top} under walking every root string downward."""
    weights = {top}
    stack = [top]
    cols = rs.simple_root_coords
    while stack:
        v = stack.pop()
        for i in range(rs.rank):
            k = v[i]
            if k > 0:
                cur = v
                col = cols[i]
                for _ in range(k):
                    cur = tuple(c - a for c, a in zip(cur, col))
                    if cur not in weights:
                        weights.add(cur)
                        stack.append(cur)
    return weights


def weyl_character(rs, weight):
    """Character of the irreducible module of a dominant highest weight,
    by the exact multiplicity recursion (all grades 0)."""
    weight = rs.check_weight(weight)
    if not rs.is_dominant(weight):
        raise ValueError(f"weight {weight} is not dominant")
    key = (rs.name, weight)
    hit = _char_cache.get(key)
    if hit is not None:
        return hit

    weights = _weight_diagram(rs, weight)
    dominant = [w for w in weights if rs.is_dominant(w)]
    heights = {}
    for w in dominant:
        gap = rs.dominance_gap(weight, w)
        assert gap is not None and all(g >= 0 for g in gap)
        heights[w] = sum(gap)
    dominant.sort(key=lambda w: (heights[w], w))

    D = rs.pairing_scale
    mult = {weight: 1}
    for mu in dominant:
        if mu == weight:
            continue
        acc = 0
        for root in rs.positive_roots:
            base = rs.scaled_root_pairing(mu, root)
            norm = rs.scaled_root_norm(root)
            cur = mu
            j = 1
            while True:
                cur = tuple(c + a for c, a in zip(cur, root.coords))
                if cur not in weights:
                    break
                acc += (base + j * norm) * mult[rs.dominant_representative(cur)]
                j += 1
        gap = rs.dominance_gap(weight, mu)
        mixed = rs.add(rs.add(weight, mu), rs.scale(2, rs.rho))
        den = sum(g * mixed[j] * (D // rs.d_simple[j]) for j, g in enumerate(gap))
        num = 2 * acc
        assert den > 0 and num % den == 0, "internal error: non-integral multiplicity"
        m = num // den
        assert m > 0
        mult[mu] = m

    terms = {(w, 0): mult[rs.dominant_representative(w)] for w in weights}
    char = GradedCharacter(rs, terms)
    _char_cache[key] = char
    return char


def demazure_weyl_character(rs, weight):
    """The same irreducible character, via divided-difference operators along
    a reduced word for the longest element.  Independent of
    :func:`weyl_character`; used as its cross-oracle."""
    weight = rs.check_weight(weight)
    if not rs.is_dominant(weight):
        raise ValueError(f"weight {weight} is not dominant")
    char = GradedCharacter.monomial(rs, weight, 0)
    for letter in rs.longest_element():
        char = demazure_operator(rs, letter, char)
    return char


def weyl_dimension(rs, weight):
    """Dimension of the irreducible module, by the product over positive
    roots of (weight + rho, root) / (rho, root); exact integers."""
    weight = rs.check_weight(weight)
    if not rs.is_dominant(weight):
        raise ValueError(f"weight {weight} is not dominant")
    shifted = rs.add(weight, rs.rho)
    num = 1
    den = 1
    for root in rs.positive_roots:
        num *= rs.scaled_root_pairing(shifted, root)
        den *= rs.scaled_root_pairing(rs.rho, root)
    assert num % den == 0
    return num // den


def tensor_decompose(rs, char, reverse_tiebreak=False):
    """Isotypic multiplicities of a genuine character: a map from dominant
    weights to positive multiplicities whose irreducible characters sum back
    to the input exactly.

    Works by repeatedly extracting a maximal dominant weight of the
    remaining support (dominance order; lexicographic tie-break among
    incomparable maxima, reversed when ``reverse_tiebreak``).  The multiset
    returned does not depend on the extraction order; the tie-break knob
    exists so tests can confirm that.

    Raises ValueError for inputs that are not characters (wrong grading,
    not Weyl-symmetric, or extraction driving a multiplicity negative).
    """
    if not char.is_plain:
        raise ValueError("tensor decomposition expects an ungraded character")
    if not char.is_w_invariant():
        raise ValueError("not a character: support is not Weyl-symmetric")
    remaining = {w: m for (w, _), m in char.terms.items()}
    out = {}
    while remaining:
        dominants = [w for w in remaining if rs.is_dominant(w)]
        if not dominants:
            raise ValueError("not a character: no dominant weight left in support")
        maxima = [
            w
            for w in dominants
            if not any(u != w and rs.dominates(u, w) for u in dominants)
        ]
        maxima.sort(reverse=not reverse_tiebreak)
        pick = maxima[0]
        mult = remaining[pick]
        if mult < 0:
            raise ValueError(f"not a character: negative multiplicity at {pick}")
        out[pick] = mult
        for (w, _), m in weyl_character(rs, pick).terms.items():
            v = remaining.get(w, 0) - mult * m
            if v:
                if v < 0:
                    raise ValueError(f"not a character: negative multiplicity at {w}")
                remaining[w] = v
            else:
                remaining.pop(w, None)
    return out


def surjection_exists(rs, source, target):
    """Whether a surjective equivariant map source -> target can exist,
    by multiplicity domination of the isotypic decompositions.

    Returns ``(flag, witness)``; the witness is the first dominant weight
    (in sorted coordinate order) whose target multiplicity exceeds the
    source one, or None.
    """
    src = tensor_decompose(rs, source)
    tgt = tensor_decompose(rs, target)
    for w in sorted(tgt):
        if tgt[w] > src.get(w, 0):
            return False, w
    return True, None


def conjecture_conditions(rs, lam1, lam2, mu1, mu2):
    """The weight-balance and componentwise-minimum conditions under which a
    surjection between the products of irreducibles is expected: the sums
    agree and ``min(lam1, lam2) <= min(mu1, mu2)`` against every positive
    coroot."""
    for w in (lam1, lam2, mu1, mu2):
        if not rs.is_dominant(w):
            raise ValueError(f"weight {tuple(w)} is not dominant")
    if rs.add(lam1, lam2) != rs.add(mu1, mu2):
        return False
    for idx in range(len(rs.positive_roots)):
        lo = min(rs.pairing(lam1, idx), rs.pairing(lam2, idx))
        hi = min(rs.pairing(mu1, idx), rs.pairing(mu2, idx))
        if lo > hi:
            return False
    return True
