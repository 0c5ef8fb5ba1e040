"""The affine engine: affine weights, straightening, Demazure operators, and
graded Demazure characters, plus a grade-truncated multiplicity oracle for
irreducible affine characters.

Conventions.  An affine weight is ``(finite, level, delta)``: a finite weight
in fundamental coordinates, the coefficient of the level-defining fundamental
weight, and the coefficient of the null root.  The zeroth simple root is
``(null root) - (highest finite root)``, so pairing against the zeroth
coroot is ``level - finite(h_theta)``, and reflecting at 0 adds the highest
root to the finite part while lowering the delta coefficient.

Grading.  ``demazure_character`` anchors the extremal weight at delta
coefficient 0 and defines the grade of a term to be its delta coefficient.
With this normalisation all grades are non-negative and the grade-0 slice is
the irreducible finite-type character of the defining weight.  The truncated
irreducible affine character uses the opposite, top-anchored view: grade =
depth below the highest weight, which is the grading the direct-limit
comparison needs.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import isqrt
from typing import NamedTuple

from .charalg import GradedCharacter

__all__ = [
    "AffineWeight",
    "Relation",
    "affine_pairing",
    "affine_reflect",
    "is_affine_dominant",
    "affine_apply_word",
    "straighten",
    "demazure_operator",
    "demazure_character",
    "kr_character",
    "presentation",
    "affine_irreducible_character_truncated",
]

STRAIGHTEN_STEP_CAP = 10**6


class AffineWeight(NamedTuple):
    finite: tuple
    level: int
    delta: int


def affine_pairing(rs, aw, i):
    """Pairing of an affine weight against the i-th simple coroot, i in 0..n."""
    if i == 0:
        return aw.level - rs.theta_pairing(aw.finite)
    if not 1 <= i <= rs.rank:
        raise ValueError(f"affine node index {i} out of range 0..{rs.rank}")
    return aw.finite[i - 1]


def affine_reflect(rs, aw, i):
    """Simple reflection s_i on an affine weight; the level never moves."""
    k = affine_pairing(rs, aw, i)
    if k == 0:
        return aw
    if i == 0:
        finite = tuple(c + k * t for c, t in zip(aw.finite, rs.theta.coords))
        return AffineWeight(finite, aw.level, aw.delta - k)
    return AffineWeight(rs.reflect(i, aw.finite), aw.level, aw.delta)


def is_affine_dominant(rs, aw):
    return all(affine_pairing(rs, aw, i) >= 0 for i in range(rs.rank + 1))


def affine_apply_word(rs, word, aw):
    """Apply a word of affine reflections, first letter first."""
    for i in word:
        aw = affine_reflect(rs, aw, i)
    return aw


def straighten(rs, aw, step_cap=STRAIGHTEN_STEP_CAP):
    """Raise a positive-level affine weight into the dominant chamber.

    Returns ``(dominant, word)`` where replaying ``word`` on ``dominant``
    (first letter first) recovers the input, every replay step crossing
    exactly one wall.  The loop always reflects at the smallest node with a
    strictly negative pairing, so the word is reduced and is the minimal
    coset representative; this is what makes it legal to feed straight into
    the Demazure operators.

    Termination is guaranteed at positive level; ``step_cap`` is a defensive
    bound and tripping it is reported as an internal error.
    """
    if aw.level < 1:
        raise ValueError("straightening requires level >= 1; level 0 weights index the trivial module")
    letters = []
    cur = aw
    for _ in range(step_cap):
        for i in range(rs.rank + 1):
            if affine_pairing(rs, cur, i) < 0:
                cur = affine_reflect(rs, cur, i)
                letters.append(i)
                break
        else:
            return cur, tuple(reversed(letters))
    raise RuntimeError(f"internal error: straightening exceeded {step_cap} steps from {aw}")


def demazure_operator(rs, i, char, level=0):
    """One isobaric divided-difference operator, applied termwise.

    For a term of weight w with k = <w, h_i>: if k >= 0 it expands to the
    string w, w - a_i, ..., w - k a_i; if k == -1 it dies; if k <= -2 it
    contributes the string w + a_i, ..., w + (-k-1) a_i negatively.  The
    operator at node 0 needs the ambient ``level``; finite nodes ignore it.
    """
    terms = char.terms
    out = {}
    if i == 0:
        theta = rs.theta.coords
        coroot = rs.theta.coroot
        for (w, g), m in terms.items():
            k = level - sum(t * c for t, c in zip(coroot, w))
            if k >= 0:
                cw, cg = w, g
                for _ in range(k + 1):
                    key = (cw, cg)
                    v = out.get(key, 0) + m
                    if v:
                        out[key] = v
                    else:
                        del out[key]
                    cw = tuple(c + t for c, t in zip(cw, theta))
                    cg -= 1
            elif k <= -2:
                cw, cg = w, g
                for _ in range(-k - 1):
                    cw = tuple(c - t for c, t in zip(cw, theta))
                    cg += 1
                    key = (cw, cg)
                    v = out.get(key, 0) - m
                    if v:
                        out[key] = v
                    else:
                        del out[key]
    else:
        col = rs.simple_root_coords[i - 1]
        pos = i - 1
        for (w, g), m in terms.items():
            k = w[pos]
            if k >= 0:
                cw = w
                for _ in range(k + 1):
                    key = (cw, g)
                    v = out.get(key, 0) + m
                    if v:
                        out[key] = v
                    else:
                        del out[key]
                    cw = tuple(c - a for c, a in zip(cw, col))
            elif k <= -2:
                cw = w
                for _ in range(-k - 1):
                    cw = tuple(c + a for c, a in zip(cw, col))
                    key = (cw, g)
                    v = out.get(key, 0) - m
                    if v:
                        out[key] = v
                    else:
                        del out[key]
    return GradedCharacter(rs, out)


def demazure_character(rs, level, weight):
    """Graded character of the level-``level`` stable Demazure module of a
    dominant weight, computed along the straightened reduced word.

    The result has all grades >= 0, its grade-0 slice is the irreducible
    character of ``weight``, and ``weight`` itself carries multiplicity 1.
    At level 0 only the zero weight is admissible (trivial module).
    """
    weight = rs.check_weight(weight)
    if not rs.is_dominant(weight):
        raise ValueError(f"weight {weight} is not dominant")
    if level < 0:
        raise ValueError("level must be non-negative")
    if level == 0:
        if any(weight):
            raise ValueError("level 0 admits only the zero weight")
        return GradedCharacter.unit(rs)
    lowest = rs.apply_word(rs.longest_element(), weight)
    top, word = straighten(rs, AffineWeight(lowest, level, 0))
    char = GradedCharacter.monomial(rs, top.finite, top.delta)
    for letter in word:
        char = demazure_operator(rs, letter, char, level)
    assert all(g >= 0 for (_, g) in char.terms), "grading must be non-negative"
    return char


def kr_character(rs, level, node):
    """Graded character of the Kirillov-Reshetikhin module at one node,
    realised as the Demazure character of d_i * level * omega_i."""
    if not 1 <= node <= rs.rank:
        raise ValueError(f"node index {node} out of range 1..{rs.rank}")
    weight = rs.scale(rs.d_simple[node - 1] * level, rs.fundamental_weight(node))
    return demazure_character(rs, level, weight)


@dataclass(frozen=True)
class Relation:
    """Defining relations attached to one positive root in the presentation
    of a stable Demazure module as a quotient of the local Weyl module.

    The lowering operator at the root always vanishes from t-power
    ``power_exponent`` on; when ``nilpotency_order`` is not None the
    operator at t-power ``power_exponent - 1`` is additionally nilpotent of
    that order.
    """

    root_coords: tuple
    pairing: int
    s: int
    m: int
    power_exponent: int
    nilpotency_order: object  # int or None

    def to_dict(self):
        return {
            "alpha": list(self.root_coords),
            "pairing": self.pairing,
            "s": self.s,
            "m": self.m,
            "power_relation": {"t_exponent": self.power_exponent},
            "nilpotency_relation": (
                None
                if self.nilpotency_order is None
                else {"t_exponent": self.power_exponent - 1, "power": self.nilpotency_order}
            ),
        }


def presentation(rs, level, weight):
    """The per-root relation data (s, m) for the level-``level`` module.

    For pairing p > 0 these are the unique integers with
    p = (s - 1) * d * level + m and 0 < m <= d * level; for p = 0 both are 0.
    The nilpotency relation is present exactly when p > 0 and m < d * level.
    """
    weight = rs.check_weight(weight)
    if not rs.is_dominant(weight):
        raise ValueError(f"weight {weight} is not dominant")
    if level < 1:
        raise ValueError("presentation requires level >= 1")
    out = []
    for idx, root in enumerate(rs.positive_roots):
        p = rs.pairing(weight, idx)
        if p == 0:
            s = m = 0
            nil = None
        else:
            cap = root.d * level
            s = -(-p // cap)  # ceil
            m = p - (s - 1) * cap
            assert 0 < m <= cap
            nil = m + 1 if m < cap else None
        out.append(Relation(root.root_coords, p, s, m, s, nil))
    return out


# ---------------------------------------------------------------------------
# truncated irreducible affine characters by the multiplicity recursion


def _affine_dominant_rep(rs, finite, depth, level):
    """Dominant representative of the affine Weyl orbit, as (finite, depth).

    Straightening only lowers the depth, so representatives of depth-bounded
    weights stay depth-bounded.
    """
    dom, _ = straighten(rs, AffineWeight(finite, level, -depth))
    return dom.finite, -dom.delta


def _coordinate_bounds(rs, norm_bound):
    """Per-coordinate bounds |c_j + 1| <= Y_j valid on the norm ball.

    For y in the weight lattice, y_j = d_j*(y, alpha_j) and Cauchy-Schwarz
    gives y_j^2 <= 2*d_j*(y, y)."""
    out = []
    for d in rs.d_simple:
        val = 2 * d * norm_bound
        out.append(isqrt(int(val)) + 1)
    return out


def _ball_candidates(rs, top, depth, norm_bound):
    """All (finite, depth) below ``top + depth*theta`` within the norm ball.

    Yields pairs (finite, simple-root gap); the gap certifies membership in
    Z>=0-span of the simple roots below the depth-shifted top weight.
    """
    shifted_top = rs.add(top, rs.scale(depth, rs.theta.coords))
    bounds = _coordinate_bounds(rs, norm_bound)
    ranges = [range(-b - 1, b) for b in bounds]

    def rec(prefix, j):
        if j == rs.rank:
            finite = tuple(prefix)
            gap = rs.dominance_gap(shifted_top, finite)
            if gap is None or any(g < 0 for g in gap):
                return
            y = rs.add(finite, rs.rho)
            if rs.weight_norm2(y) <= norm_bound:
                yield finite, gap
            return
        for c in ranges[j]:
            prefix.append(c)
            yield from rec(prefix, j + 1)
            prefix.pop()

    yield from rec([], 0)


def affine_irreducible_character_truncated(rs, level, weight, max_grade):
    """Weight multiplicities of the irreducible affine highest-weight module
    of level ``level`` and finite part ``weight``, down to depth ``max_grade``.

    The grade of a term is its depth below the highest weight (so the
    highest weight sits at grade 0 and the grade-0 slice is the irreducible
    finite-type character).  Exact at every depth <= max_grade.

    The recursion runs over dominant candidate weights inside the norm ball
    |mu + rho_affine|^2 <= |top + rho_affine|^2, which every weight of the
    module satisfies; candidates that are not weights come out with
    multiplicity zero.  All arithmetic is exact.
    """
    weight = rs.check_weight(weight)
    if level < 1:
        raise ValueError("truncated affine characters require level >= 1")
    if max_grade < 0:
        raise ValueError("max_grade must be non-negative")
    if not rs.is_dominant(weight) or rs.theta_pairing(weight) > level:
        raise ValueError(f"{weight} at level {level} is not affine dominant")

    n = rs.rank
    hvee = rs.dual_coxeter
    top_norm = rs.weight_norm2(rs.add(weight, rs.rho))

    def norm_bound(depth):
        return top_norm + 2 * depth * (level + hvee)

    # candidate dominant (finite, depth) pairs, ordered by total height of
    # the gap to the highest weight
    candidates = []
    for depth in range(max_grade + 1):
        for finite, gap in _ball_candidates(rs, weight, depth, norm_bound(depth)):
            if not rs.is_dominant(finite):
                continue
            if rs.theta_pairing(finite) > level:
                continue
            candidates.append((depth + sum(gap), depth, finite))
    candidates.sort()

    D = rs.pairing_scale
    mult = {}

    def lookup(finite, depth):
        if depth < 0:
            return 0
        key = _affine_dominant_rep(rs, finite, depth, level)
        return mult.get(key, 0)

    for height, depth, finite in candidates:
        if height == 0:
            mult[(finite, depth)] = 1
            continue
        acc = 0
        # real roots alpha + m*delta: m = 0 takes positive alpha only, while
        # m >= 1 takes alpha of both signs.  Adding j copies raises the
        # weight by j*alpha in the finite part and lowers the depth by j*m.
        for root in rs.positive_roots:
            base = rs.scaled_root_pairing(finite, root)  # D*(finite, alpha)
            norm = rs.scaled_root_norm(root)  # D*(alpha, alpha)
            for sign in (1, -1):
                step = rs.scale(sign, root.coords)
                sbase = sign * base
                for m in range(0 if sign == 1 else 1, depth + 1):
                    cur = finite
                    j = 1
                    while True:
                        d2 = depth - j * m
                        if d2 < 0:
                            break
                        cur = rs.add(cur, step)
                        if rs.weight_norm2(rs.add(cur, rs.rho)) > norm_bound(d2):
                            # at m = 0 the norm grows monotonically along the
                            # string through a dominant weight, so nothing
                            # lies beyond; at m >= 1 the depth bound ends
                            # the loop instead
                            if m == 0:
                                break
                        else:
                            mm = lookup(cur, d2)
                            if mm:
                                # D * (mu + j*beta, beta), beta = sign*alpha + m*delta
                                acc += (sbase + j * norm + D * level * m) * mm
                        j += 1
        # imaginary roots m*delta with multiplicity n = rank
        for m in range(1, depth + 1):
            for j in range(1, depth // m + 1):
                mm = lookup(finite, depth - j * m)
                if mm:
                    acc += n * D * level * m * mm
        numerator = 2 * acc
        # denominator: |top + rho^|^2 - |mu + rho^|^2, scaled by D
        gap = rs.dominance_gap(rs.add(weight, rs.scale(depth, rs.theta.coords)), finite)
        assert gap is not None
        mixed = rs.add(rs.add(weight, finite), rs.scale(2, rs.rho))
        den = sum(
            g * mixed[j] * (D // rs.d_simple[j]) for j, g in enumerate(gap)
        ) - depth * sum(
            t * mixed[j] * (D // rs.d_simple[j])
            for j, t in enumerate(rs.theta.root_coords)
        )
        den += 2 * depth * (level + hvee) * D
        if den == 0:
            assert numerator == 0, "internal error: degenerate multiplicity"
            continue
        assert numerator % den == 0, "internal error: non-integral multiplicity"
        val = numerator // den
        assert val >= 0
        if val:
            mult[(finite, depth)] = val

    # expand to full slices via the orbit representatives
    terms = {}
    for depth in range(max_grade + 1):
        for finite, _gap in _ball_candidates(rs, weight, depth, norm_bound(depth)):
            m = lookup(finite, depth)
            if m:
                terms[(finite, depth)] = m
    return GradedCharacter(rs, terms)
