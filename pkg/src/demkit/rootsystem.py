"""Cartan data and finite Weyl group actions for the simple Lie types A-G.

Weights are plain tuples of integers: ``w[i]`` is the pairing of the weight
against the (i+1)-th simple coroot, i.e. coordinates in the basis of
fundamental weights.  Vertex numbering follows Bourbaki.  Roots additionally
carry their expansion in simple roots, so every pairing, reflection and
dominance test is exact integer (or stdlib Fraction) arithmetic; no floating
point or irrational numbers appear anywhere.

The bilinear form is normalised so that long roots have squared length 2;
``d`` always denotes the integer 2/(root, root), which is 1 for long roots
and 2 or 3 for short ones.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import lcm

__all__ = [
    "Root",
    "RootSystem",
    "root_system",
    "parse_system",
]

_RANK_RULES = {
    "A": (1, None),
    "B": (2, None),
    "C": (2, None),
    "D": (4, None),
    "E": (6, 8),
    "F": (4, 4),
    "G": (2, 2),
}

_SYSTEM_RE = re.compile(r"^([A-G])(\d+)$")


def parse_system(name):
    """Parse a system label like ``"A2"`` into ``(series, rank)``."""
    m = _SYSTEM_RE.match(name.strip())
    if not m:
        raise ValueError(f"malformed system label {name!r}; expected e.g. 'A2' or 'G2'")
    return m.group(1), int(m.group(2))


def _validate_type(series, rank):
    if series not in _RANK_RULES:
        raise ValueError(f"invalid simple type ({series},{rank}): unknown series {series!r}")
    lo, hi = _RANK_RULES[series]
    if rank < lo or (hi is not None and rank > hi):
        bound = f"rank {lo}" if hi == lo else (f"rank >= {lo}" if hi is None else f"rank in [{lo},{hi}]")
        raise ValueError(f"invalid simple type ({series},{rank}): series {series} requires {bound}")


def _cartan_and_d(series, rank):
    """Cartan matrix C[i][j] = <alpha_j, h_i> and the d-values of the simple
    roots, in Bourbaki numbering (0-indexed internally)."""
    n = rank
    cartan = [[2 if i == j else 0 for j in range(n)] for i in range(n)]

    def edge(i, j):
        cartan[i][j] = cartan[j][i] = -1

    if series == "A":
        for i in range(n - 1):
            edge(i, i + 1)
        d = [1] * n
    elif series == "B":
        for i in range(n - 1):
            edge(i, i + 1)
        cartan[n - 1][n - 2] = -2  # alpha_n short
        d = [1] * (n - 1) + [2]
    elif series == "C":
        for i in range(n - 1):
            edge(i, i + 1)
        cartan[n - 2][n - 1] = -2  # alpha_n long
        d = [2] * (n - 1) + [1]
    elif series == "D":
        for i in range(n - 2):
            edge(i, i + 1)
        edge(n - 3, n - 1)
        d = [1] * n
    elif series == "E":
        chain = [1, 3, 4, 5, 6, 7, 8][: n - 1]
        for a, b in zip(chain, chain[1:]):
            edge(a - 1, b - 1)
        edge(1, 3)  # vertex 2 hangs off vertex 4
        d = [1] * n
    elif series == "F":
        for i in range(3):
            edge(i, i + 1)
        cartan[2][1] = -2  # alpha_3, alpha_4 short
        d = [1, 1, 2, 2]
    else:  # G
        cartan[0][1] = -3  # alpha_1 short
        cartan[1][0] = -1
        d = [3, 1]

    for i in range(n):
        for j in range(n):
            # symmetrisability of the pairing (alpha_i, alpha_j)
            assert cartan[i][j] * d[j] == cartan[j][i] * d[i]
    return tuple(tuple(row) for row in cartan), tuple(d)


def _invert_rational(mat):
    """Exact inverse of a small integer matrix, as Fractions."""
    n = len(mat)
    aug = [
        [Fraction(mat[i][j]) for j in range(n)] + [Fraction(int(i == j)) for j in range(n)]
        for i in range(n)
    ]
    for col in range(n):
        piv = next(r for r in range(col, n) if aug[r][col] != 0)
        aug[col], aug[piv] = aug[piv], aug[col]
        inv = aug[col][col]
        aug[col] = [x / inv for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col]:
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
    return tuple(tuple(row[n:]) for row in aug)


@dataclass(frozen=True)
class Root:
    """A positive root with all derived data precomputed.

    root_coords -- expansion in simple roots (integers)
    coords      -- pairings against the simple coroots (fundamental basis)
    d           -- 2/(root, root), an integer in {1, 2, 3}
    coroot      -- the coroot h_root expanded in the simple coroots
    height      -- sum of root_coords
    """

    root_coords: tuple
    coords: tuple
    d: int
    coroot: tuple
    height: int


class RootSystem:
    """Immutable Cartan datum of one simple type.

    All methods are pure functions of their arguments; instances are shared
    (see :func:`root_system`) and safe for concurrent reads.
    """

    def __init__(self, series, rank):
        _validate_type(series, rank)
        self.series = series
        self.rank = rank
        self.name = f"{series}{rank}"
        self.cartan, self.d_simple = _cartan_and_d(series, rank)
        # column j of the Cartan matrix = alpha_{j+1} in fundamental coords
        self.simple_root_coords = tuple(
            tuple(self.cartan[i][j] for i in range(rank)) for j in range(rank)
        )
        self.rho = (1,) * rank
        self.pairing_scale = lcm(*self.d_simple)
        self._inv_cartan = _invert_rational(self.cartan)
        self.positive_roots = self._generate_positive_roots()
        heights = [r.height for r in self.positive_roots]
        top = [i for i, h in enumerate(heights) if h == max(heights)]
        assert len(top) == 1, "highest root must be unique"
        self.theta_index = top[0]
        theta = self.positive_roots[self.theta_index]
        assert theta.d == 1, "highest root must be long"
        assert all(c >= 0 for c in theta.coords), "highest root must be dominant"
        self.theta = theta
        # h-vee: 1 + height of the coroot of the highest root
        self.dual_coxeter = 1 + sum(theta.coroot)
        self._dominant_cache = {}
        self._w0 = None

    def __repr__(self):
        return f"RootSystem({self.name})"

    # ------------------------------------------------------------------
    # construction of the positive roots by closure from the simple roots

    def _generate_positive_roots(self):
        n = self.rank
        simple = [tuple(int(i == j) for j in range(n)) for i in range(n)]
        known = set(simple)
        layers = [list(simple)]
        while layers[-1]:
            nxt = []
            for a in layers[-1]:
                for i in range(n):
                    # p = length of the alpha_i-string below a
                    p = 0
                    b = list(a)
                    while True:
                        b[i] -= 1
                        if b[i] < 0 or tuple(b) not in known:
                            break
                        p += 1
                    pair = sum(self.cartan[i][j] * a[j] for j in range(n))
                    if p - pair > 0:
                        c = tuple(x + int(j == i) for j, x in enumerate(a))
                        if c not in known:
                            known.add(c)
                            nxt.append(c)
            layers.append(sorted(nxt))
        roots = []
        for layer in layers[:-1]:
            for a in sorted(layer):
                roots.append(self._finish_root(a))
        return tuple(roots)

    def _finish_root(self, root_coords):
        n = self.rank
        coords = tuple(
            sum(self.cartan[i][j] * root_coords[j] for j in range(n)) for i in range(n)
        )
        norm = sum(
            Fraction(self.cartan[i][j], self.d_simple[i]) * root_coords[i] * root_coords[j]
            for i in range(n)
            for j in range(n)
        )
        d = Fraction(2) / norm
        assert d.denominator == 1 and int(d) in (1, 2, 3), f"bad root length for {root_coords}"
        d = int(d)
        coroot = []
        for j in range(n):
            t = Fraction(root_coords[j] * d, self.d_simple[j])
            assert t.denominator == 1
            coroot.append(int(t))
        return Root(root_coords, coords, d, tuple(coroot), sum(root_coords))

    # ------------------------------------------------------------------
    # weights and pairings

    def check_weight(self, weight):
        if len(weight) != self.rank or not all(isinstance(c, int) for c in weight):
            raise ValueError(f"weight {weight!r} is not a length-{self.rank} integer vector")
        return tuple(weight)

    def zero_weight(self):
        return (0,) * self.rank

    def fundamental_weight(self, i):
        """The i-th fundamental weight (1-indexed)."""
        if not 1 <= i <= self.rank:
            raise ValueError(f"node index {i} out of range 1..{self.rank}")
        return tuple(int(j == i - 1) for j in range(self.rank))

    def add(self, a, b):
        return tuple(x + y for x, y in zip(a, b))

    def sub(self, a, b):
        return tuple(x - y for x, y in zip(a, b))

    def scale(self, k, a):
        return tuple(k * x for x in a)

    def pairing(self, weight, root_index):
        """weight(h_root) for the given positive-root index."""
        root = self.positive_roots[root_index]
        return sum(t * c for t, c in zip(root.coroot, weight))

    def theta_pairing(self, weight):
        """weight(h_theta), the level-relevant pairing with the highest coroot."""
        return sum(t * c for t, c in zip(self.theta.coroot, weight))

    def is_dominant(self, weight):
        return all(c >= 0 for c in weight)

    def reflect(self, i, weight):
        """Simple reflection s_i (1-indexed) acting on a weight."""
        k = weight[i - 1]
        if k == 0:
            return tuple(weight)
        col = self.simple_root_coords[i - 1]
        return tuple(c - k * a for c, a in zip(weight, col))

    def apply_word(self, word, weight):
        """Apply a word of simple reflections, first letter first."""
        for i in word:
            weight = self.reflect(i, weight)
        return weight

    def dominant_representative(self, weight):
        """The unique dominant weight in the Weyl orbit of ``weight``."""
        cached = self._dominant_cache.get(weight)
        if cached is not None:
            return cached
        cur = weight
        while True:
            for i, c in enumerate(cur):
                if c < 0:
                    cur = self.reflect(i + 1, cur)
                    break
            else:
                self._dominant_cache[weight] = cur
                return cur

    def weyl_orbit(self, weight):
        """The full Weyl orbit of a weight, as a set of tuples."""
        seen = {tuple(weight)}
        stack = [tuple(weight)]
        while stack:
            v = stack.pop()
            for i in range(1, self.rank + 1):
                u = self.reflect(i, v)
                if u not in seen:
                    seen.add(u)
                    stack.append(u)
        return seen

    def longest_element(self):
        """A reduced word for the longest Weyl group element.

        Built by straightening the antidominant weight -rho; applying the
        returned word (first letter first) to any weight realises w_0.
        """
        if self._w0 is None:
            cur = tuple(-1 for _ in range(self.rank))
            word = []
            while True:
                for i, c in enumerate(cur):
                    if c < 0:
                        word.append(i + 1)
                        cur = self.reflect(i + 1, cur)
                        break
                else:
                    break
            assert len(word) == len(self.positive_roots)
            self._w0 = tuple(word)
        return self._w0

    # ------------------------------------------------------------------
    # the sublattice of weights divisible by the d-values

    def gamma_coefficients(self, weight):
        """Per-node integers s_i with weight = sum d_i s_i omega_i, or None.

        Only dominant weights are accepted; membership in this sublattice is
        what makes a weight a legal translation step at every level.
        """
        if not self.is_dominant(weight):
            raise ValueError(f"weight {weight} is not dominant")
        s = []
        for c, d in zip(weight, self.d_simple):
            if c % d:
                return None
            s.append(c // d)
        return tuple(s)

    def in_gamma(self, weight):
        return self.gamma_coefficients(weight) is not None

    def is_level_dominant(self, weight, level):
        """True iff the weight pairs with the highest coroot at most ``level``."""
        if not self.is_dominant(weight):
            raise ValueError(f"weight {weight} is not dominant")
        if level < 0:
            raise ValueError("level must be non-negative")
        return self.theta_pairing(weight) <= level

    def divided_pairing(self, weight, root_index):
        """weight(h_root)/d_root, for weights in the d-divisible sublattice.

        Divisibility holds for every positive root whenever it holds at the
        simple ones, so a failure here is a bug, not a user error.
        """
        root = self.positive_roots[root_index]
        val = self.pairing(weight, root_index)
        if val % root.d:
            raise RuntimeError(
                f"internal error: d={root.d} does not divide pairing {val} "
                f"of {weight} with root {root.root_coords}"
            )
        return val // root.d

    # ------------------------------------------------------------------
    # dominance order and exact inner products

    def root_lattice_coords(self, weight):
        """Expansion of a weight in simple roots (Fractions)."""
        return tuple(
            sum(self._inv_cartan[j][k] * weight[k] for k in range(self.rank))
            for j in range(self.rank)
        )

    def dominance_gap(self, upper, lower):
        """Integer simple-root coordinates of upper - lower, or None if the
        difference is not in the root lattice."""
        diff = self.sub(upper, lower)
        coords = self.root_lattice_coords(diff)
        if any(c.denominator != 1 for c in coords):
            return None
        return tuple(int(c) for c in coords)

    def dominates(self, upper, lower):
        """True iff upper - lower is a non-negative integer sum of simple roots."""
        gap = self.dominance_gap(upper, lower)
        return gap is not None and all(c >= 0 for c in gap)

    def scaled_root_pairing(self, weight, root):
        """D*(weight, root) where D clears all d-denominators; exact integer."""
        D = self.pairing_scale
        return sum(
            a * c * (D // d)
            for a, c, d in zip(root.root_coords, weight, self.d_simple)
        )

    def scaled_root_norm(self, root):
        """D*(root, root) as an exact integer."""
        return 2 * self.pairing_scale // root.d

    def weight_norm2(self, weight):
        """(weight, weight) as an exact Fraction."""
        coords = self.root_lattice_coords(weight)
        # (weight, alpha_j) = weight[j]/d_j
        return sum(
            coords[j] * Fraction(weight[j], self.d_simple[j]) for j in range(self.rank)
        )


@lru_cache(maxsize=None)
def root_system(series, rank=None):
    """Shared, immutable root system for a simple type.

    Accepts either ``root_system("A", 2)`` or ``root_system("A2")``.
    """
    if rank is None:
        series, rank = parse_system(series)
    return RootSystem(series, rank)
