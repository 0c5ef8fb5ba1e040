"""Sparse exact arithmetic in the graded group ring of the weight lattice.

A :class:`GradedCharacter` is a finitely supported map
``(weight, grade) -> integer`` attached to one root system; weights are
tuples in the fundamental basis and grades are plain integers.  Coefficients
are Python ints, so multiplicities never overflow.  Values are immutable:
every operation returns a fresh character.
"""

from __future__ import annotations

import json

__all__ = ["GradedCharacter", "Character"]


class GradedCharacter:
    """An element of Z[weight lattice][grade], stored sparsely.

    ``terms`` maps ``(coords, grade)`` to a nonzero integer multiplicity.
    Characters attached to different root systems never mix.
    """

    __slots__ = ("system", "terms")

    def __init__(self, system, terms=None):
        self.system = system
        if terms is None:
            self.terms = {}
        else:
            self.terms = {k: m for k, m in terms.items() if m}

    # ------------------------------------------------------------------
    # constructors

    @classmethod
    def unit(cls, system):
        """The ring identity: the zero weight at grade 0."""
        return cls(system, {(system.zero_weight(), 0): 1})

    @classmethod
    def monomial(cls, system, weight, grade=0, mult=1):
        return cls(system, {(system.check_weight(weight), grade): mult})

    # ------------------------------------------------------------------
    # ring structure

    def _check_compatible(self, other):
        if self.system is not other.system:
            raise ValueError(
                f"cannot combine characters over {self.system.name} and {other.system.name}"
            )

    def __eq__(self, other):
        if not isinstance(other, GradedCharacter):
            return NotImplemented
        return self.system is other.system and self.terms == other.terms

    __hash__ = None

    def __bool__(self):
        return bool(self.terms)

    def __add__(self, other):
        self._check_compatible(other)
        out = dict(self.terms)
        for k, m in other.terms.items():
            v = out.get(k, 0) + m
            if v:
                out[k] = v
            else:
                out.pop(k, None)
        return GradedCharacter(self.system, out)

    def __neg__(self):
        return GradedCharacter(self.system, {k: -m for k, m in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        """Convolution product: weights add, grades add."""
        self._check_compatible(other)
        out = {}
        a, b = self.terms, other.terms
        if len(a) > len(b):
            a, b = b, a
        for (w1, g1), m1 in a.items():
            for (w2, g2), m2 in b.items():
                key = (tuple(x + y for x, y in zip(w1, w2)), g1 + g2)
                v = out.get(key, 0) + m1 * m2
                if v:
                    out[key] = v
                else:
                    del out[key]
        return GradedCharacter(self.system, out)

    def __pow__(self, exponent):
        if exponent < 0:
            raise ValueError("negative powers are not defined")
        result = GradedCharacter.unit(self.system)
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            base = base * base if e > 1 else base
            e >>= 1
        return result

    def scaled(self, k):
        return GradedCharacter(self.system, {key: k * m for key, m in self.terms.items()})

    # ------------------------------------------------------------------
    # views and statistics

    def dimension(self):
        """Sum of all multiplicities (the module dimension)."""
        return sum(self.terms.values())

    def graded_dimension(self):
        """Map grade -> multiplicity sum: the Hilbert series coefficients."""
        out = {}
        for (_, g), m in self.terms.items():
            out[g] = out.get(g, 0) + m
        return dict(sorted(out.items()))

    def collapse(self):
        """Forget the grading: everything moved to grade 0."""
        out = {}
        for (w, _), m in self.terms.items():
            key = (w, 0)
            out[key] = out.get(key, 0) + m
        return GradedCharacter(self.system, out)

    def slice(self, grade):
        """The single-grade piece, re-anchored at grade 0."""
        return GradedCharacter(
            self.system, {(w, 0): m for (w, g), m in self.terms.items() if g == grade}
        )

    def shift(self, offset):
        """Shift every grade by ``offset`` (multiplication by q^offset)."""
        return GradedCharacter(
            self.system, {(w, g + offset): m for (w, g), m in self.terms.items()}
        )

    def truncate(self, max_grade):
        """Drop all terms of grade above ``max_grade``."""
        return GradedCharacter(
            self.system, {(w, g): m for (w, g), m in self.terms.items() if g <= max_grade}
        )

    def grades(self):
        return sorted({g for (_, g) in self.terms})

    @property
    def is_plain(self):
        return all(g == 0 for (_, g) in self.terms)

    def weight_multiplicity(self, weight, grade=0):
        return self.terms.get((tuple(weight), grade), 0)

    def is_w_invariant(self):
        """True iff every graded slice is symmetric under the Weyl group.

        It suffices to test the simple reflections, which generate.
        """
        rs = self.system
        for (w, g), m in self.terms.items():
            for i in range(1, rs.rank + 1):
                if self.terms.get((rs.reflect(i, w), g), 0) != m:
                    return False
        return True

    # ------------------------------------------------------------------
    # serialization: JSON lines, one term per line, multiplicities as
    # decimal strings so arbitrary precision survives every consumer

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda kv: (kv[0][0], kv[0][1]))

    def to_jsonl(self, kind=None):
        if kind is None:
            kind = "plain" if self.is_plain else "graded"
        if kind not in ("plain", "graded"):
            raise ValueError(f"unknown serialization kind {kind!r}")
        lines = [json.dumps({"system": self.system.name, "kind": kind}, separators=(",", ":"))]
        for (w, g), m in self.sorted_terms():
            lines.append(
                json.dumps({"w": list(w), "g": g, "m": str(m)}, separators=(",", ":"))
            )
        return "\n".join(lines) + "\n"

    @classmethod
    def from_jsonl(cls, text, expect_system=None):
        from .rootsystem import root_system

        lines = [ln for ln in text.splitlines() if ln.strip()]
        if not lines:
            raise ValueError("empty character file")
        header = json.loads(lines[0])
        if "system" not in header or header.get("kind") not in ("plain", "graded"):
            raise ValueError(f"bad character header {lines[0]!r}")
        if expect_system is not None and header["system"] != expect_system:
            raise ValueError(
                f"character file is for {header['system']}, expected {expect_system}"
            )
        rs = root_system(header["system"])
        terms = {}
        for ln in lines[1:]:
            rec = json.loads(ln)
            key = (tuple(rec["w"]), int(rec["g"]))
            if key in terms:
                raise ValueError(f"duplicate term {key} in character file")
            terms[key] = int(rec["m"])
        char = cls(rs, terms)
        if header["kind"] == "plain" and not char.is_plain:
            raise ValueError("character file declared plain but carries nonzero grades")
        return char

    def __repr__(self):
        return (
            f"GradedCharacter({self.system.name}, {len(self.terms)} terms, "
            f"dim {self.dimension()})"
        )


# An ungraded character is just a graded one concentrated in grade 0.
Character = GradedCharacter
