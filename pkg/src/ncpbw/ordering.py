"""Graded monomial orderings on the path basis and its t-extension.

Only degree-lexicographic comparison is shipped: degree first, then
left-to-right by a user-chosen precedence on the arrows.  The extension to
t-carrying monomials compares word parts first and breaks ties by the t
power, so every generator beats every pure power of t.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Tuple

from .algebra import AlgebraError, Monomial, NcPoly, Quiver, ZeroPolynomialError


@dataclass(frozen=True)
class OrderSpec:
    """Deglex order given by an arrow precedence (earlier name = greater).

    ``vertex_order`` breaks ties between vertex idempotents; it defaults to
    the quiver's vertex order.  Distinct monomials never compare equal.
    """

    precedence: Tuple[str, ...]
    scheme: str = "deglex"
    vertex_order: Optional[Tuple[str, ...]] = None
    _rank: dict = field(init=False, repr=False, compare=False, default=None)
    _vrank: dict = field(init=False, repr=False, compare=False, default=None)
    _keys: dict = field(init=False, repr=False, compare=False, default=None)

    def __post_init__(self):
        if self.scheme != "deglex":
            raise AlgebraError(f"unsupported order scheme {self.scheme!r}")
        prec = tuple(self.precedence)
        if len(set(prec)) != len(prec):
            raise AlgebraError("duplicate names in precedence")
        object.__setattr__(self, "precedence", prec)
        if self.vertex_order is not None:
            object.__setattr__(self, "vertex_order", tuple(self.vertex_order))
        object.__setattr__(self, "_rank", {a: i for i, a in enumerate(prec)})
        vr = None
        if self.vertex_order is not None:
            vr = {v: i for i, v in enumerate(self.vertex_order)}
        object.__setattr__(self, "_vrank", vr)
        object.__setattr__(self, "_keys", {})

    def validate_for(self, quiver: Quiver) -> None:
        declared = set(quiver.generator_names())
        if set(self.precedence) != declared:
            raise AlgebraError(
                f"precedence {sorted(self.precedence)} does not cover the "
                f"declared generators {sorted(declared)}")

    def key(self, m: Monomial):
        """Sort key: larger key = greater monomial (word part first, then tpow)."""
        cached = self._keys.get(m)
        if cached is not None:
            return cached
        rank = self._rank
        try:
            wkey = tuple(-rank[a] for a in m.word)
        except KeyError as e:
            raise AlgebraError(f"arrow {e.args[0]!r} missing from precedence") from None
        if m.word:
            vkey = 0
        elif self._vrank is not None:
            vkey = -self._vrank[m.vertex]
        else:
            vkey = -m.quiver.vertex_rank(m.vertex)
        out = (len(m.word), wkey, vkey, m.tpow)
        self._keys[m] = out
        return out

    def compare(self, u: Monomial, v: Monomial) -> int:
        """-1, 0, or +1 as u is less than, equal to, or greater than v."""
        if u.quiver != v.quiver:
            raise AlgebraError("monomials from different algebras")
        ku, kv = self.key(u), self.key(v)
        if ku < kv:
            return -1
        if ku > kv:
            return 1
        return 0

    # -- leading data ------------------------------------------------------
    def leading_monomial(self, f: NcPoly) -> Monomial:
        if not f:
            raise ZeroPolynomialError("the zero polynomial has no leading monomial")
        return max(f.monomials(), key=self.key)

    def leading_coefficient(self, f: NcPoly) -> Fraction:
        return f.coefficient(self.leading_monomial(f))

    def leading_term(self, f: NcPoly) -> Tuple[Monomial, Fraction]:
        m = self.leading_monomial(f)
        return m, f.coefficient(m)

    def monic(self, f: NcPoly) -> NcPoly:
        lc = self.leading_coefficient(f)
        return f if lc == 1 else f * (1 / lc)

    def sorted_terms(self, f: NcPoly, reverse: bool = True):
        """Terms of f ordered by this order (leading term first by default)."""
        return sorted(f.terms(), key=lambda mc: self.key(mc[0]), reverse=reverse)
