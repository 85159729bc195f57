"""Quivers, path monomials, and noncommutative polynomials over exact rationals.

The ground ring is the path algebra of a finite quiver, graded by path
length; a free algebra is the one-vertex case whose loops are the free
generators.  Monomials may carry a power of a central degree-1 variable
``t``, so the same types serve both the base ring and its polynomial
extension used for homogenization.  All coefficients are
``fractions.Fraction`` values and all arithmetic is exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Mapping, Optional, Sequence, Tuple, Union

Scalar = Union[Fraction, int]


class AlgebraError(ValueError):
    """Structurally invalid quiver/monomial data, or operands from different algebras."""


class ZeroPolynomialError(AlgebraError):
    """An operation (degree, leading data, homogenization) applied to the zero polynomial."""


@dataclass(frozen=True)
class Arrow:
    name: str
    source: str
    target: str


class Quiver:
    """A finite directed graph presenting a path algebra.

    ``kind="free"`` marks the one-vertex case: the path algebra of a single
    vertex with ``n`` loops is the free algebra on ``n`` generators.  Vertex
    idempotents are the paths of length 0; their sum is the unit of the
    algebra.
    """

    __slots__ = ("vertices", "arrows", "kind", "_arrow_map", "_vertex_rank",
                 "_intern", "_hash")

    def __init__(self, vertices: Iterable[str], arrows: Iterable, kind: str = "path"):
        vs = tuple(str(v) for v in vertices)
        ars = tuple(a if isinstance(a, Arrow) else Arrow(str(a[0]), str(a[1]), str(a[2]))
                    for a in arrows)
        if kind not in ("free", "path"):
            raise AlgebraError(f"unknown quiver kind {kind!r}")
        if not vs:
            raise AlgebraError("a quiver needs at least one vertex")
        if len(set(vs)) != len(vs):
            raise AlgebraError("duplicate vertex ids")
        names = [a.name for a in ars]
        if len(set(names)) != len(names):
            raise AlgebraError("duplicate arrow names")
        vset = set(vs)
        idem_names = {"e" + v for v in vs}
        for a in ars:
            if a.source not in vset or a.target not in vset:
                raise AlgebraError(f"arrow {a.name!r} references unknown vertex")
            if not a.name or a.name == "t" or a.name in idem_names:
                raise AlgebraError(f"arrow name {a.name!r} is reserved")
        if kind == "free":
            if len(vs) != 1:
                raise AlgebraError("a free algebra has exactly one vertex")
            if any(a.source != vs[0] or a.target != vs[0] for a in ars):
                raise AlgebraError("free-algebra generators must be loops")
        self.vertices = vs
        self.arrows = ars
        self.kind = kind
        self._arrow_map = {a.name: a for a in ars}
        self._vertex_rank = {v: i for i, v in enumerate(vs)}
        self._intern: dict = {}
        self._hash = hash((vs, ars, kind))

    @classmethod
    def free(cls, generators: Iterable[str], vertex: str = "1") -> "Quiver":
        """Free algebra on the named generators (one vertex, all loops)."""
        return cls([vertex], [(g, vertex, vertex) for g in generators], kind="free")

    @classmethod
    def path(cls, vertices: Iterable[str], arrows: Iterable) -> "Quiver":
        return cls(vertices, arrows, kind="path")

    # -- value identity -------------------------------------------------
    def __eq__(self, other):
        if self is other:
            return True
        if not isinstance(other, Quiver):
            return NotImplemented
        return (self.vertices == other.vertices and self.arrows == other.arrows
                and self.kind == other.kind)

    def __hash__(self):
        return self._hash

    def __repr__(self):
        if self.kind == "free":
            return f"Quiver.free({[a.name for a in self.arrows]!r})"
        return f"Quiver.path({list(self.vertices)!r}, {[(a.name, a.source, a.target) for a in self.arrows]!r})"

    # -- lookups ---------------------------------------------------------
    def arrow(self, name: str) -> Arrow:
        try:
            return self._arrow_map[name]
        except KeyError:
            raise AlgebraError(f"unknown arrow {name!r}") from None

    def generator_names(self) -> Tuple[str, ...]:
        return tuple(a.name for a in self.arrows)

    def vertex_rank(self, vertex: str) -> int:
        try:
            return self._vertex_rank[vertex]
        except KeyError:
            raise AlgebraError(f"unknown vertex {vertex!r}") from None

    # -- monomial construction (interned) ---------------------------------
    def monomial(self, word: Sequence[str], vertex: Optional[str] = None,
                 tpow: int = 0) -> "Monomial":
        """The basis monomial with the given arrow word and ``t`` power.

        An empty word must be tagged with its vertex (defaulted for free
        algebras); consecutive arrows must compose head-to-tail.
        """
        word = tuple(word)
        if tpow < 0:
            raise AlgebraError("negative t power")
        if word:
            prev = None
            for name in word:
                a = self.arrow(name)
                if prev is not None and prev != a.source:
                    raise AlgebraError(
                        f"path breaks at {name!r}: expected source {prev!r}")
                prev = a.target
            vertex = None
        else:
            if vertex is None:
                if len(self.vertices) != 1:
                    raise AlgebraError("an empty word needs a vertex tag")
                vertex = self.vertices[0]
            else:
                vertex = str(vertex)
                self.vertex_rank(vertex)
        key = (word, vertex, tpow)
        m = self._intern.get(key)
        if m is None:
            m = self._intern.setdefault(key, Monomial(self, word, vertex, tpow))
        return m

    def idempotent(self, vertex: Optional[str] = None, tpow: int = 0) -> "Monomial":
        return self.monomial((), vertex, tpow)

    # -- polynomial helpers -----------------------------------------------
    def zero(self) -> "NcPoly":
        return NcPoly(self, {})

    def unit(self) -> "NcPoly":
        """The multiplicative unit: the sum of all vertex idempotents."""
        return NcPoly(self, {self.idempotent(v): Fraction(1) for v in self.vertices})

    def scalar(self, c: Scalar) -> "NcPoly":
        return NcPoly(self, {self.idempotent(v): Fraction(c) for v in self.vertices})

    def gen(self, name: str) -> "NcPoly":
        return NcPoly(self, {self.monomial((name,)): Fraction(1)})

    def t_power(self, r: int) -> "NcPoly":
        """The central element t**r (a sum over vertex idempotents)."""
        return NcPoly(self, {self.idempotent(v, tpow=r): Fraction(1) for v in self.vertices})

    def poly(self, terms) -> "NcPoly":
        return NcPoly(self, terms)


class Monomial:
    """A basis monomial: a directed path (possibly a vertex idempotent) times t**tpow.

    Instances are interned per quiver; construct them through
    :meth:`Quiver.monomial`.  ``degree`` is path length plus ``tpow`` (t is
    central of degree 1).
    """

    __slots__ = ("quiver", "word", "vertex", "tpow", "_hash")

    def __init__(self, quiver: Quiver, word: Tuple[str, ...],
                 vertex: Optional[str], tpow: int):
        self.quiver = quiver
        self.word = word
        self.vertex = vertex
        self.tpow = tpow
        self._hash = hash((quiver._hash, word, vertex, tpow))

    @property
    def degree(self) -> int:
        return len(self.word) + self.tpow

    @property
    def source(self) -> str:
        return self.quiver.arrow(self.word[0]).source if self.word else self.vertex

    @property
    def target(self) -> str:
        return self.quiver.arrow(self.word[-1]).target if self.word else self.vertex

    def is_vertex(self) -> bool:
        """True for a pure vertex idempotent (length 0, no t factor)."""
        return not self.word and self.tpow == 0

    def word_part(self) -> "Monomial":
        """The same path with the t power stripped."""
        if self.tpow == 0:
            return self
        return self.quiver.monomial(self.word, self.vertex, 0)

    def with_tpow(self, tpow: int) -> "Monomial":
        if tpow == self.tpow:
            return self
        return self.quiver.monomial(self.word, self.vertex, tpow)

    def __mul__(self, other) -> Optional["Monomial"]:
        """Path concatenation, or None when the endpoints do not compose.

        t powers add (t is central); vertex idempotents are local units.
        """
        if not isinstance(other, Monomial):
            return NotImplemented
        if self.quiver != other.quiver:
            raise AlgebraError("monomials from different algebras")
        if self.target != other.source:
            return None
        word = self.word + other.word
        vertex = None if word else self.vertex
        return self.quiver.monomial(word, vertex, self.tpow + other.tpow)

    def __eq__(self, other):
        if self is other:
            return True
        if not isinstance(other, Monomial):
            return NotImplemented
        return (self.word == other.word and self.vertex == other.vertex
                and self.tpow == other.tpow and self.quiver == other.quiver)

    def __hash__(self):
        return self._hash

    def __repr__(self):
        if not self.word and self.tpow == 0:
            body = "1" if self.quiver.kind == "free" else "e" + self.vertex
        else:
            body = "*".join(self.word) if self.word else (
                "1" if self.quiver.kind == "free" else "e" + self.vertex)
            if self.tpow:
                ts = "*".join(["t"] * self.tpow)
                body = ts if not self.word and self.quiver.kind == "free" else body + "*" + ts
        return body


def vertex_at(m: Monomial, i: int) -> str:
    """The i-th vertex along the path of ``m`` (0 = source, len(word) = target)."""
    if i == 0:
        return m.source
    return m.quiver.arrow(m.word[i - 1]).target


def subword_positions(m: Monomial, pattern: Monomial) -> Iterator[int]:
    """Positions at which ``pattern``'s path occurs as a factor of ``m``'s path.

    For an empty pattern word (a vertex idempotent) the positions are the
    indices of matching vertices along ``m``; t powers are ignored here and
    checked by callers.
    """
    if m.quiver != pattern.quiver:
        raise AlgebraError("monomials from different algebras")
    pw = pattern.word
    if not pw:
        for i in range(len(m.word) + 1):
            if vertex_at(m, i) == pattern.vertex:
                yield i
        return
    n, k = len(m.word), len(pw)
    for i in range(n - k + 1):
        if m.word[i:i + k] == pw:
            yield i


def split_factor(m: Monomial, pattern: Monomial, pos: int) -> Tuple[Monomial, Monomial]:
    """Cofactors (left, right) with ``m == left * pattern * right``.

    ``pos`` must come from :func:`subword_positions`.  Any t power of ``m``
    beyond the pattern's own is assigned to the right cofactor.
    """
    q = m.quiver
    k = len(pattern.word)
    spare = m.tpow - pattern.tpow
    if spare < 0:
        raise AlgebraError("pattern carries a higher t power than the monomial")
    lword = m.word[:pos]
    rword = m.word[pos + k:]
    left = q.monomial(lword, None if lword else vertex_at(m, pos), 0)
    right = q.monomial(rword, None if rword else vertex_at(m, pos + k), spare)
    return left, right


def iter_paths(quiver: Quiver, length: int) -> Iterator[Monomial]:
    """All basis monomials of the given path length, in declaration order."""
    if length == 0:
        for v in quiver.vertices:
            yield quiver.idempotent(v)
        return
    by_source: dict = {}
    for a in quiver.arrows:
        by_source.setdefault(a.source, []).append(a)

    def extend(word, end, remaining):
        if remaining == 0:
            yield quiver.monomial(word)
            return
        for a in by_source.get(end, ()):
            yield from extend(word + (a.name,), a.target, remaining - 1)

    for v in quiver.vertices:
        yield from extend((), v, length)


class NcPoly:
    """A finite Fraction-linear combination of monomials (sparse map).

    The zero polynomial is the empty map; no zero coefficients are stored.
    Instances are immutable: all arithmetic returns new polynomials.
    """

    __slots__ = ("quiver", "_terms")

    def __init__(self, quiver: Quiver, terms: Union[Mapping, Iterable] = ()):
        self.quiver = quiver
        data: dict = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for m, c in items:
            if not isinstance(m, Monomial) or m.quiver != quiver:
                raise AlgebraError("monomial does not belong to this algebra")
            c = Fraction(c)
            if c:
                c0 = data.get(m)
                if c0 is None:
                    data[m] = c
                else:
                    c = c0 + c
                    if c:
                        data[m] = c
                    else:
                        del data[m]
        self._terms = data

    # -- inspection -------------------------------------------------------
    def terms(self) -> Iterator[Tuple[Monomial, Fraction]]:
        return iter(self._terms.items())

    def monomials(self) -> Iterator[Monomial]:
        return iter(self._terms)

    def coefficient(self, m: Monomial) -> Fraction:
        return self._terms.get(m, Fraction(0))

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def is_tpow_free(self) -> bool:
        return all(m.tpow == 0 for m in self._terms)

    # -- ring operations ---------------------------------------------------
    def _check(self, other: "NcPoly"):
        if self.quiver != other.quiver:
            raise AlgebraError("polynomials from different algebras")

    def __add__(self, other):
        if not isinstance(other, NcPoly):
            return NotImplemented
        self._check(other)
        data = dict(self._terms)
        for m, c in other._terms.items():
            s = data.get(m, Fraction(0)) + c
            if s:
                data[m] = s
            else:
                data.pop(m, None)
        out = NcPoly.__new__(NcPoly)
        out.quiver, out._terms = self.quiver, data
        return out

    def __neg__(self):
        out = NcPoly.__new__(NcPoly)
        out.quiver = self.quiver
        out._terms = {m: -c for m, c in self._terms.items()}
        return out

    def __sub__(self, other):
        if not isinstance(other, NcPoly):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self._scaled(Fraction(other))
        if not isinstance(other, NcPoly):
            return NotImplemented
        self._check(other)
        data: dict = {}
        for u, a in self._terms.items():
            for v, b in other._terms.items():
                m = u * v
                if m is None:  # incomposable paths annihilate termwise
                    continue
                s = data.get(m, Fraction(0)) + a * b
                if s:
                    data[m] = s
                else:
                    del data[m]
        out = NcPoly.__new__(NcPoly)
        out.quiver, out._terms = self.quiver, data
        return out

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self._scaled(Fraction(other))
        return NotImplemented

    def _scaled(self, c: Fraction) -> "NcPoly":
        out = NcPoly.__new__(NcPoly)
        out.quiver = self.quiver
        out._terms = {} if not c else {m: a * c for m, a in self._terms.items()}
        return out

    def __eq__(self, other):
        if not isinstance(other, NcPoly):
            return NotImplemented
        return self.quiver == other.quiver and self._terms == other._terms

    def __hash__(self):
        return hash((self.quiver._hash, frozenset(self._terms.items())))

    # -- grading ------------------------------------------------------------
    def degree(self) -> int:
        """Top degree; membership of the grading filtration is ``degree() <= p``."""
        if not self._terms:
            raise ZeroPolynomialError("the zero polynomial has no degree")
        return max(m.degree for m in self._terms)

    def leading_homogeneous(self) -> "NcPoly":
        """The top-degree homogeneous slice."""
        d = self.degree()
        out = NcPoly.__new__(NcPoly)
        out.quiver = self.quiver
        out._terms = {m: c for m, c in self._terms.items() if m.degree == d}
        return out

    def is_homogeneous(self) -> bool:
        if not self._terms:
            return True
        degs = {m.degree for m in self._terms}
        return len(degs) == 1

    def __repr__(self):
        if not self._terms:
            return "0"
        def dkey(mc):
            m, _ = mc
            return (-len(m.word), m.word, m.vertex or "", m.tpow)
        parts = []
        for m, c in sorted(self._terms.items(), key=dkey):
            parts.append(("+ " if c > 0 else "- ") + _term_repr(abs(c), m))
        s = " ".join(parts)
        return s[2:] if s.startswith("+ ") else "-" + s[2:]


def _term_repr(c: Fraction, m: Monomial) -> str:
    ms = repr(m)
    if c == 1:
        return ms
    if m.is_vertex() and m.quiver.kind == "free":
        return str(c)
    return f"{c}*{ms}"


@dataclass(frozen=True)
class IdealPresentation:
    """A two-sided ideal given by a finite set of nonzero generators."""

    quiver: Quiver
    generators: Tuple[NcPoly, ...]

    def __init__(self, quiver: Quiver, generators: Iterable[NcPoly]):
        gens = tuple(generators)
        if not gens:
            raise AlgebraError("a presentation needs at least one generator")
        for g in gens:
            if not isinstance(g, NcPoly) or g.quiver != quiver:
                raise AlgebraError("generator does not belong to this algebra")
            if not g:
                raise AlgebraError("zero generator")
        object.__setattr__(self, "quiver", quiver)
        object.__setattr__(self, "generators", gens)
