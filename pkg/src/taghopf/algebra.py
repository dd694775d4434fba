"""The algebra H: rational linear combinations of canonical Tags.

The product is disjoint union with the ordinal-sum edge order: edges of the
left factor come first, then the edges of the right factor, whose vertices are
shifted past those of the left factor.  Coefficients are exact (``int`` or
``fractions.Fraction``); a Fraction with denominator 1 is stored as an int.
"""

from __future__ import annotations

import re
from fractions import Fraction
from numbers import Rational
from typing import Iterable, Mapping

from .errors import TagSyntaxError
from .graph import EMPTY, Tag, canonicalize, parse_tag, render_tag

__all__ = [
    "LinComb",
    "TensorComb",
    "product",
    "product_lin",
    "degree",
    "tensor",
    "tensor_product_componentwise",
    "parse_lincomb",
    "render_lincomb",
    "parse_tensor",
    "render_tensor",
]


def _coef(c):
    if isinstance(c, bool) or not isinstance(c, Rational):
        raise TypeError(f"coefficients must be exact rationals, got {c!r}")
    if isinstance(c, Fraction) and c.denominator == 1:
        return c.numerator
    return c


class _Comb:
    """Sparse formal combination; keys are canonical, zero terms never stored."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping | Iterable | None = None):
        acc: dict = {}
        if terms is not None:
            items = terms.items() if isinstance(terms, Mapping) else terms
            for key, c in items:
                key = self._canon_key(key)
                acc[key] = acc.get(key, 0) + _coef(c)
        self._terms = {k: _coef(c) for k, c in acc.items() if c != 0}

    @staticmethod
    def _canon_key(key):
        raise NotImplementedError

    @classmethod
    def _from_canonical(cls, acc: dict):
        """Wrap a dict whose keys are already canonical; drops zeros."""
        obj = cls.__new__(cls)
        obj._terms = {
            k: (c.numerator if isinstance(c, Fraction) and c.denominator == 1 else c)
            for k, c in acc.items()
            if c != 0
        }
        return obj

    @classmethod
    def zero(cls):
        return cls._from_canonical({})

    def items(self):
        return self._terms.items()

    def keys(self):
        return self._terms.keys()

    def values(self):
        return self._terms.values()

    def __iter__(self):
        return iter(self._terms)

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def __getitem__(self, key):
        return self._terms.get(self._canon_key(key), 0)

    def __eq__(self, other):
        if type(other) is type(self):
            return self._terms == other._terms
        if isinstance(other, int) and other == 0:
            return not self._terms
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def __add__(self, other):
        if type(other) is not type(self):
            return NotImplemented
        acc = dict(self._terms)
        for k, c in other._terms.items():
            acc[k] = acc.get(k, 0) + c
        return self._from_canonical(acc)

    def __sub__(self, other):
        if type(other) is not type(self):
            return NotImplemented
        acc = dict(self._terms)
        for k, c in other._terms.items():
            acc[k] = acc.get(k, 0) - c
        return self._from_canonical(acc)

    def __neg__(self):
        return self._from_canonical({k: -c for k, c in self._terms.items()})

    def scale(self, c):
        c = _coef(c)
        return self._from_canonical({k: c * v for k, v in self._terms.items()})

    def __rmul__(self, c):
        if isinstance(c, Rational) and not isinstance(c, bool):
            return self.scale(c)
        return NotImplemented


class LinComb(_Comb):
    """Element of H: a finite map from canonical Tags to nonzero rationals."""

    __slots__ = ()

    @staticmethod
    def _canon_key(key):
        if not isinstance(key, Tag):
            raise TypeError(f"LinComb keys must be Tags, got {key!r}")
        return canonicalize(key)

    @classmethod
    def of(cls, t: Tag, c=1) -> LinComb:
        return cls._from_canonical({canonicalize(t): _coef(c)})

    @classmethod
    def one(cls) -> LinComb:
        return cls._from_canonical({EMPTY: 1})

    def __mul__(self, other):
        if isinstance(other, LinComb):
            return product_lin(self, other)
        if isinstance(other, Rational) and not isinstance(other, bool):
            return self.scale(other)
        return NotImplemented

    def __repr__(self):
        return f"LinComb({render_lincomb(self)!r})"

    def __str__(self):
        return render_lincomb(self)


class TensorComb(_Comb):
    """Element of a tensor power of H; keys are tuples of canonical Tags.

    Pairs are the usual case (H ⊗ H); longer tuples appear when iterating the
    coproduct.
    """

    __slots__ = ()

    @staticmethod
    def _canon_key(key):
        if not isinstance(key, tuple) or not all(isinstance(t, Tag) for t in key):
            raise TypeError(f"TensorComb keys must be tuples of Tags, got {key!r}")
        return tuple(canonicalize(t) for t in key)

    @classmethod
    def one(cls, arity: int = 2) -> TensorComb:
        return cls._from_canonical({(EMPTY,) * arity: 1})

    def __mul__(self, other):
        if isinstance(other, TensorComb):
            return tensor_product_componentwise(self, other)
        if isinstance(other, Rational) and not isinstance(other, bool):
            return self.scale(other)
        return NotImplemented

    def __repr__(self):
        return f"TensorComb({render_tensor(self)!r})"

    def __str__(self):
        return render_tensor(self)


def _shifted_union(a: Tag, b: Tag) -> Tag:
    if not b.edges and not b.vertex_count:
        return a
    if not a.edges and not a.vertex_count:
        return b
    s = a.vertex_count
    return Tag(s + b.vertex_count, a.edges + tuple((u + s, v + s) for u, v in b.edges))


def product(a: Tag, b: Tag) -> Tag:
    """Disjoint union with the ordinal-sum order (edges of ``a`` first)."""
    return _shifted_union(a, b)


def degree(t: Tag) -> int:
    """Number of edges; H is graded by it."""
    return len(t.edges)


def product_lin(x: LinComb, y: LinComb) -> LinComb:
    # the product of canonical Tags is canonical, so keys need no re-canonicalization
    acc: dict = {}
    for a, ca in x.items():
        for b, cb in y.items():
            k = _shifted_union(a, b)
            acc[k] = acc.get(k, 0) + ca * cb
    return LinComb._from_canonical(acc)


def tensor(*factors: LinComb) -> TensorComb:
    """Multilinear pairing ``x ⊗ y ⊗ ...`` of linear combinations."""
    acc: dict = {(): 1}
    for f in factors:
        nxt: dict = {}
        for key, c in acc.items():
            for t, ct in f.items():
                k = key + (t,)
                nxt[k] = nxt.get(k, 0) + c * ct
        acc = nxt
    return TensorComb._from_canonical(acc)


def tensor_product_componentwise(x: TensorComb, y: TensorComb) -> TensorComb:
    """``(a ⊗ b) · (c ⊗ d) = (a·c) ⊗ (b·d)``, extended bilinearly."""
    acc: dict = {}
    for kx, cx in x.items():
        for ky, cy in y.items():
            if len(kx) != len(ky):
                raise ValueError("tensor factors have different arity")
            k = tuple(_shifted_union(a, b) for a, b in zip(kx, ky))
            acc[k] = acc.get(k, 0) + cx * cy
    return TensorComb._from_canonical(acc)


# ---------------------------------------------------------------------------
# text format

def _render_coef(c) -> str:
    if isinstance(c, Fraction):
        return f"{c.numerator}/{c.denominator}"
    return str(c)


def render_lincomb(x: LinComb) -> str:
    if not x:
        return "0"
    return " + ".join(
        f"{_render_coef(c)} * {render_tag(t, canonical=False)}"
        for t, c in sorted(x.items(), key=lambda kv: kv[0].sort_key())
    )


def _tensor_order(key):
    # t⊗1 and 1⊗t first (heaviest left factor first), then the rest
    boundary = any(t.is_empty() for t in key)
    return (0 if boundary else 1, tuple(-len(t.edges) for t in key), tuple(t.sort_key() for t in key))


def render_tensor(x: TensorComb) -> str:
    if not x:
        return "0"
    return " + ".join(
        f"{_render_coef(c)} * " + " (x) ".join(render_tag(t, canonical=False) for t in key)
        for key, c in sorted(x.items(), key=lambda kv: _tensor_order(kv[0]))
    )


_TERM_RE = re.compile(
    r"""\s*(?P<sign>[+-])?\s*
        (?:(?P<coef>-?\d+(?:/\d+)?)\s*\*\s*)?
        (?P<body>g\{[^{}]*\}(?:\s*\(x\)\s*g\{[^{}]*\})*)\s*""",
    re.VERBOSE,
)


def _parse_terms(text: str):
    text = text.strip()
    if text == "0":
        return []
    pos = 0
    out = []
    while pos < len(text):
        m = _TERM_RE.match(text, pos)
        if m is None or m.end() == pos:
            raise TagSyntaxError(f"malformed combination near {text[pos:pos + 30]!r}")
        if out and m.group("sign") is None:
            raise TagSyntaxError(f"missing '+' between terms near {text[pos:pos + 30]!r}")
        try:
            c = Fraction(m.group("coef")) if m.group("coef") else Fraction(1)
        except ZeroDivisionError:
            raise TagSyntaxError(f"zero denominator in {m.group('coef')!r}") from None
        if m.group("sign") == "-":
            c = -c
        factors = tuple(parse_tag(s) for s in re.split(r"\s*\(x\)\s*", m.group("body")))
        out.append((factors, c))
        pos = m.end()
    return out


def parse_lincomb(text: str) -> LinComb:
    """Parse ``<rational> * <tag> + ...``; a bare tag means coefficient 1."""
    terms = _parse_terms(text)
    if any(len(f) != 1 for f, _ in terms):
        raise TagSyntaxError("tensor term found where a linear combination was expected")
    return LinComb((f[0], c) for f, c in terms)


def parse_tensor(text: str) -> TensorComb:
    terms = _parse_terms(text)
    arities = {len(f) for f, _ in terms}
    if len(arities) > 1 or 1 in arities:
        raise TagSyntaxError("tensor terms must all have the same number (>= 2) of factors")
    return TensorComb((f, c) for f, c in terms)
