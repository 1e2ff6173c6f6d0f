"""Graded Poisson model for k-fold loop homology of decorated
configuration spaces: the free graded-commutative algebra on the
blockwise Lyndon basis of the ``lie`` module, regraded so a basis bracket
of length m has degree m(2q+1-k) + (m-1)(k-1), equipped with the bracket
of degree k-1 (the Browder operation) satisfying, for homogeneous a, b, c:

  Jacobi     a_1 L[a,L[b,c]] + a_2 L[b,L[c,a]] + a_3 L[c,L[a,b]] = 0
             with a_1 = (-1)^{(|a|+k-1)(|c|+k-1)} and cyclic companions;
  Antisym    L[a,b] = (-1)^{|a||b| + 1 + (k-1)(|a|+|b|+1)} L[b,a];
  Leibniz    L[a.b, c] = a.L[b,c] + (-1)^{|a||b|} b.L[a,c];
  Degree     |L[a,b]| = k-1 + |a| + |b|.

Internally everything is computed in the (k-1)-desuspended grading
|x|* = |x| + k - 1, where every primitive has even degree 2q*(length) and
the bracket restricted to primitives is the plain Lie bracket of the
``lie`` module with its integer structure constants.  The Koszul signs of
the printed axioms fall out of this one convention; the suites assert the
printed exponents verbatim.

All primitives share the parity of k-1, so the underlying algebra is
polynomial for odd k and exterior-like (odd squares vanish) for even k.
The homology suspension is modeled on the primitive part only: it fixes
basis labels and lowers k by one.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Dict, List, Optional, Tuple

from . import lie as lie_mod
from . import lyndon
from .groups import GroupContext, GroupElement

Primitive = Tuple[int, tuple]  # (block, Lyndon word of block-local letters)
Monomial = Tuple[Primitive, ...]  # sorted by _prim_key
Terms = Dict[Monomial, Fraction]


def _prim_key(p: Primitive):
    block, word = p
    return (block, len(word), word)


@dataclass(frozen=True)
class PoissonGrading:
    k: int
    q: int

    def __post_init__(self):
        if not 1 < self.k < 2 * self.q + 1:
            raise ValueError(
                f"need 1 < k < 2q+1 for a positive generator degree, got k={self.k}, q={self.q}"
            )

    @property
    def generator_degree(self) -> int:
        return 2 * self.q + 1 - self.k

    @property
    def shift(self) -> int:
        """The bracket degree shift k - 1."""
        return self.k - 1

    def primitive_degree(self, length: int) -> int:
        """Degree of a basis bracket of the given length:
        length*(2q+1-k) + (length-1)*(k-1) = 2q*length - (k-1)."""
        return 2 * self.q * length - self.shift

    @property
    def odd_primitives(self) -> bool:
        return self.shift % 2 == 1

    def suspended(self) -> "PoissonGrading":
        return PoissonGrading(self.k - 1, self.q)

    def regraded(self) -> "PoissonGrading":
        """(q, k) -> (q+1, k+2): fixes the generator degree 2q+1-k."""
        return PoissonGrading(self.k + 2, self.q + 1)


class PoissonContext:
    def __init__(self, group: GroupContext, n: int, grading: PoissonGrading):
        self.group = group
        self.n = n
        self.grading = grading
        self.lie = lie_mod.LieContext(group, n, q=grading.q)

    def compatible(self, other: "PoissonContext") -> bool:
        return (
            self.group is other.group
            and self.n == other.n
            and self.grading == other.grading
        )

    def _check(self, x: "PoissonElement") -> None:
        if not isinstance(x, PoissonElement) or not self.compatible(x.ctx):
            raise ValueError("poisson grading mismatch")

    # -- constructors ------------------------------------------------------

    def one(self) -> "PoissonElement":
        return PoissonElement(self, {(): Fraction(1)})

    def zero(self) -> "PoissonElement":
        return PoissonElement(self, {})

    def generator(self, i: int, j: int, sigma: GroupElement) -> "PoissonElement":
        i, j, sigma = self.lie.normalize_index(i, j, sigma)
        prim: Primitive = (i, ((j, sigma.uid),))
        return PoissonElement(self, {(prim,): Fraction(1)})

    def from_lie(self, x: lie_mod.LieElement) -> "PoissonElement":
        """A Lie normal form as a combination of primitive monomials."""
        if x.ctx.group is not self.group or x.ctx.n != self.n:
            raise ValueError("poisson grading mismatch")
        terms: Terms = {}
        for block, word, c in x.terms():
            mono: Monomial = ((block, word),)
            terms[mono] = terms.get(mono, Fraction(0)) + c
        return PoissonElement(self, terms)

    def primitive_degree_of(self, p: Primitive) -> int:
        return self.grading.primitive_degree(len(p[1]))

    def monomial_degree(self, mono: Monomial) -> int:
        return sum(self.primitive_degree_of(p) for p in mono)

    # -- graded-commutative product -----------------------------------------

    def _merge(self, left: Monomial, right: Monomial) -> Tuple[Optional[Monomial], int]:
        """Sort the concatenation left + right, returning (monomial, sign);
        (None, 0) when an odd-degree factor repeats."""
        odd = self.grading.odd_primitives
        merged: List[Primitive] = []
        sign = 1
        a, b = 0, 0
        while a < len(left) and b < len(right):
            ka, kb = _prim_key(left[a]), _prim_key(right[b])
            if ka <= kb:
                merged.append(left[a])
                a += 1
            else:
                # right[b] crosses the remaining left factors
                if odd and (len(left) - a) % 2 == 1:
                    sign = -sign
                merged.append(right[b])
                b += 1
        merged.extend(left[a:])
        merged.extend(right[b:])
        if odd:
            for idx in range(len(merged) - 1):
                if merged[idx] == merged[idx + 1]:
                    return None, 0
        return tuple(merged), sign

    def multiply(self, x: "PoissonElement", y: "PoissonElement") -> "PoissonElement":
        self._check(x)
        self._check(y)
        out: Terms = {}
        for mu, cu in x.terms.items():
            for mv, cv in y.terms.items():
                mono, sign = self._merge(mu, mv)
                if mono is None:
                    continue
                nv = out.get(mono, Fraction(0)) + sign * cu * cv
                if nv:
                    out[mono] = nv
                else:
                    out.pop(mono, None)
        return PoissonElement(self, out)

    # -- the bracket ---------------------------------------------------------

    def bracket(self, x: "PoissonElement", y: "PoissonElement") -> "PoissonElement":
        self._check(x)
        self._check(y)
        out = self.zero()
        for mu, cu in x.terms.items():
            for mv, cv in y.terms.items():
                out = out + self._bracket_monomials(mu, mv).scale(cu * cv)
        return out

    def _bracket_monomials(self, left: Monomial, right: Monomial) -> "PoissonElement":
        if not left or not right:
            return self.zero()
        shift = self.grading.shift
        if len(left) > 1:
            head, rest = left[0], left[1:]
            deg_head = self.primitive_degree_of(head)
            deg_rest = self.monomial_degree(rest)
            t1 = self.multiply(
                PoissonElement(self, {(head,): Fraction(1)}),
                self._bracket_monomials(rest, right),
            )
            t2 = self.multiply(
                PoissonElement(self, {rest: Fraction(1)}),
                self._bracket_monomials((head,), right),
            ).scale(Fraction(-1) ** (deg_head * deg_rest))
            return t1 + t2
        if len(right) > 1:
            head, rest = right[0], right[1:]
            deg_head = self.primitive_degree_of(head)
            deg_left = self.monomial_degree(left)
            t1 = self.multiply(
                self._bracket_monomials(left, (head,)),
                PoissonElement(self, {rest: Fraction(1)}),
            )
            t2 = self.multiply(
                PoissonElement(self, {(head,): Fraction(1)}),
                self._bracket_monomials(left, rest),
            ).scale(Fraction(-1) ** (deg_head * (deg_left + shift)))
            return t1 + t2
        return self._bracket_primitives(left[0], right[0])

    def _bracket_primitives(self, p: Primitive, r: Primitive) -> "PoissonElement":
        """In the desuspended grading every primitive is even, so the
        bracket on primitives is the plain Lie bracket of the lie module."""
        xa = lie_mod.LieElement(self.lie, {p[0]: {p[1]: Fraction(1)}})
        xb = lie_mod.LieElement(self.lie, {r[0]: {r[1]: Fraction(1)}})
        return self.from_lie(self.lie.bracket(xa, xb))


@dataclass(frozen=True, eq=False)
class PoissonElement:
    ctx: PoissonContext
    terms: Terms

    def __post_init__(self):
        object.__setattr__(
            self, "terms", {m: c for m, c in self.terms.items() if c}
        )

    def __add__(self, other: "PoissonElement") -> "PoissonElement":
        self.ctx._check(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            nv = out.get(m, Fraction(0)) + c
            if nv:
                out[m] = nv
            else:
                out.pop(m, None)
        return PoissonElement(self.ctx, out)

    def __sub__(self, other: "PoissonElement") -> "PoissonElement":
        return self + other.scale(Fraction(-1))

    def __mul__(self, other: "PoissonElement") -> "PoissonElement":
        return self.ctx.multiply(self, other)

    def scale(self, c) -> "PoissonElement":
        c = Fraction(c)
        return PoissonElement(self.ctx, {m: c * v for m, v in self.terms.items()})

    def bracket(self, other: "PoissonElement") -> "PoissonElement":
        return self.ctx.bracket(self, other)

    def is_zero(self) -> bool:
        return not self.terms

    def degree(self) -> Optional[int]:
        """Common degree of all monomials, or None if inhomogeneous/zero."""
        degs = {self.ctx.monomial_degree(m) for m in self.terms}
        return degs.pop() if len(degs) == 1 else None

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, PoissonElement)
            and self.ctx.compatible(other.ctx)
            and self.terms == other.terms
        )

    def __hash__(self):
        raise TypeError("PoissonElement is not hashable")

    def sorted_terms(self) -> List[Tuple[Monomial, Fraction]]:
        return sorted(
            self.terms.items(),
            key=lambda item: (
                self.ctx.monomial_degree(item[0]),
                len(item[0]),
                tuple(_prim_key(p) for p in item[0]),
            ),
        )

    def __repr__(self):
        if self.is_zero():
            return "PoissonElement(0)"
        bits = []
        for m, c in self.sorted_terms():
            factors = (
                " * ".join(f"P{p[0]}{list(p[1])}" for p in m) or "1"
            )
            bits.append(f"{c}*({factors})")
        return "PoissonElement(" + " + ".join(bits) + ")"


# ---------------------------------------------------------------------------
# suspension


def suspension(x: PoissonElement) -> PoissonElement:
    """Homology suspension on the primitive part: basis labels are fixed,
    the loop depth k drops by one (so degrees rise by one)."""
    ctx = x.ctx
    target = PoissonContext(ctx.group, ctx.n, ctx.grading.suspended())
    terms: Terms = {}
    for mono, c in x.terms.items():
        if len(mono) != 1:
            raise ValueError(
                "suspension is defined on the primitive part only; "
                "got a product monomial"
            )
        terms[mono] = terms.get(mono, Fraction(0)) + c
    return PoissonElement(target, terms)


# ---------------------------------------------------------------------------
# basis counting


def basis_dimension(
    ctx: PoissonContext, degree: int, group_order: Optional[int] = None
) -> int:
    """Number of basis monomials of the given total degree: multisets of
    basis brackets, square-free in the odd-primitive regime."""
    if degree < 0:
        raise ValueError("degree must be >= 0")
    if group_order is None:
        if not ctx.group.is_finite:
            raise ValueError(
                "basis counting needs a finite group; pass an explicit "
                "truncation order for infinite backends"
            )
        group_order = ctx.group.order
    poly = [0] * (degree + 1)
    poly[0] = 1
    length = 1
    while True:
        delta = ctx.grading.primitive_degree(length)
        if delta > degree:
            break
        count = lie_mod.graded_dimension(ctx.lie, length, group_order=group_order)
        if count:
            factor = [0] * (degree + 1)
            for m in range(degree // delta + 1):
                factor[m * delta] = (
                    comb(count, m) if ctx.grading.odd_primitives else comb(count + m - 1, m)
                )
            nxt = [0] * (degree + 1)
            for a, ca in enumerate(poly):
                if ca:
                    for b in range(0, degree + 1 - a, 1):
                        if factor[b]:
                            nxt[a + b] += ca * factor[b]
            poly = nxt
        length += 1
    return poly[degree]


def enumerate_monomials(ctx: PoissonContext, degree: int) -> List[Monomial]:
    """Explicit basis monomials of the given total degree (finite groups)."""
    if not ctx.group.is_finite:
        raise ValueError("enumeration needs a finite group")
    primitives: List[Primitive] = []
    length = 1
    while ctx.grading.primitive_degree(length) <= degree:
        primitives.extend(lie_mod.block_lyndon_basis(ctx.lie, length))
        length += 1
    primitives.sort(key=_prim_key)
    odd = ctx.grading.odd_primitives
    out: List[Monomial] = []

    def rec(prefix: Monomial, start: int, remaining: int):
        if remaining == 0:
            out.append(prefix)
            return
        for idx in range(start, len(primitives)):
            p = primitives[idx]
            d = ctx.primitive_degree_of(p)
            if d > remaining:
                continue
            rec(prefix + (p,), idx + 1 if odd else idx, remaining - d)

    rec((), 0, degree)
    return out
