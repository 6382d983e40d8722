"""Sparse multivariate polynomials over the rationals.

A :class:`Poly` is an immutable mapping from exponent tuples to nonzero
``Fraction`` coefficients, with a fixed number of variables.  Terms are kept
in a plain dict; :meth:`Poly.terms_sorted` returns them in graded
lexicographic order when a canonical ordering is needed.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Dict, Iterable, List, Sequence, Tuple

Monomial = Tuple[int, ...]


class NotDivisible(ArithmeticError):
    pass


class ArityMismatch(ValueError):
    pass


class OrderTooLow(ValueError):
    pass


def _as_fraction(c) -> Fraction:
    return c if isinstance(c, Fraction) else Fraction(c)


def grlex_key(mono: Monomial):
    return (sum(mono), mono)


class Poly:
    __slots__ = ("nvars", "_terms", "_hash")

    def __init__(self, nvars: int, terms: Dict[Monomial, object] | None = None):
        self.nvars = nvars
        clean: Dict[Monomial, Fraction] = {}
        if terms:
            for mono, c in terms.items():
                if len(mono) != nvars:
                    raise ArityMismatch(f"monomial {mono} has wrong arity for {nvars} variables")
                if c:
                    clean[tuple(mono)] = _as_fraction(c)
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, nvars: int, terms: Dict[Monomial, Fraction]) -> "Poly":
        # trusted constructor: terms already clean
        p = cls.__new__(cls)
        p.nvars = nvars
        p._terms = terms
        p._hash = None
        return p

    # constructors
    @classmethod
    def zero(cls, nvars: int) -> "Poly":
        return cls._raw(nvars, {})

    @classmethod
    def const(cls, c, nvars: int) -> "Poly":
        c = _as_fraction(c)
        return cls._raw(nvars, {(0,) * nvars: c} if c else {})

    @classmethod
    def var(cls, i: int, nvars: int) -> "Poly":
        """The variable with 0-based index ``i``."""
        e = [0] * nvars
        e[i] = 1
        return cls._raw(nvars, {tuple(e): Fraction(1)})

    @classmethod
    def monomial(cls, mono: Sequence[int], coeff=1) -> "Poly":
        return cls(len(mono), {tuple(mono): coeff})

    @classmethod
    def gens(cls, nvars: int) -> List["Poly"]:
        return [cls.var(i, nvars) for i in range(nvars)]

    # basic queries
    @property
    def terms(self) -> Dict[Monomial, Fraction]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def terms_sorted(self) -> List[Tuple[Monomial, Fraction]]:
        return sorted(self._terms.items(), key=lambda kv: grlex_key(kv[0]), reverse=True)

    def coeff(self, mono: Sequence[int]) -> Fraction:
        return self._terms.get(tuple(mono), Fraction(0))

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        return max((sum(m) for m in self._terms), default=-1)

    def is_homogeneous(self) -> bool:
        return len({sum(m) for m in self._terms}) <= 1

    def homogeneous_degree(self) -> int:
        degs = {sum(m) for m in self._terms}
        if len(degs) > 1:
            raise ValueError("polynomial is not homogeneous")
        return degs.pop() if degs else -1

    def homogeneous_part(self, d: int) -> "Poly":
        return Poly._raw(self.nvars, {m: c for m, c in self._terms.items() if sum(m) == d})

    def homogeneous_parts(self) -> Dict[int, "Poly"]:
        parts: Dict[int, Dict[Monomial, Fraction]] = {}
        for m, c in self._terms.items():
            parts.setdefault(sum(m), {})[m] = c
        return {d: Poly._raw(self.nvars, t) for d, t in parts.items()}

    def constant_term(self) -> Fraction:
        return self._terms.get((0,) * self.nvars, Fraction(0))

    def leading_term(self) -> Tuple[Monomial, Fraction]:
        """Leading term in lexicographic order."""
        if not self._terms:
            raise ValueError("zero polynomial has no leading term")
        mono = max(self._terms)
        return mono, self._terms[mono]

    # arithmetic
    def _check(self, other: "Poly"):
        if other.nvars != self.nvars:
            raise ArityMismatch(f"{self.nvars} vs {other.nvars} variables")

    def _coerce(self, other) -> "Poly":
        if isinstance(other, Poly):
            self._check(other)
            return other
        return Poly.const(other, self.nvars)

    def __add__(self, other) -> "Poly":
        other = self._coerce(other)
        out = dict(self._terms)
        for m, c in other._terms.items():
            s = out.get(m, 0) + c
            if s:
                out[m] = s
            else:
                out.pop(m, None)
        return Poly._raw(self.nvars, out)

    __radd__ = __add__

    def __neg__(self) -> "Poly":
        return Poly._raw(self.nvars, {m: -c for m, c in self._terms.items()})

    def __sub__(self, other) -> "Poly":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "Poly":
        return self._coerce(other) - self

    def scale(self, c) -> "Poly":
        c = _as_fraction(c)
        if not c:
            return Poly.zero(self.nvars)
        return Poly._raw(self.nvars, {m: v * c for m, v in self._terms.items()})

    def __mul__(self, other) -> "Poly":
        if not isinstance(other, Poly):
            return self.scale(other)
        self._check(other)
        out: Dict[Monomial, Fraction] = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                m = tuple(a + b for a, b in zip(m1, m2))
                out[m] = out.get(m, 0) + c1 * c2
        return Poly._raw(self.nvars, {m: c for m, c in out.items() if c})

    def __rmul__(self, other) -> "Poly":
        return self.scale(other)

    def __truediv__(self, other) -> "Poly":
        if isinstance(other, Poly):
            return exact_divide(self, other)
        return self.scale(Fraction(1) / _as_fraction(other))

    def __pow__(self, k: int) -> "Poly":
        if k < 0:
            raise ValueError("negative power")
        result = Poly.const(1, self.nvars)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, Poly):
            return self.nvars == other.nvars and self._terms == other._terms
        if isinstance(other, (int, Fraction)):
            return self == Poly.const(other, self.nvars)
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.nvars, frozenset(self._terms.items())))
        return self._hash

    def derivative(self, i: int) -> "Poly":
        out: Dict[Monomial, Fraction] = {}
        for m, c in self._terms.items():
            e = m[i]
            if e:
                mm = m[:i] + (e - 1,) + m[i + 1:]
                out[mm] = c * e
        return Poly._raw(self.nvars, out)

    def swap(self, i: int, j: int) -> "Poly":
        """Exchange variables ``i`` and ``j``."""
        out = {}
        for m, c in self._terms.items():
            mm = list(m)
            mm[i], mm[j] = mm[j], mm[i]
            out[tuple(mm)] = c
        return Poly._raw(self.nvars, out)

    def evaluate(self, point: Sequence) -> Fraction:
        total = Fraction(0)
        for m, c in self._terms.items():
            t = c
            for x, e in zip(point, m):
                if e:
                    t *= _as_fraction(x) ** e
            total += t
        return total

    def __repr__(self) -> str:
        if not self._terms:
            return "0"
        pieces = []
        for m, c in self.terms_sorted():
            factors = [f"x{i + 1}" + (f"^{e}" if e > 1 else "") for i, e in enumerate(m) if e]
            if not factors:
                pieces.append(str(c))
            elif c == 1:
                pieces.append("*".join(factors))
            elif c == -1:
                pieces.append("-" + "*".join(factors))
            else:
                pieces.append(f"{c}*" + "*".join(factors))
        return " + ".join(pieces).replace("+ -", "- ")


def exact_divide(f: Poly, g: Poly) -> Poly:
    """Return q with f = q*g, raising NotDivisible otherwise."""
    f._check(g)
    if g.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    lm, lc = g.leading_term()
    rem = dict(f._terms)
    quot: Dict[Monomial, Fraction] = {}
    gterms = list(g._terms.items())
    while rem:
        m = max(rem)
        c = rem[m]
        shift = tuple(a - b for a, b in zip(m, lm))
        if min(shift) < 0:
            raise NotDivisible(f"{f!r} is not divisible by {g!r}")
        q = c / lc
        quot[shift] = q
        for gm, gc in gterms:
            mm = tuple(a + b for a, b in zip(shift, gm))
            v = rem.get(mm, 0) - q * gc
            if v:
                rem[mm] = v
            else:
                rem.pop(mm, None)
    return Poly._raw(f.nvars, quot)


def substitute(f: Poly, images: Sequence[Poly]) -> Poly:
    """Compose f with the given images of its variables."""
    if len(images) != f.nvars:
        raise ArityMismatch(f"expected {f.nvars} images, got {len(images)}")
    if f.nvars == 0:
        raise ArityMismatch("cannot substitute into a polynomial with no variables")
    target = images[0].nvars
    for im in images:
        if im.nvars != target:
            raise ArityMismatch("images must share one arity")
    powers: List[Dict[int, Poly]] = [{0: Poly.const(1, target)} for _ in images]

    def power(i: int, e: int) -> Poly:
        cache = powers[i]
        if e not in cache:
            k = max(k for k in cache if k < e)
            p = cache[k]
            for j in range(k + 1, e + 1):
                p = p * images[i]
                cache[j] = p
        return cache[e]

    result = Poly.zero(target)
    for m, c in f.items():
        term = Poly.const(c, target)
        for i, e in enumerate(m):
            if e:
                term = term * power(i, e)
        result = result + term
    return result


def elementary_symmetric(k: int, nvars: int, variables: Iterable[int] | None = None) -> Poly:
    idx = list(range(nvars)) if variables is None else list(variables)
    from itertools import combinations
    terms = {}
    for comb in combinations(idx, k):
        e = [0] * nvars
        for i in comb:
            e[i] = 1
        terms[tuple(e)] = 1
    return Poly(nvars, terms)


def complete_homogeneous(k: int, nvars: int, variables: Iterable[int] | None = None) -> Poly:
    from itertools import combinations_with_replacement
    idx = list(range(nvars)) if variables is None else list(variables)
    terms: Dict[Monomial, int] = {}
    for comb in combinations_with_replacement(idx, k):
        e = [0] * nvars
        for i in comb:
            e[i] += 1
        terms[tuple(e)] = 1
    return Poly(nvars, terms)


def power_sum(k: int, nvars: int) -> Poly:
    terms = {}
    for i in range(nvars):
        e = [0] * nvars
        e[i] = k
        terms[tuple(e)] = terms.get(tuple(e), 0) + 1
    return Poly(nvars, terms)


class Series:
    """A power series in an auxiliary variable z, truncated at ``order``.

    ``coeffs[k]`` is the Poly coefficient of z^k.
    """

    __slots__ = ("coeffs", "nvars")

    def __init__(self, coeffs: Sequence[Poly], nvars: int | None = None):
        self.coeffs = list(coeffs)
        if nvars is None:
            nvars = self.coeffs[0].nvars
        self.nvars = nvars

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, k: int) -> Poly:
        return self.coefficient(k)

    def coefficient(self, k: int) -> Poly:
        if k > self.order:
            raise OrderTooLow(f"coefficient z^{k} requested from a series known to order {self.order}")
        return self.coeffs[k]

    def __mul__(self, other: "Series") -> "Series":
        order = min(self.order, other.order)
        out = []
        for k in range(order + 1):
            acc = Poly.zero(self.nvars)
            for j in range(k + 1):
                if self.coeffs[j] and other.coeffs[k - j]:
                    acc = acc + self.coeffs[j] * other.coeffs[k - j]
            out.append(acc)
        return Series(out, self.nvars)

    def truncate(self, order: int) -> "Series":
        return Series(self.coeffs[: order + 1], self.nvars)

    @classmethod
    def from_polys(cls, factors_coeffs: Sequence[Poly], order: int) -> "Series":
        coeffs = list(factors_coeffs[: order + 1])
        nv = factors_coeffs[0].nvars
        coeffs += [Poly.zero(nv)] * (order + 1 - len(coeffs))
        return cls(coeffs, nv)


def coefficient_of_z(series: Series, m: int) -> Poly:
    return series.coefficient(m)


def series_fractional_power(u: Series, c, order: int) -> Series:
    """(u_0 + u_1 z + ...)^c for u_0 = 1, via k v_k = sum_j ((c+1)j - k) u_j v_{k-j}."""
    c = _as_fraction(c)
    if order < 0:
        raise ValueError("order must be non-negative")
    one = Poly.const(1, u.nvars)
    if u.coeffs[0] != one:
        raise ValueError("series must have constant coefficient 1")
    ucoef = [u.coeffs[j] if j <= u.order else Poly.zero(u.nvars) for j in range(order + 1)]
    v = [one]
    for k in range(1, order + 1):
        acc = Poly.zero(u.nvars)
        for j in range(1, k + 1):
            if ucoef[j] and v[k - j]:
                w = (c + 1) * j - k
                if w:
                    acc = acc + (ucoef[j] * v[k - j]).scale(w)
        v.append(acc.scale(Fraction(1, k)))
    return Series(v, u.nvars)


def product_one_minus(nvars: int, variables: Iterable[int] | None = None) -> Series:
    """prod_i (1 - x_i z) as a polynomial series (exact, finite)."""
    idx = list(range(nvars)) if variables is None else list(variables)
    coeffs = [elementary_symmetric(k, nvars, idx).scale((-1) ** k) for k in range(len(idx) + 1)]
    return Series(coeffs, nvars)
