"""Dunkl operators for S_n and the difference-polynomial model of C[h].

Conventions
-----------
* y_i = d/dx_i - c * sum_{j != i} (1 - s_ij) / (x_i - x_j).
* C[h] is realized as polynomials in z_1..z_{n-1}, z_k = x_k - x_{k+1}
  ("Cartan elements").  ``embed`` writes them as translation-invariant
  polynomials in x_1..x_n; ``retract`` is the inverse on that image and
  ``project`` is the restriction map C[x] -> C[h] (reduction mod p_1).
* The Fourier transform sends x_i to y_i, so Phi(f) g = f(y_1..y_n) g, and
  (f, g)_c is the constant term of Phi(f) g.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd
from typing import Dict, List, Sequence, Tuple

import flint

from .linalg import Matrix, matmul, ZERO
from .poly import ArityMismatch, Monomial, Poly, substitute


class NotCoprime(ValueError):
    pass


class NotTranslationInvariant(ValueError):
    pass


@dataclass(frozen=True)
class CherednikParam:
    m: int
    n: int

    def __post_init__(self):
        if self.m < 1 or self.n < 2:
            raise ValueError(f"need m >= 1 and n >= 2, got ({self.m}, {self.n})")
        if gcd(self.m, self.n) != 1:
            raise NotCoprime(f"gcd({self.m}, {self.n}) = {gcd(self.m, self.n)}; no finite-dimensional L_c")

    @property
    def c(self) -> Fraction:
        return Fraction(self.m, self.n)

    @property
    def mu(self) -> int:
        # (m-1)(n-1) is even for coprime m, n
        return (self.m - 1) * (self.n - 1) // 2

    def __str__(self) -> str:
        return f"{self.m}/{self.n}"


# ---------------------------------------------------------------------------
# coordinate changes

def _x_images_of_z(n: int) -> List[Poly]:
    return [Poly.var(k, n) - Poly.var(k + 1, n) for k in range(n - 1)]


def embed(e: Poly) -> Poly:
    """z_k -> x_k - x_{k+1}."""
    n = e.nvars + 1
    if e.nvars == 0:
        raise ArityMismatch("Cartan elements need at least one variable")
    return substitute(e, _x_images_of_z(n))


def _z_image_of_slice(n: int) -> List[Poly]:
    # x_i - x_n = z_i + ... + z_{n-1}
    out = []
    for i in range(n):
        acc = Poly.zero(n - 1)
        for k in range(i, n - 1):
            acc = acc + Poly.var(k, n - 1)
        out.append(acc)
    return out


def is_translation_invariant(f: Poly) -> bool:
    total = Poly.zero(f.nvars)
    for i in range(f.nvars):
        total = total + f.derivative(i)
    return total.is_zero()


def retract(f: Poly) -> Poly:
    """Inverse of :func:`embed` on translation-invariant polynomials."""
    if not is_translation_invariant(f):
        raise NotTranslationInvariant("polynomial does not depend only on differences")
    return substitute(f, _z_image_of_slice(f.nvars))


def project(f: Poly) -> Poly:
    """Restriction C[x] -> C[h]: x_i -> (1/n) sum_j (x_i - x_j), written in z's."""
    n = f.nvars
    sl = _z_image_of_slice(n)
    mean = Poly.zero(n - 1)
    for s in sl:
        mean = mean + s
    mean = mean.scale(Fraction(1, n))
    return substitute(f, [s - mean for s in sl])


def reflect_z(e: Poly, k: int) -> Poly:
    """Action of s_k = (k, k+1) on a Cartan element (k is 1-based)."""
    r = e.nvars
    imgs = [Poly.var(i, r) for i in range(r)]
    zk = Poly.var(k - 1, r)
    imgs[k - 1] = -zk
    if k >= 2:
        imgs[k - 2] = Poly.var(k - 2, r) + zk
    if k <= r - 1:
        imgs[k] = Poly.var(k, r) + zk
    return substitute(e, imgs)


def permute_z(e: Poly, images: Sequence[int]) -> Poly:
    """Action of the permutation i -> images[i-1] on a Cartan element."""
    n = e.nvars + 1
    x = _z_image_of_slice(n)
    imgs = [x[images[k] - 1] - x[images[k + 1] - 1] for k in range(n - 1)]
    return substitute(e, imgs)


def vandermonde(n: int) -> Poly:
    """delta = prod_{i<j} (x_i - x_j)."""
    d = Poly.const(1, n)
    for i in range(n):
        for j in range(i + 1, n):
            d = d * (Poly.var(i, n) - Poly.var(j, n))
    return d


# ---------------------------------------------------------------------------
# Dunkl operators on C[x]

def _divided_difference_monomial(mono: Monomial, i: int, j: int) -> Dict[Monomial, int]:
    """(x^a - s_ij x^a) / (x_i - x_j) for 0-based i, j, integer coefficients."""
    a, b = mono[i], mono[j]
    if a == b:
        return {}
    sign = 1
    if a < b:
        i, j, a, b = j, i, b, a
        sign = -1
    out = {}
    base = list(mono)
    for t in range(a - b):
        e = list(base)
        e[i] = b + t
        e[j] = a - 1 - t
        out[tuple(e)] = sign
    return out


def divided_difference(f: Poly, i: int, j: int) -> Poly:
    """(f - s_ij f)/(x_i - x_j), variables 1-based."""
    out: Dict[Monomial, Fraction] = {}
    for m, c in f.items():
        for mm, s in _divided_difference_monomial(m, i - 1, j - 1).items():
            out[mm] = out.get(mm, 0) + s * c
    return Poly(f.nvars, out)


def dunkl_apply(p: CherednikParam, i: int, f: Poly) -> Poly:
    """y_i f with i 1-based."""
    if f.nvars != p.n:
        raise ArityMismatch(f"expected {p.n} variables")
    out = f.derivative(i - 1)
    for j in range(1, p.n + 1):
        if j != i:
            out = out - divided_difference(f, i, j).scale(p.c)
    return out


def dunkl_difference(p: CherednikParam, i: int, j: int, f: Poly) -> Poly:
    return dunkl_apply(p, i, f) - dunkl_apply(p, j, f)


def fourier_apply(p: CherednikParam, f: Poly, g: Poly) -> Poly:
    """f(y_1, ..., y_n) g."""
    if f.nvars != p.n or g.nvars != p.n:
        raise ArityMismatch(f"expected {p.n} variables")
    cache: Dict[Monomial, Poly] = {(0,) * p.n: g}

    def apply_mono(a: Monomial) -> Poly:
        if a in cache:
            return cache[a]
        k = next(idx for idx, e in enumerate(a) if e)
        prev = a[:k] + (a[k] - 1,) + a[k + 1:]
        res = dunkl_apply(p, k + 1, apply_mono(prev))
        cache[a] = res
        return res

    out = Poly.zero(p.n)
    for a, c in sorted(f.items(), key=lambda kv: sum(kv[0])):
        out = out + apply_mono(a).scale(c)
    return out


def pairing(p: CherednikParam, f: Poly, g: Poly) -> Fraction:
    """(f, g)_c = constant term of Phi(f) g; graded pieces of different degree are orthogonal."""
    fparts = f.homogeneous_parts()
    gparts = g.homogeneous_parts()
    total = Fraction(0)
    for d, fd in fparts.items():
        if d in gparts:
            total += fourier_apply(p, fd, gparts[d]).constant_term()
    return total


def gram_matrix(p: CherednikParam, basis: Sequence[Poly]) -> Matrix:
    k = len(basis)
    g = [[ZERO] * k for _ in range(k)]
    for a in range(k):
        for b in range(a, k):
            v = pairing(p, basis[a], basis[b])
            g[a][b] = v
            g[b][a] = v
    return g


def cartan_fourier(p: CherednikParam, f: Poly, g: Poly) -> Poly:
    """Phi(f) g for Cartan elements f, g (polynomials in the z's)."""
    return retract(fourier_apply(p, embed(f), embed(g)))


def cartan_pairing(p: CherednikParam, f: Poly, g: Poly) -> Fraction:
    return pairing(p, embed(f), embed(g))


# ---------------------------------------------------------------------------
# integer matrices of the Dunkl differences on graded pieces of C[h]

@lru_cache(maxsize=None)
def monomials(nvars: int, d: int) -> Tuple[Monomial, ...]:
    """Monomials of degree d, lexicographically decreasing."""
    if nvars == 0:
        return ((),) if d == 0 else ()
    if nvars == 1:
        return ((d,),)
    out = []
    for first in range(d, -1, -1):
        for rest in monomials(nvars - 1, d - first):
            out.append((first,) + rest)
    return tuple(out)


@lru_cache(maxsize=None)
def monomial_index(nvars: int, d: int) -> Dict[Monomial, int]:
    return {m: i for i, m in enumerate(monomials(nvars, d))}


class DunklDifferences:
    """Matrices of n*(y_k - y_{k+1}) from C[h]_d to C[h]_{d-1} in the z-monomial bases.

    Entries are integers; divide by n for the operator itself.  The map is
    assembled as (x' -> z) . Dunkl-on-x-monomials . (z -> x), where the
    Dunkl action only needs output monomials free of x_n: a translation-
    invariant polynomial is determined by its restriction to x_n = 0.
    """

    def __init__(self, p: CherednikParam):
        self.p = p
        self.n = p.n
        self.r = p.n - 1
        self._embed: Dict[int, Dict[Monomial, Dict[Monomial, int]]] = {0: {(0,) * self.r: {(0,) * self.n: 1}}}
        self._slice: Dict[int, Dict[Monomial, Dict[Monomial, int]]] = {0: {(0,) * self.r: {(0,) * self.r: 1}}}
        self._mats: Dict[int, list] = {}

    def _embedding(self, d: int) -> Dict[Monomial, Dict[Monomial, int]]:
        # z^b as an x-polynomial
        if d in self._embed:
            return self._embed[d]
        prev = self._embedding(d - 1)
        out = {}
        for b in monomials(self.r, d):
            k = next(i for i, e in enumerate(b) if e)
            base = prev[b[:k] + (b[k] - 1,) + b[k + 1:]]
            acc: Dict[Monomial, int] = {}
            for xm, c in base.items():
                up = xm[:k] + (xm[k] + 1,) + xm[k + 1:]
                acc[up] = acc.get(up, 0) + c
                dn = xm[:k + 1] + (xm[k + 1] + 1,) + xm[k + 2:]
                acc[dn] = acc.get(dn, 0) - c
            out[b] = {m: c for m, c in acc.items() if c}
        self._embed[d] = out
        return out

    def _slice_expansion(self, d: int) -> Dict[Monomial, Dict[Monomial, int]]:
        # x'^a (x_n = 0) written in z's: x_i -> z_i + ... + z_{n-1}
        if d in self._slice:
            return self._slice[d]
        prev = self._slice_expansion(d - 1)
        out = {}
        for a in monomials(self.r, d):
            i = next(k for k, e in enumerate(a) if e)
            base = prev[a[:i] + (a[i] - 1,) + a[i + 1:]]
            acc: Dict[Monomial, int] = {}
            for zm, c in base.items():
                for k in range(i, self.r):
                    up = zm[:k] + (zm[k] + 1,) + zm[k + 1:]
                    acc[up] = acc.get(up, 0) + c
            out[a] = acc
        self._slice[d] = out
        return out

    def _dunkl_x(self, mono: Monomial, i: int) -> Dict[Monomial, int]:
        """n*y_i x^mono restricted to monomials with no x_n (i 0-based)."""
        n, m = self.n, self.p.m
        out: Dict[Monomial, int] = {}
        last = n - 1
        if mono[i]:
            mm = mono[:i] + (mono[i] - 1,) + mono[i + 1:]
            if mm[last] == 0:
                out[mm] = n * mono[i]
        for j in range(n):
            if j == i:
                continue
            if last not in (i, j) and mono[last]:
                continue
            for mm, s in _divided_difference_monomial(mono, i, j).items():
                if mm[last] == 0:
                    out[mm] = out.get(mm, 0) - m * s
        return out

    def matrices(self, d: int) -> List["flint.fmpz_mat"]:
        """[n*(y_k - y_{k+1}) : k = 1..n-1] as integer matrices of shape (P_{d-1}, P_d)."""
        if d in self._mats:
            return self._mats[d]
        if d == 0:
            raise ValueError("no Dunkl map out of degree 0")
        emb = self._embedding(d)
        sl = self._slice_expansion(d - 1)
        zsrc = monomials(self.r, d)
        ztgt_index = monomial_index(self.r, d - 1)
        xs = sorted({xm for b in zsrc for xm in emb[b]})
        xs_index = {xm: i for i, xm in enumerate(xs)}
        E = flint.fmpz_mat(len(xs), len(zsrc))
        for col, b in enumerate(zsrc):
            for xm, c in emb[b].items():
                E[xs_index[xm], col] = c
        slices = monomials(self.r, d - 1)
        sl_index = {a: i for i, a in enumerate(slices)}
        T = flint.fmpz_mat(len(ztgt_index), len(slices))
        for col, a in enumerate(slices):
            for zm, c in sl[a].items():
                T[ztgt_index[zm], col] = c
        # y_i on x-monomials, rows indexed by x'-monomials of degree d-1
        images = [[self._dunkl_x(xm, i) for xm in xs] for i in range(self.n)]
        mats = []
        for k in range(self.r):
            D = flint.fmpz_mat(len(slices), len(xs))
            for sign, i in ((1, k), (-1, k + 1)):
                for col, img in enumerate(images[i]):
                    for mm, c in img.items():
                        row = sl_index[mm[:-1]]
                        D[row, col] = D[row, col] + sign * c
            mats.append(T * D * E)
        self._mats[d] = mats
        return mats

    def flint_matrices(self, d: int) -> List["flint.fmpq_mat"]:
        return [flint.fmpq_mat(M) / self.n for M in self.matrices(d)]

    def fraction_matrices(self, d: int) -> List[Matrix]:
        n = self.n
        out = []
        for M in self.matrices(d):
            cols = M.ncols()
            flat = [int(x) for x in M.entries()]
            out.append([[Fraction(x, n) if x else ZERO for x in flat[i * cols:(i + 1) * cols]] for i in range(M.nrows())])
        return out


# ---------------------------------------------------------------------------
# the shift of the pairing by delta

def symmetric_basis(n: int, d: int) -> List[Poly]:
    """Products of p_2..p_n of total degree d, restricted to h."""
    from .poly import power_sum

    out = []

    def rec(rest, cap, acc):
        if rest == 0:
            out.append(acc)
            return
        for k in range(min(rest, cap), 1, -1):
            rec(rest - k, k, acc * power_sum(k, n))

    rec(d, n, Poly.const(1, n))
    return [project(f) for f in out]


def pairing_recursion(p: CherednikParam, degree: int) -> bool:
    """(delta f, delta g)_c = (delta, delta)_c (f, g)_{c-1} for symmetric f, g of the given degree."""
    if p.m <= p.n:
        raise ValueError("needs c > 1")
    prev = CherednikParam(p.m - p.n, p.n)
    dl = project(vandermonde(p.n))
    scale = cartan_pairing(p, dl, dl)
    basis = symmetric_basis(p.n, degree)
    for i, f in enumerate(basis):
        for g in basis[i:]:
            if cartan_pairing(p, dl * f, dl * g) != scale * cartan_pairing(prev, f, g):
                return False
    return True
