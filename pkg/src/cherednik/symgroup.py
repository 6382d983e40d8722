"""Symmetric group S_n: permutations, characters, projectors, Newton identities."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import permutations as _perms
from math import factorial
from typing import Callable, Dict, Iterator, List, Sequence, Tuple

from .linalg import Matrix, Subspace, identity, matadd, matmul, matscale, zeros
from .poly import ArityMismatch, Poly


class ActionUnavailable(LookupError):
    pass


class DegreeOutOfRange(ValueError):
    pass


@dataclass(frozen=True)
class Permutation:
    """w with ``images[i-1] = w(i)``."""

    images: Tuple[int, ...]

    def __post_init__(self):
        if sorted(self.images) != list(range(1, len(self.images) + 1)):
            raise ValueError(f"not a permutation: {self.images}")

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def transposition(cls, n: int, i: int, j: int) -> "Permutation":
        im = list(range(1, n + 1))
        im[i - 1], im[j - 1] = j, i
        return cls(tuple(im))

    @classmethod
    def from_cycles(cls, n: int, cycles: Sequence[Sequence[int]]) -> "Permutation":
        im = list(range(1, n + 1))
        for cyc in cycles:
            for a, b in zip(cyc, list(cyc[1:]) + [cyc[0]]):
                im[a - 1] = b
        return cls(tuple(im))

    @property
    def n(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    def __mul__(self, other: "Permutation") -> "Permutation":
        # (self*other)(i) = self(other(i))
        return Permutation(tuple(self.images[j - 1] for j in other.images))

    def inverse(self) -> "Permutation":
        inv = [0] * self.n
        for i, j in enumerate(self.images, start=1):
            inv[j - 1] = i
        return Permutation(tuple(inv))

    def cycles(self) -> List[Tuple[int, ...]]:
        seen = set()
        out = []
        for start in range(1, self.n + 1):
            if start in seen:
                continue
            cyc = [start]
            seen.add(start)
            j = self(start)
            while j != start:
                cyc.append(j)
                seen.add(j)
                j = self(j)
            out.append(tuple(cyc))
        return out

    def cycle_type(self) -> "Partition":
        return Partition(tuple(sorted((len(c) for c in self.cycles()), reverse=True)))

    def sign(self) -> int:
        return (-1) ** sum(len(c) - 1 for c in self.cycles())

    def reduced_word(self) -> List[int]:
        """Indices k with w = s_{k1} s_{k2} ... where s_k = (k, k+1)."""
        arr = list(self.images)
        word = []
        # bubble sort arr to identity; each swap right-multiplies by s_k
        changed = True
        while changed:
            changed = False
            for k in range(len(arr) - 1):
                if arr[k] > arr[k + 1]:
                    arr[k], arr[k + 1] = arr[k + 1], arr[k]
                    word.append(k + 1)
                    changed = True
        return word[::-1]


def all_permutations(n: int) -> List[Permutation]:
    return [Permutation(p) for p in _perms(range(1, n + 1))]


def act(w: Permutation, f: Poly) -> Poly:
    """w.f with w.x_i = x_{w(i)}."""
    if f.nvars != w.n:
        raise ArityMismatch(f"permutation of {w.n} letters acting on {f.nvars} variables")
    target = [j - 1 for j in w.images]
    out = {}
    for m, c in f.items():
        mm = [0] * f.nvars
        for i, e in enumerate(m):
            mm[target[i]] = e
        out[tuple(mm)] = c
    return Poly(f.nvars, out)


@dataclass(frozen=True, order=True)
class Partition:
    parts: Tuple[int, ...]

    def __post_init__(self):
        if any(p <= 0 for p in self.parts) or list(self.parts) != sorted(self.parts, reverse=True):
            raise ValueError(f"not a partition: {self.parts}")

    @property
    def size(self) -> int:
        return sum(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    @classmethod
    def hook(cls, n: int, i: int) -> "Partition":
        """(n-i, 1^i)."""
        if not 0 <= i < n:
            raise ValueError("hook index out of range")
        return cls((n - i,) + (1,) * i)

    def is_hook(self) -> bool:
        return len(self.parts) <= 1 or self.parts[1] == 1

    def hook_index(self) -> int:
        if not self.is_hook():
            raise ValueError("not a hook")
        return len(self.parts) - 1

    def conjugate(self) -> "Partition":
        if not self.parts:
            return self
        return Partition(tuple(sum(1 for p in self.parts if p > i) for i in range(self.parts[0])))

    def centralizer_size(self) -> int:
        z = 1
        for k in set(self.parts):
            mult = self.parts.count(k)
            z *= k ** mult * factorial(mult)
        return z

    def class_size(self) -> int:
        return factorial(self.size) // self.centralizer_size()

    def dimension(self) -> int:
        """Hook length formula."""
        conj = self.conjugate().parts
        prod = 1
        for i, row in enumerate(self.parts):
            for j in range(row):
                prod *= (row - j - 1) + (conj[j] - i - 1) + 1
        return factorial(self.size) // prod

    def representative(self) -> Permutation:
        cycles, start = [], 1
        for p in self.parts:
            cycles.append(list(range(start, start + p)))
            start += p
        return Permutation.from_cycles(self.size, cycles)

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self.parts)) + ")"


def partitions(n: int, max_part: int | None = None) -> Iterator[Partition]:
    """Partitions of n in reverse lexicographic order, (n) first."""
    if max_part is None:
        max_part = n

    def rec(rest, cap):
        if rest == 0:
            yield ()
            return
        for first in range(min(rest, cap), 0, -1):
            for tail in rec(rest - first, first):
                yield (first,) + tail

    for p in rec(n, max_part):
        yield Partition(p)


@lru_cache(maxsize=None)
def _mn_character(shape: Tuple[int, ...], cycle: Tuple[int, ...]) -> int:
    # Murnaghan-Nakayama on beta numbers
    if not cycle:
        return 1 if not shape else 0
    r, rest = cycle[0], cycle[1:]
    k = len(shape)
    beta = [shape[i] + (k - 1 - i) for i in range(k)]
    bset = set(beta)
    total = 0
    for b in beta:
        nb = b - r
        if nb < 0 or nb in bset:
            continue
        between = sum(1 for x in beta if nb < x < b)
        newbeta = sorted((bset - {b}) | {nb}, reverse=True)
        newshape = tuple(x - (k - 1 - i) for i, x in enumerate(newbeta))
        newshape = tuple(p for p in newshape if p > 0)
        total += (-1) ** between * _mn_character(newshape, rest)
    return total


def character(shape: Partition, cycle_type: Partition) -> int:
    if shape.size != cycle_type.size:
        raise ValueError("partition sizes differ")
    return _mn_character(shape.parts, cycle_type.parts)


@dataclass(frozen=True)
class CharacterTable:
    n: int
    irreps: Tuple[Partition, ...]
    classes: Tuple[Partition, ...]
    values: Tuple[Tuple[int, ...], ...]
    class_sizes: Tuple[int, ...]

    def value(self, irrep: Partition, cls: Partition) -> int:
        return self.values[self.irreps.index(irrep)][self.classes.index(cls)]

    def row(self, irrep: Partition) -> Tuple[int, ...]:
        return self.values[self.irreps.index(irrep)]


@lru_cache(maxsize=None)
def character_table(n: int) -> CharacterTable:
    parts = tuple(partitions(n))
    vals = tuple(tuple(character(lam, mu) for mu in parts) for lam in parts)
    return CharacterTable(n, parts, parts, vals, tuple(p.class_size() for p in parts))


class GroupAction:
    """A linear S_n action given by the matrices of the simple transpositions.

    ``generators[k]`` is the matrix of s_k = (k, k+1), k = 1..n-1, acting on
    column vectors of length ``dim``.
    """

    def __init__(self, n: int, dim: int, generators: Dict[int, Matrix]):
        self.n = n
        self.dim = dim
        self.generators = generators
        self._cache: Dict[Tuple[int, ...], Matrix] = {}

    def matrix(self, w: Permutation) -> Matrix:
        if w.images in self._cache:
            return self._cache[w.images]
        mat = identity(self.dim)
        for k in w.reduced_word():
            if k not in self.generators:
                raise ActionUnavailable(f"no matrix for s_{k}")
            mat = matmul(mat, self.generators[k], cols=self.dim) if self.dim else mat
        self._cache[w.images] = mat
        return mat

    def character(self) -> Dict[Partition, Fraction]:
        """Trace of a representative of each conjugacy class."""
        out = {}
        for cls in partitions(self.n):
            m = self.matrix(cls.representative())
            out[cls] = sum((m[i][i] for i in range(self.dim)), Fraction(0))
        return out

    def projector(self, sigma: Partition) -> Matrix:
        if self.dim == 0:
            return []
        total = zeros(self.dim, self.dim)
        for w in all_permutations(self.n):
            chi = character(sigma, w.cycle_type())
            if chi:
                total = matadd(total, matscale(self.matrix(w), chi))
        return matscale(total, Fraction(sigma.dimension(), factorial(self.n)))


def isotypic_projector(sigma: Partition, space: Subspace, action: GroupAction | None) -> Subspace:
    """Image of ``space`` under e_sigma."""
    if action is None:
        raise ActionUnavailable("no W-action supplied")
    if space.dim != action.dim:
        raise ValueError("subspace and action live in different spaces")
    return space.image(action.projector(sigma), space.dim)


def multiplicity(sigma: Partition, action: GroupAction) -> int:
    """Number of copies of sigma in the representation."""
    chars = action.character()
    total = sum(cls.class_size() * chars[cls] * character(sigma, cls) for cls in chars)
    mult = total / factorial(action.n)
    if mult.denominator != 1:
        raise ArithmeticError("non-integral multiplicity; action matrices are inconsistent")
    return int(mult)


# Newton identities.  u_k denotes the coefficient of z^k in prod_i (1 - x_i z),
# so u_k = (-1)^k e_k, and sum_k u_k z^k = exp(-sum_k p_k z^k / k).

def newton_convert(d: int, n: int) -> Tuple[Dict[int, Poly], Dict[int, Poly]]:
    """Express p_k through u_1..u_d and u_k through p_1..p_d, for k <= d.

    Returned polynomials live in d variables (u_1..u_d, resp. p_1..p_d).
    The identities are the relations k u_k = -sum_{i=1}^k p_i u_{k-i}.
    """
    if d > n or d < 0:
        raise DegreeOutOfRange(f"degree {d} outside 0..{n}")
    nv = max(d, 1)
    U = [Poly.const(1, nv)] + [Poly.var(i, nv) for i in range(d)]
    p_in_u: Dict[int, Poly] = {}
    for k in range(1, d + 1):
        acc = U[k].scale(-k)
        for i in range(1, k):
            acc = acc - p_in_u[i] * U[k - i]
        p_in_u[k] = acc
    P = [None] + [Poly.var(i, nv) for i in range(d)]
    u_in_p: Dict[int, Poly] = {0: Poly.const(1, nv)}
    for k in range(1, d + 1):
        acc = Poly.zero(nv)
        for i in range(1, k + 1):
            acc = acc + P[i] * u_in_p[k - i]
        u_in_p[k] = acc.scale(Fraction(-1, k))
    del u_in_p[0]
    return p_in_u, u_in_p


def linear_coefficient(poly_in_gens: Poly, k: int) -> Fraction:
    """Coefficient of the single generator k (1-based) in a polynomial in generators."""
    e = [0] * poly_in_gens.nvars
    e[k - 1] = 1
    return poly_in_gens.coeff(e)
