"""Linear algebra in the coinvariant algebra R_n = C[x_1..x_n] / (p_1, ..., p_n).

Elements of R_n are coordinate vectors in the Artin basis x^a, a_k <= n - k.
Normal forms come from the Groebner basis h_{n-k+1}(x_1, ..., x_k) for the
lex order with x_n > ... > x_1.  Its leading terms x_k^{n-k+1} make the
Artin monomials exactly the standard monomials.  Every R-linear map
between free modules R^r is stored as an exact rational matrix acting on
row vectors, blockwise in that basis.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import combinations, product
from math import factorial, gcd
from typing import Dict, List, Optional, Sequence, Tuple

from .dunkl import CherednikParam, dunkl_difference
from .linalg import Matrix, Subspace, ZERO, kernel, rank, transpose, vecmat
from .poly import Poly, complete_homogeneous, elementary_symmetric, power_sum


class ParameterOutOfRange(ValueError):
    pass


class CoinvAlgebra:
    def __init__(self, n: int):
        if n < 1:
            raise ValueError("n must be positive")
        self.n = n
        self.basis: List[Tuple[int, ...]] = sorted(
            product(*[range(n - k) for k in range(n)]), key=lambda a: (sum(a), a)
        )
        self.index = {a: i for i, a in enumerate(self.basis)}
        self.top_degree = n * (n - 1) // 2
        # x_k^{n-k} -> x_k^{n-k} - h_{n-k}(x_0, ..., x_k), 0-based k
        self._tails = [
            {e: -c for e, c in complete_homogeneous(n - k, n, range(k + 1)).items() if e[k] != n - k}
            for k in range(n)
        ]
        self._var_mats: Dict[Tuple[int, int], Matrix] = {}

    @property
    def dim(self) -> int:
        return len(self.basis)

    def _reduce_mono(self, mono: Tuple[int, ...]) -> Dict[int, Fraction]:
        return _reduce_cached(self, mono)

    def normal_form(self, f: Poly) -> List[Fraction]:
        if f.nvars != self.n:
            raise ValueError(f"expected {self.n} variables")
        out = [ZERO] * self.dim
        for mono, c in f.items():
            for i, v in self._reduce_mono(mono).items():
                out[i] += c * v
        return out

    def to_poly(self, v: Sequence[Fraction]) -> Poly:
        return Poly(self.n, {self.basis[i]: c for i, c in enumerate(v) if c})

    def mult_matrix(self, f: Poly) -> Matrix:
        """Row i is the normal form of basis_i * f."""
        rows = []
        for a in self.basis:
            rows.append(self.normal_form(f * Poly.monomial(a)))
        return rows

    def var_power_matrix(self, i: int, k: int) -> Matrix:
        """Multiplication by x_i^k, i 1-based."""
        if (i, k) not in self._var_mats:
            e = [0] * self.n
            e[i - 1] = k
            self._var_mats[(i, k)] = self.mult_matrix(Poly.monomial(e))
        return self._var_mats[(i, k)]

    def multiply(self, u: Sequence[Fraction], v: Sequence[Fraction]) -> List[Fraction]:
        return self.normal_form(self.to_poly(u) * self.to_poly(v))

    def top_vector(self) -> List[Fraction]:
        """Normal form of the Vandermonde product; spans the top degree."""
        delta = Poly.const(1, self.n)
        for i in range(self.n):
            for j in range(i + 1, self.n):
                delta = delta * (Poly.var(i, self.n) - Poly.var(j, self.n))
        return self.normal_form(delta)

    def top_coefficient(self, v: Sequence[Fraction]) -> Fraction:
        top = self.top_vector()
        k = next(i for i, c in enumerate(top) if c)
        return v[k] / top[k]


@lru_cache(maxsize=None)
def _reduce_cached(alg: CoinvAlgebra, mono: Tuple[int, ...]) -> Dict[int, Fraction]:
    n = alg.n
    if sum(mono) > alg.top_degree:
        return {}
    if mono in alg.index:
        return {alg.index[mono]: Fraction(1)}
    # leading variable is the last one
    k = next(k for k in reversed(range(n)) if mono[k] >= n - k)
    rest = list(mono)
    rest[k] -= n - k
    out: Dict[int, Fraction] = {}
    for e, c in alg._tails[k].items():
        new = tuple(a + b for a, b in zip(rest, e))
        for i, v in _reduce_cached(alg, new).items():
            out[i] = out.get(i, 0) + c * v
    return {i: v for i, v in out.items() if v}


@lru_cache(maxsize=None)
def coinvariant_algebra(n: int) -> CoinvAlgebra:
    return CoinvAlgebra(n)


def normal_form(alg: CoinvAlgebra, f: Poly) -> List[Fraction]:
    return alg.normal_form(f)


# ---------------------------------------------------------------------------
# the matrices A and B

def _check_range(m: int, n: int):
    if not (n < m < 2 * n) or gcd(m, n) != 1:
        raise ParameterOutOfRange(f"need n < m < 2n with gcd 1, got (m, n) = ({m}, {n})")


def _block(blocks: List[List[Matrix]], size: int) -> Matrix:
    out = []
    for row in blocks:
        for r in range(size):
            line = []
            for blk in row:
                line.extend(blk[r])
            out.append(line)
    return out


def a_exponents(m: int, n: int) -> List[int]:
    """Exponents of the columns of A: n-1 down to m-n."""
    return list(range(n - 1, m - n - 1, -1))


def b_exponents(m: int, n: int) -> List[int]:
    """Exponents of the rows of B: m-n up to n-1."""
    return list(range(m - n, n))


@lru_cache(maxsize=None)
def matrix_AB(m: int, n: int) -> Tuple[Matrix, Matrix]:
    """A : R^n -> R^{2n-m} and B : R^{2n-m} -> R^n as scalar matrices on row vectors."""
    _check_range(m, n)
    alg = coinvariant_algebra(n)
    N = alg.dim
    A = _block([[alg.var_power_matrix(i, k) for k in a_exponents(m, n)] for i in range(1, n + 1)], N)
    B = _block([[alg.var_power_matrix(i, j) for i in range(1, n + 1)] for j in b_exponents(m, n)], N)
    return A, B


def image_A(m: int, n: int) -> Subspace:
    A, _ = matrix_AB(m, n)
    return Subspace((2 * n - m) * factorial(n), A)


def kernel_B(m: int, n: int) -> Subspace:
    _, B = matrix_AB(m, n)
    return kernel(transpose(B), (2 * n - m) * factorial(n))


def ab_report(m: int, n: int) -> dict:
    A, B = matrix_AB(m, n)
    N = factorial(n)
    r = 2 * n - m
    AB_zero = all(not any(vecmat(row, B, n * N)) for row in A)
    ra = rank(A, r * N)
    rb = rank(B, n * N)
    return {
        "m": m,
        "n": n,
        "AB = 0": AB_zero,
        "rank A": ra,
        "rank B": rb,
        "expected": r * N // 2,
        "Im A = Ker B": image_A(m, n) == kernel_B(m, n),
    }


# ---------------------------------------------------------------------------
# the submodules V_i and their lattice

@lru_cache(maxsize=None)
def subspace_V(m: int, n: int, i: int) -> Subspace:
    """R-span of (x_i^{n-1}, ..., x_i^{m-n}) inside R^{2n-m}."""
    _check_range(m, n)
    if not 1 <= i <= n:
        raise ValueError(f"i must lie in 1..{n}")
    alg = coinvariant_algebra(n)
    N = alg.dim
    rows = _block([[alg.var_power_matrix(i, k) for k in a_exponents(m, n)]], N)
    return Subspace((2 * n - m) * N, rows)


def _sum(spaces: Sequence[Subspace], dim: int) -> Subspace:
    out = Subspace.zero(dim)
    for s in spaces:
        out = out + s
    return out


def _meet(spaces: Sequence[Subspace], dim: int) -> Subspace:
    out = Subspace.full(dim)
    for s in spaces:
        out = out.intersect(s)
    return out


@dataclass
class LatticeReport:
    m: int
    n: int
    identities: List[dict] = field(default_factory=list)
    counterexamples: List[dict] = field(default_factory=list)
    distributive: Optional[bool] = None

    def record(self, name: str, lhs: int, rhs: int):
        entry = {"identity": name, "lhs": lhs, "rhs": rhs, "holds": lhs == rhs}
        self.identities.append(entry)
        if lhs != rhs:
            self.counterexamples.append(entry)

    @property
    def ok(self) -> bool:
        return not self.counterexamples

    def to_json(self) -> dict:
        return {"m": self.m, "n": self.n, "distributive": self.distributive,
                "identities": self.identities, "counterexamples": self.counterexamples}

    def failing(self, prefix: str = "") -> List[dict]:
        return [e for e in self.counterexamples if e["identity"].startswith(prefix)]


def _triple_distributive(u: Subspace, v: Subspace, w: Subspace) -> Tuple[int, int]:
    lhs = u.intersect(v + w)
    rhs = u.intersect(v) + u.intersect(w)
    return lhs.rank, rhs.rank


def distributive(spaces: Sequence[Subspace], report: Optional[LatticeReport] = None,
                 labels: Optional[Sequence[str]] = None) -> bool:
    """Recursive criterion: a tuple is distributive iff it is predistributive and acyclic.

    Triples reduce to the single identity U1 n (U2 + U3) = U1 n U2 + U1 n U3.
    """
    labels = list(labels) if labels is not None else [f"V{i + 1}" for i in range(len(spaces))]
    memo: Dict[Tuple[int, ...], bool] = {}
    dim = spaces[0].dim

    def check(idx: Tuple[int, ...]) -> bool:
        if idx in memo:
            return memo[idx]
        k = len(idx)
        ok = True
        if k == 3:
            lhs, rhs = _triple_distributive(*(spaces[i] for i in idx))
            if report is not None:
                a, b, c = (labels[i] for i in idx)
                report.record(f"{a} n ({b} + {c}) = {a} n {b} + {a} n {c}", lhs, rhs)
            ok = lhs == rhs
        elif k > 3:
            # predistributive: every (k-1)-subtuple
            for drop in range(k):
                ok = check(idx[:drop] + idx[drop + 1:]) and ok
            # acyclic: (U1 n ... n Ui, U_{i+1}, U_{i+2} + ... + U_k)
            for i in range(1, k - 1):
                u = _meet([spaces[j] for j in idx[:i]], dim)
                v = spaces[idx[i]]
                w = _sum([spaces[j] for j in idx[i + 1:]], dim)
                lhs, rhs = _triple_distributive(u, v, w)
                if report is not None:
                    name = (f"({' n '.join(labels[j] for j in idx[:i])}, {labels[idx[i]]}, "
                            f"{' + '.join(labels[j] for j in idx[i + 1:])}) distributive")
                    report.record(name, lhs, rhs)
                ok = ok and lhs == rhs
        memo[idx] = ok
        return ok

    return check(tuple(range(len(spaces))))


def v_sum_formula(m: int, n: int, k: int) -> int:
    """(2n-m) k (2n-1-k) / 2 * (n-2)!"""
    return (2 * n - m) * k * (2 * n - 1 - k) // 2 * factorial(n - 2)


def lattice_check(m: int, n: int) -> LatticeReport:
    _check_range(m, n)
    report = LatticeReport(m, n)
    V = [subspace_V(m, n, i) for i in range(1, n + 1)]
    dim = V[0].dim
    r = 2 * n - m
    for i in range(n):
        report.record(f"dim V{i + 1} = (2n-m)(n-1)!", V[i].rank, r * factorial(n - 1))
    for i, j in combinations(range(n), 2):
        report.record(f"dim V{i + 1} n V{j + 1} = (2n-m)(n-2)!", V[i].intersect(V[j]).rank,
                      r * factorial(n - 2))
    for i in range(2, n + 1):
        lhs = V[0].intersect(_sum(V[1:i], dim))
        rhs = _sum([V[0].intersect(V[j]) for j in range(1, i)], dim)
        label = f"V1 n (V2 + ... + V{i})"
        report.record(f"{label} = sum of V1 n Vj", lhs.rank, rhs.rank)
        report.record(f"dim {label} = (i-1)(2n-m)(n-2)!", lhs.rank, (i - 1) * r * factorial(n - 2))
    for k in range(1, n + 1):
        report.record(f"dim(V1 + ... + V{k}) = (2n-m)k(2n-1-k)/2 (n-2)!", _sum(V[:k], dim).rank,
                      v_sum_formula(m, n, k))
    report.distributive = distributive(V, report)
    return report


# ---------------------------------------------------------------------------
# kernels, Springer dimension, Poincare form

def psi(n: int, j: int) -> Poly:
    """x1^j x2^{n-2} + 2 x1^{j+1} x2^{n-3} + ... + (n-j) x1^{n-1} x2^{j-1}."""
    terms = {}
    for s in range(n - j):
        e = [0] * n
        e[0] = j + s
        e[1] = n - 2 - s
        terms[tuple(e)] = s + 1
    return Poly(n, terms)


def ker_difference(n: int) -> Subspace:
    """Span of psi_j times the Artin monomials in x_3, ..., x_n."""
    if n < 2:
        raise ValueError("n must be at least 2")
    alg = coinvariant_algebra(n)
    small = [a for a in product(*[range(n - k) for k in range(2, n)])]
    rows = []
    for j in range(1, n):
        pj = psi(n, j)
        for a in small:
            rows.append(alg.normal_form(pj * Poly.monomial((0, 0) + tuple(a))))
    return Subspace(alg.dim, rows)


def multiplication_kernel(n: int, f: Poly) -> Subspace:
    alg = coinvariant_algebra(n)
    return kernel(transpose(alg.mult_matrix(f)), alg.dim)


def springer_min_dim(n: int) -> int:
    """dim C[x] / (positive invariants, x_1^{n-1}, ..., x_n^{n-1})."""
    if n < 2:
        raise ValueError("n must be at least 2")
    alg = coinvariant_algebra(n)
    rows = []
    for i in range(1, n + 1):
        rows.extend(alg.var_power_matrix(i, n - 1))
    return alg.dim - rank(rows, alg.dim)


def poincare_gram(n: int) -> Matrix:
    """Top-degree pairing on R: (u, v) = coefficient of the Vandermonde class in uv."""
    alg = coinvariant_algebra(n)
    N = alg.dim
    top = alg.top_vector()
    k = next(i for i, c in enumerate(top) if c)
    G = [[ZERO] * N for _ in range(N)]
    for a in range(N):
        for b in range(a, N):
            v = alg._reduce_mono(tuple(x + y for x, y in zip(alg.basis[a], alg.basis[b]))).get(k, ZERO)
            G[a][b] = G[b][a] = v / top[k]
    return G


PAIRINGS = ("complementary", "diagonal")


def _module_gram(n: int, r: int, pairing: str) -> Matrix:
    # complementary: component s (power n-1-s) meets component r-1-s (power m-n+s)
    if pairing not in PAIRINGS:
        raise ValueError(f"pairing must be one of {PAIRINGS}")
    G = poincare_gram(n)
    N = len(G)
    out = [[ZERO] * (r * N) for _ in range(r * N)]
    for s in range(r):
        t = r - 1 - s if pairing == "complementary" else s
        for a in range(N):
            for b in range(N):
                out[s * N + a][t * N + b] = G[a][b]
    return out


def isotropy_report(m: int, n: int, space: Optional[Subspace] = None, pairing: str = "complementary") -> dict:
    """Whether a subspace of R^{2n-m} pairs to zero with itself; Im A by default."""
    _check_range(m, n)
    r = 2 * n - m
    N = factorial(n)
    U = space if space is not None else image_A(m, n)
    G = _module_gram(n, r, pairing)
    UG = [vecmat(u, G, r * N) for u in U.rows]
    isotropic = all(sum(a * b for a, b in zip(x, u) if a and b) == 0 for x in UG for u in U.rows)
    half = r * N // 2 if (r * N) % 2 == 0 else None
    return {
        "pairing": pairing,
        "isotropic": isotropic,
        "dimension": U.rank,
        "half": half,
        "lagrangian": isotropic and U.rank == half,
    }


def poincare_isotropy(m: int, n: int, space: Optional[Subspace] = None, pairing: str = "complementary") -> bool:
    return isotropy_report(m, n, space, pairing)["lagrangian"]


# ---------------------------------------------------------------------------
# identities in R

def _others(n: int, drop: Sequence[int]) -> List[int]:
    return [v for v in range(n) if v not in drop]


def power_identity(n: int) -> bool:
    """x_i^k = (-1)^k e_k(x_j : j != i) in R for 0 <= k < n."""
    alg = coinvariant_algebra(n)
    for i in range(n):
        for k in range(n):
            e = [0] * n
            e[i] = k
            rhs = elementary_symmetric(k, n, _others(n, [i])).scale((-1) ** k)
            if alg.normal_form(Poly.monomial(e)) != alg.normal_form(rhs):
                return False
    return True


def pair_identity(n: int) -> bool:
    """h_k(x_i, x_j) = (-1)^k e_k(x_l : l != i, j) in R for k < n - 1."""
    alg = coinvariant_algebra(n)
    for i, j in combinations(range(n), 2):
        for k in range(n - 1):
            lhs = complete_homogeneous(k, n, [i, j])
            rhs = elementary_symmetric(k, n, _others(n, [i, j])).scale((-1) ** k)
            if alg.normal_form(lhs) != alg.normal_form(rhs):
                return False
    return True


def phi_vanishes(m: int, n: int) -> bool:
    """x_i^{m-n} x_j^{n-1} + ... + x_i^{n-1} x_j^{m-n} = 0 in R for i != j."""
    alg = coinvariant_algebra(n)
    for i in range(n):
        for j in range(n):
            if i == j:
                continue
            terms = {}
            for a in range(m - n, n):
                e = [0] * n
                e[i] = a
                e[j] = m - 1 - a
                terms[tuple(e)] = 1
            if any(alg.normal_form(Poly(n, terms))):
                return False
    return True


def dunkl_bridge(m: int, n: int) -> dict:
    """Compare two descriptions of the h in R with k h_k in Ker B for a single k.

    Needs 2n - m = 1, so the tuple has one entry, k = n, and h = h_n.  The
    Dunkl side asks that (y_i - y_{i+1})(h p_n) lie in the ideal of positive
    invariants for every i, computed with Dunkl operators at c = m/n.
    """
    _check_range(m, n)
    if 2 * n - m != 1:
        raise ParameterOutOfRange("the bridge is implemented for 2n - m = 1")
    alg = coinvariant_algebra(n)
    N = alg.dim
    p = CherednikParam(m, n)
    pn = power_sum(n, n)
    rows = []
    for a in alg.basis:
        h = Poly.monomial(a)
        images = []
        for i in range(1, n):
            images.extend(alg.normal_form(dunkl_difference(p, i, i + 1, h * pn)))
        rows.append(images)
    # h -> (Y_i(h p_n) mod a)_i ; its left kernel
    dunkl_side = kernel(transpose(rows), N)
    kb = kernel_B(m, n)
    # tuple (n h) lies in Ker B iff h does
    return {
        "m": m,
        "n": n,
        "dim dunkl side": dunkl_side.rank,
        "dim Ker B": kb.rank,
        "equal": dunkl_side == kb,
    }
