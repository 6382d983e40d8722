"""The finite-dimensional irreducible module L_c = C[h]/I_c.

``build_irrep`` computes the radical I_c of the Dunkl form degree by degree
and stores, for each degree d, coset representatives of L_d (z-monomials at
the non-pivot columns of the RREF of I_d), the normal-form matrix
N_d : C[h]_d -> L_d, the Gram matrix of the form on L_d and the matrices of
the Dunkl differences.  The radical in degree d is the nullspace of the full
Gram matrix on C[h]_d, which is assembled from the degree d-1 data via
(z^a, g) = (z^{a - e_k}, Y_k g).
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb, factorial
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

import flint

from .dunkl import (
    CherednikParam,
    DunklDifferences,
    embed,
    monomial_index,
    monomials,
    project,
    reflect_z,
    vandermonde,
)
from .linalg import (
    Matrix,
    Subspace,
    ZERO,
    identity,
    matadd,
    matmul,
    matscale,
    from_flint,
    matvec,
    nullspace,
    to_flint,
    vecmat,
    zeros,
)
from .poly import Monomial, Poly, Series, power_sum, product_one_minus, series_fractional_power
from .qt import QtPolynomial
from .symgroup import GroupAction, Partition, multiplicity

SCHEMA_VERSION = 1


class ParameterOutOfRange(ValueError):
    pass


class IndexOutOfRange(ValueError):
    pass


class GradedSubspace:
    """A subspace of L_c given degree by degree."""

    __slots__ = ("dims", "pieces")

    def __init__(self, dims: Dict[int, int], pieces: Dict[int, Subspace] | None = None):
        self.dims = dims
        pieces = pieces or {}
        self.pieces = {d: pieces.get(d, Subspace.zero(k)) for d, k in dims.items()}

    @classmethod
    def zero(cls, dims):
        return cls(dims)

    @classmethod
    def full(cls, dims):
        return cls(dims, {d: Subspace.full(k) for d, k in dims.items()})

    def __getitem__(self, d: int) -> Subspace:
        return self.pieces[d]

    @property
    def dim(self) -> int:
        return sum(s.rank for s in self.pieces.values())

    def dims_by_degree(self) -> Dict[int, int]:
        return {d: s.rank for d, s in self.pieces.items()}

    def __add__(self, other: "GradedSubspace") -> "GradedSubspace":
        return GradedSubspace(self.dims, {d: self.pieces[d] + other.pieces[d] for d in self.dims})

    def intersect(self, other: "GradedSubspace") -> "GradedSubspace":
        return GradedSubspace(self.dims, {d: self.pieces[d].intersect(other.pieces[d]) for d in self.dims})

    def contains(self, other: "GradedSubspace") -> bool:
        return all(self.pieces[d].contains_space(other.pieces[d]) for d in self.dims)

    def __eq__(self, other) -> bool:
        return isinstance(other, GradedSubspace) and self.pieces == other.pieces

    def __repr__(self) -> str:
        return f"GradedSubspace(dim={self.dim}, by_degree={self.dims_by_degree()})"


@dataclass
class IrrepModel:
    param: CherednikParam
    top: int
    basis: Dict[int, List[Monomial]]
    normal_form: Dict[int, Matrix]
    gram: Dict[int, Matrix]
    kernels: Dict[int, Subspace]
    ymats: Dict[int, List[Matrix]]
    xmats: Dict[int, List[Matrix]] = field(default_factory=dict)
    wmats: Dict[int, Dict[int, Matrix]] = field(default_factory=dict)
    _cache: Dict = field(default_factory=dict, repr=False)

    # ---- basic data
    @property
    def n(self) -> int:
        return self.param.n

    @property
    def m(self) -> int:
        return self.param.m

    @property
    def r(self) -> int:
        return self.param.n - 1

    @property
    def mu(self) -> int:
        return self.param.mu

    @property
    def degrees(self) -> range:
        return range(self.top + 1)

    def dim_at(self, d: int) -> int:
        return len(self.basis.get(d, []))

    @property
    def dims(self) -> Dict[int, int]:
        return {d: self.dim_at(d) for d in self.degrees}

    @property
    def dim(self) -> int:
        return sum(self.dims.values())

    def weight(self, d: int) -> int:
        return d - self.mu

    def degree_of_weight(self, k: int) -> int:
        return k + self.mu

    def weight_profile(self) -> Dict[int, int]:
        return {self.weight(d): self.dim_at(d) for d in self.degrees}

    # ---- vectors and polynomials
    def coords(self, q: Poly, d: int) -> List[Fraction]:
        """Coordinates of a homogeneous Cartan element of degree d in the monomial basis."""
        idx = monomial_index(self.r, d)
        v = [ZERO] * len(idx)
        for mono, c in q.items():
            if sum(mono) != d:
                raise ValueError("polynomial is not homogeneous of the stated degree")
            v[idx[mono]] += c
        return v

    def reduce(self, q: Poly, d: Optional[int] = None) -> List[Fraction]:
        """Class of a homogeneous Cartan element in L_d."""
        if d is None:
            d = q.homogeneous_degree()
            if d < 0:
                raise ValueError("degree of the zero polynomial must be given")
        if d > self.top or d < 0:
            return []
        return matvec(self.normal_form[d], self.coords(q, d))

    def representative(self, d: int, v: Sequence[Fraction]) -> Poly:
        terms = {}
        for mono, c in zip(self.basis[d], v):
            if c:
                terms[mono] = c
        return Poly(self.r, terms)

    def class_subspace(self, polys: Iterable[Poly], d: int) -> Subspace:
        return Subspace(self.dim_at(d), [self.reduce(q, d) for q in polys]) if 0 <= d <= self.top else None

    def graded_span(self, polys: Iterable[Poly]) -> GradedSubspace:
        rows: Dict[int, list] = {d: [] for d in self.degrees}
        for q in polys:
            for d, part in q.homogeneous_parts().items():
                if d <= self.top:
                    rows[d].append(self.reduce(part, d))
        return GradedSubspace(self.dims, {d: Subspace(self.dim_at(d), rs) for d, rs in rows.items()})

    # ---- operators
    def x_matrix(self, d: int, k: int) -> Matrix:
        """Multiplication by z_k (1-based) from L_d to L_{d+1}."""
        key = ("x", d, k)
        if key not in self._cache:
            if d + 1 > self.top:
                mat = []
            else:
                idx = monomial_index(self.r, d + 1)
                N = self.normal_form[d + 1]
                cols = []
                for b in self.basis[d]:
                    bb = b[: k - 1] + (b[k - 1] + 1,) + b[k:]
                    j = idx[bb]
                    cols.append([row[j] for row in N])
                mat = [list(r) for r in zip(*cols)] if cols else [[] for _ in range(self.dim_at(d + 1))]
            self._cache[key] = mat
        return self._cache[key]

    def y_matrix(self, d: int, k: int) -> Matrix:
        """y_k - y_{k+1} from L_d to L_{d-1}."""
        if d == 0:
            return []
        return self.ymats[d][k - 1]

    def mult_matrix(self, q: Poly, d: int) -> Matrix:
        """Multiplication by a homogeneous Cartan element from L_d."""
        e = q.homogeneous_degree()
        key = ("mult", q, d)
        if key in self._cache:
            return self._cache[key]
        if e < 0 or d + e > self.top:
            mat = []
        else:
            cols = []
            for b in self.basis[d]:
                cols.append(self.reduce(q * Poly.monomial(b), d + e))
            mat = [list(r) for r in zip(*cols)] if cols else [[] for _ in range(self.dim_at(d + e))]
        self._cache[key] = mat
        return mat

    def ymono_matrix(self, d: int, a: Monomial) -> Matrix:
        """Y^a from L_d to L_{d-|a|}."""
        key = ("ymono", d, a)
        if key in self._cache:
            return self._cache[key]
        s = sum(a)
        if s == 0:
            mat = identity(self.dim_at(d))
        elif d - s < 0:
            mat = []
        else:
            k = next(i for i, e in enumerate(a) if e)
            prev = a[:k] + (a[k] - 1,) + a[k + 1:]
            inner = self.ymono_matrix(d, prev)
            mat = matmul(self.y_matrix(d - s + 1, k + 1), inner, cols=self.dim_at(d))
        self._cache[key] = mat
        return mat

    def operator_matrix(self, q: Poly, d: int) -> Matrix:
        """q(Y) from L_d to L_{d - deg q} for a homogeneous Cartan element q."""
        e = q.homogeneous_degree()
        key = ("op", q, d)
        if key in self._cache:
            return self._cache[key]
        if e < 0 or d - e < 0:
            mat = []
        else:
            mat = zeros(self.dim_at(d - e), self.dim_at(d))
            for a, c in q.items():
                mat = matadd(mat, matscale(self.ymono_matrix(d, a), c))
        self._cache[key] = mat
        return mat

    def apply(self, mat: Matrix, v: Sequence[Fraction], target_dim: int) -> List[Fraction]:
        if not mat:
            return [ZERO] * target_dim
        return matvec(mat, v)

    # sl2
    def e_poly(self) -> Poly:
        r = self.r
        acc = Poly.zero(r)
        for i in range(self.n):
            for j in range(i + 1, self.n):
                lin = Poly.zero(r)
                for k in range(i, j):
                    lin = lin + Poly.var(k, r)
                acc = acc + lin * lin
        return acc.scale(Fraction(1, 2 * self.n))

    def e_matrix(self, d: int) -> Matrix:
        return self.mult_matrix(self.e_poly(), d)

    def f_matrix(self, d: int) -> Matrix:
        op = self.operator_matrix(self.e_poly(), d)
        return matscale(op, -1) if op else op

    def h_scalar(self, d: int) -> int:
        return d - self.mu

    # W action
    def w_matrix(self, d: int, k: int) -> Matrix:
        if d not in self.wmats:
            self.wmats[d] = {}
        if k not in self.wmats[d]:
            cols = [self.reduce(reflect_z(Poly.monomial(b), k), d) for b in self.basis[d]]
            self.wmats[d][k] = [list(r) for r in zip(*cols)] if cols else []
        return self.wmats[d][k]

    def group_action(self, d: int) -> GroupAction:
        key = ("W", d)
        if key not in self._cache:
            self._cache[key] = GroupAction(self.n, self.dim_at(d), {k: self.w_matrix(d, k) for k in range(1, self.n)})
        return self._cache[key]

    def invariants(self) -> GradedSubspace:
        key = ("inv",)
        if key not in self._cache:
            pieces = {}
            for d in self.degrees:
                k = self.dim_at(d)
                rows = []
                for s in range(1, self.n):
                    w = self.w_matrix(d, s)
                    rows.extend([[w[i][j] - (1 if i == j else 0) for j in range(k)] for i in range(k)])
                pieces[d] = Subspace(k, nullspace(rows, k)) if rows else Subspace.full(k)
            self._cache[key] = GradedSubspace(self.dims, pieces)
        return self._cache[key]

    def isotypic(self, sigma: Partition) -> GradedSubspace:
        pieces = {}
        for d in self.degrees:
            act = self.group_action(d)
            pieces[d] = Subspace.full(self.dim_at(d)).image(act.projector(sigma), self.dim_at(d)) if self.dim_at(d) else Subspace.zero(0)
        return GradedSubspace(self.dims, pieces)

    def orthogonal(self, S: GradedSubspace) -> GradedSubspace:
        return GradedSubspace(self.dims, {d: S[d].orthogonal(self.gram[d]) for d in self.degrees})

    def form(self, d: int, u: Sequence[Fraction], v: Sequence[Fraction]) -> Fraction:
        g = self.gram[d]
        return sum((u[i] * g[i][j] * v[j] for i in range(len(u)) if u[i] for j in range(len(v)) if v[j]), Fraction(0))

    # Fourier transform on L_c
    def top_vector(self) -> List[Fraction]:
        """Class of e^mu, spanning the top degree 2*mu."""
        key = ("top",)
        if key not in self._cache:
            self._cache[key] = self.reduce(self.e_poly() ** self.mu, 2 * self.mu)
        return self._cache[key]

    def fourier_matrix(self, d: int) -> Matrix:
        """phi -> phi(Y) e^mu, from L_d to L_{2 mu - d}."""
        key = ("fourier", d)
        if key not in self._cache:
            top = self.top_vector()
            cols = [matvec(self.ymono_matrix(2 * self.mu, b), top) for b in self.basis[d]]
            tgt = self.dim_at(2 * self.mu - d)
            self._cache[key] = [list(r) for r in zip(*cols)] if cols else [[] for _ in range(tgt)]
        return self._cache[key]

    def fourier(self, S: GradedSubspace) -> GradedSubspace:
        pieces = {}
        for d in self.degrees:
            src = 2 * self.mu - d
            pieces[d] = S[src].image(self.fourier_matrix(src), self.dim_at(d))
        return GradedSubspace(self.dims, pieces)

    # ---- serialization
    def to_json(self) -> dict:
        def mat(M):
            return [[_rat(x) for x in row] for row in M]

        return {
            "schema_version": SCHEMA_VERSION,
            "kind": "irrep_model",
            "m": self.m,
            "n": self.n,
            "mu": self.mu,
            "dimension": self.dim,
            "top_degree": self.top,
            "degrees": [
                {
                    "degree": d,
                    "weight": self.weight(d),
                    "basis": [list(b) for b in self.basis[d]],
                    "normal_form": mat(self.normal_form[d]),
                    "gram": mat(self.gram[d]),
                    "kernel": mat(self.kernels[d].rows),
                    "dunkl": [mat(M) for M in self.ymats.get(d, [])],
                }
                for d in self.degrees
            ],
            "kernel_next": mat(self.kernels[self.top + 1].rows),
        }

    @classmethod
    def from_json(cls, data: dict) -> "IrrepModel":
        if data.get("schema_version") != SCHEMA_VERSION:
            raise ValueError(f"unsupported schema_version {data.get('schema_version')}")
        p = CherednikParam(data["m"], data["n"])
        r = p.n - 1

        def mat(M):
            return [[Fraction(x) for x in row] for row in M]

        basis, nf, gram, kernels, ymats = {}, {}, {}, {}, {}
        for entry in data["degrees"]:
            d = entry["degree"]
            basis[d] = [tuple(b) for b in entry["basis"]]
            nf[d] = mat(entry["normal_form"])
            gram[d] = mat(entry["gram"])
            kernels[d] = Subspace(len(monomials(r, d)), mat(entry["kernel"]), reduced=True)
            if entry["dunkl"]:
                ymats[d] = [mat(M) for M in entry["dunkl"]]
        top = data["top_degree"]
        kernels[top + 1] = Subspace(len(monomials(r, top + 1)), mat(data["kernel_next"]), reduced=True)
        return cls(p, top, basis, nf, gram, kernels, ymats)

    def same_as(self, other: "IrrepModel") -> bool:
        return (
            self.param == other.param
            and self.top == other.top
            and self.basis == other.basis
            and self.normal_form == other.normal_form
            and self.gram == other.gram
            and self.ymats == other.ymats
            and all(self.kernels[d] == other.kernels[d] for d in self.kernels)
        )


def _rat(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"


_MODEL_CACHE: Dict[Tuple[int, int], IrrepModel] = {}


def _kernel_rref(stacked: "flint.fmpq_mat", ncols: int) -> Tuple[Matrix, List[int]]:
    """RREF rows and pivots of the nullspace of a FLINT matrix."""
    red, rk = stacked.rref()
    entries = red.entries()
    pivots = []
    for i in range(rk):
        pivots.append(next(j for j in range(ncols) if entries[i * ncols + j] != 0))
    pivset = set(pivots)
    free = [j for j in range(ncols) if j not in pivset]
    if not free:
        return [], []
    basis = flint.fmpq_mat(len(free), ncols)
    for t, f in enumerate(free):
        basis[t, f] = 1
        for i, pcol in enumerate(pivots):
            x = entries[i * ncols + f]
            if x != 0:
                basis[t, pcol] = -x
    kred, krk = basis.rref()
    rows = from_flint(kred, krk)
    return rows, [next(j for j, x in enumerate(r) if x) for r in rows]


def build_irrep(p: CherednikParam | Tuple[int, int], *, use_cache: bool = True) -> IrrepModel:
    if not isinstance(p, CherednikParam):
        p = CherednikParam(*p)
    key = (p.m, p.n)
    if use_cache and key in _MODEL_CACHE:
        return _MODEL_CACHE[key]
    r = p.n - 1
    dunkl = DunklDifferences(p)
    basis = {0: [(0,) * r]}
    nf = {0: [[Fraction(1)]]}
    gram = {0: [[Fraction(1)]]}
    kernels = {0: Subspace.zero(1)}
    ymats: Dict[int, List[Matrix]] = {}
    nf_flint = flint.fmpq_mat(1, 1, [1])
    d = 0
    while True:
        d += 1
        Pd = monomials(r, d)
        prev_index = monomial_index(r, d - 1)
        L_prev = len(basis[d - 1])
        A = [nf_flint * Y for Y in dunkl.flint_matrices(d)]
        # v lies in I_d iff every Y_k v lies in I_{d-1}
        stacked = flint.fmpq_mat(r * L_prev, len(Pd), [x for Ak in A for x in Ak.entries()])
        rows, pivots = _kernel_rref(stacked, len(Pd))
        kernels[d] = Subspace(len(Pd), rows, reduced=True)
        pivset = set(pivots)
        free = [j for j in range(len(Pd)) if j not in pivset]
        if not free:
            top = d - 1
            break
        basis[d] = [Pd[j] for j in free]
        pos = {j: t for t, j in enumerate(free)}
        N = zeros(len(free), len(Pd))
        for j in free:
            N[pos[j]][j] = Fraction(1)
        for row, piv in zip(rows, pivots):
            for j in free:
                if row[j]:
                    N[pos[j]][piv] = -row[j]
        ys = []
        for Ak in A:
            full = from_flint(Ak)
            ys.append([[row[j] for j in free] for row in full])
        # (z^a, z^b) = (z^{a - e_k}, Y_k z^b) with k the first index where a is positive
        G = []
        for j in free:
            a = Pd[j]
            k = next(i for i, e in enumerate(a) if e)
            col = prev_index[a[:k] + (a[k] - 1,) + a[k + 1:]]
            lhs = vecmat([nf[d - 1][i][col] for i in range(L_prev)], gram[d - 1], L_prev)
            G.append(vecmat(lhs, ys[k], len(free)))
        nf[d] = N
        gram[d] = G
        ymats[d] = ys
        nf_flint = to_flint(N, len(Pd))
    model = IrrepModel(p, top, basis, nf, gram, kernels, ymats)
    if use_cache:
        _MODEL_CACHE[key] = model
    return model


# ---------------------------------------------------------------------------
# residue generators

def _u_series(n: int) -> Series:
    return product_one_minus(n)


def v_coefficients_x(p: CherednikParam, shift: int = 0, order: Optional[int] = None) -> Series:
    """Coefficients of (sum u_i z^i)^{c+shift} as polynomials in x_1..x_n."""
    if order is None:
        order = p.m + p.n
    return series_fractional_power(_u_series(p.n), p.c + shift, order)


def v_coefficients(p: CherednikParam, shift: int = 0, order: Optional[int] = None) -> Series:
    """Same series restricted to h (written in the z coordinates)."""
    if shift not in (0, -1):
        raise ValueError("shift must be 0 or -1")
    if order is None:
        order = p.m + p.n
    if order < p.m + p.n:
        raise ValueError("order must be at least m + n")
    vx = v_coefficients_x(p, shift, order)
    return Series([project(v) for v in vx.coeffs], p.n - 1)


def f_generators_x(p: CherednikParam) -> List[Poly]:
    """f_i = sum_{j=0}^m x_i^j v_{m-j}, the z^m coefficient of (1 - x_i z)^{-1} prod (1 - x_k z)^c."""
    v = v_coefficients_x(p, 0, p.m)
    out = []
    for i in range(p.n):
        xi = Poly.var(i, p.n)
        acc = Poly.zero(p.n)
        for j in range(p.m + 1):
            acc = acc + (xi ** j) * v[p.m - j]
        out.append(acc)
    return out


def f_generators(p: CherednikParam) -> List[Poly]:
    return [project(f) for f in f_generators_x(p)]


def f_generators_via_shift(p: CherednikParam) -> List[Poly]:
    """sum_{j=0}^{n-1} (x_i^j + x_i^{j-1} u_1 + ... + u_j) v^{(c-1)}_{m-j}, restricted to h."""
    v = v_coefficients_x(p, -1, p.m)
    u = _u_series(p.n)
    out = []
    for i in range(p.n):
        xi = Poly.var(i, p.n)
        acc = Poly.zero(p.n)
        for j in range(min(p.n - 1, p.m) + 1):
            partial = Poly.zero(p.n)
            for t in range(j + 1):
                partial = partial + (xi ** (j - t)) * u[t]
            acc = acc + partial * v[p.m - j]
        out.append(project(acc))
    return out


def ideal_degree(generators: Sequence[Poly], d: int, r: int) -> Subspace:
    """Degree-d piece of the ideal of C[z_1..z_r] generated by homogeneous polynomials."""
    idx = monomial_index(r, d)
    rows = []
    for g in generators:
        e = g.homogeneous_degree()
        if e < 0 or e > d:
            continue
        for b in monomials(r, d - e):
            prod = g * Poly.monomial(b)
            v = [ZERO] * len(idx)
            for mono, c in prod.items():
                v[idx[mono]] += c
            rows.append(v)
    return Subspace(len(idx), rows)


def kernel_degree(p: CherednikParam, d: int, method: str = "gram") -> Subspace:
    """Degree-d piece of I_c, either as the Gram radical or as the ideal (f_1, ..., f_n)."""
    if d < 0:
        raise ValueError("degree must be non-negative")
    r = p.n - 1
    if method == "gram":
        model = build_irrep(p)
        if d in model.kernels:
            return model.kernels[d]
        return Subspace.full(len(monomials(r, d)))
    if method == "generators":
        return ideal_degree(f_generators(p), d, r)
    raise ValueError(f"unknown method {method!r}")


def power_sum_h(k: int, n: int) -> Poly:
    """p_k restricted to h."""
    return project(power_sum(k, n))


def arc_identity_check(p: CherednikParam, ell: int) -> bool:
    """sum_i x_i^l f_i = -((m+l)/c) v_{m+l} - sum_{j=1}^{l-1} v_{m+j} p_{l-j} on h.

    For l = 0 the left side is sum_i f_i, and the same logarithmic-derivative
    computation gives sum_i f_i = n v_m - (m/c) v_m = 0; that is the identity
    checked in that case.
    """
    if not 0 <= ell <= p.n:
        raise ValueError("need 0 <= l <= n")
    fs = f_generators_x(p)
    v = v_coefficients_x(p, 0, p.m + p.n)
    lhs = Poly.zero(p.n)
    for i, f in enumerate(fs):
        lhs = lhs + (Poly.var(i, p.n) ** ell) * f
    if ell == 0:
        rhs = Poly.zero(p.n)
    else:
        rhs = v[p.m + ell].scale(-Fraction(p.m + ell) / p.c)
        for j in range(1, ell):
            rhs = rhs - v[p.m + j] * power_sum(ell - j, p.n)
    return project(lhs - rhs).is_zero()


def invariant_kernel_generators(p: CherednikParam) -> List[Poly]:
    v = v_coefficients(p, 0, p.m + p.n)
    return [v[p.m + j] for j in range(1, p.n)]


# ---------------------------------------------------------------------------
# harmonics and characters

def single_dunkl(model: IrrepModel, i: int) -> Poly:
    """The linear form whose Y-substitution is y_i on translation-invariant functions."""
    x = Poly.var(i - 1, model.n)
    return project(x)


def delta_h(n: int) -> Poly:
    return project(vandermonde(n))


def harmonic_vectors(model: IrrepModel) -> Dict[Tuple[int, ...], Tuple[int, List[Fraction]]]:
    """y_2^{a_2} ... y_n^{a_n} delta in L_c for 0 <= a_i <= i-1."""
    from itertools import product

    n = model.n
    top_d = n * (n - 1) // 2
    delta = model.reduce(delta_h(n), top_d)
    ys = [single_dunkl(model, i) for i in range(1, n + 1)]
    out = {}
    for a in product(*[range(i) for i in range(2, n + 1)]):
        q = Poly.const(1, model.r)
        for i, e in enumerate(a, start=2):
            q = q * ys[i - 1] ** e
        deg = top_d - sum(a)
        vec = model.apply(model.operator_matrix(q, top_d), delta, model.dim_at(deg)) if sum(a) else delta
        out[a] = (deg, vec)
    return out


def harmonics(model: IrrepModel) -> GradedSubspace:
    if model.param.c < 1:
        raise ParameterOutOfRange("for c < 1 use the orthocomplement of the invariant ideal")
    rows: Dict[int, list] = {d: [] for d in model.degrees}
    for deg, vec in harmonic_vectors(model).values():
        rows[deg].append(vec)
    return GradedSubspace(model.dims, {d: Subspace(model.dim_at(d), rs) for d, rs in rows.items()})


def top_degree_vanishing(model: IrrepModel) -> Dict[Tuple[int, ...], Fraction]:
    """Scalars y_2^{b_2} ... y_n^{b_n} delta with sum b = n(n-1)/2, keyed by b."""
    n = model.n
    top_d = n * (n - 1) // 2
    delta_poly = delta_h(n)
    p = model.param
    ys = [single_dunkl(model, i) for i in range(1, n + 1)]
    out = {}

    def comps(total, parts):
        if parts == 1:
            yield (total,)
            return
        for first in range(total + 1):
            for rest in comps(total - first, parts - 1):
                yield (first,) + rest

    from .dunkl import cartan_fourier

    for b in comps(top_d, n - 1):
        q = Poly.const(1, model.r)
        for i, e in enumerate(b, start=2):
            q = q * ys[i - 1] ** e
        out[b] = cartan_fourier(p, q, delta_poly).constant_term()
    return out


def fourier_on_irrep(model: IrrepModel, d: int, v: Sequence[Fraction]) -> Tuple[int, List[Fraction]]:
    """Weight-flip by powers of e or f: returns (degree, vector)."""
    k = model.weight(d)
    cur, deg = list(v), d
    if k < 0:
        for _ in range(-k):
            cur = model.apply(model.e_matrix(deg), cur, model.dim_at(deg + 2))
            deg += 2
    elif k > 0:
        for _ in range(k):
            cur = model.apply(model.f_matrix(deg), cur, model.dim_at(deg - 2))
            deg -= 2
    return deg, cur


def hook_character(model: IrrepModel, i: int) -> QtPolynomial:
    if not 0 <= i <= model.n - 1:
        raise IndexOutOfRange(f"hook index must lie in 0..{model.n - 1}")
    hook = Partition.hook(model.n, i)
    terms = {}
    for d in model.degrees:
        if model.dim_at(d):
            mult = multiplicity(hook, model.group_action(d))
            if mult:
                terms[(model.weight(d), 0, 0)] = mult
    return QtPolynomial(terms)


def character_q(model: IrrepModel, sigma: Optional[Partition] = None) -> QtPolynomial:
    terms = {}
    for d in model.degrees:
        if sigma is None:
            c = model.dim_at(d)
        else:
            c = multiplicity(sigma, model.group_action(d)) if model.dim_at(d) else 0
        if c:
            terms[(model.weight(d), 0, 0)] = c
    return QtPolynomial(terms)


def expected_dimension(p: CherednikParam) -> int:
    return p.m ** (p.n - 1)


def rational_catalan_number(m: int, n: int) -> int:
    return comb(m + n, n) // (m + n)
