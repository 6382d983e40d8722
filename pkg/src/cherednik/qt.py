"""Laurent polynomials in q, t and a with integer coefficients."""

from __future__ import annotations

from typing import Dict, Iterable, Tuple

Exp = Tuple[int, int, int]


class QtPolynomial:
    __slots__ = ("terms",)

    def __init__(self, terms: Dict[Tuple[int, ...], int] | None = None):
        clean: Dict[Exp, int] = {}
        for e, c in (terms or {}).items():
            e = tuple(e) + (0,) * (3 - len(e))
            if c:
                clean[e] = clean.get(e, 0) + int(c)
        self.terms = {e: c for e, c in clean.items() if c}

    @classmethod
    def monomial(cls, q: int = 0, t: int = 0, a: int = 0, coeff: int = 1) -> "QtPolynomial":
        return cls({(q, t, a): coeff})

    def __add__(self, other: "QtPolynomial") -> "QtPolynomial":
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) + c
        return QtPolynomial(out)

    def __mul__(self, other: "QtPolynomial") -> "QtPolynomial":
        out: Dict[Exp, int] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = (e1[0] + e2[0], e1[1] + e2[1], e1[2] + e2[2])
                out[e] = out.get(e, 0) + c1 * c2
        return QtPolynomial(out)

    def __eq__(self, other) -> bool:
        return isinstance(other, QtPolynomial) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def swap_qt(self) -> "QtPolynomial":
        return QtPolynomial({(t, q, a): c for (q, t, a), c in self.terms.items()})

    def map_exponents(self, fn) -> "QtPolynomial":
        out: Dict[Exp, int] = {}
        for e, c in self.terms.items():
            ne = tuple(fn(*e))
            out[ne] = out.get(ne, 0) + c
        return QtPolynomial(out)

    def specialize(self, q=1, t=1, a=1):
        from fractions import Fraction
        total = Fraction(0)
        for (i, j, k), c in self.terms.items():
            total += c * Fraction(q) ** i * Fraction(t) ** j * Fraction(a) ** k
        return total

    def number_of_terms(self) -> int:
        return len(self.terms)

    def total(self) -> int:
        return sum(self.terms.values())

    def sorted_terms(self) -> Iterable[Tuple[Exp, int]]:
        return sorted(self.terms.items(), key=lambda kv: (kv[0][2], kv[0][0], kv[0][1]))

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        out = []
        for (i, j, k), c in self.sorted_terms():
            factors = []
            for name, e in (("a", k), ("q", i), ("t", j)):
                if e == 1:
                    factors.append(name)
                elif e:
                    factors.append(f"{name}^{e}")
            body = "*".join(factors)
            if not body:
                out.append(str(c))
            elif c == 1:
                out.append(body)
            elif c == -1:
                out.append("-" + body)
            else:
                out.append(f"{c}*{body}")
        return " + ".join(out).replace("+ -", "- ")

    def to_json(self):
        return [[i, j, k, c] for (i, j, k), c in self.sorted_terms()]

    @classmethod
    def from_json(cls, data) -> "QtPolynomial":
        return cls({(i, j, k): c for i, j, k, c in data})
