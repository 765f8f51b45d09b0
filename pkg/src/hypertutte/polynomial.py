"""Sparse bivariate polynomials with exact integer coefficients.

Terms are a map (x-exponent, y-exponent) -> coefficient; zero
coefficients are never stored.  Canonical ordering for rendering and
iteration is lexicographic on (x-exponent, y-exponent), descending, so
that output diffs are byte-stable.
"""

from __future__ import annotations


class Poly:
    """Immutable-by-convention polynomial in x and y over the integers."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = {}
        if terms:
            for (a, b), c in terms.items():
                if c:
                    if a < 0 or b < 0:
                        raise ValueError("exponents must be non-negative")
                    self.terms[(a, b)] = c

    @staticmethod
    def constant(c: int) -> "Poly":
        return Poly({(0, 0): c})

    @staticmethod
    def monomial(a: int, b: int, c: int = 1) -> "Poly":
        return Poly({(a, b): c})

    @staticmethod
    def x() -> "Poly":
        return Poly.monomial(1, 0)

    @staticmethod
    def y() -> "Poly":
        return Poly.monomial(0, 1)

    def __eq__(self, other):
        return isinstance(other, Poly) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __bool__(self):
        return bool(self.terms)

    def __add__(self, other) -> "Poly":
        out = dict(self.terms)
        for key, c in other.terms.items():
            c2 = out.get(key, 0) + c
            if c2:
                out[key] = c2
            else:
                out.pop(key, None)
        result = Poly()
        result.terms = out
        return result

    def __neg__(self) -> "Poly":
        result = Poly()
        result.terms = {key: -c for key, c in self.terms.items()}
        return result

    def __sub__(self, other) -> "Poly":
        return self + (-other)

    def __mul__(self, other) -> "Poly":
        if isinstance(other, int):
            other = Poly.constant(other)
        out = {}
        for (a1, b1), c1 in self.terms.items():
            for (a2, b2), c2 in other.terms.items():
                key = (a1 + a2, b1 + b2)
                c = out.get(key, 0) + c1 * c2
                if c:
                    out[key] = c
                else:
                    del out[key]
        result = Poly()
        result.terms = out
        return result

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "Poly":
        if n < 0:
            raise ValueError("negative power")
        result = Poly.constant(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def substitute(self, px: "Poly", py: "Poly") -> "Poly":
        """Evaluate at x = px, y = py (both polynomials)."""
        out = Poly()
        xpows = {0: Poly.constant(1)}
        ypows = {0: Poly.constant(1)}
        for (a, b), c in sorted(self.terms.items()):
            if a not in xpows:
                xpows[a] = px ** a
            if b not in ypows:
                ypows[b] = py ** b
            out = out + c * (xpows[a] * ypows[b])
        return out

    def evaluate(self, x: int, y: int) -> int:
        return sum(c * x ** a * y ** b for (a, b), c in self.terms.items())

    def degrees(self) -> tuple[int, int]:
        """(max x-exponent, max y-exponent); (0, 0) for the zero polynomial."""
        if not self.terms:
            return (0, 0)
        return (
            max(a for a, _ in self.terms),
            max(b for _, b in self.terms),
        )

    def coefficient(self, a: int, b: int) -> int:
        return self.terms.get((a, b), 0)

    def sorted_terms(self):
        """Terms in canonical order: lex on (x-exp, y-exp), descending."""
        return sorted(self.terms.items(), key=lambda kv: kv[0], reverse=True)

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for (a, b), c in self.sorted_terms():
            mono = ""
            if a:
                mono += "x" if a == 1 else f"x^{a}"
            if b:
                mono += "y" if b == 1 else f"y^{b}"
            mag = abs(c)
            body = mono if mag == 1 and mono else f"{mag}{mono}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(("+ " if c > 0 else "- ") + body)
        return " ".join(parts)

    def __repr__(self):
        return f"Poly({self})"


def x_plus_y_minus_1() -> Poly:
    return Poly({(1, 0): 1, (0, 1): 1, (0, 0): -1})
