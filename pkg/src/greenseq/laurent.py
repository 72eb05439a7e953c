"""Sparse multivariate Laurent polynomials with exact integer coefficients.

Values live in Z[x1^{±1},..,xn^{±1}, x_{n+1},..,x_{2n}]: exponent vectors
have length 2n, the first n slots (mutable variables) may be negative,
the last n slots (frozen variables) may not.  Coefficients are Python
ints, so nothing ever overflows.  Instances are immutable and hashable.
"""

from __future__ import annotations

from typing import Iterable, Iterator

Exps = tuple[int, ...]


class NonExactDivision(ArithmeticError):
    """Quotient is not a Laurent polynomial in the stated ring."""

    def __init__(self, message: str, remainder: "LaurentPoly | None" = None):
        super().__init__(message)
        self.remainder = remainder


class LaurentPoly:
    """Immutable sparse Laurent polynomial over 2n variables."""

    __slots__ = ("n", "_terms", "_hash")

    def __init__(self, n: int, terms: dict[Exps, int] | None = None):
        self.n = n
        clean: dict[Exps, int] = {}
        if terms:
            width = 2 * n
            for exps, coeff in terms.items():
                if coeff == 0:
                    continue
                if len(exps) != width:
                    raise ValueError(f"exponent vector length {len(exps)}, expected {width}")
                if any(exps[n + i] < 0 for i in range(n)):
                    raise ValueError(f"negative frozen exponent in {exps}")
                clean[tuple(exps)] = coeff
        self._terms = clean
        self._hash: int | None = None

    # construction helpers

    @classmethod
    def zero(cls, n: int) -> "LaurentPoly":
        return cls(n)

    @classmethod
    def const(cls, n: int, c: int) -> "LaurentPoly":
        return cls(n, {(0,) * (2 * n): c})

    @classmethod
    def variable(cls, n: int, i: int) -> "LaurentPoly":
        """The variable x_i, 1-based, 1 <= i <= 2n."""
        if not (1 <= i <= 2 * n):
            raise ValueError(f"variable index {i} out of range 1..{2 * n}")
        exps = [0] * (2 * n)
        exps[i - 1] = 1
        return cls(n, {tuple(exps): 1})

    @classmethod
    def monomial(cls, n: int, exps: Iterable[int], coeff: int = 1) -> "LaurentPoly":
        return cls(n, {tuple(exps): coeff})

    # ring structure

    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        terms = dict(self._terms)
        for exps, coeff in other._terms.items():
            c = terms.get(exps, 0) + coeff
            if c:
                terms[exps] = c
            else:
                terms.pop(exps, None)
        return LaurentPoly(self.n, terms)

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly(self.n, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other: "LaurentPoly") -> "LaurentPoly":
        return self + (-other)

    def __mul__(self, other: "LaurentPoly") -> "LaurentPoly":
        terms: dict[Exps, int] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                c = terms.get(e, 0) + c1 * c2
                if c:
                    terms[e] = c
                else:
                    terms.pop(e, None)
        return LaurentPoly(self.n, terms)

    def __pow__(self, k: int) -> "LaurentPoly":
        if k < 0:
            raise ValueError("negative powers only exist for monomials; invert exponents instead")
        result = LaurentPoly.const(self.n, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, LaurentPoly)
            and self.n == other.n
            and self._terms == other._terms
        )

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.n, tuple(sorted(self._terms.items()))))
        return self._hash

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def items(self) -> Iterator[tuple[Exps, int]]:
        return iter(sorted(self._terms.items()))

    def __len__(self) -> int:
        return len(self._terms)

    def coeff(self, exps: Iterable[int]) -> int:
        return self._terms.get(tuple(exps), 0)

    # division

    def div_exact(self, other: "LaurentPoly") -> "LaurentPoly":
        """Exact quotient inside the ring; NonExactDivision otherwise.

        Both operands are shifted by monomials so that every mutable
        variable has minimal exponent 0, which turns ring-exactness into
        polynomial exactness; polynomial long division then either
        terminates with remainder 0 or fails at a leading term.
        """
        if other.is_zero():
            raise ZeroDivisionError("division by the zero Laurent polynomial")
        if self.is_zero():
            return LaurentPoly.zero(self.n)
        n = self.n
        shift_p = _mutable_min_exponents(self)
        shift_q = _mutable_min_exponents(other)
        p0 = _shifted(self, [-s for s in shift_p])
        q0 = _shifted(other, [-s for s in shift_q])
        quo = _poly_div_exact(p0, q0, n)
        back = [p - q for p, q in zip(shift_p, shift_q)]
        return _shifted(LaurentPoly(n, quo), back)

    def __truediv__(self, other: "LaurentPoly") -> "LaurentPoly":
        return self.div_exact(other)

    # rendering

    def text(self, names: list[str] | None = None) -> str:
        """Canonical text: terms in ascending lexicographic exponent
        order, explicit '*' between factors, '^' for exponents != 1."""
        if not self._terms:
            return "0"
        if names is None:
            names = [f"x{i + 1}" for i in range(2 * self.n)]
        parts: list[str] = []
        for exps, coeff in sorted(self._terms.items()):
            factors = [
                f"{names[i]}^{e}" if e != 1 else names[i]
                for i, e in enumerate(exps)
                if e != 0
            ]
            mag = abs(coeff)
            if not factors:
                body = str(mag)
            elif mag == 1:
                body = "*".join(factors)
            else:
                body = "*".join([str(mag)] + factors)
            if not parts:
                parts.append(("-" if coeff < 0 else "") + body)
            else:
                parts.append(("- " if coeff < 0 else "+ ") + body)
        return " ".join(parts)

    def fraction_text(self, names: list[str] | None = None) -> str:
        """Numerator/denominator rendering, e.g. ``(x2+x3)/x1``."""
        if not self._terms:
            return "0"
        if names is None:
            names = [f"x{i + 1}" for i in range(2 * self.n)]
        den_exps = [max(0, -m) for m in _mutable_min_exponents(self)]
        num = _shifted(self, den_exps)
        num_parts = []
        # graded order, low degree first, reads like hand-written fractions
        for exps, coeff in sorted(
            num._terms.items(),
            key=lambda t: (sum(t[0]), tuple(-e for e in t[0])),
        ):
            factors = [
                f"{names[i]}^{e}" if e != 1 else names[i]
                for i, e in enumerate(exps)
                if e != 0
            ]
            mag = abs(coeff)
            if not factors:
                body = str(mag)
            elif mag == 1:
                body = "*".join(factors)
            else:
                body = "*".join([str(mag)] + factors)
            num_parts.append(("-" if coeff < 0 else ("+" if num_parts else "")) + body)
        num_text = "".join(num_parts)
        den_factors = [
            f"{names[i]}^{e}" if e != 1 else names[i]
            for i, e in enumerate(den_exps)
            if e != 0
        ]
        if not den_factors:
            return num_text
        den_text = "*".join(den_factors)
        if len(num._terms) > 1:
            num_text = f"({num_text})"
        if len(den_factors) > 1:
            den_text = f"({den_text})"
        return f"{num_text}/{den_text}"

    def __repr__(self) -> str:
        return f"LaurentPoly({self.text()!r})"


def _mutable_min_exponents(p: LaurentPoly) -> list[int]:
    mins: list[int] | None = None
    for exps in p._terms:
        if mins is None:
            mins = list(exps[: p.n])
        else:
            for i in range(p.n):
                if exps[i] < mins[i]:
                    mins[i] = exps[i]
    return mins if mins is not None else [0] * p.n


def _shifted(p: LaurentPoly, shift: list[int]) -> LaurentPoly:
    """Multiply by the mutable monomial x^shift (length n, mutable slots)."""
    if all(s == 0 for s in shift):
        return p
    n = p.n
    terms = {}
    for exps, coeff in p._terms.items():
        e = tuple(exps[i] + shift[i] if i < n else exps[i] for i in range(2 * n))
        terms[e] = coeff
    return LaurentPoly(n, terms)


def _poly_div_exact(p0: LaurentPoly, q0: LaurentPoly, n: int) -> dict[Exps, int]:
    den = q0._terms
    lt_d = max(den)
    cd = den[lt_d]
    rem = dict(p0._terms)
    quo: dict[Exps, int] = {}
    while rem:
        lt_r = max(rem)
        cr = rem[lt_r]
        texp = tuple(a - b for a, b in zip(lt_r, lt_d))
        if any(e < 0 for e in texp) or cr % cd != 0:
            raise NonExactDivision(
                "quotient leaves the Laurent ring",
                remainder=LaurentPoly(n, rem),
            )
        tc = cr // cd
        quo[texp] = tc
        for de, dc in den.items():
            e = tuple(a + b for a, b in zip(texp, de))
            c = rem.get(e, 0) - tc * dc
            if c:
                rem[e] = c
            else:
                rem.pop(e, None)
    return quo


def laurent_add(p: LaurentPoly, q: LaurentPoly) -> LaurentPoly:
    return p + q


def laurent_mul(p: LaurentPoly, q: LaurentPoly) -> LaurentPoly:
    return p * q


def laurent_div_exact(p: LaurentPoly, q: LaurentPoly) -> LaurentPoly:
    return p.div_exact(q)
