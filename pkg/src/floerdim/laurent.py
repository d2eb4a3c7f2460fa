"""Integer Laurent polynomials in one variable t.

Coefficients are exact integers, stored sparsely by exponent.  This is
enough for Alexander polynomials and graded Euler characteristics; no
attempt is made at multivariable or non-integer support.
"""
from __future__ import annotations

import re
from typing import Dict, Iterable, Iterator, Tuple


class LaurentPoly:
    """Finitely supported map exponent -> integer coefficient."""

    __slots__ = ("_c",)

    def __init__(self, coeffs: Dict[int, int] | Iterable[Tuple[int, int]] = ()):
        c: Dict[int, int] = {}
        items = coeffs.items() if isinstance(coeffs, dict) else coeffs
        for e, a in items:
            if a:
                c[int(e)] = c.get(int(e), 0) + int(a)
                if not c[int(e)]:
                    del c[int(e)]
        self._c = c

    # -- construction helpers -------------------------------------------------

    @classmethod
    def zero(cls) -> "LaurentPoly":
        return cls()

    @classmethod
    def one(cls) -> "LaurentPoly":
        return cls({0: 1})

    @classmethod
    def monomial(cls, exponent: int, coeff: int = 1) -> "LaurentPoly":
        return cls({exponent: coeff})

    # -- basic protocol --------------------------------------------------------

    def coeff(self, exponent: int) -> int:
        return self._c.get(exponent, 0)

    def items(self) -> Iterator[Tuple[int, int]]:
        return iter(sorted(self._c.items()))

    def coeffs(self) -> Dict[int, int]:
        return dict(self._c)

    def __bool__(self) -> bool:
        return bool(self._c)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, LaurentPoly) and self._c == other._c

    def __hash__(self) -> int:
        return hash(frozenset(self._c.items()))

    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        c = dict(self._c)
        for e, a in other._c.items():
            c[e] = c.get(e, 0) + a
        return LaurentPoly(c)

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly({e: -a for e, a in self._c.items()})

    def __sub__(self, other: "LaurentPoly") -> "LaurentPoly":
        return self + (-other)

    def __mul__(self, other: "LaurentPoly") -> "LaurentPoly":
        c: Dict[int, int] = {}
        for e1, a1 in self._c.items():
            for e2, a2 in other._c.items():
                c[e1 + e2] = c.get(e1 + e2, 0) + a1 * a2
        return LaurentPoly(c)

    def shift(self, k: int) -> "LaurentPoly":
        """Multiply by t^k."""
        return LaurentPoly({e + k: a for e, a in self._c.items()})

    # -- queries ---------------------------------------------------------------

    def min_exp(self) -> int:
        if not self._c:
            raise ValueError("zero polynomial has no degree")
        return min(self._c)

    def max_exp(self) -> int:
        if not self._c:
            raise ValueError("zero polynomial has no degree")
        return max(self._c)

    def eval_at_one(self) -> int:
        return sum(self._c.values())

    def is_symmetric(self) -> bool:
        """c_i == c_{-i} for all i."""
        return all(self.coeff(-e) == a for e, a in self._c.items())

    def abs_coeffs(self) -> Dict[int, int]:
        return {e: abs(a) for e, a in self._c.items()}

    def divide_exact(self, divisor: "LaurentPoly") -> "LaurentPoly":
        """Exact long division; raises ValueError on a nonzero remainder.

        Works over Z by requiring every partial quotient coefficient to be
        an exact integer multiple of the divisor's leading coefficient.
        """
        if not divisor:
            raise ZeroDivisionError("division by zero polynomial")
        if not self:
            return LaurentPoly.zero()
        # Normalize to ordinary polynomials: strip the lowest powers of t.
        rem = dict(self._c)
        dlead = divisor.max_exp()
        dcoef = divisor._c[dlead]
        out: Dict[int, int] = {}
        while rem:
            rlead = max(rem)
            a = rem[rlead]
            if a % dcoef:
                raise ValueError("division is not exact")
            q = a // dcoef
            e = rlead - dlead
            out[e] = out.get(e, 0) + q
            for de, da in divisor._c.items():
                k = de + e
                rem[k] = rem.get(k, 0) - da * q
                if not rem[k]:
                    del rem[k]
            if rem and max(rem) >= rlead:
                raise ValueError("division did not reduce degree")
        return LaurentPoly(out)

    # -- text form ---------------------------------------------------------------

    def __str__(self) -> str:
        if not self._c:
            return "0"
        parts = []
        for e, a in sorted(self._c.items()):
            if e == 0:
                term = str(abs(a))
            else:
                te = "t" if e == 1 else f"t^{e}"
                term = te if abs(a) == 1 else f"{abs(a)}*{te}"
            sign = "-" if a < 0 else "+"
            parts.append((sign, term))
        sign0, term0 = parts[0]
        text = ("-" if sign0 == "-" else "") + term0
        for sign, term in parts[1:]:
            text += f" {sign} {term}"
        return text

    def __repr__(self) -> str:
        return f"LaurentPoly({self._c!r})"


_TERM_RE = re.compile(
    r"""(?P<sign>[+-])?\s*
        (?:
            (?P<coeff>\d+)\s*(?:\*\s*)?(?P<tc>t(?:\^(?P<exp1>-?\d+))?)?
          | (?P<tb>t(?:\^(?P<exp2>-?\d+))?)
        )\s*""",
    re.VERBOSE,
)


def parse_laurent(text: str) -> LaurentPoly:
    """Parse forms like 't^-1 - 1 + t' or '2*t^3 + 1'."""
    text = text.strip()
    if not text:
        raise ValueError("empty polynomial")
    if text == "0":
        return LaurentPoly.zero()
    pos = 0
    coeffs: Dict[int, int] = {}
    first = True
    while pos < len(text):
        m = _TERM_RE.match(text, pos)
        if not m or m.end() == pos:
            raise ValueError(f"cannot parse polynomial near {text[pos:]!r}")
        sign = m.group("sign")
        if sign is None and not first:
            raise ValueError(f"missing sign near {text[pos:]!r}")
        s = -1 if sign == "-" else 1
        if m.group("coeff") is not None:
            a = s * int(m.group("coeff"))
            e = 0
            if m.group("tc"):
                e = int(m.group("exp1")) if m.group("exp1") else 1
        else:
            a = s
            e = int(m.group("exp2")) if m.group("exp2") else 1
        coeffs[e] = coeffs.get(e, 0) + a
        pos = m.end()
        first = False
    return LaurentPoly(coeffs)
