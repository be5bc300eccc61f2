"""Exact bivariate polynomial arithmetic in the variables s and t.

Every symbolic quantity in this package (Lucas polynomials, lucanomial
coefficients, Narayana polynomials, tiling weight sums) is a polynomial in
s and t with arbitrary-precision integer coefficients.  Values are kept in
canonical form: a mapping from exponent pairs (s_exp, t_exp) to nonzero int
coefficients.  Equality is therefore plain dict equality, and no operation
ever rounds or overflows.

Division exists only as :func:`divide_exact`, which treats its operands as
univariate in s with coefficients in Z[t] and fails fast with
:class:`NotDivisibleError` when no exact quotient exists.  All quotients
taken elsewhere in the package are guaranteed exact by identities, so a
NotDivisibleError signals a violated identity or a bug, never a user error.

Rendering uses graded lexicographic term order (total degree first, then
s exponent), descending, so output is deterministic.  The zero polynomial
has an empty term mapping and renders as "0".
"""

from __future__ import annotations

from types import MappingProxyType
from typing import Iterable, Mapping

Monomial = tuple[int, int]  # (s exponent, t exponent)


class NotDivisibleError(ArithmeticError):
    """No exact polynomial quotient exists."""


class PolyParseError(ValueError):
    """Malformed polynomial text; carries the 0-based failing position."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


def _ordered_items(terms: Mapping[Monomial, int]) -> list[tuple[Monomial, int]]:
    # Graded lex, s before t, descending.
    return sorted(terms.items(), key=lambda kv: (-(kv[0][0] + kv[0][1]), -kv[0][0]))


class Poly:
    """Immutable polynomial in Z[s, t], stored in canonical form."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Monomial, int] | Iterable[tuple[Monomial, int]] | None = None):
        canonical: dict[Monomial, int] = {}
        if terms:
            items = terms.items() if isinstance(terms, Mapping) else terms
            for key, coeff in items:
                se, te = key
                if not (isinstance(se, int) and isinstance(te, int) and isinstance(coeff, int)):
                    raise TypeError("exponents and coefficients must be int")
                if se < 0 or te < 0:
                    raise ValueError(f"negative exponent in monomial {key}")
                total = canonical.get((se, te), 0) + coeff
                if total:
                    canonical[(se, te)] = total
                else:
                    canonical.pop((se, te), None)
        self._terms = canonical
        self._hash: int | None = None

    @property
    def terms(self) -> Mapping[Monomial, int]:
        """Read-only view of the canonical term mapping."""
        return MappingProxyType(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other: object) -> bool:
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __neg__(self) -> Poly:
        return Poly({k: -c for k, c in self._terms.items()})

    def __add__(self, other: Poly | int) -> Poly:
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out = dict(self._terms)
        for key, coeff in other._terms.items():
            total = out.get(key, 0) + coeff
            if total:
                out[key] = total
            else:
                del out[key]
        return _from_canonical(out)

    __radd__ = __add__

    def __sub__(self, other: Poly | int) -> Poly:
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: Poly | int) -> Poly:
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other: Poly | int) -> Poly:
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out: dict[Monomial, int] = {}
        for (sa, ta), ca in self._terms.items():
            for (sb, tb), cb in other._terms.items():
                key = (sa + sb, ta + tb)
                total = out.get(key, 0) + ca * cb
                if total:
                    out[key] = total
                else:
                    del out[key]
        return _from_canonical(out)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> Poly:
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("exponent must be a nonnegative int")
        result = ONE
        for _ in range(exponent):
            result = result * self
        return result

    def evaluate(self, s0: int, t0: int) -> int:
        """Exact integer value at (s, t) = (s0, t0)."""
        return sum(c * s0**se * t0**te for (se, te), c in self._terms.items())

    def is_nonneg(self) -> bool:
        """True iff every stored coefficient is positive.

        Canonical form stores no zeros, so this is the coefficientwise
        positivity witness.
        """
        return all(c > 0 for c in self._terms.values())

    def to_json_dict(self) -> dict:
        """JSON form with coefficients as decimal strings (no 64-bit limits)."""
        return {
            "terms": [
                {"s": se, "t": te, "c": str(c)} for (se, te), c in _ordered_items(self._terms)
            ]
        }

    @classmethod
    def from_json_dict(cls, data: dict) -> Poly:
        try:
            items = [((int(term["s"]), int(term["t"])), int(term["c"])) for term in data["terms"]]
        except (KeyError, TypeError, ValueError) as exc:
            raise ValueError(f"malformed polynomial JSON: {exc}") from exc
        return cls(items)

    def __str__(self) -> str:
        return render(self)

    def __repr__(self) -> str:
        return f"Poly({render(self)!r})"


def _from_canonical(terms: dict[Monomial, int]) -> Poly:
    # Internal fast path: `terms` is already canonical.
    poly = Poly()
    poly._terms = terms
    return poly


def _coerce(value: object) -> Poly:
    if isinstance(value, Poly):
        return value
    if isinstance(value, int):
        return Poly({(0, 0): value}) if value else ZERO
    return NotImplemented


ZERO = Poly()
ONE = Poly({(0, 0): 1})
S = Poly({(1, 0): 1})
T = Poly({(0, 1): 1})


# ---------------------------------------------------------------------------
# Rendering and parsing
# ---------------------------------------------------------------------------

def _format_term(se: int, te: int, coeff: int) -> str:
    parts = []
    if abs(coeff) != 1 or (se == 0 and te == 0):
        parts.append(str(abs(coeff)))
    if se:
        parts.append("s" if se == 1 else f"s^{se}")
    if te:
        parts.append("t" if te == 1 else f"t^{te}")
    return "*".join(parts)


def render(poly: Poly) -> str:
    """Canonical text form: graded lex descending, s before t."""
    items = _ordered_items(poly.terms)
    if not items:
        return "0"
    pieces = []
    for index, ((se, te), coeff) in enumerate(items):
        body = _format_term(se, te, coeff)
        if index == 0:
            pieces.append(f"-{body}" if coeff < 0 else body)
        else:
            pieces.append(f" - {body}" if coeff < 0 else f" + {body}")
    return "".join(pieces)


def _tokenize(text: str) -> list[tuple[str, int, int]]:
    # Tokens: ("num", value, pos) or (symbol, 0, pos) for s t ^ * + -.
    tokens = []
    i = 0
    while i < len(text):
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch.isdigit():
            j = i
            while j < len(text) and text[j].isdigit():
                j += 1
            tokens.append(("num", int(text[i:j]), i))
            i = j
        elif ch in "st^*+-":
            tokens.append((ch, 0, i))
            i += 1
        else:
            raise PolyParseError(f"unexpected character {ch!r}", i)
    return tokens


def parse(text: str) -> Poly:
    """Parse the textual polynomial grammar.

    term ::= [coeff "*"] ["s" ["^" int]] ["*"] ["t" ["^" int]]
    with terms joined by " + " / " - " and an optional leading sign.  The
    "*" separators are optional on input; `render` always emits them.
    """
    tokens = _tokenize(text)
    end = len(text)
    if not tokens:
        raise PolyParseError("empty polynomial text", 0)

    terms: dict[Monomial, int] = {}
    i = 0
    sign = 1
    if tokens[i][0] in "+-":
        sign = -1 if tokens[i][0] == "-" else 1
        i += 1

    def expect_exponent(i: int) -> tuple[int, int]:
        if i >= len(tokens) or tokens[i][0] != "num":
            raise PolyParseError("expected exponent after '^'", tokens[i][2] if i < len(tokens) else end)
        return tokens[i][1], i + 1

    while True:
        if i >= len(tokens):
            raise PolyParseError("expected a term", tokens[-1][2] if tokens else end)
        start = tokens[i][2]
        coeff = 1
        se = te = 0
        matched = False
        if tokens[i][0] == "num":
            coeff = tokens[i][1]
            matched = True
            i += 1
            if i < len(tokens) and tokens[i][0] == "*":
                i += 1
                if i >= len(tokens) or tokens[i][0] not in "st":
                    raise PolyParseError("expected 's' or 't' after '*'", tokens[i][2] if i < len(tokens) else end)
        if i < len(tokens) and tokens[i][0] == "s":
            matched = True
            se = 1
            i += 1
            if i < len(tokens) and tokens[i][0] == "^":
                se, i = expect_exponent(i + 1)
            if i < len(tokens) and tokens[i][0] == "*":
                i += 1
                if i >= len(tokens) or tokens[i][0] != "t":
                    raise PolyParseError("expected 't' after '*'", tokens[i][2] if i < len(tokens) else end)
        if i < len(tokens) and tokens[i][0] == "t":
            matched = True
            te = 1
            i += 1
            if i < len(tokens) and tokens[i][0] == "^":
                te, i = expect_exponent(i + 1)
        if not matched:
            raise PolyParseError("expected a term", start)

        key = (se, te)
        total = terms.get(key, 0) + sign * coeff
        if total:
            terms[key] = total
        else:
            terms.pop(key, None)

        if i == len(tokens):
            break
        kind, _, pos = tokens[i]
        if kind not in "+-":
            raise PolyParseError("expected '+' or '-' between terms", pos)
        sign = -1 if kind == "-" else 1
        i += 1

    return _from_canonical(terms)


# ---------------------------------------------------------------------------
# Exact division
# ---------------------------------------------------------------------------

def _group_by_s(poly: Poly) -> dict[int, dict[int, int]]:
    grouped: dict[int, dict[int, int]] = {}
    for (se, te), c in poly.terms.items():
        grouped.setdefault(se, {})[te] = c
    return grouped


def _divide_t_exact(num: dict[int, int], den: dict[int, int]) -> dict[int, int]:
    # Exact division of univariate polynomials in t over Z; greedy
    # leading-term division detects non-exactness because Z[t] is a domain.
    quotient: dict[int, int] = {}
    rem = dict(num)
    dt = max(den)
    dc = den[dt]
    while rem:
        rt = max(rem)
        rc = rem[rt]
        if rt < dt or rc % dc:
            raise NotDivisibleError("no exact quotient in Z[t]")
        qc = rc // dc
        qe = rt - dt
        quotient[qe] = qc
        for e, c in den.items():
            key = qe + e
            total = rem.get(key, 0) - qc * c
            if total:
                rem[key] = total
            else:
                rem.pop(key, None)
    return quotient


def divide_exact(num: Poly, den: Poly) -> Poly:
    """Exact quotient num / den, or raise.

    The division runs univariately in s with coefficients in Z[t] and
    raises NotDivisibleError at the first non-exact step.  Raises
    ZeroDivisionError when den is the zero polynomial.
    """
    if not den:
        raise ZeroDivisionError("polynomial division by zero")
    if not num:
        return ZERO
    den_by_s = _group_by_s(den)
    ds = max(den_by_s)
    den_lead = den_by_s[ds]
    rem = _group_by_s(num)
    out: dict[Monomial, int] = {}
    while rem:
        rs = max(rem)
        if rs < ds:
            raise NotDivisibleError("no exact quotient: remainder of lower s-degree than divisor")
        qt = _divide_t_exact(rem[rs], den_lead)
        qs = rs - ds
        for te, c in qt.items():
            out[(qs, te)] = c
        for se, tpoly in den_by_s.items():
            target = rem.setdefault(qs + se, {})
            for te, dc in tpoly.items():
                for qe, qc in qt.items():
                    key = te + qe
                    total = target.get(key, 0) - dc * qc
                    if total:
                        target[key] = total
                    else:
                        target.pop(key, None)
            if not target:
                rem.pop(qs + se, None)
    return _from_canonical(out)
