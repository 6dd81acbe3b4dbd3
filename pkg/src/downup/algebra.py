"""Down-up algebra arithmetic.

A(alpha, beta, gamma) is the algebra on generators d, u subject to

    d^2 u = alpha*d u d + beta*u d^2 + gamma*d
    d u^2 = alpha*u d u + beta*u^2 d + gamma*u

It has the basis {u^i (du)^j d^k} for every parameter triple.  When beta = 0
the element omega := du - alpha*ud - gamma satisfies d*omega = omega*u = 0,
which yields the alternative basis {u^i omega^j d^l}, a description of the
powers of the two-sided ideal generated by omega, and a small bimodule
structure on the quotient of that ideal by its square.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .errors import DomainError
from .expr import DU, DWU, OMEGA, NcPoly, Scalarlike, Word, as_scalar, format_word
from .rewrite import RewriteRule, RuleSet, reduce


@dataclass(frozen=True)
class Params:
    """Parameter triple (alpha, beta, gamma) of exact rationals."""

    alpha: Fraction
    beta: Fraction
    gamma: Fraction

    def __post_init__(self) -> None:
        object.__setattr__(self, "alpha", as_scalar(self.alpha))
        object.__setattr__(self, "beta", as_scalar(self.beta))
        object.__setattr__(self, "gamma", as_scalar(self.gamma))

    @classmethod
    def parse(cls, text: str) -> "Params":
        parts = [piece.strip() for piece in text.split(",")]
        if len(parts) != 3:
            raise DomainError(f"expected three comma-separated rationals, got {text!r}")
        values = []
        for piece in parts:
            try:
                values.append(Fraction(piece))
            except (ValueError, ZeroDivisionError):
                raise DomainError(f"bad rational {piece!r} in parameter triple") from None
        return cls(*values)

    def __str__(self) -> str:
        return f"({self.alpha}, {self.beta}, {self.gamma})"


def _require_beta_zero(params: Params) -> None:
    if params.beta != 0:
        raise DomainError(f"omega calculus requires beta = 0, got beta = {params.beta}")


def geometric_sum(alpha: Scalarlike, m: int) -> Fraction:
    """1 + alpha + ... + alpha^(m-1), exact for every alpha including 1."""
    a = as_scalar(alpha)
    total = Fraction(0)
    power = Fraction(1)
    for _ in range(m):
        total += power
        power *= a
    return total


@lru_cache(maxsize=None)
def downup_rules(params: Params) -> RuleSet:
    """Defining relations oriented along deglex with d > u."""
    a, b, g = params.alpha, params.beta, params.gamma
    return RuleSet(
        DU,
        (
            RewriteRule(
                ("d", "d", "u"),
                NcPoly(DU, {("d", "u", "d"): a, ("u", "d", "d"): b, ("d",): g}),
            ),
            RewriteRule(
                ("d", "u", "u"),
                NcPoly(DU, {("u", "d", "u"): a, ("u", "u", "d"): b, ("u",): g}),
            ),
        ),
    )


@lru_cache(maxsize=None)
def omega_rules(params: Params) -> RuleSet:
    """Rules over d > omega > u whose normal words are u^i omega^j d^l."""
    _require_beta_zero(params)
    a, g = params.alpha, params.gamma
    return RuleSet(
        DWU,
        (
            RewriteRule(("d", "u"), NcPoly(DWU, {(OMEGA,): 1, ("u", "d"): a, (): g})),
            RewriteRule(("d", OMEGA), NcPoly.zero(DWU)),
            RewriteRule((OMEGA, "u"), NcPoly.zero(DWU)),
        ),
    )


def omega_poly(params: Params) -> NcPoly:
    """omega = du - alpha*ud - gamma as a polynomial over {d, u}."""
    _require_beta_zero(params)
    return NcPoly(
        DU, {("d", "u"): 1, ("u", "d"): -params.alpha, (): -params.gamma}
    )


def _clean_terms(terms, arity: int, kind: str) -> dict[tuple[int, ...], Fraction]:
    out: dict[tuple[int, ...], Fraction] = {}
    for key, value in (terms or {}).items():
        key = tuple(key)
        if len(key) != arity or any((not isinstance(x, int)) or x < 0 for x in key):
            raise DomainError(f"{kind} index {key!r} must be {arity} nonnegative integers")
        coeff = as_scalar(value)
        if coeff:
            out[key] = out.get(key, Fraction(0)) + coeff
            if not out[key]:
                del out[key]
    return out


class PBWElem:
    """Coordinates over the basis u^i (du)^j d^k, indexed by (i, j, k)."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = _clean_terms(terms, 3, "PBW")

    def to_ncpoly(self) -> NcPoly:
        return NcPoly(
            DU,
            {
                ("u",) * i + ("d", "u") * j + ("d",) * k: c
                for (i, j, k), c in self.terms.items()
            },
        )

    def __eq__(self, other: object) -> bool:
        return isinstance(other, PBWElem) and self.terms == other.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __str__(self) -> str:
        return str(self.to_ncpoly())

    def __repr__(self) -> str:
        return f"PBWElem({self.terms!r})"


class OmegaElem:
    """Coordinates over the basis u^i omega^j d^l, indexed by (i, j, l)."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = _clean_terms(terms, 3, "omega-basis")

    def to_ncpoly(self) -> NcPoly:
        return NcPoly(
            DWU,
            {
                ("u",) * i + (OMEGA,) * j + ("d",) * l: c
                for (i, j, l), c in self.terms.items()
            },
        )

    def __eq__(self, other: object) -> bool:
        return isinstance(other, OmegaElem) and self.terms == other.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __str__(self) -> str:
        return str(self.to_ncpoly())

    def __repr__(self) -> str:
        return f"OmegaElem({self.terms!r})"


def _class_word(key: tuple[int, int]) -> Word:
    i, l = key
    return ("u",) * i + (OMEGA,) + ("d",) * l


class BimodClass:
    """Class in the quotient of <omega> by its square, basis [u^i omega d^l]."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = _clean_terms(terms, 2, "bimodule-class")

    def __eq__(self, other: object) -> bool:
        return isinstance(other, BimodClass) and self.terms == other.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        items = sorted(
            self.terms.items(),
            key=lambda kv: DWU.word_key(_class_word(kv[0])),
            reverse=True,
        )
        chunks = []
        for key, coeff in items:
            body = f"[{format_word(_class_word(key))}]"
            magnitude = abs(coeff)
            piece = body if magnitude == 1 else f"{magnitude}*{body}"
            chunks.append(("- " if coeff < 0 else "+ ") + piece)
        head = chunks[0]
        text = "-" + head[2:] if head.startswith("- ") else head[2:]
        for chunk in chunks[1:]:
            text += " " + chunk
        return text

    def __repr__(self) -> str:
        return f"BimodClass({self.terms!r})"


def _word_to_pbw_key(word: Word) -> tuple[int, int, int] | None:
    n = len(word)
    i = 0
    while i < n and word[i] == "u":
        i += 1
    pos = i
    j = 0
    while pos + 1 < n and word[pos] == "d" and word[pos + 1] == "u":
        j += 1
        pos += 2
    k = n - pos
    if word[pos:] != ("d",) * k:
        return None
    return (i, j, k)


def _word_to_omega_key(word: Word) -> tuple[int, int, int] | None:
    n = len(word)
    i = 0
    while i < n and word[i] == "u":
        i += 1
    j = i
    while j < n and word[j] == OMEGA:
        j += 1
    if word[j:] != ("d",) * (n - j):
        return None
    return (i, j - i, n - j)


def pbw_normal_form(p: NcPoly, params: Params) -> PBWElem:
    """Coordinates of p's class in A(alpha, beta, gamma) over u^i (du)^j d^k."""
    if p.alphabet != DU:
        raise DomainError("expected a polynomial over the letters d, u")
    normal = reduce(p, downup_rules(params))
    terms: dict[tuple[int, int, int], Fraction] = {}
    for word, coeff in normal.terms.items():
        key = _word_to_pbw_key(word)
        if key is None:
            raise DomainError(f"word {format_word(word)} escaped PBW normalization")
        terms[key] = coeff
    return PBWElem(terms)


def omega_coords(p: NcPoly, params: Params) -> OmegaElem:
    """Coordinates over u^i omega^j d^l; accepts polynomials over {d,u} or {d,omega,u}."""
    _require_beta_zero(params)
    if p.alphabet == DU:
        p = NcPoly(DWU, p.terms)
    elif p.alphabet != DWU:
        raise DomainError("expected a polynomial over d, u or d, omega, u")
    normal = reduce(p, omega_rules(params))
    terms: dict[tuple[int, int, int], Fraction] = {}
    for word, coeff in normal.terms.items():
        key = _word_to_omega_key(word)
        if key is None:
            raise DomainError(f"word {format_word(word)} escaped omega normalization")
        terms[key] = coeff
    return OmegaElem(terms)


def pbw_to_omega(p: PBWElem, params: Params) -> OmegaElem:
    """Rewrite a PBW element in the omega basis (beta = 0 only)."""
    _require_beta_zero(params)
    return omega_coords(NcPoly(DWU, p.to_ncpoly().terms), params)


def omega_to_pbw(q: OmegaElem, params: Params) -> PBWElem:
    """Substitute omega = du - alpha*ud - gamma and reduce to PBW form."""
    _require_beta_zero(params)
    substituted = omega_poly(params)
    total = NcPoly.zero(DU)
    for (i, j, l), coeff in q.terms.items():
        term = NcPoly.monomial(DU, ("u",) * i, coeff) * (substituted**j)
        term = term * NcPoly.monomial(DU, ("d",) * l)
        total = total + term
    return pbw_normal_form(total, params)


def ideal_power_membership(p: NcPoly, n: int, params: Params) -> bool:
    """Whether p lies in the n-th power of the two-sided ideal generated by omega."""
    if not isinstance(n, int) or n < 1:
        raise DomainError("ideal power must be a positive integer")
    coords = omega_coords(p, params)
    return all(key[1] >= n for key in coords.terms)


def bimod_class(p: NcPoly, params: Params) -> BimodClass:
    """Class of p in <omega>/<omega>^2; requires p to lie in <omega>."""
    coords = omega_coords(p, params)
    if any(key[1] == 0 for key in coords.terms):
        raise DomainError("polynomial is not in the ideal generated by omega")
    return BimodClass(
        {(i, l): coeff for (i, j, l), coeff in coords.terms.items() if j == 1}
    )


def bimod_action_formula(i: int, l: int, side: str, params: Params) -> BimodClass:
    """Closed form for [u^i omega d^l]*u (right) and d*[u^i omega d^l] (left).

    The coefficient is gamma * (1 + alpha + ... + alpha^(m-1)) with m = l on
    the right and m = i on the left, landing on the class with that exponent
    lowered by one; the result is zero when the lowered exponent would go
    negative.  Stated for alpha != 1 only.
    """
    _require_beta_zero(params)
    if params.alpha == 1:
        raise DomainError("closed-form action requires alpha != 1")
    if i < 0 or l < 0:
        raise DomainError("indices must be nonnegative")
    if side not in ("left", "right"):
        raise DomainError(f"side must be 'left' or 'right', got {side!r}")
    if side == "right":
        if l == 0:
            return BimodClass({})
        return BimodClass({(i, l - 1): params.gamma * geometric_sum(params.alpha, l)})
    if i == 0:
        return BimodClass({})
    return BimodClass({(i - 1, l): params.gamma * geometric_sum(params.alpha, i)})
