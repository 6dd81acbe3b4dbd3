"""Quantum quotients and abelianizations of down-up algebras.

For beta = 0 the quotient of A(alpha, 0, gamma) by the ideal generated by
omega is the quantum plane K_alpha[x, y] (gamma = 0) or the quantum Weyl
algebra (gamma = 1), via d -> y and u -> x.  Abelianizing instead kills all
commutators; the result is a commutative quotient of K[d, u] whose shape
depends on the parameters, including a field direct summand when gamma is a
unit multiple of (1 - alpha)du.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .algebra import Params, _clean_terms
from .errors import DomainError
from .expr import DU, YX, NcPoly, Scalarlike, as_scalar
from .linalg import rank
from .rewrite import RewriteRule, RuleSet, reduce

Monomial = tuple[int, ...]
CPoly = dict[Monomial, Fraction]


# -- quantum plane and quantum Weyl algebra ---------------------------------


@dataclass(frozen=True)
class QuantumAlgebra:
    """K<x,y> modulo yx - alpha*xy - constant (plane: 0, Weyl: 1)."""

    alpha: Fraction
    constant: Fraction

    def __post_init__(self) -> None:
        object.__setattr__(self, "alpha", as_scalar(self.alpha))
        object.__setattr__(self, "constant", as_scalar(self.constant))
        if self.alpha == 0:
            raise DomainError("quantum algebra requires alpha != 0")


def quantum_plane(alpha: Scalarlike) -> QuantumAlgebra:
    return QuantumAlgebra(as_scalar(alpha), Fraction(0))


def quantum_weyl(alpha: Scalarlike) -> QuantumAlgebra:
    return QuantumAlgebra(as_scalar(alpha), Fraction(1))


class QElem:
    """Coordinates over the basis x^i y^l, indexed by (i, l)."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = _clean_terms(terms, 2, "quantum-basis")

    def to_ncpoly(self) -> NcPoly:
        return NcPoly(
            YX, {("x",) * i + ("y",) * l: c for (i, l), c in self.terms.items()}
        )

    def __eq__(self, other: object) -> bool:
        return isinstance(other, QElem) and self.terms == other.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __str__(self) -> str:
        return str(self.to_ncpoly())

    def __repr__(self) -> str:
        return f"QElem({self.terms!r})"


@lru_cache(maxsize=None)
def q_rules(qa: QuantumAlgebra) -> RuleSet:
    return RuleSet(
        YX,
        (
            RewriteRule(
                ("y", "x"), NcPoly(YX, {("x", "y"): qa.alpha, (): qa.constant})
            ),
        ),
    )


def q_normal_form(p: NcPoly, qa: QuantumAlgebra) -> QElem:
    """Move all x's left of all y's via yx -> alpha*xy + constant."""
    if p.alphabet != YX:
        raise DomainError("expected a polynomial over the letters x, y")
    normal = reduce(p, q_rules(qa))
    terms: dict[tuple[int, int], Fraction] = {}
    for word, coeff in normal.terms.items():
        i = 0
        while i < len(word) and word[i] == "x":
            i += 1
        if word[i:] != ("y",) * (len(word) - i):
            raise DomainError("word escaped quantum normalization")
        terms[(i, len(word) - i)] = coeff
    return QElem(terms)


def q_mul(a: QElem, b: QElem, qa: QuantumAlgebra) -> QElem:
    return q_normal_form(a.to_ncpoly() * b.to_ncpoly(), qa)


def project(p: NcPoly, params: Params) -> QElem:
    """Image of p under A -> A/<omega>, sending d to y and u to x.

    Supported for beta = 0, alpha != 0 and gamma in {0, 1}; other gamma
    values first require rescaling d by 1/gamma.
    """
    if params.beta != 0:
        raise DomainError("projection requires beta = 0")
    if params.alpha == 0:
        raise DomainError("projection requires alpha != 0")
    if params.gamma not in (0, 1):
        raise DomainError("projection requires gamma in {0, 1}; rescale d first")
    if p.alphabet != DU:
        raise DomainError("expected a polynomial over the letters d, u")
    mapped = NcPoly(
        YX,
        {
            tuple("y" if letter == "d" else "x" for letter in word): coeff
            for word, coeff in p.terms.items()
        },
    )
    return q_normal_form(mapped, QuantumAlgebra(params.alpha, params.gamma))


# -- commutative polynomial helpers ------------------------------------------


def c_key(mon: Monomial):
    return (sum(mon), mon)


def c_clean(p) -> CPoly:
    out: CPoly = {}
    for mon, value in (p or {}).items():
        mon = tuple(mon)
        if any((not isinstance(e, int)) or e < 0 for e in mon):
            raise DomainError(f"bad exponent vector {mon!r}")
        coeff = as_scalar(value)
        if coeff:
            out[mon] = out.get(mon, Fraction(0)) + coeff
            if not out[mon]:
                del out[mon]
    return out


def c_add(p: CPoly, q: CPoly) -> CPoly:
    out = dict(p)
    for mon, coeff in q.items():
        total = out.get(mon, Fraction(0)) + coeff
        if total:
            out[mon] = total
        else:
            out.pop(mon, None)
    return out


def c_scale(p: CPoly, coeff: Scalarlike) -> CPoly:
    c = as_scalar(coeff)
    if not c:
        return {}
    return {mon: c * v for mon, v in p.items()}


def c_sub(p: CPoly, q: CPoly) -> CPoly:
    return c_add(p, c_scale(q, -1))


def c_mul(p: CPoly, q: CPoly) -> CPoly:
    out: CPoly = {}
    for m1, c1 in p.items():
        for m2, c2 in q.items():
            mon = tuple(a + b for a, b in zip(m1, m2))
            total = out.get(mon, Fraction(0)) + c1 * c2
            if total:
                out[mon] = total
            else:
                del out[mon]
    return out


def c_str(p: CPoly, variables: tuple[str, ...]) -> str:
    if not p:
        return "0"
    chunks = []
    for mon, coeff in sorted(p.items(), key=lambda kv: c_key(kv[0]), reverse=True):
        factors = []
        for name, exponent in zip(variables, mon):
            if exponent == 1:
                factors.append(name)
            elif exponent > 1:
                factors.append(f"{name}^{exponent}")
        magnitude = abs(coeff)
        if not factors:
            piece = str(magnitude)
        elif magnitude == 1:
            piece = "*".join(factors)
        else:
            piece = str(magnitude) + "*" + "*".join(factors)
        chunks.append(("- " if coeff < 0 else "+ ") + piece)
    head = chunks[0]
    text = "-" + head[2:] if head.startswith("- ") else head[2:]
    for chunk in chunks[1:]:
        text += " " + chunk
    return text


def commutative_image(p: NcPoly, variables: tuple[str, ...]) -> CPoly:
    """Abelianize: send each word to the product of its letters as commuting variables."""
    index = {name: pos for pos, name in enumerate(variables)}
    if set(p.alphabet.letters) - set(variables):
        raise DomainError("polynomial uses letters outside the variable list")
    out: CPoly = {}
    for word, coeff in p.terms.items():
        mon = [0] * len(variables)
        for letter in word:
            mon[index[letter]] += 1
        key = tuple(mon)
        total = out.get(key, Fraction(0)) + coeff
        if total:
            out[key] = total
        else:
            del out[key]
    return out


def _divides(lhs: Monomial, mon: Monomial) -> bool:
    return all(a <= b for a, b in zip(lhs, mon))


def orient_relations(relations) -> list[tuple[Monomial, CPoly]]:
    """Monic rewrite rules lhs -> rhs from relation polynomials (lhs = leading monomial)."""
    rules: list[tuple[Monomial, CPoly]] = []
    seen: set[Monomial] = set()
    for rel in relations:
        rel = c_clean(rel)
        if not rel:
            raise DomainError("zero relation cannot be oriented")
        lead = max(rel, key=c_key)
        if lead in seen:
            raise DomainError("two relations share a leading monomial")
        seen.add(lead)
        inv = 1 / rel[lead]
        rules.append((lead, {m: -c * inv for m, c in rel.items() if m != lead}))
    return rules


def reduce_commutative(p: CPoly, rules) -> CPoly:
    current = c_clean(p)
    while True:
        target = None
        choice = None
        for mon in current:
            for lhs, rhs in rules:
                if _divides(lhs, mon):
                    if target is None or c_key(mon) > c_key(target):
                        target = mon
                        choice = (lhs, rhs)
                    break
        if target is None:
            return current
        lhs, rhs = choice
        coeff = current.pop(target)
        cofactor = tuple(a - b for a, b in zip(target, lhs))
        for m2, c2 in rhs.items():
            mon = tuple(a + b for a, b in zip(cofactor, m2))
            total = current.get(mon, Fraction(0)) + coeff * c2
            if total:
                current[mon] = total
            else:
                del current[mon]


def monomials_up_to(nvars: int, max_degree: int) -> list[Monomial]:
    out = []
    for total in range(max_degree + 1):
        for cuts in itertools.combinations(range(total + nvars - 1), nvars - 1):
            prev = -1
            mon = []
            for cut in cuts:
                mon.append(cut - prev - 1)
                prev = cut
            mon.append(total + nvars - 2 - prev)
            out.append(tuple(mon))
    return out


def commutative_overlap_residuals(rules, nvars: int, max_degree: int):
    """Monomials below the bound whose one-step reductions disagree after full reduction."""
    out = []
    for mon in monomials_up_to(nvars, max_degree):
        applicable = [(lhs, rhs) for lhs, rhs in rules if _divides(lhs, mon)]
        if len(applicable) < 2:
            continue
        forms = []
        for lhs, rhs in applicable:
            cofactor = tuple(a - b for a, b in zip(mon, lhs))
            stepped = {
                tuple(a + b for a, b in zip(cofactor, m2)): c2 for m2, c2 in rhs.items()
            }
            forms.append(reduce_commutative(stepped, rules))
        for form in forms[1:]:
            if form != forms[0]:
                out.append((mon, c_sub(form, forms[0])))
    return out


# -- abelianization -----------------------------------------------------------


def _canon(rel: CPoly):
    return tuple(sorted(rel.items(), key=lambda kv: c_key(kv[0]), reverse=True))


@dataclass(frozen=True)
class Summand:
    """Direct summand of an abelianization: the base field or K[vars]/(relations)."""

    variables: tuple[str, ...]
    relations: tuple

    @classmethod
    def field(cls) -> "Summand":
        return cls((), ())

    @classmethod
    def poly(cls, variables, relations) -> "Summand":
        canonical = []
        for rel in relations:
            rel = c_clean(rel)
            if not rel:
                raise DomainError("relation polynomial must be nonzero")
            if any(len(mon) != len(tuple(variables)) for mon in rel):
                raise DomainError("relation arity does not match the variables")
            canonical.append(_canon(rel))
        return cls(tuple(variables), tuple(canonical))

    @property
    def is_field(self) -> bool:
        return not self.variables

    def relation_polys(self) -> list[CPoly]:
        return [dict(rel) for rel in self.relations]

    def __str__(self) -> str:
        if self.is_field:
            return "K"
        ring = f"K[{','.join(self.variables)}]"
        if not self.relations:
            return ring
        rendered = ", ".join(c_str(dict(rel), self.variables) for rel in self.relations)
        return f"{ring}/({rendered})"

    def to_json(self):
        if self.is_field:
            return {"kind": "field"}
        return {
            "kind": "poly",
            "variables": list(self.variables),
            "relations": [c_str(dict(rel), self.variables) for rel in self.relations],
        }


@dataclass(frozen=True)
class AbelianPresentation:
    summands: tuple[Summand, ...]

    def __str__(self) -> str:
        return " (+) ".join(str(s) for s in self.summands)

    def to_json(self):
        return {"summands": [s.to_json() for s in self.summands]}


def abelianization(params: Params) -> AbelianPresentation:
    """Commutative quotient K[d,u] / (commuted defining relations).

    Commuting letters in the two relations leaves (1-alpha-beta)d^2u - gamma*d
    and (1-alpha-beta)du^2 - gamma*u.  When beta = 0, gamma != 0 and alpha != 1
    the quotient splits off a field summand against K[d,u]/((1-alpha)du - gamma).
    """
    a, b, g = params.alpha, params.beta, params.gamma
    s = 1 - a - b
    variables = ("d", "u")
    if b == 0 and g != 0 and a != 1:
        factor = {(1, 1): 1 - a, (0, 0): -g}
        return AbelianPresentation(
            (Summand.field(), Summand.poly(variables, [factor]))
        )
    if s == 0:
        if g == 0:
            return AbelianPresentation((Summand.poly(variables, []),))
        return AbelianPresentation((Summand.field(),))
    relations = [{(2, 1): s, (1, 0): -g}, {(1, 2): s, (0, 1): -g}]
    return AbelianPresentation((Summand.poly(variables, relations),))


def abelian_invariants(pres: AbelianPresentation) -> dict:
    """Case flags read off the presentation: connectivity and the unit-group dichotomy."""
    count = len(pres.summands)
    units_fd = all(
        s.is_field or all(len(rel) == 1 for rel in s.relations) for s in pres.summands
    )
    return {
        "connected": count == 1,
        "units_finite_dimensional": units_fd,
        "summand_count": count,
    }


def presentation_kills(pres: AbelianPresentation, p: CPoly) -> bool:
    """Whether the commutative polynomial maps to zero in every summand."""
    p = c_clean(p)
    for summand in pres.summands:
        if summand.is_field:
            # the field summand is evaluation at the origin
            if p:
                arity = len(next(iter(p)))
                if p.get((0,) * arity, Fraction(0)):
                    return False
            continue
        rules = orient_relations(summand.relation_polys())
        if reduce_commutative(p, rules):
            return False
    return True


def summand_filtered_dim(summand: Summand, n: int) -> int:
    """Dimension of the image of polynomials of total degree <= n."""
    if n < 0:
        raise DomainError("degree bound must be nonnegative")
    if summand.is_field:
        return 1
    rules = orient_relations(summand.relation_polys())
    count = 0
    for mon in monomials_up_to(len(summand.variables), n):
        if not any(_divides(lhs, mon) for lhs, _ in rules):
            count += 1
    return count


def summand_graded_dim(summand: Summand, n: int) -> int:
    """Dimension of the degree-n piece; relations must be homogeneous."""
    if n < 0:
        raise DomainError("degree must be nonnegative")
    if summand.is_field:
        return 1 if n == 0 else 0
    for rel in summand.relation_polys():
        degrees = {sum(mon) for mon in rel}
        if len(degrees) > 1:
            raise DomainError("graded dimensions need homogeneous relations")
    rules = orient_relations(summand.relation_polys())
    count = 0
    for mon in monomials_up_to(len(summand.variables), n):
        if sum(mon) == n and not any(_divides(lhs, mon) for lhs, _ in rules):
            count += 1
    return count


def presentation_filtered_dim(pres: AbelianPresentation, n: int) -> int:
    """Sum of the summand filtrations.

    For split presentations this equals the filtration of the underlying
    quotient ring only once n reaches the degree of the splitting idempotent
    (degree 2 for the shipped split); below that the summand images overlap.
    """
    return sum(summand_filtered_dim(s, n) for s in pres.summands)


def span_filtered_dim(relations, nvars: int, n: int, slack: int) -> int:
    """Brute-force filtered dimension of K[vars]/(relations) by a span computation.

    Builds the span of all products monomial*relation of total degree at most
    n + slack, intersects it with the polynomials of degree at most n via
    dim(V & W) = dim V + dim W - dim(V + W), and subtracts from the monomial
    count.  Exact for slack large enough; callers should confirm stability
    across two slack values.
    """
    if n < 0 or slack < 0:
        raise DomainError("degree and slack must be nonnegative")
    relations = [c_clean(r) for r in relations]
    if any(not r for r in relations):
        raise DomainError("zero relation")
    ambient = monomials_up_to(nvars, n + slack)
    column = {mon: pos for pos, mon in enumerate(ambient)}
    small = [mon for mon in ambient if sum(mon) <= n]

    def vector(p: CPoly):
        row = [Fraction(0)] * len(ambient)
        for mon, coeff in p.items():
            row[column[mon]] = coeff
        return row

    products = []
    for rel in relations:
        rel_degree = max(sum(mon) for mon in rel)
        for mon in monomials_up_to(nvars, max(n + slack - rel_degree, 0)):
            shifted = {
                tuple(a + b for a, b in zip(mon, m2)): c2 for m2, c2 in rel.items()
            }
            if max(sum(m) for m in shifted) <= n + slack:
                products.append(vector(shifted))
    low = [vector({mon: Fraction(1)}) for mon in small]
    dim_ideal = rank(products)
    dim_low = len(small)
    dim_sum = rank(products + low)
    dim_intersection = dim_ideal + dim_low - dim_sum
    return dim_low - dim_intersection
