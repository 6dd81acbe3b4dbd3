"""Bimodule resolution of a down-up algebra and Tor of one-dimensional modules.

The algebra A = A(alpha, beta, gamma) has a length-3 resolution by free
bimodules A (x) W (x) A with W running through the spans of {d, u} (stage 1),
{d^2u, du^2} (stage 2) and {d^2u^2} (stage 3).  Applying the functor
T1 (x)_A (-) (x)_A T2 for one-dimensional modules T_i = (delta_i, mu_i)
collapses the resolution to a complex 0 -> K -> K^2 -> K^2 -> K -> 0 whose
homology dimensions form the Tor profile.

Convention: in the collapsed complex the left tensor legs are evaluated with
T2's scalars and the right legs with T1's.  This is the assignment under
which the collapsed first differential is (delta2 - delta1, mu2 - mu1) and
the collapsed second differential has the closed form implemented below; the
third is then forced to (-mu1 - beta*mu2, delta2 + beta*delta1) in the basis
(d^2u, du^2) by the chain-complex identities.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from .algebra import Params, pbw_normal_form
from .errors import DomainError
from .expr import DU, NcPoly, Word, as_scalar
from .linalg import rank

STAGE_TAGS = {
    0: ("",),
    1: ("d", "u"),
    2: ("d2u", "du2"),
    3: ("d2u2",),
}

_TAG_NAMES = {"": "1", "d": "d", "u": "u", "d2u": "d^2*u", "du2": "d*u^2", "d2u2": "d^2*u^2"}


@dataclass(frozen=True)
class OneDimModule:
    """Module K on which d acts by delta and u acts by mu."""

    delta: Fraction
    mu: Fraction

    def __post_init__(self) -> None:
        object.__setattr__(self, "delta", as_scalar(self.delta))
        object.__setattr__(self, "mu", as_scalar(self.mu))

    @classmethod
    def parse(cls, text: str) -> "OneDimModule":
        parts = [piece.strip() for piece in text.split(",")]
        if len(parts) != 2:
            raise DomainError(f"expected two comma-separated rationals, got {text!r}")
        try:
            return cls(Fraction(parts[0]), Fraction(parts[1]))
        except (ValueError, ZeroDivisionError):
            raise DomainError(f"bad rational in module pair {text!r}") from None

    def satisfies(self, params: Params) -> bool:
        """Both defining relations act by zero on (delta, mu)."""
        s = 1 - params.alpha - params.beta
        slack = s * self.delta * self.mu - params.gamma
        return self.delta * slack == 0 and self.mu * slack == 0

    def __str__(self) -> str:
        return f"({self.delta}, {self.mu})"


class BimoduleElement:
    """Weighted sum of left (x) basis-tag (x) right triples at one stage.

    Left and right components are kept expanded over the PBW basis words, so
    equality of elements is equality of normalized coordinates.
    """

    __slots__ = ("stage", "terms")

    def __init__(self, stage: int, terms=None):
        if stage not in STAGE_TAGS:
            raise DomainError(f"stage must be 0..3, got {stage}")
        clean: dict[tuple[Word, str, Word], Fraction] = {}
        for (left, tag, right), value in (terms or {}).items():
            if tag not in STAGE_TAGS[stage]:
                raise DomainError(f"tag {tag!r} does not belong to stage {stage}")
            coeff = as_scalar(value)
            if coeff:
                key = (tuple(left), tag, tuple(right))
                clean[key] = clean.get(key, Fraction(0)) + coeff
                if not clean[key]:
                    del clean[key]
        self.stage = stage
        self.terms = clean

    @classmethod
    def build(cls, stage: int, parts, params: Params) -> "BimoduleElement":
        """Assemble from (coeff, left NcPoly, tag, right NcPoly) with normalization."""
        terms: dict[tuple[Word, str, Word], Fraction] = {}
        for coeff, left, tag, right in parts:
            coeff = as_scalar(coeff)
            if not coeff:
                continue
            left_nf = pbw_normal_form(left, params)
            right_nf = pbw_normal_form(right, params)
            for lkey, lc in left_nf.terms.items():
                lword = _pbw_word(lkey)
                for rkey, rc in right_nf.terms.items():
                    key = (lword, tag, _pbw_word(rkey))
                    total = terms.get(key, Fraction(0)) + coeff * lc * rc
                    if total:
                        terms[key] = total
                    else:
                        del terms[key]
        return cls(stage, terms)

    @classmethod
    def generator(cls, stage: int, tag: str) -> "BimoduleElement":
        return cls(stage, {((), tag, ()): Fraction(1)})

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, BimoduleElement)
            and self.stage == other.stage
            and self.terms == other.terms
        )

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        from .expr import format_word

        rendered = []
        for (left, tag, right), coeff in sorted(
            self.terms.items(), key=lambda kv: (DU.word_key(kv[0][0]), kv[0][1], DU.word_key(kv[0][2]))
        ):
            lstr = format_word(left) if left else "1"
            rstr = format_word(right) if right else "1"
            rendered.append(f"{coeff}*{lstr}(x){_TAG_NAMES[tag]}(x){rstr}")
        return " + ".join(rendered)

    def __repr__(self) -> str:
        return f"BimoduleElement({self.stage}, {self.terms!r})"


def _pbw_word(key: tuple[int, int, int]) -> Word:
    i, j, k = key
    return ("u",) * i + ("d", "u") * j + ("d",) * k


def _require_stage(x: BimoduleElement, stage: int) -> None:
    if x.stage != stage:
        raise DomainError(f"expected a stage-{stage} element, got stage {x.stage}")


def _shifted_parts(x: BimoduleElement, generator_parts) -> list:
    """Bilinear extension: l (x) m (x) r maps through the generator image of m."""
    parts = []
    for (lword, tag, rword), coeff in x.terms.items():
        left = NcPoly.monomial(DU, lword)
        right = NcPoly.monomial(DU, rword)
        for pc, pleft, ptag, pright in generator_parts(tag):
            parts.append(
                (
                    coeff * pc,
                    left * NcPoly.monomial(DU, pleft),
                    ptag,
                    NcPoly.monomial(DU, pright) * right,
                )
            )
    return parts


def apply_d1(x: BimoduleElement, params: Params) -> BimoduleElement:
    """First differential: 1 (x) v (x) 1 maps to v (x) 1 - 1 (x) v."""
    _require_stage(x, 1)

    def gen(tag: str):
        return [(1, (tag,), "", ()), (-1, (), "", (tag,))]

    return BimoduleElement.build(0, _shifted_parts(x, gen), params)


def apply_d2(x: BimoduleElement, params: Params) -> BimoduleElement:
    """Second differential, one summand per letter of each defining relation."""
    _require_stage(x, 2)
    a, b, g = params.alpha, params.beta, params.gamma

    def gen(tag: str):
        if tag == "d2u":
            return [
                (1, (), "d", ("d", "u")),
                (1, ("d",), "d", ("u",)),
                (1, ("d", "d"), "u", ()),
                (-a, (), "d", ("u", "d")),
                (-a, ("d",), "u", ("d",)),
                (-a, ("d", "u"), "d", ()),
                (-b, (), "u", ("d", "d")),
                (-b, ("u",), "d", ("d",)),
                (-b, ("u", "d"), "d", ()),
                (-g, (), "d", ()),
            ]
        return [
            (1, (), "d", ("u", "u")),
            (1, ("d",), "u", ("u",)),
            (1, ("d", "u"), "u", ()),
            (-a, (), "u", ("d", "u")),
            (-a, ("u",), "d", ("u",)),
            (-a, ("u", "d"), "u", ()),
            (-b, (), "u", ("u", "d")),
            (-b, ("u",), "u", ("d",)),
            (-b, ("u", "u"), "d", ()),
            (-g, (), "u", ()),
        ]

    return BimoduleElement.build(1, _shifted_parts(x, gen), params)


def apply_d3(x: BimoduleElement, params: Params) -> BimoduleElement:
    """Third differential on the rank-one top stage."""
    _require_stage(x, 3)
    b = params.beta

    def gen(tag: str):
        return [
            (1, ("d",), "du2", ()),
            (b, (), "du2", ("d",)),
            (-1, (), "d2u", ("u",)),
            (-b, ("u",), "d2u", ()),
        ]

    return BimoduleElement.build(2, _shifted_parts(x, gen), params)


@dataclass(frozen=True)
class TorProfile:
    """Dimensions of Tor_0..Tor_3 for a pair of one-dimensional modules."""

    dims: tuple[int, int, int, int]

    def __post_init__(self) -> None:
        dims = tuple(int(n) for n in self.dims)
        object.__setattr__(self, "dims", dims)
        if len(dims) != 4 or any(n < 0 for n in dims):
            raise DomainError("profile needs four nonnegative dimensions")
        if dims[0] - dims[1] + dims[2] - dims[3] != 0:
            raise DomainError("profile violates the Euler characteristic")
        if dims[0] not in (0, 1):
            raise DomainError("Tor_0 of one-dimensional modules is 0 or 1")

    def __str__(self) -> str:
        return ",".join(str(n) for n in self.dims)


def _chi(word: Word, module: OneDimModule) -> Fraction:
    value = Fraction(1)
    for letter in word:
        value *= module.delta if letter == "d" else module.mu
    return value


def _functor_vector(y: BimoduleElement, t1: OneDimModule, t2: OneDimModule):
    """Collapse left legs with t2, right legs with t1; coordinates over the stage tags."""
    coords = {tag: Fraction(0) for tag in STAGE_TAGS[y.stage]}
    for (lword, tag, rword), coeff in y.terms.items():
        coords[tag] += coeff * _chi(lword, t2) * _chi(rword, t1)
    return coords


def tor_matrices(t1: OneDimModule, t2: OneDimModule, params: Params):
    """Mechanically collapsed differentials (f0, f1, f2); valid for any beta."""
    f0_cols = []
    for tag in STAGE_TAGS[1]:
        image = apply_d1(BimoduleElement.generator(1, tag), params)
        f0_cols.append(_functor_vector(image, t1, t2)[""])
    f0 = [f0_cols]
    f1 = [[Fraction(0)] * 2 for _ in range(2)]
    for col, tag in enumerate(STAGE_TAGS[2]):
        image = apply_d2(BimoduleElement.generator(2, tag), params)
        coords = _functor_vector(image, t1, t2)
        for row, row_tag in enumerate(STAGE_TAGS[1]):
            f1[row][col] = coords[row_tag]
    image = apply_d3(BimoduleElement.generator(3, "d2u2"), params)
    coords = _functor_vector(image, t1, t2)
    f2 = [[coords[tag]] for tag in STAGE_TAGS[2]]
    return f0, f1, f2


def closed_form_matrices(t1: OneDimModule, t2: OneDimModule, params: Params):
    """The printed collapsed differentials; stated for beta = 0."""
    if params.beta != 0:
        raise DomainError("closed forms require beta = 0")
    a, g = params.alpha, params.gamma
    d1, m1 = t1.delta, t1.mu
    d2, m2 = t2.delta, t2.mu
    f0 = [[d2 - d1, m2 - m1]]
    f1 = [
        [(1 - a) * d1 * m1 + d2 * (m1 - a * m2) - g, m1 * (m1 - a * m2)],
        [d2 * (d2 - a * d1), (1 - a) * d2 * m2 + m1 * (d2 - a * d1) - g],
    ]
    f2 = [[-m1], [d2]]
    return f0, f1, f2


def tor_profile(t1: OneDimModule, t2: OneDimModule, params: Params) -> TorProfile:
    """Homology dimensions of 0 -> K -> K^2 -> K^2 -> K -> 0 by exact ranks."""
    if params.beta != 0:
        raise DomainError("tor_profile requires beta = 0; use tor_matrices otherwise")
    for name, module in (("t1", t1), ("t2", t2)):
        if not module.satisfies(params):
            raise DomainError(f"{name} = {module} is not a valid one-dimensional module")
    f0, f1, f2 = closed_form_matrices(t1, t2, params)
    r0, r1, r2 = rank(f0), rank(f1), rank(f2)
    return TorProfile((1 - r0, 2 - r0 - r1, 2 - r1 - r2, 1 - r2))


def enumerate_one_dim(params: Params, samples: int) -> list[OneDimModule]:
    """Valid modules: the trivial one first, canonical witnesses, then seeded samples."""
    if not isinstance(samples, int) or samples < 1:
        raise DomainError("samples must be a positive integer")
    s = 1 - params.alpha - params.beta
    g = params.gamma
    rng = random.Random(7)

    def small(nonzero=False):
        while True:
            value = Fraction(rng.randint(-20, 20), rng.randint(1, 20))
            if value or not nonzero:
                return value

    found: list[OneDimModule] = [OneDimModule(0, 0)]
    seen = {(Fraction(0), Fraction(0))}

    def push(delta, mu):
        key = (as_scalar(delta), as_scalar(mu))
        if key not in seen:
            seen.add(key)
            found.append(OneDimModule(*key))

    if g == 0 and s != 0:
        push(1, 0)
        push(0, 1)
        while len(found) < samples:
            if rng.random() < Fraction(1, 2):
                push(small(nonzero=True), 0)
            else:
                push(0, small(nonzero=True))
    elif g == 0 and s == 0:
        push(1, 0)
        push(0, 1)
        push(1, 1)
        while len(found) < samples:
            push(small(), small())
    elif s != 0:
        push(1, g / s)
        attempts = 0
        while len(found) < samples and attempts < samples * 40:
            delta = small(nonzero=True)
            push(delta, g / (s * delta))
            attempts += 1
    return found[:samples]


def tor1_bound(params: Params, samples: int) -> int:
    """Largest Tor_1 dimension over all ordered pairs of enumerated modules."""
    if params.beta != 0:
        raise DomainError("tor1_bound requires beta = 0")
    modules = enumerate_one_dim(params, samples)
    best = 0
    for t1 in modules:
        for t2 in modules:
            best = max(best, tor_profile(t1, t2, params).dims[1])
    return best
