"""Noncommutative polynomials over a declared finite alphabet.

A word is a tuple of letters, a polynomial is a sparse table word -> Fraction
with no zero entries.  Words are ordered degree-lexicographically: longer
words are larger, ties are broken letter by letter using the precedence
declared at alphabet creation (first letter listed is the largest).  All
arithmetic is exact; values are immutable once built.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping, Union

from .errors import DomainError, ParseError, UnknownLetterError

Word = tuple[str, ...]
Scalarlike = Union[int, str, Fraction]

OMEGA = "ω"


def as_scalar(value: Scalarlike) -> Fraction:
    """Coerce an int, Fraction, or string like '-5/3' to an exact rational."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise DomainError(f"not a rational literal: {value!r}") from exc
    raise DomainError(f"cannot interpret {value!r} as an exact scalar")


class Alphabet:
    """Finite letter set with a total precedence (letters listed largest first)."""

    def __init__(self, letters: Iterable[str]):
        self.letters = tuple(letters)
        if len(set(self.letters)) != len(self.letters):
            raise DomainError(f"duplicate letters in alphabet {self.letters}")
        for letter in self.letters:
            if not letter or any(ch.isspace() for ch in letter):
                raise DomainError(f"bad letter {letter!r}")
        # higher rank = higher precedence = larger in the term order
        self._rank = {c: len(self.letters) - 1 - i for i, c in enumerate(self.letters)}

    def __contains__(self, letter: str) -> bool:
        return letter in self._rank

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Alphabet) and self.letters == other.letters

    def __hash__(self) -> int:
        return hash(self.letters)

    def __repr__(self) -> str:
        return f"Alphabet({','.join(self.letters)})"

    def word_key(self, word: Word):
        """Sort key: larger key = larger word in the deglex order."""
        return (len(word), tuple(self._rank[c] for c in word))

    def check_word(self, word: Word) -> None:
        for letter in word:
            if letter not in self._rank:
                raise DomainError(f"letter {letter!r} not in alphabet {self.letters}")


DU = Alphabet(("d", "u"))
DWU = Alphabet(("d", OMEGA, "u"))
YX = Alphabet(("y", "x"))


class NcPoly:
    """Sparse linear combination of words with exact rational coefficients."""

    __slots__ = ("alphabet", "terms")

    def __init__(self, alphabet: Alphabet, terms: Mapping[Word, Scalarlike] = ()):
        table: dict[Word, Fraction] = {}
        for word, coeff in dict(terms).items():
            word = tuple(word)
            alphabet.check_word(word)
            c = as_scalar(coeff)
            if c:
                table[word] = c
        self.alphabet = alphabet
        self.terms = table

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, alphabet: Alphabet) -> "NcPoly":
        return cls(alphabet)

    @classmethod
    def one(cls, alphabet: Alphabet) -> "NcPoly":
        return cls(alphabet, {(): 1})

    @classmethod
    def letter(cls, alphabet: Alphabet, name: str) -> "NcPoly":
        return cls(alphabet, {(name,): 1})

    @classmethod
    def monomial(cls, alphabet: Alphabet, word: Word, coeff: Scalarlike = 1) -> "NcPoly":
        return cls(alphabet, {tuple(word): coeff})

    # -- ring structure ----------------------------------------------------

    def _require_same_alphabet(self, other: "NcPoly") -> None:
        if self.alphabet != other.alphabet:
            raise DomainError(
                f"alphabet mismatch: {self.alphabet!r} vs {other.alphabet!r}"
            )

    def __add__(self, other: "NcPoly") -> "NcPoly":
        if not isinstance(other, NcPoly):
            return NotImplemented
        self._require_same_alphabet(other)
        table = dict(self.terms)
        for word, coeff in other.terms.items():
            table[word] = table.get(word, Fraction(0)) + coeff
        return NcPoly(self.alphabet, table)

    def __sub__(self, other: "NcPoly") -> "NcPoly":
        if not isinstance(other, NcPoly):
            return NotImplemented
        return self + (-other)

    def __neg__(self) -> "NcPoly":
        return NcPoly(self.alphabet, {w: -c for w, c in self.terms.items()})

    def __mul__(self, other: Union["NcPoly", Scalarlike]) -> "NcPoly":
        if not isinstance(other, NcPoly):
            return self.scaled(other)
        self._require_same_alphabet(other)
        table: dict[Word, Fraction] = {}
        for w1, c1 in self.terms.items():
            for w2, c2 in other.terms.items():
                word = w1 + w2
                table[word] = table.get(word, Fraction(0)) + c1 * c2
        return NcPoly(self.alphabet, table)

    def __rmul__(self, other: Scalarlike) -> "NcPoly":
        return self.scaled(other)

    def __pow__(self, n: int) -> "NcPoly":
        if not isinstance(n, int) or n < 0:
            raise DomainError(f"exponent must be a nonnegative integer, got {n!r}")
        out = NcPoly.one(self.alphabet)
        for _ in range(n):
            out = out * self
        return out

    def scaled(self, coeff: Scalarlike) -> "NcPoly":
        c = as_scalar(coeff)
        return NcPoly(self.alphabet, {w: c * v for w, v in self.terms.items()})

    # -- structure ---------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, NcPoly)
            and self.alphabet == other.alphabet
            and self.terms == other.terms
        )

    def __bool__(self) -> bool:
        return bool(self.terms)

    def degree(self) -> int:
        """Largest word length; -1 for the zero polynomial."""
        return max((len(w) for w in self.terms), default=-1)

    def sorted_terms(self) -> list[tuple[Word, Fraction]]:
        """Terms in descending deglex order (deterministic printing order)."""
        return sorted(
            self.terms.items(), key=lambda kv: self.alphabet.word_key(kv[0]), reverse=True
        )

    # -- printing ----------------------------------------------------------

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        chunks: list[str] = []
        for word, coeff in self.sorted_terms():
            body = format_word(word)
            mag = abs(coeff)
            if not word:
                text = str(mag)
            elif mag == 1:
                text = body
            else:
                text = f"{mag}*{body}"
            if not chunks:
                chunks.append(text if coeff > 0 else f"-{text}")
            else:
                chunks.append(f"+ {text}" if coeff > 0 else f"- {text}")
        return " ".join(chunks)

    def __repr__(self) -> str:
        return f"NcPoly({self})"


def format_word(word: Word) -> str:
    """Render a word with `*` separators, folding runs into powers."""
    if not word:
        return "1"
    parts: list[str] = []
    i = 0
    while i < len(word):
        j = i
        while j < len(word) and word[j] == word[i]:
            j += 1
        parts.append(word[i] if j - i == 1 else f"{word[i]}^{j - i}")
        i = j
    return "*".join(parts)


# -- functional aliases for the operator forms ------------------------------


def add(p: NcPoly, q: NcPoly) -> NcPoly:
    return p + q


def mul(p: NcPoly, q: NcPoly) -> NcPoly:
    return p * q


def scale(c: Scalarlike, p: NcPoly) -> NcPoly:
    return p.scaled(c)


# -- parsing -----------------------------------------------------------------
#
# expr   := ['+'|'-'] term (('+'|'-') term)*
# term   := factor factor*            (adjacency means multiplication)
# factor := primary ('^' INTEGER)*
# primary:= RATIONAL | LETTER | '(' expr ')'
#
# RATIONAL is `a` or `a/b` with nonnegative integer digits; minus signs come
# from the unary/binary '-' of the grammar.  Identifiers are the declared
# letters; the spelled-out name "omega" is an alias whenever the omega letter
# is declared.


class _Token:
    __slots__ = ("kind", "value", "pos")

    def __init__(self, kind: str, value, pos: int):
        self.kind = kind  # one of: num, letter, op, end
        self.value = value
        self.pos = pos


def _tokenize(text: str, alphabet: Alphabet) -> list[_Token]:
    names = sorted(alphabet.letters, key=len, reverse=True)
    aliases = {"omega": OMEGA} if OMEGA in alphabet else {}
    tokens: list[_Token] = []
    i, n = 0, len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            num = int(text[i:j])
            if j < n and text[j] == "/":
                k = j + 1
                m = k
                while m < n and text[m].isdigit():
                    m += 1
                if m == k:
                    raise ParseError("missing denominator", j)
                den = int(text[k:m])
                if den == 0:
                    raise ParseError("zero denominator", k)
                tokens.append(_Token("num", Fraction(num, den), i))
                i = m
            else:
                tokens.append(_Token("num", Fraction(num), i))
                i = j
            continue
        if ch in "+-*^()":
            tokens.append(_Token("op", ch, i))
            i += 1
            continue
        matched = False
        for alias, letter in aliases.items():
            if text.startswith(alias, i):
                tokens.append(_Token("letter", letter, i))
                i += len(alias)
                matched = True
                break
        if matched:
            continue
        for name in names:
            if text.startswith(name, i):
                tokens.append(_Token("letter", name, i))
                i += len(name)
                matched = True
                break
        if matched:
            continue
        if ch.isalpha():
            raise UnknownLetterError(
                f"letter {ch!r} not in alphabet {alphabet.letters}", i
            )
        raise ParseError(f"unexpected character {ch!r}", i)
    tokens.append(_Token("end", None, n))
    return tokens


class _Parser:
    def __init__(self, tokens: list[_Token], alphabet: Alphabet):
        self.tokens = tokens
        self.alphabet = alphabet
        self.i = 0

    def peek(self) -> _Token:
        return self.tokens[self.i]

    def next(self) -> _Token:
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def parse_expr(self) -> NcPoly:
        sign = 1
        tok = self.peek()
        if tok.kind == "op" and tok.value in "+-":
            self.next()
            sign = -1 if tok.value == "-" else 1
        out = self.parse_term().scaled(sign)
        while True:
            tok = self.peek()
            if tok.kind == "op" and tok.value in "+-":
                self.next()
                nxt = self.parse_term()
                out = out + (nxt if tok.value == "+" else -nxt)
            else:
                return out

    def parse_term(self) -> NcPoly:
        out = self.parse_factor()
        while True:
            tok = self.peek()
            if tok.kind == "op" and tok.value == "*":
                self.next()
                out = out * self.parse_factor()
            elif tok.kind in ("num", "letter") or (tok.kind == "op" and tok.value == "("):
                out = out * self.parse_factor()
            else:
                return out

    def parse_factor(self) -> NcPoly:
        out = self.parse_primary()
        while True:
            tok = self.peek()
            if tok.kind == "op" and tok.value == "^":
                self.next()
                exp = self.next()
                if exp.kind != "num" or exp.value.denominator != 1 or exp.value < 0:
                    raise ParseError("exponent must be a nonnegative integer", exp.pos)
                out = out ** int(exp.value)
            else:
                return out

    def parse_primary(self) -> NcPoly:
        tok = self.next()
        if tok.kind == "num":
            return NcPoly(self.alphabet, {(): tok.value})
        if tok.kind == "letter":
            return NcPoly.letter(self.alphabet, tok.value)
        if tok.kind == "op" and tok.value == "(":
            inner = self.parse_expr()
            closing = self.next()
            if closing.kind != "op" or closing.value != ")":
                raise ParseError("expected ')'", closing.pos)
            return inner
        raise ParseError(f"expected a value, found {tok.value!r}", tok.pos)


def parse(text: str, alphabet: Alphabet) -> NcPoly:
    """Parse expression text over the given alphabet into canonical form."""
    parser = _Parser(_tokenize(text, alphabet), alphabet)
    poly = parser.parse_expr()
    trailing = parser.peek()
    if trailing.kind != "end":
        raise ParseError(f"unexpected trailing input {trailing.value!r}", trailing.pos)
    return poly
