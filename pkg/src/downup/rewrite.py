"""Oriented string rewriting over a fixed deglex order.

Rules replace a word by a strictly smaller polynomial, so reduction always
terminates.  The deterministic strategy rewrites the leftmost occurrence of
the largest matching left-hand side inside the largest reducible word; a
randomized strategy is provided as a confluence diagnostic only.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional

from .errors import DomainError
from .expr import Alphabet, NcPoly, Word, format_word


@dataclass(frozen=True)
class RewriteRule:
    lhs: Word
    rhs: NcPoly

    def __str__(self) -> str:
        return f"{format_word(self.lhs)} -> {self.rhs}"


class RuleSet:
    """Finite set of order-compatible rules over one alphabet."""

    def __init__(self, alphabet: Alphabet, rules: Iterable[RewriteRule]):
        self.alphabet = alphabet
        self.rules = tuple(rules)
        seen: set[Word] = set()
        for rule in self.rules:
            lhs = tuple(rule.lhs)
            if not lhs:
                raise DomainError("rule lhs must be a nonempty word")
            alphabet.check_word(lhs)
            if rule.rhs.alphabet != alphabet:
                raise DomainError("rule rhs over a different alphabet")
            if lhs in seen:
                raise DomainError(f"two rules share the lhs {format_word(lhs)}")
            seen.add(lhs)
            lhs_key = alphabet.word_key(lhs)
            for word in rule.rhs.terms:
                if alphabet.word_key(word) >= lhs_key:
                    raise DomainError(
                        f"rhs word {format_word(word)} not smaller than lhs "
                        f"{format_word(lhs)}"
                    )
        # largest lhs first: the tie-break for matches at the same position
        self._rules_desc = sorted(
            self.rules, key=lambda r: alphabet.word_key(r.lhs), reverse=True
        )

    def _neg_key(self, word: Word):
        length, ranks = self.alphabet.word_key(word)
        return (-length, tuple(-r for r in ranks))

    def find_redex(self, word: Word) -> Optional[tuple[int, RewriteRule]]:
        """Leftmost position with a match; largest lhs wins at that position."""
        for pos in range(len(word)):
            for rule in self._rules_desc:
                k = len(rule.lhs)
                if word[pos : pos + k] == rule.lhs:
                    return pos, rule
        return None

    def all_redexes(self, word: Word) -> list[tuple[int, RewriteRule]]:
        out = []
        for pos in range(len(word)):
            for rule in self._rules_desc:
                k = len(rule.lhs)
                if word[pos : pos + k] == rule.lhs:
                    out.append((pos, rule))
        return out


def _rewrite_at(word: Word, pos: int, rule: RewriteRule) -> NcPoly:
    prefix, suffix = word[:pos], word[pos + len(rule.lhs) :]
    return NcPoly(
        rule.rhs.alphabet,
        {prefix + w + suffix: c for w, c in rule.rhs.terms.items()},
    )


def reduce(p: NcPoly, rs: RuleSet) -> NcPoly:
    """Normal form of p modulo the two-sided ideal generated by lhs - rhs."""
    if p.alphabet != rs.alphabet:
        raise DomainError("polynomial alphabet differs from rule-set alphabet")
    result: dict[Word, Fraction] = {}
    work: dict[Word, Fraction] = dict(p.terms)
    heap = [(rs._neg_key(w), w) for w in work]
    heapq.heapify(heap)
    while heap:
        _, word = heapq.heappop(heap)
        coeff = work.pop(word, None)
        if coeff is None:
            continue  # stale heap entry
        redex = rs.find_redex(word)
        if redex is None:
            result[word] = result.get(word, Fraction(0)) + coeff
            continue
        pos, rule = redex
        replaced = _rewrite_at(word, pos, rule)
        for w2, c2 in replaced.terms.items():
            prev = work.get(w2)
            if prev is None:
                work[w2] = coeff * c2
                heapq.heappush(heap, (rs._neg_key(w2), w2))
            else:
                total = prev + coeff * c2
                if total:
                    work[w2] = total
                else:
                    del work[w2]
    return NcPoly(rs.alphabet, result)


def reduce_random(p: NcPoly, rs: RuleSet, rng) -> NcPoly:
    """Normal form via uniformly random redex choices (diagnostic only)."""
    if p.alphabet != rs.alphabet:
        raise DomainError("polynomial alphabet differs from rule-set alphabet")
    current = p
    while True:
        choices = []
        for word in current.terms:
            for pos, rule in rs.all_redexes(word):
                choices.append((word, pos, rule))
        if not choices:
            return current
        word, pos, rule = rng.choice(choices)
        coeff = current.terms[word]
        step = NcPoly(rs.alphabet, {word: coeff})
        current = current - step + _rewrite_at(word, pos, rule).scaled(coeff)


def critical_pairs(rs: RuleSet, max_degree: int) -> list[tuple[Word, NcPoly]]:
    """All overlap ambiguities up to the degree bound with their residuals.

    Each entry is (overlap word, fully reduced difference of the two one-step
    rewrites).  All residuals being zero certifies local confluence below the
    bound.
    """
    longest = max(len(rule.lhs) for rule in rs.rules)
    if max_degree < longest:
        raise DomainError(f"max_degree {max_degree} below longest lhs {longest}")
    out: list[tuple[Word, NcPoly]] = []

    def record(word: Word, left: NcPoly, right: NcPoly) -> None:
        if len(word) <= max_degree:
            out.append((word, reduce(left - right, rs)))

    rules = list(rs.rules)
    for i, r1 in enumerate(rules):
        for j in range(i, len(rules)):
            r2 = rules[j]
            l1, l2 = tuple(r1.lhs), tuple(r2.lhs)
            for k in range(1, min(len(l1), len(l2))):
                # suffix of l1 meets prefix of l2: word = l1 . l2[k:]
                if l1[len(l1) - k :] == l2[:k]:
                    word = l1 + l2[k:]
                    record(word, _rewrite_at(word, 0, r1), _rewrite_at(word, len(l1) - k, r2))
                # and symmetrically unless the pair is a single rule
                if i != j and l2[len(l2) - k :] == l1[:k]:
                    word = l2 + l1[k:]
                    record(word, _rewrite_at(word, 0, r2), _rewrite_at(word, len(l2) - k, r1))
            if i != j:
                # one lhs strictly inside the other
                if len(l2) < len(l1):
                    inner, outer, rin, rout = l2, l1, r2, r1
                else:
                    inner, outer, rin, rout = l1, l2, r1, r2
                for pos in range(len(outer) - len(inner) + 1):
                    if outer[pos : pos + len(inner)] == inner:
                        record(outer, _rewrite_at(outer, 0, rout), _rewrite_at(outer, pos, rin))
    return out
