# SPDX-License-Identifier: MIT
# Copyright (c) 2025 Pablo Ulloa Santin
"""Dependency relations and trace equivalence over finite alphabets."""

from __future__ import annotations

from collections import deque
from collections.abc import Callable, Hashable, Iterable, Sequence
from itertools import combinations_with_replacement

from commutechart.core.domain import (
    DependencyRelation,
    IndependencyRelation,
    TraceClass,
)
from commutechart.core.exceptions import (
    LetterDomainError,
    RelationValidationError,
    TraceSizeError,
)

DEFAULT_MAX_LENGTH = 12


def symmetric_closure(pairs: Iterable[tuple[str, str]]) -> frozenset[tuple[str, str]]:
    """Return ``pairs`` together with every mirrored pair."""
    closed: set[tuple[str, str]] = set()
    for a, b in pairs:
        closed.add((a, b))
        closed.add((b, a))
    return frozenset(closed)


def validate_dependency(pairs: Iterable[tuple[str, str]]) -> DependencyRelation:
    """Build a dependency relation from its pairs.

    The domain is the set of letters the pairs mention.

    Raises:
        RelationValidationError: Listing every pair missing for reflexivity
            or symmetry.
    """
    given = frozenset(pairs)
    domain = frozenset(letter for pair in given for letter in pair)
    missing = {(a, a) for a in domain if (a, a) not in given}
    missing |= {(b, a) for a, b in given if (b, a) not in given}
    if missing:
        raise RelationValidationError(missing)
    return DependencyRelation(domain=domain, pairs=given)


def derive_independency(dependency: DependencyRelation) -> IndependencyRelation:
    pairs = frozenset(
        (a, b)
        for a in dependency.domain
        for b in dependency.domain
        if (a, b) not in dependency.pairs
    )
    return IndependencyRelation(domain=dependency.domain, pairs=pairs)


def _check_letters(word: str, relation: IndependencyRelation) -> None:
    unknown = set(word) - relation.domain
    if unknown:
        raise LetterDomainError(word, unknown)


def swap_closure[T: Hashable](
    word: Sequence[T],
    independent: Callable[[T, T], bool],
) -> set[tuple[T, ...]]:
    """Breadth-first closure of ``word`` under swaps of adjacent independent letters.

    Letters can be any hashable objects; the explorer lifts this to whole
    execution steps.
    """
    start = tuple(word)
    seen = {start}
    frontier = deque([start])
    while frontier:
        current = frontier.popleft()
        for i in range(len(current) - 1):
            a, b = current[i], current[i + 1]
            if a == b or not independent(a, b):
                continue
            swapped = (*current[:i], b, a, *current[i + 2 :])
            if swapped not in seen:
                seen.add(swapped)
                frontier.append(swapped)
    return seen


def are_equivalent(u: str, v: str, relation: IndependencyRelation) -> bool:
    """Decide whether ``u`` and ``v`` belong to the same trace.

    Two words are equivalent iff their projections onto every pair of
    dependent letters coincide, which avoids enumerating the class.
    """
    _check_letters(u, relation)
    _check_letters(v, relation)
    if sorted(u) != sorted(v):
        return False
    letters = sorted(set(u))
    for a, b in combinations_with_replacement(letters, 2):
        if a != b and relation.related(a, b):
            continue
        keep = {a, b}
        if [c for c in u if c in keep] != [c for c in v if c in keep]:
            return False
    return True


def enumerate_trace_class(
    word: str,
    relation: IndependencyRelation,
    *,
    max_length: int = DEFAULT_MAX_LENGTH,
) -> TraceClass:
    """Enumerate every word equivalent to ``word``.

    Raises:
        LetterDomainError: If ``word`` uses letters outside the domain.
        TraceSizeError: If ``word`` is longer than ``max_length``.
    """
    _check_letters(word, relation)
    if len(word) > max_length:
        raise TraceSizeError(word, max_length)
    words = swap_closure(tuple(word), relation.related)
    members = tuple(sorted("".join(letters) for letters in words))
    return TraceClass(members=members, representative=members[0])
