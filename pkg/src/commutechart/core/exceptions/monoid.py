# SPDX-License-Identifier: MIT
# Copyright (c) 2025 Pablo Ulloa Santin
from __future__ import annotations

from collections.abc import Iterable

from ._base import InvalidValueError


class RelationValidationError(InvalidValueError):
    """A dependency relation is not closed under reflexivity and symmetry.

    Args:
        missing: Every pair that must be added for the relation to become
            reflexive and symmetric, sorted.
    """

    def __init__(self, missing: Iterable[tuple[str, str]]) -> None:
        pairs = sorted(missing)
        listing = ", ".join(f"({a},{b})" for a, b in pairs)
        super().__init__(
            param="pairs",
            value=pairs,
            message=f"Dependency relation is missing pairs: {listing}.",
            context={"missing": pairs},
        )
        self.missing: list[tuple[str, str]] = pairs


class LetterDomainError(InvalidValueError):
    """A word uses letters the relation's domain does not define."""

    def __init__(self, word: str, letters: Iterable[str]) -> None:
        unknown = sorted(set(letters))
        super().__init__(
            param="word",
            value=word,
            message=f"Word {word!r} uses letters outside the domain: {', '.join(unknown)}.",
            context={"unknown": unknown},
        )


class TraceSizeError(InvalidValueError):
    """The word is too long for its trace class to be enumerated."""

    def __init__(self, word: str, limit: int) -> None:
        super().__init__(
            param="word",
            value=word,
            message=(
                f"Word of length {len(word)} exceeds the enumeration guard of "
                f"{limit} letters."
            ),
            context={"length": len(word), "limit": limit},
        )
