# SPDX-License-Identifier: MIT
# Copyright (c) 2025 Pablo Ulloa Santin
from __future__ import annotations

from pydantic import BaseModel, ConfigDict, model_validator
from pydantic_core import PydanticCustomError


class _Relation(BaseModel):
    model_config = ConfigDict(extra="forbid", frozen=True)

    domain: frozenset[str]
    pairs: frozenset[tuple[str, str]]

    def __contains__(self, pair: object) -> bool:
        return pair in self.pairs

    def related(self, a: str, b: str) -> bool:
        return (a, b) in self.pairs

    def _check_symmetric(self) -> None:
        for a, b in self.pairs:
            if (b, a) not in self.pairs:
                raise PydanticCustomError(
                    "relation_symmetric",
                    "pair ({a},{b}) has no mirror ({b},{a})",
                    {"a": a, "b": b},
                )


class DependencyRelation(_Relation):
    """Finite, reflexive and symmetric relation over its letters.

    ``domain`` is exactly the set of letters the pairs mention.
    """

    @model_validator(mode="after")
    def _check_dependency(self) -> DependencyRelation:
        letters = {letter for pair in self.pairs for letter in pair}
        if letters != set(self.domain):
            raise PydanticCustomError(
                "relation_domain", "domain must equal the letters used by the pairs"
            )
        for letter in self.domain:
            if (letter, letter) not in self.pairs:
                raise PydanticCustomError(
                    "relation_reflexive",
                    "letter {letter} is not related to itself",
                    {"letter": letter},
                )
        self._check_symmetric()
        return self


class IndependencyRelation(_Relation):
    """Symmetric, irreflexive relation of letters that may swap when adjacent."""

    @model_validator(mode="after")
    def _check_independency(self) -> IndependencyRelation:
        for a, b in self.pairs:
            if a == b:
                raise PydanticCustomError(
                    "relation_irreflexive",
                    "letter {letter} cannot be independent of itself",
                    {"letter": a},
                )
            if a not in self.domain or b not in self.domain:
                raise PydanticCustomError(
                    "relation_domain",
                    "pair ({a},{b}) leaves the domain",
                    {"a": a, "b": b},
                )
        self._check_symmetric()
        return self


class TraceClass(BaseModel):
    """Equivalence class of a word under swaps of adjacent independent letters.

    Attributes:
        members:        Every word of the class, sorted.
        representative: Lexicographically least member.
    """

    model_config = ConfigDict(extra="forbid", frozen=True)

    members: tuple[str, ...]
    representative: str

    @model_validator(mode="after")
    def _check_members(self) -> TraceClass:
        if not self.members or self.representative != min(self.members):
            raise PydanticCustomError(
                "trace_representative",
                "representative must be the least member of a non-empty class",
            )
        if len({"".join(sorted(word)) for word in self.members}) != 1:
            raise PydanticCustomError(
                "trace_multiset", "members must permute the same letters"
            )
        return self

    def __len__(self) -> int:
        return len(self.members)

    def __contains__(self, word: object) -> bool:
        return word in self.members
