"""Words and normal forms in the free product Z2 * Z3.

The modular group PSL(2,Z) is the free product of a cyclic group of order
two, generated by ``a``, and a cyclic group of order three, generated by
``b``.  Group elements are reduced words over the symmetric alphabet
``{a, b, b^-1}``, and a closed geodesic on the quotient surface is a
cyclic-conjugacy class of such words.

A reciprocal word of syllable length ``4t`` is determined by a tuple of
signs ``(e_1, ..., e_t)`` through the template

    a b^{e_1} ... a b^{e_t} a b^{-e_t} ... a b^{-e_1}

This module implements the sign tuples, the template and its inverse, the
projectivization identifying a tuple with its negation, run-length
extraction, free-product reduction, and a canonical form deciding cyclic
conjugacy.

Throughout, the syllable ``b^-1`` is written ``"B"``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

ALPHABET = ("a", "b", "B")

_B_EXPONENT = {"b": 1, "B": 2}  # exponents mod 3
_B_TOKEN = {1: "b", 2: "B"}
_INVERSE_SYLLABLE = {"a": "a", "b": "B", "B": "b"}

# Fixed total order on syllables used by canonical_cyclic_form: a < b < b^-1.
_ROTATION_KEY = str.maketrans("abB", "012")


class NotNormalForm(ValueError):
    """Raised when a word does not match the reciprocal template."""


@dataclass(frozen=True)
class EpsilonSeq:
    """A nonempty tuple of signs, each +1 or -1.

    The tuple ``(e_1, ..., e_t)`` encodes the reciprocal word of syllable
    length ``4t``; see :func:`reciprocal_word`.
    """

    signs: tuple[int, ...]

    def __post_init__(self):
        if not self.signs:
            raise ValueError("sign tuple must be nonempty")
        if any(s not in (1, -1) for s in self.signs):
            raise ValueError(f"signs must be +1 or -1, got {self.signs!r}")

    @property
    def t(self) -> int:
        return len(self.signs)

    def __len__(self) -> int:
        return len(self.signs)

    def __iter__(self) -> Iterator[int]:
        return iter(self.signs)

    def negate(self) -> EpsilonSeq:
        return EpsilonSeq(tuple(-s for s in self.signs))


@dataclass(frozen=True)
class ProjectiveEpsilonSeq:
    """The class {e, -e} of a sign tuple, represented by its member with
    leading +1."""

    canonical: EpsilonSeq

    def __post_init__(self):
        if self.canonical.signs[0] != 1:
            raise ValueError("canonical representative must start with +1")


@dataclass(frozen=True)
class GroupWord:
    """A word over {a, b, b^-1}, not necessarily reduced.

    >>> str(GroupWord(("a", "b", "a", "B")))
    'abaB'
    """

    syllables: tuple[str, ...]

    def __post_init__(self):
        for s in self.syllables:
            if s not in ALPHABET:
                raise ValueError(f"invalid syllable {s!r}, expected one of {ALPHABET}")

    @classmethod
    def from_string(cls, text: str) -> GroupWord:
        return cls(tuple(text))

    def __str__(self) -> str:
        return "".join(self.syllables) if self.syllables else "1"

    def __len__(self) -> int:
        return len(self.syllables)

    def __mul__(self, other: GroupWord) -> GroupWord:
        """Concatenation, without reduction."""
        return GroupWord(self.syllables + other.syllables)

    def inverse(self) -> GroupWord:
        return GroupWord(tuple(_INVERSE_SYLLABLE[s] for s in reversed(self.syllables)))

    def is_reduced(self) -> bool:
        for prev, cur in zip(self.syllables, self.syllables[1:]):
            if prev == "a" and cur == "a":
                return False
            if prev != "a" and cur != "a":
                return False
        return True


@dataclass(frozen=True)
class ReciprocalNormalForm:
    """A sign tuple together with its length-4t reciprocal word."""

    eps: EpsilonSeq
    word: GroupWord

    def __post_init__(self):
        if len(self.word) != 4 * self.eps.t:
            raise ValueError("word length must be exactly 4t")


@dataclass(frozen=True)
class Composition:
    """An ordered tuple of positive integers; the empty tuple is the unique
    composition of 0."""

    parts: tuple[int, ...]

    def __post_init__(self):
        if any(p < 1 for p in self.parts):
            raise ValueError(f"parts must be positive, got {self.parts!r}")

    @property
    def total(self) -> int:
        return sum(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)


def reciprocal_word(eps: EpsilonSeq) -> ReciprocalNormalForm:
    """Expand a sign tuple into its reciprocal normal form.

    >>> str(reciprocal_word(EpsilonSeq((1,))).word)
    'abaB'
    >>> str(reciprocal_word(EpsilonSeq((1, -1))).word)
    'abaBabaB'
    """
    syl = []
    for e in eps.signs:
        syl.append("a")
        syl.append(_B_TOKEN[e % 3])
    for e in reversed(eps.signs):
        syl.append("a")
        syl.append(_B_TOKEN[-e % 3])
    return ReciprocalNormalForm(eps, GroupWord(tuple(syl)))


def epsilon_of(w: GroupWord) -> EpsilonSeq:
    """Recover the sign tuple of a reciprocal normal form.

    Inverse of :func:`reciprocal_word`.  Raises :class:`NotNormalForm` when
    the word does not match the template exactly.
    """
    n = len(w.syllables)
    if n == 0 or n % 4 != 0:
        raise NotNormalForm(f"syllable length {n} is not a positive multiple of 4")
    t = n // 4
    exps = []
    for j in range(2 * t):
        if w.syllables[2 * j] != "a":
            raise NotNormalForm(f"expected 'a' at syllable {2 * j}")
        tok = w.syllables[2 * j + 1]
        if tok == "a":
            raise NotNormalForm(f"expected b-syllable at {2 * j + 1}")
        exps.append(_B_EXPONENT[tok])
    for i in range(t):
        # syllable 2(t+i)+1 carries -e_{t-i}
        if (exps[t + i] + exps[t - 1 - i]) % 3 != 0:
            raise NotNormalForm("suffix signs do not negate the reversed prefix")
    return EpsilonSeq(tuple(1 if e == 1 else -1 for e in exps[:t]))


def projectivize(eps: EpsilonSeq) -> ProjectiveEpsilonSeq:
    """Send a sign tuple to its {e, -e} class, represented with leading +1."""
    if eps.signs[0] == 1:
        return ProjectiveEpsilonSeq(eps)
    return ProjectiveEpsilonSeq(eps.negate())


def run_sequence(eps: EpsilonSeq) -> Composition:
    """Lengths of the maximal blocks of equal consecutive signs.

    >>> run_sequence(EpsilonSeq((1, 1, 1, -1, 1, -1, -1, 1))).parts
    (3, 1, 1, 2, 1)
    """
    parts = []
    run = 1
    for prev, cur in zip(eps.signs, eps.signs[1:]):
        if cur == prev:
            run += 1
        else:
            parts.append(run)
            run = 1
    parts.append(run)
    return Composition(tuple(parts))


def excursion_parts(c: Composition, depth: int) -> int:
    """Number of parts strictly greater than ``depth``.

    A reciprocal geodesic whose run sequence has exactly ``n`` parts bigger
    than ``depth`` makes exactly ``2n`` excursions past the depth-``depth``
    thick part.
    """
    if depth < 1:
        raise ValueError(f"depth must be >= 1, got {depth}")
    return sum(1 for p in c.parts if p > depth)


def reduce_word(w: GroupWord) -> GroupWord:
    """Fully reduce a word in Z2 * Z3.

    Cancels ``aa`` pairs and combines adjacent b-syllables with exponent
    arithmetic mod 3.  Idempotent and length-nonincreasing.

    >>> str(reduce_word(GroupWord.from_string("aa")))
    '1'
    >>> str(reduce_word(GroupWord.from_string("bb")))
    'B'
    """
    stack: list[str] = []
    for s in w.syllables:
        if not stack:
            stack.append(s)
            continue
        top = stack[-1]
        if s == "a":
            if top == "a":
                stack.pop()
            else:
                stack.append(s)
        elif top == "a":
            stack.append(s)
        else:
            e = (_B_EXPONENT[top] + _B_EXPONENT[s]) % 3
            stack.pop()
            if e:
                stack.append(_B_TOKEN[e])
            # a cancellation may expose a new reducible pair; the stack
            # invariant (reduced prefix) makes a single merge sufficient
    return GroupWord(tuple(stack))


def _cyclic_reduce(syllables: tuple[str, ...]) -> tuple[str, ...]:
    """Shorten a reduced word by conjugation until its first and last
    syllables lie in different free factors (or length <= 1)."""
    syl = list(syllables)
    while len(syl) >= 2:
        first, last = syl[0], syl[-1]
        if first == "a" and last == "a":
            syl = syl[1:-1]
        elif first != "a" and last != "a":
            e = (_B_EXPONENT[first] + _B_EXPONENT[last]) % 3
            syl = syl[1:-1]
            if e:
                syl.append(_B_TOKEN[e])
        else:
            break
    return tuple(syl)


def canonical_cyclic_form(w: GroupWord) -> GroupWord:
    """Canonical representative of the cyclic-conjugacy class of ``w``.

    Reduces, cyclically reduces, then rotates to the least rotation under
    the fixed syllable order a < b < b^-1.  Two reduced words are conjugate
    in Z2 * Z3 exactly when their canonical cyclic forms are equal.
    """
    syl = _cyclic_reduce(reduce_word(w).syllables)
    n = len(syl)
    if n <= 1:
        return GroupWord(syl)
    text = "".join(syl)
    keyed = text.translate(_ROTATION_KEY)
    doubled = keyed + keyed
    best = min(range(n), key=lambda i: doubled[i : i + n])
    return GroupWord(tuple(text[best:] + text[:best]))
