"""Exact 2x2 integer matrices for the modular group.

The representation sends the order-two generator to A = [[0, -1], [1, 0]]
and the order-three generator to B = [[1, -1], [1, 0]].  Both have
determinant one, so every word evaluates into SL(2,Z); passing to the
quotient by {I, -I} lands in PSL(2,Z), where A^2 = B^3 = 1.

Entries are Python integers and grow without bound: the trace of the
alternating-sign reciprocal word grows geometrically in t, with ratio
(3 + sqrt 5)/2, so fixed-width arithmetic would overflow near t = 45.
"""

from __future__ import annotations

from dataclasses import dataclass

from .words import EpsilonSeq, GroupWord, reciprocal_word


@dataclass(frozen=True)
class Mat2Z:
    """A 2x2 integer matrix [[p, q], [r, s]] with determinant one."""

    p: int
    q: int
    r: int
    s: int

    def __post_init__(self):
        d = self.p * self.s - self.q * self.r
        if d != 1:
            raise ValueError(f"determinant must be 1, got {d}")

    def __mul__(self, other: Mat2Z) -> Mat2Z:
        return Mat2Z(
            self.p * other.p + self.q * other.r,
            self.p * other.q + self.q * other.s,
            self.r * other.p + self.s * other.r,
            self.r * other.q + self.s * other.s,
        )

    def __neg__(self) -> Mat2Z:
        return Mat2Z(-self.p, -self.q, -self.r, -self.s)

    @property
    def trace(self) -> int:
        return self.p + self.s

    def inverse(self) -> Mat2Z:
        """The adjugate [[s, -q], [-r, p]]; exact because det = 1."""
        return Mat2Z(self.s, -self.q, -self.r, self.p)


IDENTITY = Mat2Z(1, 0, 0, 1)
GEN_A = Mat2Z(0, -1, 1, 0)
GEN_B = Mat2Z(1, -1, 1, 0)
GEN_B_INV = Mat2Z(0, 1, -1, 1)

_GENERATOR = {"a": GEN_A, "b": GEN_B, "B": GEN_B_INV}


def _leading_sign(m: Mat2Z) -> int:
    for entry in (m.p, m.q, m.r, m.s):
        if entry:
            return 1 if entry > 0 else -1
    return 0


@dataclass(frozen=True)
class PSL2Element:
    """A matrix mod +-I, stored with the first nonzero of (p, q, r, s)
    positive."""

    rep: Mat2Z

    def __post_init__(self):
        if _leading_sign(self.rep) != 1:
            raise ValueError("representative is not sign-canonical")

    @classmethod
    def of(cls, m: Mat2Z) -> PSL2Element:
        return cls(m if _leading_sign(m) == 1 else -m)

    def __mul__(self, other: PSL2Element) -> PSL2Element:
        return PSL2Element.of(self.rep * other.rep)

    def inverse(self) -> PSL2Element:
        return PSL2Element.of(self.rep.inverse())

    @property
    def trace_abs(self) -> int:
        return abs(self.rep.trace)

    def is_identity(self) -> bool:
        return self.rep == IDENTITY


def evaluate(w: GroupWord) -> PSL2Element:
    """Evaluate a word under a -> A, b -> B, mod +-I.

    Free reduction commutes with evaluation, so the word need not be
    reduced.

    >>> evaluate(GroupWord.from_string("aa")).is_identity()
    True
    >>> evaluate(GroupWord.from_string("abaB")).trace_abs
    3
    """
    m = IDENTITY
    for s in w.syllables:
        m = m * _GENERATOR[s]
    return PSL2Element.of(m)


def classify(m: PSL2Element) -> str:
    """One of "identity", "elliptic", "parabolic", "hyperbolic".

    Classification is by absolute trace (< 2, = 2, > 2), with the identity
    split off from the parabolic case.
    """
    if m.is_identity():
        return "identity"
    t = m.trace_abs
    if t < 2:
        return "elliptic"
    if t == 2:
        return "parabolic"
    return "hyperbolic"


def reciprocity_check(eps: EpsilonSeq) -> bool:
    """Verify the factorization w = P * a with P an involution.

    Here x is the half word ab^{e_1}...ab^{e_t}, P = x a x^{-1}, and w the
    full reciprocal word of eps.  P conjugates w to its inverse; the axis
    of w passes through the order-two fixed point of P.  True for every
    valid sign tuple.
    """
    nf = reciprocal_word(eps)
    x = evaluate(GroupWord(nf.word.syllables[: 2 * eps.t]))
    a = PSL2Element.of(GEN_A)
    p = x * a * x.inverse()
    return (p * p).is_identity() and evaluate(nf.word) == p * a
