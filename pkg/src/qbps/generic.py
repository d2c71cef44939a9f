"""Rationals with an infinitesimal perturbation, ordered lexicographically.

A ``GenericReal`` models q + e*0+ where q is rational and 0+ is a positive
infinitesimal.  Window endpoints use e in {-1, 0, +1}; arithmetic is closed
under rational linear combinations, so intermediate values may carry any
rational e.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction


def _frac(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    raise TypeError(f"not an exact rational: {x!r}")


@dataclass(frozen=True, order=False)
class GenericReal:
    """q + eps*0+ with exact lexicographic order on (q, eps)."""

    q: Fraction
    eps: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, "q", _frac(self.q))
        object.__setattr__(self, "eps", _frac(self.eps))

    # -- arithmetic (rational scalars only; products of two generics are
    #    never needed and would leave the model) --
    def __add__(self, other) -> "GenericReal":
        if isinstance(other, GenericReal):
            return GenericReal(self.q + other.q, self.eps + other.eps)
        return GenericReal(self.q + _frac(other), self.eps)

    __radd__ = __add__

    def __neg__(self) -> "GenericReal":
        return GenericReal(-self.q, -self.eps)

    def __sub__(self, other) -> "GenericReal":
        return self + (-other if isinstance(other, GenericReal) else -_frac(other))

    def __rsub__(self, other) -> "GenericReal":
        return (-self) + _frac(other)

    def __mul__(self, other) -> "GenericReal":
        s = _frac(other)
        return GenericReal(self.q * s, self.eps * s)

    __rmul__ = __mul__

    def __truediv__(self, other) -> "GenericReal":
        s = _frac(other)
        return GenericReal(self.q / s, self.eps / s)

    def _key(self):
        return (self.q, self.eps)

    def __lt__(self, other):
        return self._key() < _as_generic(other)._key()

    def __le__(self, other):
        return self._key() <= _as_generic(other)._key()

    def __gt__(self, other):
        return self._key() > _as_generic(other)._key()

    def __ge__(self, other):
        return self._key() >= _as_generic(other)._key()

    def __eq__(self, other):
        if isinstance(other, (GenericReal, Fraction, int)):
            return self._key() == _as_generic(other)._key()
        return NotImplemented

    def __hash__(self):
        return hash(self._key())

    def is_rational(self) -> bool:
        return self.eps == 0

    def is_integer(self) -> bool:
        """Exactly an integer (a nonzero infinitesimal part never is)."""
        return self.eps == 0 and self.q.denominator == 1

    def eps_sign(self) -> int:
        return (self.eps > 0) - (self.eps < 0)

    def __repr__(self):
        return f"GenericReal({self.q!s}, eps={self.eps!s})"


def _as_generic(x) -> GenericReal:
    if isinstance(x, GenericReal):
        return x
    return GenericReal(_frac(x))


def parse_generic(text: str) -> GenericReal:
    """Parse "q", "q:+1" or "q:-1" (the only admissible endpoint forms)."""
    text = text.strip()
    if ":" in text:
        qpart, epart = text.split(":", 1)
        if epart not in ("+1", "-1", "1"):
            raise ValueError(f"perturbation must be +1 or -1, got {epart!r}")
        eps = Fraction(1) if epart in ("+1", "1") else Fraction(-1)
        return GenericReal(Fraction(qpart), eps)
    return GenericReal(Fraction(text))


def format_generic(x: GenericReal) -> str:
    s = x.eps_sign()
    if s == 0:
        return str(x.q)
    return f"{x.q}:{'+1' if s > 0 else '-1'}"
