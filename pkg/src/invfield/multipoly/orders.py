"""Monomial orders on exponent tuples."""
from __future__ import annotations

from dataclasses import dataclass

KINDS = ("lex", "grlex", "grevlex")
_ALIASES = {"deglex": "grlex", "graded-lex": "grlex", "degrevlex": "grevlex", "graded-reverse-lex": "grevlex"}


@dataclass(frozen=True)
class TermOrder:
    """A monomial order.

    ``priority`` lists variable indices from most to least significant; the
    default is the natural order x1 > x2 > ... > xn.
    """

    kind: str = "grevlex"
    priority: tuple[int, ...] | None = None

    def __post_init__(self):
        kind = _ALIASES.get(self.kind, self.kind)
        if kind not in KINDS:
            raise ValueError(f"unknown term order {self.kind!r}; expected one of {KINDS}")
        object.__setattr__(self, "kind", kind)
        if self.priority is not None:
            pr = tuple(self.priority)
            if sorted(pr) != list(range(len(pr))):
                raise ValueError(f"priority {pr} is not a permutation")
            object.__setattr__(self, "priority", pr)

    @property
    def graded(self) -> bool:
        return self.kind != "lex"

    def key(self, mono: tuple[int, ...]):
        """Sort key: a larger key means a larger monomial."""
        e = mono if self.priority is None else tuple(mono[i] for i in self.priority)
        if self.kind == "lex":
            return e
        if self.kind == "grlex":
            return (sum(e), e)
        return (sum(e), tuple(-v for v in reversed(e)))

    def __str__(self):
        return self.kind if self.priority is None else f"{self.kind}{list(self.priority)}"


GREVLEX = TermOrder("grevlex")
GRLEX = TermOrder("grlex")
LEX = TermOrder("lex")


def as_order(order) -> TermOrder:
    if order is None:
        return GREVLEX
    if isinstance(order, TermOrder):
        return order
    return TermOrder(order)
