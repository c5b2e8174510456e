"""Construction traces: a post-order record of how an antichain was built.

Leaf rules (``base``, ``topRow``, ``star``, ``level12``) push an antichain;
``lift1``/``lift2`` pop one and push its lift; ``lift3`` pops two (the first
pushed becomes the component receiving element n-1).
"""

from __future__ import annotations

from dataclasses import dataclass, field

LEAF_RULES = ("base", "topRow", "star", "level12")
RULES = LEAF_RULES + ("lift1", "lift2", "lift3")


@dataclass(frozen=True)
class TraceStep:
    rule: str
    params: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {"rule": self.rule, **self.params}

    @classmethod
    def from_dict(cls, d: dict) -> "TraceStep":
        d = dict(d)
        return cls(d.pop("rule"), d)


@dataclass(frozen=True)
class ConstructionTrace:
    steps: tuple[TraceStep, ...] = ()

    def __len__(self) -> int:
        return len(self.steps)

    def __iter__(self):
        return iter(self.steps)

    def rules(self) -> list[str]:
        return [s.rule for s in self.steps]

    def to_list(self) -> list[dict]:
        return [s.to_dict() for s in self.steps]

    @classmethod
    def from_list(cls, items) -> "ConstructionTrace":
        return cls(tuple(TraceStep.from_dict(d) for d in items))
