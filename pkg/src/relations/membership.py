"""
Exact membership test for the variety cut out by the orbit relations.
"""
import logging
from typing import Dict, Optional, Sequence

from pydantic import BaseModel, Field

from .cubic import cubic_relation_set
from .linear import linear_orbit

logger = logging.getLogger(__name__)


class MembershipVerdict(BaseModel):
    """Outcome of evaluating every orbit relation at a point."""

    member: bool
    linear_checked: int = 0
    cubic_checked: int = 0
    violated: Optional[str] = None
    details: Dict = Field(default_factory=dict)

    def __bool__(self) -> bool:
        return self.member

    def to_json(self) -> Dict:
        return {
            "member": self.member,
            "linear_checked": self.linear_checked,
            "cubic_checked": self.cubic_checked,
            "violated": self.violated,
        }


def _linear_text(form: Sequence[int]) -> str:
    pieces = []
    for a, c in enumerate(form, start=1):
        if c:
            sign = "-" if c < 0 else "+"
            body = f"y{a}" if abs(c) == 1 else f"{abs(c)}*y{a}"
            pieces.append(f"{sign} {body}")
    text = " ".join(pieces)
    return text[2:] if text.startswith("+ ") else "-" + text[2:]


def membership(point: Sequence) -> MembershipVerdict:
    """Evaluate all orbit linear forms and all orbit cubics at a point.

    Args:
        point: 40 coordinates (a Proj39 or any sequence of exact values)

    Returns:
        The verdict, naming the first violated relation when there is one
    """
    values = list(point)
    forms = linear_orbit()
    for k, form in enumerate(forms):
        total = 0
        for c, v in zip(form, values):
            if c:
                total = total + c * v
        if total != 0:
            text = _linear_text(form)
            logger.debug("Linear relation %s violated", text)
            return MembershipVerdict(member=False, linear_checked=k + 1, violated=text)
    relations = cubic_relation_set()
    for k, relation in enumerate(relations):
        if relation.evaluate(values) != 0:
            text = relation.to_text()
            logger.debug("Cubic relation %s violated", text)
            return MembershipVerdict(member=False, linear_checked=len(forms), cubic_checked=k + 1, violated=text)
    return MembershipVerdict(member=True, linear_checked=len(forms), cubic_checked=len(relations))
