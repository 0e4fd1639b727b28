from __future__ import annotations
from dataclasses import dataclass, field
from typing import List, Optional

from ..error.value_error.invalid_decorated_polytope_error import InvalidDecoratedPolytopeError


@dataclass(frozen=True)
class Check:
    """
    One diagnostic of a validation run.

    Fields:
        name (str): which condition was checked (polytope, quasirational, independence, markers, vertex_rank).
        face (str): the face the check refers to, or "all".
        passed (bool): outcome.
        message (str): human-readable detail.
    """
    name: str
    face: str
    passed: bool
    message: str = ""

    def __str__(self) -> str:
        status = "ok" if self.passed else "FAIL"
        return f"[{status}] {self.name} {self.face}" + (f": {self.message}" if self.message else "")


@dataclass
class ValidationReport:
    checks: List[Check] = field(default_factory=list)

    def add(self, name: str, face: str, passed: bool, message: str = "") -> None:
        self.checks.append(Check(name, face, passed, message))

    @property
    def valid(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def failures(self) -> List[Check]:
        return [c for c in self.checks if not c.passed]

    @property
    def first_failure(self) -> Optional[Check]:
        return next(iter(self.failures), None)

    def raise_if_invalid(self) -> None:
        """
        Raises:
            InvalidDecoratedPolytopeError: naming the first failing check and face.
        """
        failure = self.first_failure
        if failure is not None:
            raise InvalidDecoratedPolytopeError(failure.name, failure.face, failure.message)

    def __str__(self) -> str:
        return "\n".join(str(c) for c in self.checks)
