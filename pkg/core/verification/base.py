"""
Identity Suite Framework

Provides the abstract suite interface, results and a registry so suites are
enumerable and individually addressable.
"""

from abc import ABC, abstractmethod
from dataclasses import dataclass, field
from typing import Any

import structlog

logger = structlog.get_logger()


@dataclass
class SuiteResult:
    """Outcome of one suite run"""

    name: str
    passed: bool
    checked: int = 0
    skipped: int = 0
    first_failure: str | None = None
    failures: list[str] = field(default_factory=list)
    skipped_cases: list[str] = field(default_factory=list)

    def to_dict(self) -> dict[str, Any]:
        """Convert to dictionary"""
        return {
            "suite": self.name,
            "passed": self.passed,
            "checked": self.checked,
            "skipped": self.skipped,
            "skipped_cases": list(self.skipped_cases),
            "first_failure": self.first_failure,
        }


class IdentitySuite(ABC):
    """
    A family of exact identities checked case by case

    Subclasses list their cases and check one case at a time, returning a
    description of the violation or None.
    """

    name: str = ""
    description: str = ""

    @abstractmethod
    def cases(self) -> list[Any]:
        """All cases in a deterministic order"""

    @abstractmethod
    def check(self, case: Any) -> str | None:
        """Return None when the identity holds, else a description of the violation"""

    def affordable(self, case: Any) -> bool:
        """Cases too large to check are skipped and counted"""
        return True

    def describe_case(self, case: Any) -> str:
        return str(case)

    def run(self, stop_at_first: bool = True) -> SuiteResult:
        result = SuiteResult(name=self.name, passed=True)
        for case in self.cases():
            if not self.affordable(case):
                result.skipped += 1
                result.skipped_cases.append(self.describe_case(case))
                continue
            failure = self.check(case)
            result.checked += 1
            if failure is not None:
                result.passed = False
                result.failures.append(failure)
                if result.first_failure is None:
                    result.first_failure = failure
                if stop_at_first:
                    break
        logger.info(
            "suite_finished",
            suite=self.name,
            passed=result.passed,
            checked=result.checked,
            skipped=result.skipped,
        )
        return result


class SuiteRegistry:
    """Registry of identity suites by name"""

    _suites: dict[str, type[IdentitySuite]] = {}

    @classmethod
    def register(cls, name: str, suite_class: type[IdentitySuite]):
        """Register a suite"""
        cls._suites[name] = suite_class

    @classmethod
    def get(cls, name: str) -> IdentitySuite | None:
        """Get a suite instance by name"""
        suite_class = cls._suites.get(name)
        if suite_class:
            return suite_class()
        return None

    @classmethod
    def list_suites(cls) -> list[str]:
        """List registered suite names in registration order"""
        return list(cls._suites.keys())

    @classmethod
    def describe(cls) -> dict[str, str]:
        return {name: suite.description for name, suite in cls._suites.items()}


def register_suite(name: str):
    """Decorator to register an identity suite"""
    def decorator(cls: type[IdentitySuite]):
        cls.name = name
        SuiteRegistry.register(name, cls)
        return cls
    return decorator


__all__ = [
    "IdentitySuite",
    "SuiteRegistry",
    "SuiteResult",
    "register_suite",
]
