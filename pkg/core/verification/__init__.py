"""
Identity Verification Suites

Importing this package registers the built-in suites.
"""

from . import suites
from .base import IdentitySuite, SuiteRegistry, SuiteResult, register_suite

__all__ = ["IdentitySuite", "SuiteRegistry", "SuiteResult", "register_suite", "suites"]
