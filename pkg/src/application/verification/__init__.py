from .runner import SUITES, THEOREM_IDS, Suite, TheoremSuiteRunner

__all__ = ["SUITES", "THEOREM_IDS", "Suite", "TheoremSuiteRunner"]
