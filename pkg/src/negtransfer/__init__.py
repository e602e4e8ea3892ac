"""Rule-based transfer of English negation onto Korean affirmative frames."""

__version__ = "0.1.0"
