"""cmhodge: exact combinatorics of Hodge classes on abelian varieties of CM-type."""

__version__ = "0.1.0"
