"""spochar: exact virtual characters for the Lie superalgebras spo(2n|l)."""

__version__ = "0.1.0"
