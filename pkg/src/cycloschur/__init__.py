"""Exact-arithmetic models of cyclotomic q-Schur algebra generators,
Ariki-Koike normal forms, deformed current Lie algebras, and Weyl-module
characters, together with the machine-verification suites that check their
defining relations."""

__version__ = "0.1.0"
