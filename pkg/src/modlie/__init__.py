"""Exact computations with finite-dimensional Lie algebras over finite fields."""
