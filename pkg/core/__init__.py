"""Exact ring, sparse matrices, operators, diagrams and the verification engine."""
