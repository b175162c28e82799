"""Minimum-norm solvers for general real linear systems."""
