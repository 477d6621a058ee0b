"""Seeded random instance generators for property suites and demos."""

from __future__ import annotations

import random

from .model import WeightMatrix, check_generic


def random_weight_matrix(rng: random.Random, d: int, n: int, bound: int = 3) -> WeightMatrix:
    """Random full-rank d x n integer matrix with entries in [-bound, bound]."""
    while True:
        rows = [[rng.randint(-bound, bound) for _ in range(n)] for _ in range(d)]
        try:
            return WeightMatrix.from_rows(rows)
        except ValueError:
            continue


def random_generic_character(rng: random.Random, a: WeightMatrix, bound: int = 5):
    """Random nonzero character that is generic for a; the walls have measure
    zero, so rejection sampling terminates quickly (the bound grows if not)."""
    attempts = 0
    while True:
        attempts += 1
        b = bound + attempts // 50
        theta = tuple(rng.randint(-b, b) for _ in range(a.d))
        if not any(theta):
            continue
        if check_generic(a, theta).generic:
            return theta


def random_generic_instance(rng: random.Random, d: int, n: int, bound: int = 3):
    a = random_weight_matrix(rng, d, n, bound)
    return a, random_generic_character(rng, a)
