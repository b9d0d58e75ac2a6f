"""Fixtures for integration tests."""

from itertools import combinations, product

import numpy as np
import pytest

from artin_homology.coxmat import CoxeterMatrix, EvenPresentation, to_even

LABELS = (2, 4, 6, 8, None)
RANDOM_CASES = 200
SEED = 20250101


def even_presentations(n: int) -> list[EvenPresentation]:
    """Every even presentation on n generators with labels in LABELS."""
    pairs = list(combinations(range(1, n + 1), 2))
    out = []
    for labels in product(LABELS, repeat=len(pairs)):
        out.append(to_even(CoxeterMatrix.from_labels(n, dict(zip(pairs, labels)))))
    return out


def random_presentations(n: int, count: int, seed: int = SEED) -> list[EvenPresentation]:
    rng = np.random.default_rng(seed)
    pairs = list(combinations(range(1, n + 1), 2))
    out = []
    for _ in range(count):
        labels = [LABELS[int(k)] for k in rng.integers(0, len(LABELS), size=len(pairs))]
        out.append(to_even(CoxeterMatrix.from_labels(n, dict(zip(pairs, labels)))))
    return out


@pytest.fixture(scope="session")
def label_family() -> list[EvenPresentation]:
    """Exhaustive over n = 2, 3 plus seeded random cases for n = 4."""
    return even_presentations(2) + even_presentations(3) + random_presentations(4, RANDOM_CASES)
