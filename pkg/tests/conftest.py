import pytest

from blakley import PrimeModulus, RandomSource, SchemeParams, Share

# Known-good (73, 3, 5) share set used across the suite: five planes
# z = a x + b y + c through the point (42, 29, 57). Pair {1, 5} has
# equal y coefficients, which makes the full set inadmissible and gives
# the leak-detection tests a realistic target.
REFERENCE_PLANES = [
    (4, 19, 68),
    (52, 27, 10),
    (36, 65, 18),
    (57, 12, 16),
    (34, 19, 49),
]
REFERENCE_SECRET = 42
REFERENCE_POINT = (42, 29, 57)


@pytest.fixture
def mod73():
    return PrimeModulus(73)


@pytest.fixture
def reference_params(mod73):
    return SchemeParams(mod73, 3, 5)


@pytest.fixture
def reference_shares(reference_params):
    return [
        Share(i + 1, (a, b), c, reference_params)
        for i, (a, b, c) in enumerate(REFERENCE_PLANES)
    ]


@pytest.fixture
def rng():
    return RandomSource.seeded(0x5EED)
