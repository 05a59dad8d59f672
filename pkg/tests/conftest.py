import random
from fractions import Fraction

import pytest

from cscflag import build_flag, build_root_system, parse_lie_type

SUITE_LIE_TYPES = ["A1", "A2", "A3", "B2", "G2"]


def random_instance(rng: random.Random):
    """One admissible (fv, lambda, kappa, C) tuple with strictly negative
    lambda and positive kappa."""
    lie = rng.choice(SUITE_LIE_TYPES)
    rs = build_root_system(parse_lie_type(lie))
    subsets = [s for s in _subsets(rs.rank) if len(s) < rs.rank]
    pi_prime = rng.choice(subsets)
    fv = build_flag(rs, pi_prime)
    k = len(fv.s_star_indices)
    lam = [-rng.randint(1, 5) for _ in range(k)]
    kappa = [Fraction(rng.randint(1, 5), rng.randint(1, 3)) for _ in range(k)]
    c = rng.choice([Fraction(0), Fraction(1), Fraction(2), Fraction(1, 2),
                    Fraction(3), Fraction(-1), Fraction(-2), Fraction(-1, 2)])
    return fv, lam, kappa, c


def _subsets(rank):
    out = []
    for mask in range(1 << rank):
        out.append([i + 1 for i in range(rank) if mask >> i & 1])
    return out


@pytest.fixture(scope="session")
def random_suite():
    rng = random.Random(20240823)
    return [random_instance(rng) for _ in range(120)]
