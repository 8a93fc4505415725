import numpy as np
import pytest

from diracspin import FourMomentum


def random_momenta(seed, n, max_ratio=1e3, min_ratio=1e-3):
    """Seeded momenta with |p|/m log-uniform in [min_ratio, max_ratio],
    plus one exact rest-frame entry."""
    rng = np.random.default_rng(seed)
    out = [FourMomentum.at_rest(1.0)]
    for _ in range(n - 1):
        m = float(np.exp(rng.uniform(np.log(0.2), np.log(5.0))))
        ratio = 10.0 ** rng.uniform(np.log10(min_ratio), np.log10(max_ratio))
        direction = rng.normal(size=3)
        direction /= np.linalg.norm(direction)
        out.append(FourMomentum.from_p3(m, m * ratio * direction))
    return out


@pytest.fixture
def momenta():
    return random_momenta(20240, 40)


@pytest.fixture
def moderate_momenta():
    return random_momenta(20241, 40, max_ratio=10.0)
