import numpy as np
import pytest

from wignerq import MetricKind


@pytest.fixture(params=list(MetricKind), ids=[m.value for m in MetricKind])
def metric(request):
    return request.param


@pytest.fixture
def rng():
    return np.random.default_rng(20240817)
