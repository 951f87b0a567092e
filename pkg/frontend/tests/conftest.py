from pathlib import Path

import pytest

DATA_DIR = Path(__file__).parent / "data"


@pytest.fixture(params=["fig3", "fig5", "fig6", "appc"])
def kind_and_csv(request):
    return request.param, DATA_DIR / f"{request.param}.csv"


@pytest.fixture
def fig6_csv():
    return DATA_DIR / "fig6.csv"


@pytest.fixture
def fig3_csv():
    return DATA_DIR / "fig3.csv"
