import pytest
from click.testing import CliRunner

from src.config import Config
from src.main import create_cli
from src.services.fano_ring_service import fano_ring_service
from src.services.motive_service import motive_service


@pytest.fixture
def runner():
    return CliRunner()


@pytest.fixture
def cli():
    return create_cli()


@pytest.fixture
def no_timings(monkeypatch):
    monkeypatch.setattr(Config, 'RECORD_TIMINGS', False)


@pytest.fixture
def fano_context():
    return fano_ring_service.context


@pytest.fixture
def cubic_model():
    return motive_service.model
