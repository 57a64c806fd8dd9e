"""Pytest configuration and shared fixtures."""

import pytest

# Add src to path for imports
import sys
from pathlib import Path
sys.path.insert(0, str(Path(__file__).parent.parent))

from src.domain.services.fear_appraisal_service import FearAppraisalService  # noqa: E402
from src.infrastructure.config.settings import SHIPPED_CONFIG_DIR, SHIPPED_RULEBASE_DIR  # noqa: E402
from src.infrastructure.logging.logger import configure_logging  # noqa: E402
from src.infrastructure.rulebases.json_rulebase_repository import JsonRulebaseRepository  # noqa: E402


@pytest.fixture(autouse=True, scope="session")
def quiet_logging():
    """Per-tick DEBUG events would flood the test output."""
    configure_logging("WARNING")


@pytest.fixture(scope="session")
def rulebase_repository():
    return JsonRulebaseRepository(SHIPPED_RULEBASE_DIR)


@pytest.fixture(scope="session")
def appraiser(rulebase_repository):
    return FearAppraisalService.from_repository(rulebase_repository)


@pytest.fixture(scope="session")
def config_dir():
    return SHIPPED_CONFIG_DIR
