import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).resolve().parent))

from ofansiv import lexicons as lex_mod
from ofansiv.normalize import PipelineConfig


@pytest.fixture(scope="session")
def lexicons():
    return lex_mod.load_all()


@pytest.fixture(scope="session")
def full_config(lexicons):
    return PipelineConfig.full(lexicons)
