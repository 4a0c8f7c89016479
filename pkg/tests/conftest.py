import os

import pytest

import prsim.config


@pytest.fixture(autouse=True)
def isolated_config(monkeypatch):
    """
    All tests see only the library config file and no ``PRSIM_*`` environment
    variables, so that a developer's ~/.prsim.cfg or shell cannot change results.
    """
    for name in list(os.environ):
        if name.startswith("PRSIM_"):
            monkeypatch.delenv(name)

    def loadconf(cfgparser):
        cfgparser._parser.read([prsim.config._get_lib_config_path()])

    monkeypatch.setattr(prsim.config.PRSimConfigParser, "_load_config", loadconf)
    prsim.config._parser = None

    yield

    prsim.config._parser = None
