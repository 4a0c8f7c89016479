"""
Run defaults, read once per interpreter from INI files.

Files are read in order, later ones overriding earlier ones: the library file
shipped next to this module, ``/etc/prsim.cfg`` and ``~/.prsim.cfg``. Options
live in ``[general]``; a profile ``name`` is the section ``[profile name]``.
``PRSIM_<OPTION>`` environment variables beat every file.
"""
import logging
import os
from configparser import (
    ConfigParser,
    MissingSectionHeaderError,
    NoOptionError,
    NoSectionError,
)

from prsim.exc import ConfigError

logger = logging.getLogger(__name__)

ENV_PREFIX = "PRSIM_"
DEFAULT_PROFILE = "default"


def _get_lib_config_path():
    """
    Path of the ``prsim.cfg`` installed with the package.
    """
    return os.path.join(os.path.dirname(os.path.abspath(__file__)), "prsim.cfg")


def _config_files():
    return [
        _get_lib_config_path(),
        "/etc/prsim.cfg",
        os.path.expanduser("~/.prsim.cfg"),
    ]


class PRSimConfigParser:
    """
    Layered view over the config files and the ``PRSIM_*`` environment.
    """

    _GENERAL_CONF_SECTION = "general"

    def __init__(self):
        logger.debug("Loading PRSim config parser")
        self._parser = ConfigParser()
        self._load_config()
        logger.debug(f"Config sections: {self._parser.sections()}")

    def _load_config(self):
        try:
            loaded = self._parser.read(_config_files())
        except MissingSectionHeaderError as e:
            logger.error(f"config file without a section header: {e.source}")
            raise ConfigError(
                f"Failed to parse {e.source}. Options must follow a section "
                'header; make the first line "[general]"'
            )
        logger.debug(f"Read config files {loaded}")

    def has_profile(self, profile):
        return self._parser.has_section("profile " + profile)

    def _from_env(self, option):
        name = ENV_PREFIX + option.upper()
        value = os.environ.get(name)
        if value is not None:
            logger.debug(f"{option} taken from the environment: {name}={value}")
        return value, name

    def _from_files(self, option, section, failover_to_general):
        try:
            return self._parser.get(section, option), f"[{section}]"
        except (NoOptionError, NoSectionError):
            if not failover_to_general or section == self._GENERAL_CONF_SECTION:
                return None, None
        logger.debug(f"[{section}] has no {option}, trying [general]")
        return self._from_files(option, self._GENERAL_CONF_SECTION, False)

    def get(
        self,
        option,
        section=None,
        profile=None,
        failover_to_general=False,
        check_env=False,
        type_cast=str,
    ):
        """
        Look up ``option``, or return None when it is set nowhere.

        :param section: Section to read; ``[general]`` when omitted
        :param profile: Profile to read; takes precedence over ``section``
        :param failover_to_general: Fall back to ``[general]`` when the section
            lacks the option
        :param check_env: Consult ``PRSIM_<OPTION>`` first. The variable name
            does not depend on the section, so ``PRSIM_SEED`` overrides ``seed``
            in every profile.
        :param type_cast: Applied to the raw string. A ``ValueError`` from it
            is raised as :class:`ConfigError <prsim.exc.ConfigError>`.
        """
        if profile:
            section = "profile " + profile
        elif section is None:
            section = self._GENERAL_CONF_SECTION

        value, source = self._from_env(option) if check_env else (None, None)
        if value is None:
            value, source = self._from_files(option, section, failover_to_general)
        if value is None:
            return None
        try:
            return type_cast(value)
        except ValueError as e:
            raise ConfigError(
                f"{source}: cannot use {value!r} for {option} ({e})",
                option=option,
                value=value,
                source=source,
            )


def _get_parser():
    """
    The shared parser, created on first use.
    """
    global _parser
    if _parser is None:
        _parser = PRSimConfigParser()
    return _parser


# created lazily by _get_parser()
_parser = None


def get_profile(inputprofile=None):
    """
    Name of the profile to read options from.

    :param inputprofile: A profile passed explicitly, e.g. with ``--profile``.
        Without one, ``PRSIM_PROFILE`` is used, then ``"default"``.
    """
    if inputprofile is not None:
        profile = inputprofile
    else:
        profile = os.environ.get(ENV_PREFIX + "PROFILE", DEFAULT_PROFILE)
    if profile != DEFAULT_PROFILE:
        logger.info(f"using config profile {profile!r}")
        if not _get_parser().has_profile(profile):
            logger.warning(
                f"no [profile {profile}] section found, using [general] values"
            )
    return profile


def _bool_cast(value):
    value = value.lower()
    if value in ("1", "yes", "true", "on"):
        return True
    elif value in ("0", "no", "false", "off"):
        return False
    logger.error(f'Value "{value}" can\'t cast to bool')
    raise ValueError("Invalid config bool")


# option: (type cast, value used when no file or variable sets it)
OPTIONS = {
    "decay": (float, 0.6),
    "eps": (float, 0.1),
    "delta": (float, 0.0001),
    "seed": (int, 0),
    "threads": (int, 1),
    "sample_scale": (float, 1.0),
    "exact_cap": (int, 2000),
    "pagerank_tol": (float, 1e-9),
    "dedupe": (_bool_cast, True),
}


def get_option(option, profile=None):
    """
    Resolve one of :data:`OPTIONS` for ``profile``: environment, then the
    profile section, then ``[general]``, then the built-in value.
    """
    type_cast, fallback = OPTIONS[option]
    value = _get_parser().get(
        option,
        profile=get_profile(profile),
        failover_to_general=True,
        check_env=True,
        type_cast=type_cast,
    )
    if value is None:
        value = fallback
    logger.debug(f"{option} set to {value}")
    return value


def get_decay(profile=None):
    return get_option("decay", profile)


def get_eps(profile=None):
    return get_option("eps", profile)


def get_delta(profile=None):
    return get_option("delta", profile)


def get_seed(profile=None):
    return get_option("seed", profile)


def get_threads(profile=None):
    return get_option("threads", profile)


def get_sample_scale(profile=None):
    return get_option("sample_scale", profile)


def get_exact_cap(profile=None):
    return get_option("exact_cap", profile)


def get_pagerank_tol(profile=None):
    return get_option("pagerank_tol", profile)


def get_dedupe(profile=None):
    return get_option("dedupe", profile)
