import os
from typing import Optional, Dict, Any
from dotenv import load_dotenv
import logging

from .indexing import Convention
from .linalg import Ring

logger = logging.getLogger(__name__)

TRUE_VALUES = ["true", "1", "yes", "on"]
OUTPUT_FORMATS = ["json", "txt", "ascii", "svg"]


def _clean(value: Optional[str]) -> Optional[str]:
    """Strip whitespace and trailing ``#`` comments from an env value."""
    if value is None:
        return None
    value = value.strip()
    if "#" in value:
        value = value.split("#")[0].strip()
    return value or None


class Config:
    """Configuration class to handle all settings for the spectral sequence engine.

    This class loads configuration from environment variables and provides
    validation and type conversion for the settings.
    """
    def __init__(self, env_file: Optional[str] = None, **overrides):
        """Initialize configuration from environment variables.

        Args:
            env_file: Optional path to a .env file to load
            **overrides: Optional keyword arguments to override env values.
                Supported keys: threads, ring, seed, count, rmax, convention,
                output_format, output_dir, counterexample_dir, cache_enabled
        """
        if env_file:
            logger.info(f"Loading configuration from {env_file}")
            load_dotenv(env_file, override=True)
        else:
            logger.info("Using existing environment variables for configuration")

        # Parallelism (0 = choose from available resources)
        self.threads = int(_clean(os.getenv("SPECSEQ_THREADS")) or "0")

        # Algebra defaults
        self.ring_name = _clean(os.getenv("DEFAULT_RING")) or "ZZ"
        self.rmax = int(_clean(os.getenv("RMAX")) or "3")
        self.convention_name = _clean(os.getenv("CONVENTION")) or "serre-homology-decreasing"

        # Verification campaign
        self.campaign_seed = int(_clean(os.getenv("CAMPAIGN_SEED")) or "0")
        self.campaign_count = int(_clean(os.getenv("CAMPAIGN_COUNT")) or "200")

        # Output
        self._output_format = _clean(os.getenv("OUTPUT_FORMAT")) or "txt"
        self.output_dir = _clean(os.getenv("OUTPUT_DIR")) or "output"
        self.counterexample_dir = _clean(os.getenv("COUNTEREXAMPLE_DIR")) or "counterexamples"

        # Cache settings
        cache_enabled = os.getenv("CACHE_ENABLED", "true")
        self.cache_enabled = cache_enabled.strip().lower() in TRUE_VALUES

        # Cache expiration in seconds (default: 7 days)
        self.cache_expiration = int(os.getenv("CACHE_EXPIRATION", str(7 * 24 * 60 * 60)))

        # Apply any keyword overrides
        if 'threads' in overrides:
            self.threads = int(overrides['threads'])
        if 'ring' in overrides:
            self.ring_name = overrides['ring']
        if 'seed' in overrides:
            self.campaign_seed = int(overrides['seed'])
        if 'count' in overrides:
            self.campaign_count = int(overrides['count'])
        if 'rmax' in overrides:
            self.rmax = int(overrides['rmax'])
        if 'convention' in overrides:
            self.convention_name = overrides['convention']
        if 'output_format' in overrides:
            self.output_format = overrides['output_format']
        if 'output_dir' in overrides:
            self.output_dir = overrides['output_dir']
        if 'counterexample_dir' in overrides:
            self.counterexample_dir = overrides['counterexample_dir']
        if 'cache_enabled' in overrides:
            self.cache_enabled = bool(overrides['cache_enabled'])

        logger.debug(f"Configuration loaded: {self.to_dict()}")

    @property
    def output_format(self) -> str:
        """Get the output format for page reports."""
        return self._output_format

    @output_format.setter
    def output_format(self, value: str):
        """Set the output format for page reports.

        Args:
            value: The output format (json, txt, ascii, svg)
        """
        self._output_format = _clean(value) or "txt"

    @property
    def ring(self) -> Ring:
        """The default coefficient ring.

        Raises:
            ValueError: If DEFAULT_RING is not a ring name
        """
        return Ring.parse(self.ring_name)

    @property
    def convention(self) -> Convention:
        """The default indexing convention.

        Raises:
            ValueError: If CONVENTION is not one of the twelve names
        """
        return Convention.parse(self.convention_name)

    def to_dict(self) -> Dict[str, Any]:
        """Convert configuration to a dictionary.

        Returns:
            Dict containing all configuration values
        """
        return {
            "threads": self.threads,
            "ring": self.ring_name,
            "rmax": self.rmax,
            "convention": self.convention_name,
            "campaign_seed": self.campaign_seed,
            "campaign_count": self.campaign_count,
            "output_format": self.output_format,
            "output_dir": self.output_dir,
            "counterexample_dir": self.counterexample_dir,
            "cache_enabled": self.cache_enabled,
            "cache_expiration": self.cache_expiration,
        }

    def validate(self) -> bool:
        """Validate the configuration.

        Returns:
            True if the configuration is valid, False otherwise
        """
        try:
            self.ring
        except ValueError:
            logger.warning(f"Invalid ring: {self.ring_name}")
            return False

        try:
            self.convention
        except ValueError:
            logger.warning(f"Invalid convention: {self.convention_name}")
            return False

        if self.output_format not in OUTPUT_FORMATS:
            logger.warning(f"Invalid output format: {self.output_format}. Must be one of {OUTPUT_FORMATS}")
            return False

        if self.rmax < 1:
            logger.warning(f"RMAX must be at least 1, got {self.rmax}")
            return False

        if self.threads < 0 or self.campaign_count < 0:
            logger.warning("SPECSEQ_THREADS and CAMPAIGN_COUNT must be non-negative")
            return False

        return True
