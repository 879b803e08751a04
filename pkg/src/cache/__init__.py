"""
Cache module for the spectral sequence engine.

This module provides on-disk caching of computed page reports so repeated
runs on the same input skip the linear algebra.
"""

import logging

from .manager import CacheManager

logger = logging.getLogger(__name__)

__all__ = ["CacheManager"]
