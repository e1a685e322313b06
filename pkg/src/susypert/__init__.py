# -*- coding: utf-8 -*-
"""
susypert: exact-arithmetic superpotential perturbation theory for the quartic anharmonic oscillator.
"""
import pkg_resources

try:
    __version__ = pkg_resources.get_distribution(__name__).version
except pkg_resources.DistributionNotFound:
    __version__ = 'unknown'
