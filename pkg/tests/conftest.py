#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
    conftest.py for susypert.

    Tests build their own coefficient caches where cache state matters;
    no shared fixtures are needed.
"""
