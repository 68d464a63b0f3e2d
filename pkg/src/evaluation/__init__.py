"""
Evaluation Module for the Skein Lasagna Calculator

This module handles route agreement checks and golden-table regression.
"""

from .evaluator import RouteEvaluator

__all__ = ['RouteEvaluator']
