"""
Utility modules for MatroidKit.

Contains configuration, constants and logging setup.
"""
