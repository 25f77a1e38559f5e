"""
Shared helpers for the list sorting laboratory: environment-driven
settings, timing, input validation and sqlite connections.
"""
