"""
Unit tests for SWHID Testing Harness
"""
