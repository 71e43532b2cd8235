"""
Integration tests for SWHID Testing Harness
"""
