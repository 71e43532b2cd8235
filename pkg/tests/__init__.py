"""
Test suite for SWHID Testing Harness
"""
