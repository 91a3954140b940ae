"""Integration Tests Package"""
