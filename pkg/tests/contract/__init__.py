"""Contract Tests Package"""
