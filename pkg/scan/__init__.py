"""Scan Bounded Context - weight-system enumeration, scan harness and golden fixtures"""
