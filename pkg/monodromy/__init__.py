"""Monodromy Bounded Context - elementary divisors and conjecture checks"""
