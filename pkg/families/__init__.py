"""Families Bounded Context - cycle, chain, Thom-Sebastiani and Saito families"""
