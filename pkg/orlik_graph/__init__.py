"""Orlik Graph Bounded Context - prime-labelled divisibility graphs and their conditions"""
