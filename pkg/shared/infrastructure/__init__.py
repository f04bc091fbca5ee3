"""Shared infrastructure components"""
