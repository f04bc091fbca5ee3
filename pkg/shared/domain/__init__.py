"""Shared domain layer initialization"""
