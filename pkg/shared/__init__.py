"""Shared kernel - domain errors, process settings and logging"""
