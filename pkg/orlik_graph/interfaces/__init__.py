"""Interfaces layer initialization"""
