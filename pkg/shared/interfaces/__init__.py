"""Shared interfaces - command-line plumbing"""
