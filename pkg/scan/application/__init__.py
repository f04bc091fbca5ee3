"""Application layer initialization"""
