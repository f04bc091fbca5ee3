"""Domain layer initialization"""
