"""Infrastructure layer initialization"""
