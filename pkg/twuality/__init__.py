"""Ribbon-group action on edge-labeled ribbon graphs and the self-triality census."""
