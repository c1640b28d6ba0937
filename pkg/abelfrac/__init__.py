"""Abelfrac"""
