"""Test suite for rotorwalk"""
