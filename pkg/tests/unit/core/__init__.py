"""Unit tests for bubblelab.core module."""
