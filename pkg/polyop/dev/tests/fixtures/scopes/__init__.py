"""__init__ module."""
