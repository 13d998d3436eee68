"""__init__.py: polyop package."""
