"""Empty __init__.py to create package."""
