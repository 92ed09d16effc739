from .monoid_loader import MonoidFileLoader, MonoidFileSchema, load_monoid_file

__all__ = ["MonoidFileLoader", "MonoidFileSchema", "load_monoid_file"]
