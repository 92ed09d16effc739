# Logging setup
from src.infrastructure.logging.logger import setup_logging

__all__ = ["setup_logging"]
