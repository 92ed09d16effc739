from .literals import parse_form, parse_ideal, parse_module

__all__ = ["parse_form", "parse_ideal", "parse_module"]
