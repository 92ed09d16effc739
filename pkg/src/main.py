"""
Точка входа ringk0.
"""
from src.application.cli import cli


def main() -> None:
    cli(prog_name="ringk0")


if __name__ == "__main__":
    main()
