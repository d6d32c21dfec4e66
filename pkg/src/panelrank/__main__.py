"""Module entry point so `python -m panelrank` behaves like the console script."""

from .cli import cli_main

if __name__ == "__main__":
    raise SystemExit(cli_main())
