"""Entrypoint for `python -m tanglekit`."""

import sys

from tanglekit.cli import tanglekit_cli

sys.exit(tanglekit_cli.main())
