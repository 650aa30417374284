from __future__ import annotations

__version__ = "0.4.0"
APP_NAME = "diffmc"
AUTHOR = "diffmc"
