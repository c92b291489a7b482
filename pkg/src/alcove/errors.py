from __future__ import annotations


class AlcoveError(ValueError):
    """Error carrying a short machine-readable code, e.g. ``not-semisimple``."""

    def __init__(self, code: str, message: str = ""):
        self.code = code
        super().__init__(f"{code}: {message}" if message else code)
