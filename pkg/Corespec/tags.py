# Copyright (C) 2026 corespec contributors, see AUTHORS for details.
# SPDX-License-Identifier: GPL-2.0-or-later

import os

from .errors import ConfigError
from .types import Diagnostic

tags: dict[str, str] = {}

DEFAULT_TAGS = os.path.join(os.path.dirname(__file__), "corespec-tags")


def load_tags(filename=None, machine=False):
    "Loads tags from the given filename"
    global tags
    tags = {}
    if filename is None:
        filename = DEFAULT_TAGS

    with open(filename) as f:
        for lineno, line in enumerate(f, start=1):
            line = line.strip()
            if line.startswith("#") or line == "":
                continue
            try:
                machinetag, humantag = line.split("::")
            except ValueError:
                raise ConfigError(f"{filename}:{lineno}: expected 'machine-tag :: human text'") from None
            machinetag = machinetag.strip()
            humantag = humantag.strip()

            if machine:
                tags[machinetag] = machinetag
            else:
                tags[machinetag] = humantag


def tag_name(msg: Diagnostic) -> str:
    "The bare hyphenated name of a diagnostic, without format specifiers"
    return msg[0].split()[0]


def format_message(msg: Diagnostic) -> str:
    """
    Formats a tuple (tag, data)
    """
    tag, data = msg
    return tags.get(tag, tag) % data


# Try to load tags by default
if os.path.exists(DEFAULT_TAGS):
    load_tags(DEFAULT_TAGS)
