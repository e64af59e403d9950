# Copyright (C) 2026 corespec contributors, see AUTHORS for details.
# SPDX-License-Identifier: GPL-2.0-or-later

from types import ModuleType
import Corespec.commandclass

from . import (  # noqa: F401
    centrality,
    compare,
    core,
    cycles,
    selfcheck,
    spectral,
)

all_commands = {}
for name, value in dict(locals()).items():
    if not isinstance(value, ModuleType):
        continue
    for attrname in dir(value):
        obj = getattr(value, attrname)
        if not isinstance(obj, type) or obj.__module__ != value.__name__:
            continue
        if not issubclass(obj, Corespec.commandclass.AbstractCommand):
            continue
        if not hasattr(obj, "name"):
            continue
        all_commands[obj.name] = obj
