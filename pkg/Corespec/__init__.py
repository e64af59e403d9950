# Copyright (C) 2026 corespec contributors, see AUTHORS for details.
# SPDX-License-Identifier: GPL-2.0-or-later

from . import util, commands  # noqa: F401
