#!/usr/bin/env python3
# Copyright (C) 2026 corespec contributors, see AUTHORS for details.
# SPDX-License-Identifier: GPL-2.0-or-later

import sys

import Corespec.cli

if __name__ == "__main__":
    sys.exit(Corespec.cli.main())
