# SPDX-License-Identifier: MIT
# Copyright (c) 2025 Pablo Ulloa Santin
from commutechart.cli import main

raise SystemExit(main())
