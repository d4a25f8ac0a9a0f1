# BSD 3-Clause License
# Copyright (c) 2023, DaisyHamming contributors. All rights reserved.
# See README.md for the full license text.

import sys

from .cli import main

if __name__ == "__main__":
    sys.exit(main())
