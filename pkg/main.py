#!/usr/bin/env python3
"""Normal subgroup lattices and LatAut towers of products of symmetric groups"""

import sys

from lattower.cmds.main import main

if __name__ == "__main__":
    sys.exit(int(main()))
