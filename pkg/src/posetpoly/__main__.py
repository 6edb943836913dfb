import sys

from posetpoly.cli import main

sys.exit(main())
