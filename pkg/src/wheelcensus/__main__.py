import sys

from wheelcensus.cli import main

sys.exit(main())
