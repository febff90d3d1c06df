import sys

from cliffstat.cli import main

sys.exit(main())
