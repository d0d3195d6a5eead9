import sys

from traag.cli import main

sys.exit(main())
