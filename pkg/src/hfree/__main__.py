import sys

from hfree.cli import main

sys.exit(main())
