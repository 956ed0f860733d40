import sys

from fostree.cli import main

sys.exit(main())
