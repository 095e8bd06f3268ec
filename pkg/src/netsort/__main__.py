import sys

from netsort.cli import main

sys.exit(main())
