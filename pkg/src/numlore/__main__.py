import sys

from numlore.cli import main

sys.exit(main())
