import sys

from dualgame.cli import main

sys.exit(main())
