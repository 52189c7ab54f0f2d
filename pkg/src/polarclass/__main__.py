import sys

from polarclass.cli import main

sys.exit(main())
