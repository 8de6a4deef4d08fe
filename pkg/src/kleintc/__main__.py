import sys

from kleintc.cli import main

sys.exit(main())
