import sys

from eigdiag.cli import main

sys.exit(main())
