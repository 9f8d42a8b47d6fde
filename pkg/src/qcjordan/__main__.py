import sys

from .qc_cli import main

sys.exit(main())
