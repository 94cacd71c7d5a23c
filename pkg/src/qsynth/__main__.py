import sys

from .cli.shell import main

sys.exit(main())
