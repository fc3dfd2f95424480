import sys

from butson.cli.main import main

sys.exit(main())
