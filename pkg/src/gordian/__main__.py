import sys

from gordian.cli import main

sys.exit(main())
