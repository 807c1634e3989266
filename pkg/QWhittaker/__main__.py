import sys

from QWhittaker.Cli import main

sys.exit(main())
