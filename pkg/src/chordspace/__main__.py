import sys

from chordspace.cli import main

sys.exit(main())
