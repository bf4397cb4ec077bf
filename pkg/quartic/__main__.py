"""Allow `python -m quartic ...`."""
import sys

from quartic.main import main

sys.exit(main())
