# ~/epframe/epframe/__main__.py
import sys

from epframe.cli import main

sys.exit(main())
