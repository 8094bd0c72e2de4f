import sys

from fanolink.cli import main

sys.exit(main())
