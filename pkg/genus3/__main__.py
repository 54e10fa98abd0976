import sys

from genus3.cli import main

sys.exit(main())
