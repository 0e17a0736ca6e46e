import sys
from unbreak.cli import main

sys.exit(main())
