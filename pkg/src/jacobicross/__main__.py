import sys

from jacobicross.cli import main

sys.exit(main())
