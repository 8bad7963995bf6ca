import sys

from polynorm.polynorm import main

sys.exit(main())
