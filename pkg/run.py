import sys
import os

sys.path.insert(0, os.path.join(os.path.dirname(os.path.abspath(__file__)), "fairdice"))

import main  # noqa

sys.exit(main.main())
