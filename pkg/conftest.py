"""Configure Django so pytest can collect the Django test modules under app/."""
import os
import sys

APP_DIR = os.path.join(os.path.dirname(os.path.abspath(__file__)), 'app')
if APP_DIR not in sys.path:
    sys.path.insert(0, APP_DIR)

os.environ.setdefault('DJANGO_SETTINGS_MODULE', 'app.settings')

import django  # noqa: E402

django.setup()
