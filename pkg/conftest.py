import os

import django

os.environ.setdefault('DJANGO_SETTINGS_MODULE', 'djbundles.settings')
django.setup()
