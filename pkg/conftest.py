import os

import django

os.environ.setdefault('DJANGO_SETTINGS_MODULE', 'stokesquiver.settings')
django.setup()
