"""
WSGI config for the schedsim project.

It exposes the WSGI callable as a module-level variable named ``application``.
Serve it with ``gunicorn schedsim.wsgi``.
"""

import os

from django.core.wsgi import get_wsgi_application

os.environ.setdefault('DJANGO_SETTINGS_MODULE', 'schedsim.settings')

application = get_wsgi_application()
