import os
from pathlib import Path

from django.core.management.utils import get_random_secret_key

BASE_DIR = Path(__file__).resolve().parent.parent

SECRET_KEY = os.environ.get('DJANGO_SECRET_KEY', default=get_random_secret_key())

DEBUG = os.environ.get('DEBUG', default=False)

ALLOWED_HOSTS = []

INSTALLED_APPS = [
    'rest_framework',
    'approximations',
    'verification',
]

SPACES_DIR = BASE_DIR / 'spaces'

LANGUAGE_CODE = 'en-us'

TIME_ZONE = 'UTC'

USE_I18N = True
USE_TZ = True

REST_FRAMEWORK = {
    'DEFAULT_RENDERER_CLASSES': [
        'rest_framework.renderers.JSONRenderer',
    ],
    'UNICODE_JSON': True,
}

SOFTROUGH = {
    'MAX_EXHAUSTIVE': int(os.environ.get('SOFTROUGH_MAX_EXHAUSTIVE', default=20)),
    'MAX_UNIVERSE': int(os.environ.get('SOFTROUGH_MAX_UNIVERSE', default=30)),
    'SAMPLES': int(os.environ.get('SOFTROUGH_SAMPLES', default=10000)),
    'SEED': int(os.environ.get('SOFTROUGH_SEED', default=42)),
    'WORKERS': int(os.environ.get('SOFTROUGH_WORKERS', default=1)),
}

LOGGING = {
    'version': 1,
    'disable_existing_loggers': False,
    'formatters': {
        'verbose': {
            'format': '{asctime} {levelname} {name}: {message}',
            'style': '{',
        },
    },
    'handlers': {
        'console': {
            'class': 'logging.StreamHandler',
            'formatter': 'verbose',
        },
    },
    'loggers': {
        'approximations': {
            'handlers': ['console'],
            'level': os.environ.get('SOFTROUGH_LOG_LEVEL', default='WARNING'),
        },
        'verification': {
            'handlers': ['console'],
            'level': os.environ.get('SOFTROUGH_LOG_LEVEL', default='WARNING'),
        },
    },
}
