from pathlib import Path

from decouple import Csv, config

# Build paths inside the project like this: BASE_DIR / 'subdir'.
BASE_DIR = Path(__file__).resolve().parent.parent


# SECURITY WARNING: keep the secret key used in production secret!
SECRET_KEY = config('SCHEDSIM_SECRET_KEY', default='django-insecure-schedsim-local-development-key')

# SECURITY WARNING: don't run with debug turned on in production!
DEBUG = config('SCHEDSIM_DEBUG', default=False, cast=bool)

ALLOWED_HOSTS = config('SCHEDSIM_ALLOWED_HOSTS', default='localhost,127.0.0.1', cast=Csv())


# Application definition

INSTALLED_APPS = [
    'django.contrib.admin',
    'django.contrib.auth',
    'django.contrib.contenttypes',
    'django.contrib.sessions',
    'django.contrib.messages',
    'django.contrib.staticfiles',
    'scheduler',
]

MIDDLEWARE = [
    'django.middleware.security.SecurityMiddleware',
    'django.contrib.sessions.middleware.SessionMiddleware',
    'django.middleware.common.CommonMiddleware',
    'django.middleware.csrf.CsrfViewMiddleware',
    'django.contrib.auth.middleware.AuthenticationMiddleware',
    'django.contrib.messages.middleware.MessageMiddleware',
    'django.middleware.clickjacking.XFrameOptionsMiddleware',
]

ROOT_URLCONF = 'schedsim.urls'

TEMPLATES = [
    {
        'BACKEND': 'django.template.backends.django.DjangoTemplates',
        'DIRS': [],
        'APP_DIRS': True,
        'OPTIONS': {
            'context_processors': [
                'django.template.context_processors.request',
                'django.contrib.auth.context_processors.auth',
                'django.contrib.messages.context_processors.messages',
            ],
        },
    },
]

WSGI_APPLICATION = 'schedsim.wsgi.application'


# Database
# Stored simulation runs only; sqlite is enough for desk-scale use.

DATABASES = {
    'default': {
        'ENGINE': 'django.db.backends.sqlite3',
        'NAME': config('SCHEDSIM_DB_PATH', default=str(BASE_DIR / 'db.sqlite3')),
    }
}


# Password validation

AUTH_PASSWORD_VALIDATORS = [
    {
        'NAME': 'django.contrib.auth.password_validation.UserAttributeSimilarityValidator',
    },
    {
        'NAME': 'django.contrib.auth.password_validation.MinimumLengthValidator',
    },
    {
        'NAME': 'django.contrib.auth.password_validation.CommonPasswordValidator',
    },
    {
        'NAME': 'django.contrib.auth.password_validation.NumericPasswordValidator',
    },
]


# Internationalization
LANGUAGE_CODE = 'en-us'
TIME_ZONE = 'UTC'
USE_I18N = True
USE_TZ = True

# Static files (CSS, JavaScript, Images)
STATIC_URL = '/static/'
STATIC_ROOT = BASE_DIR / 'staticfiles'

# Default primary key field type
DEFAULT_AUTO_FIELD = 'django.db.models.BigAutoField'


# Logging
# Everything goes to stderr; stdout carries command results only.
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
            'stream': 'ext://sys.stderr',
            'formatter': 'verbose',
        },
    },
    'loggers': {
        'scheduler': {
            'handlers': ['console'],
            'level': config('SCHEDSIM_LOG_LEVEL', default='WARNING'),
            'propagate': False,
        },
    },
}


# Scheduler Configuration
SCHEDULER = {
    'DEFAULT_QUANTUM': config('SCHEDSIM_DEFAULT_QUANTUM', default=3, cast=int),
    'DEFAULT_THRESHOLD': config('SCHEDSIM_DEFAULT_THRESHOLD', default='0.04'),
    'DEFAULT_DRQ_MODE': config('SCHEDSIM_DEFAULT_DRQ_MODE', default='offline'),
    'DEFAULT_TRQ_MODE': config('SCHEDSIM_DEFAULT_TRQ_MODE', default='formula'),
    'COMPARE_WORKERS': config('SCHEDSIM_COMPARE_WORKERS', default=4, cast=int),
    'GANTT_SCALE': config('SCHEDSIM_GANTT_SCALE', default=20, cast=int),  # SVG pixels per time unit
}
