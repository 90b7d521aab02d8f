"""
Django settings for the hallverdict project.

Only the management-command machinery of Django is used; there is no
database and no web surface.
"""

from pathlib import Path
import os
from dotenv import load_dotenv
from hallverdict.utils.hv_logger import setup_logger as setup_hv_logger

load_dotenv()

# Build paths inside the project like this: BASE_DIR / 'subdir'.
BASE_DIR = Path(__file__).resolve().parent.parent

SECRET_KEY = os.getenv("DJANGOSECRET", "hallverdict-local")

DEBUG = os.getenv("DEBUG", "") == "True"

ALLOWED_HOSTS = []

INSTALLED_APPS = [
    "hallverdict",
]

DATABASES = {}

USE_TZ = True
TIME_ZONE = "UTC"

DEFAULT_AUTO_FIELD = "django.db.models.BigAutoField"

# embedded Hall subgroup tables
SEED_DIR = Path(os.getenv("HV_SEED_DIR") or BASE_DIR / "seed")

# generator files of the oracle corpus
GENERATORS_DIR = BASE_DIR / "hallverdict/assets/generators"

LOG_DIR = BASE_DIR / "hallverdict/logs"

setup_hv_logger(LOG_DIR)
