__version__ = "0.1.0"
WITTENZETA_ENV_PREFIX = "WITTENZETA_"
WITTENZETA_CACHE_ENV = "WITTENZETA_CACHE"
