from pathlib import Path

import environ

# Load environment variables
env = environ.Env(
    PROJECT_STATUS=(str, "Development"),
    SECRET_KEY=(str, "qha-insecure-development-key"),
    LOG_LEVEL=(str, "INFO"),
)
BASE_DIR = Path(__file__).resolve().parents[3]
env_file = BASE_DIR / '.env'
if env_file.exists():
    environ.Env.read_env(env_file)
