from kernel.settings.config.setup import env

# Determine project status (Development or Production)
project_status = env("PROJECT_STATUS")

match project_status:
    case "Development":
        from kernel.settings.development import *
    case "Production":
        from kernel.settings.production import *
    case _:
        raise ValueError("Invalid PROJECT_STATUS value in .env file")
