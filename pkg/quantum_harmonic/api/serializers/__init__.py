from .experiment_config import ExperimentConfigSerializer, validate_config
