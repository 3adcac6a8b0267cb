from core.errors.main import CustomErrorSerializer

bad_config = CustomErrorSerializer(
    4001, 'Bad Config', 'Configuration failed validation', 2,
    extra={'field': 'grid.N'},
)
unknown_symbol = CustomErrorSerializer(
    4002, 'Unknown Symbol', 'Symbol name is not registered', 2,
    extra={'symbol': 'winding:k'},
)
unknown_experiment = CustomErrorSerializer(
    4003, 'Unknown Experiment', 'Subcommand is not registered', 2,
)
invalid_spec = CustomErrorSerializer(
    4004, 'Invalid Spec', 'Truncation or phase data is invalid', 2,
)
dimension_overflow = CustomErrorSerializer(
    4005, 'Dimension Overflow',
    'Product dimension exceeds the configured cap', 2,
    extra={'cap': 256},
)


all_client_errors = {
    bad_config, unknown_symbol, unknown_experiment,
    invalid_spec, dimension_overflow,
}
