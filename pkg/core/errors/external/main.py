from core.errors.main import CustomErrorSerializer

truncation = CustomErrorSerializer(
    5001, 'Truncation', 'Coherent-state tail above tolerance', 3,
)
quadrature = CustomErrorSerializer(
    5002, 'Quadrature', 'Quadrature did not converge under node doubling', 3,
)
not_banded = CustomErrorSerializer(
    5003, 'Not Banded', 'No bandwidth below D/2 meets the residual bound', 3,
)
ill_conditioned = CustomErrorSerializer(
    5004, 'Ill Conditioned',
    'No singular-value gap of factor 10 near tolerance', 3,
)
curve_through_zero = CustomErrorSerializer(
    5005, 'Curve Through Zero',
    'Berezin curve is not bounded away from zero', 3,
)
aliasing = CustomErrorSerializer(
    5006, 'Aliasing', 'Symbol does not decay at the grid boundary', 3,
)
extrapolation = CustomErrorSerializer(
    5007, 'Extrapolation', 'Abel extrapolation orders disagree', 3,
)
convention = CustomErrorSerializer(
    5008, 'Convention', 'No consistent convention found', 3,
)

all_external_errors = {
    truncation, quadrature, not_banded, ill_conditioned,
    curve_through_zero, aliasing, extrapolation, convention,
}
