from django.apps import AppConfig


class QuantumHarmonicConfig(AppConfig):
    default_auto_field = 'django.db.models.BigAutoField'
    name = 'quantum_harmonic'
    verbose_name = 'Quantum Harmonic Analysis'
