from django.utils.translation import gettext_lazy as _

from core.models.helper.enums.base_textchoice import BaseTextChoices


class Experiment_Choices(BaseTextChoices):
    """
    Experiment_Choices lists every subcommand of the experiment runner.
    """

    CCR_CHECK = 'ccr-check', _("CCR check")
    PARITY_CHECK = 'parity-check', _("Parity check")
    TOEPLITZ_SHIFT = 'toeplitz-shift', _("Toeplitz weighted shift")
    EVEN_ODD = 'even-odd', _("Even/odd split")
    INDEX = 'index', _("Fredholm index")
    INDEX_PARITY = 'index-parity', _("Index parity")
    CONGRUENCE = 'congruence', _("Index congruence")
    COUNTEREXAMPLE = 'counterexample', _("Even operator with odd index")
    MODULATION_SCAN = 'modulation-scan', _("Modulation scan")
    LOCALIZATION_SCAN = 'localization-scan', _("Localization scan")
    INTERSECTION_PROBE = 'intersection-probe', _("Intersection probe")
    FOURIER_ROUNDTRIP = 'fourier-roundtrip', _("Fourier round trip")
    FOP_IDENTITY = 'fop-identity', _("Operator Fourier identity")
    TWISTED_CONV = 'twisted-conv', _("Twisted convolution")
    DELTA_PARITY = 'delta-parity', _("Delta parity")
    PARITY_CONJUGATION = 'parity-conjugation', _("Parity conjugation")
    IDEAL_SUITE = 'ideal-suite', _("Ideal suite")
    CONVENTION_AUDIT = 'convention-audit', _("Convention audit")
