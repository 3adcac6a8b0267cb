from django.utils.translation import gettext_lazy as _

from core.models.helper.enums.base_textchoice import BaseTextChoices


class Provenance_Choices(BaseTextChoices):
    """
    Provenance_Choices tells where the samples of a grid symbol came from.

    Attributes:
        SAMPLED (str, str)
        TRANSFORM (str, str)
    """

    SAMPLED = 'sampled', _("Sampled")
    TRANSFORM = 'transform', _("Transform")
