from django.utils.translation import gettext_lazy as _

from core.models.helper.enums.base_textchoice import BaseTextChoices


class Continuity_Mode_Choices(BaseTextChoices):
    """
    Continuity_Mode_Choices represents the operator-norm defects a
    continuity profile can measure.

    Attributes:
        SHIFT (str, str): ||W_z A W_z* - A||
        MODULATION (str, str): ||W_z A W_z - A||
        THETA (str, str): ||W_z A W_{-Theta z} - A||
    """

    SHIFT = 'shift', _("Shift")
    MODULATION = 'modulation', _("Modulation")
    THETA = 'theta', _("Theta")
