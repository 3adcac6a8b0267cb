from django.utils.translation import gettext_lazy as _

from core.models.helper.enums.base_textchoice import BaseTextChoices


class Index_Method_Choices(BaseTextChoices):
    """
    Index_Method_Choices represents how a Fredholm index was estimated.

    Attributes:
        DEFICIENCY (str, str)
        WINDING (str, str)
    """

    DEFICIENCY = 'deficiency', _("Deficiency")
    WINDING = 'winding', _("Winding")
