from django.db import models


class BaseTextChoices(models.TextChoices):
    """
    TextChoices with helpers for parsing user-supplied values.
    """

    @classmethod
    def get_available_choices(cls) -> str:
        """
        Returns the accepted values, comma separated, for error messages.
        """
        return ', '.join(str(choice.value) for choice in cls)

    @classmethod
    def coerce(cls, value, error=ValueError):
        """
        Returns the member for ``value`` (a member or its string value).

        Raises:
            error: ``value`` is not one of the choices; the message lists
                the accepted values.
        """
        try:
            return cls(value)
        except ValueError:
            raise error(
                f"{value!r} is not one of: {cls.get_available_choices()}"
            ) from None
