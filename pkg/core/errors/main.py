from typing import Any, Dict, Optional

from rest_framework import serializers
from rest_framework.fields import CharField, IntegerField


class CustomErrorSerializer:
    """Descriptor of one error the tool can report.

    ``status`` is the process exit status the CLI uses for the error.
    """

    def __init__(
        self,
        code: int,
        title: str,
        detail: str,
        status: int = 1,
        extra: Optional[Dict[str, Any]] = None,
    ):
        self.code = code
        self.title = title
        self.detail = detail
        self.status = status
        self.extra = extra or {}

        self.fields = {
            'code': IntegerField(default=self.code),
            'title': CharField(default=self.title),
            'detail': CharField(default=self.detail),
            'status': IntegerField(default=self.status),
            **{
                key: CharField(default=str(value))
                for key, value in self.extra.items()
            },
        }

    def __call__(self):
        name = self.title.replace(' ', '') + 'ErrorSerializer'
        return type(name, (serializers.Serializer,), dict(self.fields))

    def to_representation(self) -> Dict[str, Any]:
        serializer = self()(data={})
        serializer.is_valid(raise_exception=True)
        return dict(serializer.validated_data)
