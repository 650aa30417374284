"""Base model for all configuration models."""

from __future__ import annotations

from typing import Any

from pydantic import BaseModel as PydanticBaseModel
from pydantic import ConfigDict
from pydantic import ValidationInfo
from pydantic import field_validator

ON_OFF = {"ON": True, "OFF": False}


class BaseModel(PydanticBaseModel):
    """Config section. Unknown keys are ignored and assignments are validated."""

    model_config = ConfigDict(validate_assignment=True, extra="ignore")

    @field_validator("*", mode="before")
    @classmethod
    def _on_off_bool(cls, v: Any, info: ValidationInfo) -> Any:
        """Accept ON/OFF in any case for boolean options."""
        if not isinstance(v, str) or info.field_name is None:
            return v
        field = cls.model_fields.get(info.field_name)
        if field is None or field.annotation is not bool:
            return v
        return ON_OFF.get(v.strip().upper(), v)
