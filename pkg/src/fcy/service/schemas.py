"""Request and response bodies.  The CLI validates its flags through the
same models before calling a handler."""
from __future__ import annotations

from typing import Literal, Optional

from pydantic import BaseModel, ConfigDict, Field, model_validator

from ..lattice import DEFAULT_CAP

Variant = Literal["u", "v", "w"]


class Instance(BaseModel):
    model_config = ConfigDict(extra="forbid")

    m: int = Field(ge=1)
    n: int = Field(ge=0)
    cap: int = Field(default=DEFAULT_CAP, ge=1)


class LatticeRequest(Instance):
    pass


class CoxeterRequest(Instance):
    pass


class HomRequest(Instance):
    pass


class AntichainRequest(Instance):
    alpha: Optional[list[int]] = None


class AlphaRequest(Instance):
    alpha: list[int]

    @model_validator(mode="after")
    def _length(self):
        if len(self.alpha) != self.m:
            raise ValueError(f"alpha needs {self.m} entries, got {len(self.alpha)}")
        return self


class ResolveRequest(AlphaRequest):
    pass


class OrbitRequest(AlphaRequest):
    pass


class PresentationRequest(Instance):
    variant: Variant = "u"


class AuslanderRequest(BaseModel):
    model_config = ConfigDict(extra="forbid")

    s: int = Field(ge=1)
    d: int = Field(ge=0)
    dual: bool = False
    m: Optional[int] = Field(default=None, ge=1)
    n: Optional[int] = Field(default=None, ge=1)


class VerifyRequest(BaseModel):
    model_config = ConfigDict(extra="forbid")

    m: Optional[int] = Field(default=None, ge=1)
    n: Optional[int] = Field(default=None, ge=0)
    jobs: int = Field(default=1, ge=1, le=64)
    timings: bool = False


class Payload(BaseModel):
    """Every response: the versioned envelope plus command-specific fields."""
    model_config = ConfigDict(extra="allow", populate_by_name=True)

    schema_tag: str = Field(alias="schema")
    command: str
    ok: bool


REQUESTS = {
    "lattice": LatticeRequest, "antichain": AntichainRequest, "resolve": ResolveRequest,
    "hom": HomRequest, "orbit": OrbitRequest, "coxeter": CoxeterRequest,
    "presentation": PresentationRequest, "auslander": AuslanderRequest, "verify": VerifyRequest,
}
