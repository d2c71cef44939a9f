"""Pydantic request/response models for the window-combinatorics service.

All exact numbers cross the wire as strings ("p/q" rationals, "q:+1"
generic reals); floats never appear.
"""

from __future__ import annotations

from typing import Optional

from pydantic import BaseModel, Field


class QuiverModel(BaseModel):
    vertices: list[str]
    edges: list[tuple[str, str]]
    tags: Optional[list[str]] = None


class DescribeRequest(BaseModel):
    quiver: QuiverModel


class DescribeResponse(BaseModel):
    vertices: list[str]
    edge_count: int
    symmetric: bool
    same_parity_loops: bool
    assum1: bool
    assum11: bool
    very_symmetric: bool
    very_symmetric_A: Optional[int]
    alpha_min: int


class BuildRequest(BaseModel):
    quiver: QuiverModel
    op: str = Field(pattern="^(double|triple|frame|companion)$")
    alpha: Optional[int] = None  # frame only
    A: Optional[int] = None      # companion only


class BuildResponse(BaseModel):
    quiver: QuiverModel
    uspec: Optional[list[tuple[str, str]]] = None


class GeneratorsRequest(BaseModel):
    quiver: QuiverModel
    d: dict[str, int]
    delta: Optional[dict[str, list[str]]] = None  # weight JSON
    v: Optional[int] = None                       # shorthand for v * tau_d
    mu: Optional[str] = None                      # generic shift mu * sigma_d
    window: str = Field(default="magic", pattern="^(magic|dd)$")


class GeneratorsResponse(BaseModel):
    generators: list[dict[str, list[str]]]
    count: int


class DecomposeRequest(BaseModel):
    quiver: QuiverModel
    d: dict[str, int]
    chi: dict[str, list[str]]
    delta: Optional[dict[str, list[str]]] = None
    v: Optional[int] = None


class PathStepModel(BaseModel):
    parent: dict[str, int]
    parts: list[dict[str, int]]
    r: str


class DecomposeResponse(BaseModel):
    steps: list[PathStepModel]
    partition: list[dict[str, int]]
    residuals: list[dict[str, list[str]]]
    label: list[tuple[dict[str, int], str]]
    thetas: list[dict[str, list[str]]]
    weight: str


class FramedSodRequest(BaseModel):
    quiver: QuiverModel
    d: dict[str, int]
    mu: str
    alpha: int
    delta: Optional[dict[str, list[str]]] = None
    generator_counts: bool = False


class UnframedSodRequest(BaseModel):
    quiver: QuiverModel
    d: dict[str, int]
    w: int
    window: tuple[str, str]


class PreprojectiveSodRequest(BaseModel):
    quiver: QuiverModel
    d: dict[str, int]
    window: tuple[str, str]


class SodResponse(BaseModel):
    d: dict[str, int]
    window: dict
    labels: list[dict]
    count: int
    generator_total: Optional[int] = None


class ZonotopeRequest(BaseModel):
    quiver: QuiverModel
    d: dict[str, int]
    x: dict[str, list[str]]
    window: str = Field(default="W", pattern="^(W|V)$")
    scale: str = "1"      # membership only
    op: str = Field(default="contains", pattern="^(contains|rinv|boundary)$")


class ZonotopeResponse(BaseModel):
    contains: Optional[bool] = None
    r: Optional[str] = None
    boundary: Optional[bool] = None


class GoodWeightRequest(BaseModel):
    quiver: QuiverModel
    d: dict[str, int]
    delta: dict[str, str]  # per-vertex generic reals


class GoodWeightResponse(BaseModel):
    good: bool


class SupportRequest(BaseModel):
    d: dict[str, int]
    v: int
    quiver: Optional[QuiverModel] = None


class StructureRequest(BaseModel):
    quiver: QuiverModel
    d: dict[str, int]
    v: Optional[int] = None


class KnorrerRequest(BaseModel):
    quiver: QuiverModel
    d: dict[str, int]
    partition: list[dict[str, int]]
    A: Optional[int] = None


class KnorrerResponse(BaseModel):
    ok: bool
    residual: dict[str, list[str]]


class VerifyRequest(BaseModel):
    seed: int = 0
    samples: int = 200


class VerifyCheck(BaseModel):
    name: str
    passed: bool
    detail: str


class VerifyResponse(BaseModel):
    ok: bool
    checks: list[VerifyCheck]
