"""Typing modules"""
from typing import TypedDict


class Bounds(TypedDict):
    """Size limits"""
    max_degree: int
    max_t: int
    max_lattice: int
    max_order: int
    max_tower_steps: int


class Config(TypedDict):
    """System configuration"""
    bounds: Bounds
    progress: bool
    log_level: str


class TripleJSON(TypedDict):
    """Serialized admissible triple"""
    J: list[int]
    P: dict[str, str]
    H: list[str] | list[list[int]]


class ElementJSON(TypedDict):
    """Serialized lattice element"""
    triple: TripleJSON
    family: str
    order: int
    sign_patterns: list[list[int]]


class CensusJSON(TypedDict):
    """Family counts"""
    sub_products: int
    sign_parity: int
    mixed: int
    total: int


class LatticeJSON(TypedDict):
    """Serialized lattice"""
    spec: str
    elements: list[ElementJSON]
    census: CensusJSON
    hasse: list[tuple[int, int]]


class AutReport(TypedDict):
    """Product Formula verification"""
    spec: str
    predicted_order: int
    brute_force_order: int
    constructive_order: int
    match: bool
    generators: list[str]


class OracleReport(TypedDict):
    """Differential validation against the permutation oracle"""
    spec: str
    oracle_count: int
    lattice_count: int
    pairs_checked: int
    match: bool


class StepReport(TypedDict):
    """Tower step cross-check"""
    node: str
    predicted: str
    predicted_order: int
    brute_force_order: int | None
    match: bool | None
