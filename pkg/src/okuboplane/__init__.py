"""Exact models of the three 8-dimensional real division composition algebras
(octonions, para-octonions, the real Okubo algebra) and the isomorphic
incidence planes built over them."""

from .scalar import CQSqrt3, QSqrt3, ZeroInverse, parse, render
from .algebra import (
    AlgebraKind,
    GramMatrix,
    HermMat3,
    StructureTable,
    Vec8,
    check_identity,
    conjugate_oct,
    gram,
    mul,
    norm,
    polar,
    solve_left,
    solve_right,
    structure_table,
    product_conversion_crosscheck,
    trivolution,
    trivolution_sq,
)
from .plane import (
    AffinePoint,
    FiniteLine,
    InfinityPoint,
    LineAtInfinity,
    Plane,
    SlopePoint,
    VerticalLine,
    VeroneseVec,
    beta,
    qform,
)
from .collineation import (
    Collineation,
    collineation_from_json,
    LinMap8,
    OctReflection,
    Phi,
    PhiInv,
    PPhi,
    PPhiInv,
    Shear,
    Translation,
    Triality,
    compose,
    g2_triple_check,
    transported_reflection,
)
from .theorems import (
    DesarguesConfig,
    desargues_falsify,
    little_desargues_build,
    little_desargues_verify,
    ptr_nonlinearity_witness,
    ptr_theta,
)
from .report import TheoremReport

__all__ = [
    "AffinePoint",
    "AlgebraKind",
    "CQSqrt3",
    "Collineation",
    "DesarguesConfig",
    "FiniteLine",
    "GramMatrix",
    "HermMat3",
    "InfinityPoint",
    "LinMap8",
    "LineAtInfinity",
    "OctReflection",
    "PPhi",
    "PPhiInv",
    "Phi",
    "PhiInv",
    "Plane",
    "QSqrt3",
    "Shear",
    "SlopePoint",
    "StructureTable",
    "TheoremReport",
    "Translation",
    "Triality",
    "Vec8",
    "VerticalLine",
    "VeroneseVec",
    "ZeroInverse",
    "beta",
    "check_identity",
    "collineation_from_json",
    "compose",
    "conjugate_oct",
    "desargues_falsify",
    "g2_triple_check",
    "gram",
    "little_desargues_build",
    "little_desargues_verify",
    "mul",
    "norm",
    "parse",
    "polar",
    "ptr_nonlinearity_witness",
    "ptr_theta",
    "qform",
    "render",
    "solve_left",
    "solve_right",
    "structure_table",
    "product_conversion_crosscheck",
    "transported_reflection",
    "trivolution",
    "trivolution_sq",
]
