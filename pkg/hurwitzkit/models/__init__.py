"""Data models for HurwitzKit."""

from .abelian import AbelianLGroupType
from .orbit import OrbitRecord
from .stability import StabilizerDescriptor, StabilityReport
from .koszul import KHomologyReport
from .class_group import ClassGroupRecord, CensusSummary
from .experiment import ExperimentKind, CertificationMode, ExperimentConfig, Report, ANCHORS

__all__ = [
    "AbelianLGroupType",
    "OrbitRecord",
    "StabilizerDescriptor",
    "StabilityReport",
    "KHomologyReport",
    "ClassGroupRecord",
    "CensusSummary",
    "ExperimentKind",
    "CertificationMode",
    "ExperimentConfig",
    "Report",
    "ANCHORS",
]
