"""Plain domain types (no database tables)."""

from .fock import FockSpec, FockVector, OperatorMatrix, PhasePoint
from .fredholm import BandProfile, FamilyMember, IndexEstimate
from .parity import ContinuityProfile, EvenOddSplit, SubspaceSplit
from .phase import ConventionParams, FourierFit, Grid, GridSymbol
from .report import ExperimentReport, Verdict
from .symbol import QuadratureScheme, SymbolFn
from .config import ExperimentConfig
