"""
markedmcg - Mapping class groups of marked surfaces and their cluster automorphisms

markedmcg builds finite presentations of mapping class groups of marked surfaces
stabilizing boundaries, computes with the tagged mapping class group that acts on the
cluster algebra of a surface, and checks the presentations through faithful braid
actions, finite quotients and the flip/mutation correspondence.

Key Features:
- Classification of marked surfaces and the quotient surface
- Braid, pure braid, sphere and surface presentations over Artin groups
- Exchange matrices, seeds and tagged triangulations with flips
- Dynnikov braid action and mapping classes realized on seeds
- Group law of the tagged mapping class group and the exceptional groups
- Concurrent verification suites behind a batch command line

Example:
    >>> from markedmcg import MarkedSurface, classify
    >>> str(classify(MarkedSurface.create(0, (), 4)))
    'FourPuncturedSphere'

    Or from command line:
    $ markedmcg verify --suite braid --max-n 3 --samples 1
"""

__version__ = "0.1.0"

# Core imports for package functionality
from .autgroup import TaggedMCG, TaggedMCGElement, aut_group_descriptor
from .cluster import Seed, mutate_matrix
from .data_structures import CheckResult, RunConfig, SharedReportBuffer
from .presentations import mcg_presentation
from .suite_runner import SuiteRunner, run_suites
from .surface import MarkedSurface, SurfaceKind, classify
from .triangulation import TaggedTriangulation
from .words import Presentation, Word, abelianization

# Command-line entry point
from .main import main

__all__ = [
    # Version
    "__version__",
    # Surfaces
    "MarkedSurface",
    "SurfaceKind",
    "classify",
    # Groups and presentations
    "Word",
    "Presentation",
    "abelianization",
    "mcg_presentation",
    # Cluster side
    "Seed",
    "mutate_matrix",
    "TaggedTriangulation",
    # Cluster automorphisms
    "TaggedMCG",
    "TaggedMCGElement",
    "aut_group_descriptor",
    # Verification
    "CheckResult",
    "RunConfig",
    "SharedReportBuffer",
    "SuiteRunner",
    "run_suites",
    "main",
]
