"""rednum: reduction numbers of graded modules, exactly, over prime fields.

The package is organised as a small tower:

polyring
    Homogeneous polynomials over Z/p under the fixed degrevlex order.
groebner
    Buchberger's algorithm, normal forms, minimal generating sets.
hilbert
    Hilbert series over (1 - t)^n, Krull dimension, top nonzero degree;
    every module is a subquotient (U + K)/K.
reductions
    Reductions by seeded generic linear forms: r_J, r(M), and the two
    families r(I^a M) and r(M / I^a M).
koszul
    Graded Betti numbers via Koszul homology, and regularity.
asymptotics
    Grid sweeps, dimension stationarity checks, exact max-of-linear model
    fitting with slopes from the generator-degree alphabet, per-axis slope
    reports, and the one-step recursion cross-check.
problems / cli
    Line-oriented input files and the ``rednum`` command-line tool with
    bit-stable CSV/JSON outputs.
"""

from .asymptotics import (
    CellRecord,
    LinearPiece,
    NotYetAsymptotic,
    PiecewiseLinearModel,
    RecursionReport,
    RhoReport,
    StationarityReport,
    SweepTable,
    check_stationary,
    fit_max_linear,
    out_of_sample_check,
    recursion_check,
    rho_report,
    slope_sets,
    sweep,
)
from .groebner import (
    GradedIdeal,
    MonomialIdeal,
    buchberger,
    initial_ideal,
    minimalize,
    normal_form,
)
from .hilbert import NEG_INF, HilbertSeries, Subquotient, hs_monomial, hs_quotient_ring
from .koszul import BettiTable, component_basis, koszul_betti, regularity
from .polyring import ParseError, Polynomial, PrimeField, Ring
from .problems import ProblemError, ProblemFile, parse_problem
from .reductions import (
    GenericityError,
    LinearSystem,
    ReductionResult,
    derive_seed,
    is_reduction,
    multipower,
    r_J,
    r_power,
    r_quotient,
    random_linear_system,
    reduction_number,
)

__version__ = "0.1.0"
