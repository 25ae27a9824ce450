"""Synthesis and checking of Hamiltonians that map the vacuum onto a chosen
finite superposition of number states."""

from .errors import (
    DimensionError,
    FockgenError,
    HermiticityError,
    NormalizationError,
    TruncationError,
    UnsupportedError,
)
from .families import (
    BinomialSpec,
    binomial_target,
    coherent_limit_fidelity,
    coherent_reference,
    kilin_horoshko_generator,
)
from .fock import (
    FidelityTrace,
    FockOperator,
    StateVector,
    apply,
    evolve,
    fidelity,
    ladder_matrix,
    number_state,
    vacuum,
)
from .generator import (
    NormalForm,
    TargetState,
    build_generator,
    build_projector_form,
    fidelity_trace,
    normal_form_of_generator,
    normal_order_number_poly,
    normalize,
)
from .interpolation import InterpolationPolynomial, eval_poly, product_form, solve_vandermonde
from .physical import (
    IonSpec,
    SusceptibilityReport,
    compare_ion_generator,
    ion_f,
    ion_hamiltonian,
    ion_lamb_dicke_approx,
    susceptibility_requirements,
)

__version__ = "0.1.0"
