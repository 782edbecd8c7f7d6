"""Non-retarded dispersion coefficients for small spheres in media.

Computes the two-sphere C6 and sphere-mirror C3 coefficients for the
Abraham and Maxwell stress-tensor prescriptions, the microscopic
many-body counterparts (van der Waals pairs, Axilrod-Teller triplets,
Hamaker summation), and the independent numerical oracles used to check
them against each other.
"""

__version__ = "0.1.0"

from .constants import C_LIGHT, EPS0, HBAR, MU0
from .errors import ConfigError, ConvergenceError, DivergentIntegralError
from .materials import (ConstantResponse, LorentzPolarisability,
                        MolecularSpecies, Oscillator, OscillatorResponse,
                        ResponseFunction, TabulatedResponse,
                        clausius_mossotti_dilute, eval_response,
                        scale_susceptibility, susceptibility, validate_decay)
from .polarisability import MediumSpec, SphereSpec, excess_alpha, excess_beta
from .quadrature import QuadratureSpec, integrate_semiinfinite, suggest_scale
from .dispersion import (C6Breakdown, StressChoice, TwoSphereSystem, c3,
                         c3_integrand, c6, c6_from_polarisabilities,
                         c6_integrand, c6_integrand_terms, duality_transform,
                         force, potential)
from .microscopic import (ChiTriple, TripletGeometry, at_kernel,
                          axilrod_teller, c6_hamaker, c6_threeparticle,
                          species_chi_triple, vdw_pair)
from .oracles import (ConsistencyReport, ExpansionReport, MonteCarloSpec,
                      at_medium_mc, expand_c6_integrand, hamaker_lattice_sum,
                      verify_consistency)
from .config import SystemConfig, parse_config
from .verification import (check_correspondence, check_duality,
                           check_microscopic)
