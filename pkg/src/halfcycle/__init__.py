"""halfcycle: simulate and verify half-cycle transient measurement of
periodic Turing computations.

The package covers the full pipeline: deterministic Turing machines and
traces (machine), waiting cycles over halting traces (cycle), orbit
spectra and half-cycle amplitude profiles including bounded-energy
spectrum packing (spectral, packing), the simulated measurement and retry
procedures (measure), random-implementation statistics (ensemble), the
evolution-cost gauge (complexity), and shared-orbit obstruction
certificates (schrodinger).
"""

from .complexity import (APERIODIC_MEAN_ABS_PHASE, BoundReport, ComplexityReading,
                         check_lower_bound, complexity, zero_count)
from .cycle import (CycleReport, CycleState, LabeledCycle, alpha_for_period,
                    build_alpha_cycle, centered_window, cycle_result, verify_cycle)
from .ensemble import (DENSITIES, ContinuousNu, DensitySpec, StatsReport, StatsRow,
                       YSample, continuous_nu, get_density, nu_from_y, sample_y,
                       moment_experiment)
from .errors import (CapacityError, ConsistencyError, HalfcycleError,
                     MachineSpecError, PreconditionError)
from .machine import (Configuration, TMSpec, Trace, decode_result, initial_config,
                      load_machine, run, save_machine, step, tape_content)
from .measure import (BatchSummary, HaltingVerdict, MeasurementOutcome, RunReport,
                      halting_demo, majority_error_bound, repeat_error_free,
                      run_error_bounded, run_error_free, sample_outcome)
from .schrodinger import (GridFunctionSet, ObstructionAbsence, ObstructionCertificate,
                          chirped_pair, identical_pair, kinetic_form, make_grid_set,
                          obstruction_certificate, read_grid_functions,
                          write_grid_function_csv)
from .spectral import (AmplitudeProfile, OrbitSpectrum, PackedInstance, PackedSpectra,
                       aperiodic_spectrum, eigenbasis, halfstep_profile_aperiodic,
                       halfstep_profile_periodic, minimal_periodic_spectrum, nu_of,
                       overlap_at, pack_spectrum)

__version__ = "0.1.0"
