# Copyright 2026 The davio-synth Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Positive Davio lattice synthesis and qubit layout mapping."""

from ._core import (
    Circuit,
    DavioLattice,
    Error,
    EsopFunction,
    InconsistentReport,
    InvalidArgument,
    LayoutGraph,
    LevelBudgetExceeded,
    MappingReport,
    PlacementInfeasible,
    Synthesis,
    SyntaxError,
    UnknownVariableError,
    build_lattice,
    circuit_from_json,
    cofactor,
    equivalent,
    heavy_hex_layout,
    map_to_layout,
    parse_esop,
    positive_davio_expand,
    predicted_swaps,
    route_swat,
    simulate_classical,
    square_layout,
    sweep_csv,
    symmetric_lattice,
    symmetry_indices,
    synthesize,
    to_anf,
    toffoli_phase_distance,
    triangular_layout,
    verify_synthesis,
)


def synthesize_function(text, vars, strategy="exhaustive-min-levels", max_levels=None):
    """Parse, build the lattice and synthesize in one call."""
    f = parse_esop(text, vars)
    return f, synthesize(build_lattice(f, strategy, max_levels))
