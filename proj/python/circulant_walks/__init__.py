"""Continuous-time quantum walks on circulant graphs.

Thin Python layer over the C++ core: graph construction, spectra,
transition amplitudes, lattice scans and the state-transfer classifier.
"""

import csv as _csv

from ._core import (
    CirculantError,
    CirculantGraph,
    Spectrum,
    best_time_on_lattice,
    classify,
    cycle_eigenvalue,
    distinct_positive_cycle_eigenvalues,
    divisor_profile,
    fidelity,
    gcd_class,
    graph_from_json,
    half_turn_targets,
    is_gcd_set,
    is_periodic_at,
    kronecker_solve,
    make_graph,
    parity_conflicts,
    parse_connection_set,
    product_law_check,
    scan_lattice,
    spectrum,
    symmetric_sets,
    theorem_hypotheses,
    transition_entry,
    transition_matrix,
    verify_classification,
)

SCAN_CSV_HEADER = ["q", "t", "re", "im", "fidelity"]


def read_scan_csv(path):
    """Load a scan CSV written by ``circulant scan`` into column lists."""
    with open(path, newline="", encoding="utf-8") as fh:
        reader = _csv.reader(fh)
        header = next(reader)
        if header != SCAN_CSV_HEADER:
            raise ValueError(f"unexpected scan CSV header {header}")
        cols = {name: [] for name in header}
        for row in reader:
            cols["q"].append(int(row[0]) if row[0] else None)
            for name, value in zip(header[1:], row[1:]):
                cols[name].append(float(value))
    return cols


__all__ = [name for name in dir() if not name.startswith("_")]
