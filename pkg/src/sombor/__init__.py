"""Exact second Sombor index toolkit.

Computes the second Sombor index and companion vertex-degree-based
indices in exact rational arithmetic, enumerates all non-isomorphic
(molecular) trees of a given order, constructs and verifies the
extremal molecular-tree families, and reproduces the octane-isomer
property regressions.
"""

from .graphs import (Graph, EdgeTypeProfile, degrees, edge_type_profile,
                     format_edge_list, is_molecular_tree, is_tree,
                     parse_edge_list)
from .indices import (KERNELS, IndexValue, VdbKernel, neighborhood_zagreb,
                      so2, so2_from_profile, so2_upper_bound, vdb_index)
from .enumeration import (argmax_so2, argmin_so2, enumerate_molecular_trees,
                          enumerate_trees, enumeration_cap)
from .extremal import (FAMILIES, BoundCheck, FamilySignature,
                       InconsistentProfileError, SolvedDegreeSystem,
                       VerificationReport, build_family_member, build_path,
                       build_star, degree_three_edge_splits,
                       degree_three_penalty, is_in_family,
                       molecular_so2_max, solve_degree_system,
                       so2_via_degree_system, tree_so2_bounds,
                       verify_extremal_bounds)
from .chem import (DatasetError, MoleculeRecord, SmilesError,
                   alkane_to_smiles, load_dataset, octane_dataset_path,
                   parse_alkane_smiles, so2_table)
from .qspr import (INDEX_NAMES, RegressionFit, correlation_grid, fit_property,
                   index_value, linear_fit)

__version__ = "0.1.0"

__all__ = [
    "Graph", "EdgeTypeProfile", "degrees", "edge_type_profile",
    "format_edge_list", "is_molecular_tree", "is_tree", "parse_edge_list",
    "KERNELS", "IndexValue", "VdbKernel", "neighborhood_zagreb", "so2",
    "so2_from_profile", "so2_upper_bound", "vdb_index",
    "argmax_so2", "argmin_so2", "enumerate_molecular_trees",
    "enumerate_trees", "enumeration_cap",
    "FAMILIES", "BoundCheck", "FamilySignature", "InconsistentProfileError",
    "SolvedDegreeSystem", "VerificationReport", "build_family_member",
    "build_path", "build_star", "degree_three_edge_splits",
    "degree_three_penalty", "is_in_family", "molecular_so2_max",
    "solve_degree_system", "so2_via_degree_system", "tree_so2_bounds",
    "verify_extremal_bounds",
    "DatasetError", "MoleculeRecord", "SmilesError", "alkane_to_smiles",
    "load_dataset", "octane_dataset_path", "parse_alkane_smiles", "so2_table",
    "INDEX_NAMES", "RegressionFit", "correlation_grid", "fit_property",
    "index_value", "linear_fit",
    "__version__",
]
