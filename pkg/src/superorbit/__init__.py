"""Exact-arithmetic nilpotent-orbit analysis for basic classical Lie
superalgebras: gl/sl/psl/osp from super-partitions, the exceptional algebras
D(2,1;a), G(3), F(4), and the reachability / strong reachability / Panyushev
classification machinery."""

from .field import QQ, QALPHA, Polynomial, Rational, RationalFunction, rat
from .linalg import Matrix, Subspace, kernel
from .superalg import (MatrixUnitAlgebra, SuperAlgebra, TableAlgebra,
                       center_of, centralizer, check_super_jacobi,
                       derived_subspace, generated_subalgebra,
                       grade_decompose, quotient)
from .matrixalg import (DynkinPyramid, SuperPartition, build_gl, build_osp,
                        build_psl, build_sl, dim_formulas, epsilon,
                        nilpotent_from_pyramid, osp_decomposition,
                        osp_involution, osp_model, osp_theta, pyramid,
                        xi_basis)
from .exceptional import (build_d21, build_f4, build_g3, orbit_reps,
                          solve_odd_bracket)
from .analysis import (LabelledDiagram, OrbitReport, analyze_partition,
                       is_reachable, is_strongly_reachable,
                       labelled_diagram_typeA, reachability_criterion,
                       satisfies_panyushev, verify_theorem)

__version__ = "0.1.0"
