"""Registry of the verification suites the CLI can run."""

from __future__ import annotations

import importlib
from dataclasses import dataclass

from .exactfield import NumberField
from .report import ReportEntry, Verdict


@dataclass(frozen=True)
class SuiteDescriptor:
    name: str
    module: str
    checks: tuple
    field: str | None
    anchor: str

    def run(self, field: NumberField | None = None, seed: int = 0) -> list[ReportEntry]:
        mod = importlib.import_module(f"wimanedge.{self.module}")
        return mod.suite(field=field, seed=seed)


SUITES = (
    SuiteDescriptor("exactfield", "exactfield",
                    ("nf_make", "arithmetic", "constants", "field_axioms"),
                    None, "number fields, the named constants and randomized field axioms"),
    SuiteDescriptor("mpoly", "mpoly",
                    ("poly_arith", "substitute", "divide_exact", "jacobian_det", "restrict_to_line",
                     "sylvester_resultant", "smoothness_certificate", "local_intersection_multiplicity"),
                    "Q(zeta15)", "sparse polynomials, resultants, smoothness and intersection multiplicities"),
    SuiteDescriptor("pencil", "pencil",
                    ("generators", "linear_symmetry", "generic_member_odd", "cremona_cofactor",
                     "cremona_involution", "base_locus", "bezout", "node_contribution", "tangent_cones",
                     "biflex", "wiman_smooth", "singular_members", "printed_singular_list", "genus_ledger",
                     "reducible_members", "projection_jacobian", "membership"),
                    "Q(zeta15)", "plane sextic model: symmetries, base locus, singular and reducible members"),
    SuiteDescriptor("delpezzo", "delpezzo",
                    ("lattice", "line_labels", "petersen", "s5_action", "complementary_pentagons",
                     "conic_bundles", "chern", "euler_ledger", "pentagon_products", "pentagon_rank",
                     "pentagon_relations", "pentagon_quadrics"),
                    "Q", "quintic del Pezzo surface: lines, conic bundles, Chern numbers, pentagon cubics"),
    SuiteDescriptor("groups", "groups",
                    ("closure", "orthogonality", "squaring_map", "wedge2_W", "sym2_E", "restriction_E",
                     "lines_character", "axes_character",
                     "bundles_character", "hurwitz", "monodromy"),
                    "Q(sqrt5)", "S5 and A5 characters, Riemann-Hurwitz counts and the monodromy triple"),
    SuiteDescriptor("icosa", "icosa",
                    ("group", "invariant_forms", "jacobian", "dimensions", "decimic_basis", "phi15_squared",
                     "orbit_sizes", "fundamental_conics", "decimic_tangency", "double_cusp_germ"),
                    "Q(sqrt5)", "icosahedral invariants, Molien series and the Klein plane"),
    SuiteDescriptor("moduli", "moduli",
                    ("moebius_from_three", "cross_ratio", "C2odd", "C2ev", "C4", "D4odd", "S3ev", "D8", "C6",
                     "D10", "orbit_census", "forgetful"),
                    None, "stable 5-pointed lines: stabilizers, irregular orbits, forgetful maps"),
    SuiteDescriptor("binquintic", "binquintic",
                    ("operators", "kernel_dimensions", "annihilated", "sl2_invariance", "discriminant",
                     "discriminant_membership", "relation", "clebsch_vanishing", "cone_monomials"),
                    "Q", "binary quintic invariants I4, I8, I12, I18 and their relations"),
)

SUITE_NAMES = tuple(s.name for s in SUITES)


def get_suite(name: str) -> SuiteDescriptor:
    for s in SUITES:
        if s.name == name:
            return s
    raise KeyError(f"unknown suite {name!r}; known: {', '.join(SUITE_NAMES)}")


def run_suites(names=None, field: NumberField | None = None, seed: int = 0) -> list[ReportEntry]:
    """Run suites in registry order, whatever order the names came in."""
    wanted = set(names or SUITE_NAMES)
    for n in wanted:
        get_suite(n)
    out = []
    for s in SUITES:
        if s.name in wanted:
            out.extend(s.run(field, seed))
    return out


def exit_status(entries) -> int:
    bad = (Verdict.FAIL, Verdict.INCONCLUSIVE)
    return 1 if any(e.verdict in bad for e in entries) else 0
