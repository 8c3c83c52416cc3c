"""
Report service shared by the CLI and the HTTP API
"""
import logging
import re
from typing import Dict, List, Optional, Tuple

from app.core.config import settings
from app.core.exceptions import (
    ArithmeticInputError, GenusOutOfRangeError, IndexOutOfRangeError,
    KRStrataError, NotPermissibleError, NotSuperspecialError,
)
from app.models.group import GroupContext
from app.models.stratum import StratumRecord
from app.schemas.counts import CountsResponse, SuperspecialComponentRow, VerifyCheck, VerifyResponse
from app.schemas.stratum import StratumReportRow, TableResponse, TableRow
from app.services import admissible_enum, hermitian_oracle, point_counts, stratum_invariants, weyl_core
from app.services.alcove_model import alcove_of, is_mu_permissible

logger = logging.getLogger(__name__)

# Counts of Adm(mu) and of its p-rank 0 part, g = 1..6
KNOWN_STRATA_COUNTS = {1: 3, 2: 13, 3: 79, 4: 633, 5: 6331, 6: 75973}
KNOWN_PRANK_ZERO_COUNTS = {1: 1, 2: 5, 3: 29, 4: 233, 5: 2329, 6: 27949}
KNOWN_SUPERSPECIAL_DIMENSIONS = {1: 0, 2: 2, 3: 3, 4: 8, 5: 10, 6: 18}

# g = 3 rows: word in front of tau -> (sigma_02, sigma'_02, sigma_03, sigma'_03, d_12)
GOLDEN_INVARIANTS_G3: Dict[Tuple[int, ...], Tuple[int, ...]] = {
    (): (2, 2, 3, 3, 2),
    (2, 3): (2, 1, 3, 2, 3),
    (1,): (2, 2, 3, 3, 2),
    (0, 1): (1, 2, 2, 3, 2),
    (2, 0, 1): (1, 2, 2, 3, 3),
}

HERMITIAN_CASES = [(1, 2), (2, 2), (2, 3), (3, 2), (3, 3)]
MASS_PRIMES = (2, 3, 5)


def parse_word(text: str) -> List[int]:
    """'2 0 1' or '2,0,1' -> [2, 0, 1]"""
    tokens = [t for t in re.split(r"[\s,]+", text.strip()) if t]
    try:
        return [int(t) for t in tokens]
    except ValueError:
        raise IndexOutOfRangeError(f"word must be a list of integers, got {text!r}")


def mass_level(p: int) -> int:
    """Level used for the integrality sweep: 3, or 4 when p = 3"""
    return 4 if p == 3 else 3


def golden_invariants(record: StratumRecord) -> Tuple[int, ...]:
    table = record.r_table
    return (
        table.sigma[(0, 2)], table.sigma_prime[(0, 2)],
        table.sigma[(0, 3)], table.sigma_prime[(0, 3)],
        table.d[(1, 2)],
    )


class ReportService:
    """Builds the table, enumeration, per-stratum, count and verification reports"""

    def _row(self, record: StratumRecord, component_count: Optional[int] = None) -> StratumReportRow:
        return StratumReportRow(
            g=record.g,
            word=list(record.word.letters),
            length=record.dim,
            p_rank=record.p_rank,
            superspecial_at=sorted(record.superspecial_at),
            is_supersingular=record.is_supersingular,
            r_table=record.r_table.flatten(),
            component_count=component_count,
        )

    def table(self, g_max: int) -> TableResponse:
        if not 1 <= g_max <= settings.MAX_GENUS:
            raise GenusOutOfRangeError(f"g_max must lie in 1..{settings.MAX_GENUS}, got {g_max}")
        rows = []
        for g in range(1, g_max + 1):
            records = admissible_enum.enumerate_admissible(g)
            rows.append(TableRow(
                g=g,
                strata_count=len(records),
                prank_zero_count=admissible_enum.p_rank_histogram(g)[0],
                superspecial_union_dimension=stratum_invariants.superspecial_union_dimension(g)[0],
                prank_zero_dimension=admissible_enum.prank_zero_dimension(g),
                max_length=max(rec.dim for rec in records),
            ))
        return TableResponse(rows=rows)

    def enumerate(self, g: int, p_rank: Optional[int] = None) -> List[StratumReportRow]:
        """All strata ordered by (length, alcove)"""
        records = admissible_enum.enumerate_admissible(g)
        if p_rank is not None:
            records = [rec for rec in records if rec.p_rank == p_rank]
        records = sorted(records, key=lambda rec: (rec.dim, rec.alcove.flat()))
        return [self._row(rec) for rec in records]

    def stratum(self, g: int, word: str, p: Optional[int] = None, N: Optional[int] = None) -> StratumReportRow:
        """Report for s_{l_1} ... s_{l_k} tau; non-reduced words are reduced with a warning"""
        if not 1 <= g <= settings.MAX_GENUS:
            raise GenusOutOfRangeError(f"genus must lie in 1..{settings.MAX_GENUS}, got {g}")
        if (p is None) != (N is None):
            raise ArithmeticInputError("p and N must be given together")
        letters = parse_word(word)
        ctx = GroupContext.symplectic(g)
        x = weyl_core.evaluate_word(ctx, letters, weyl_core.tau(ctx))
        reduced = weyl_core.reduced_word(x)
        if len(reduced) < len(letters):
            logger.warning(f"word {letters} is not reduced; reporting s_{list(reduced.letters)} tau")

        alcove = alcove_of(x)
        if not is_mu_permissible(alcove):
            raise NotPermissibleError(f"{x} (word {letters}) is not mu-admissible for {ctx}")
        record = StratumRecord(alcove)

        component_count = None
        if p is not None:
            if not record.superspecial_at:
                raise NotSuperspecialError(f"word {letters}: stratum is not superspecial")
            w = weyl_core.compose(x, weyl_core.inverse(weyl_core.tau(ctx)))
            component_count = point_counts.kr_connected_components(w, g, p, N)
        return self._row(record, component_count)

    def counts(self, g: int, p: int, N: int) -> CountsResponse:
        if not 1 <= g <= settings.MAX_GENUS:
            raise GenusOutOfRangeError(f"genus must lie in 1..{settings.MAX_GENUS}, got {g}")
        mass = point_counts.lambda_mass(g, p, N)
        strata = point_counts.superspecial_component_report(g, p, N)
        return CountsResponse(
            g=g, p=p, N=N,
            lambda_mass=int(mass),
            unitary_flag_count=point_counts.unitary_flag_count(g, p),
            a_tau_count=point_counts.a_tau_count(g, p, N),
            superspecial_strata=[SuperspecialComponentRow(**entry) for entry in strata],
        )

    def verify(self, g_max: int = 4) -> VerifyResponse:
        """Run every cross-check up to g_max; a check that raises counts as failed"""
        if not 1 <= g_max <= settings.MAX_GENUS:
            raise GenusOutOfRangeError(f"g_max must lie in 1..{settings.MAX_GENUS}, got {g_max}")
        checks = []
        for name, check in (
            ("admissible_equals_permissible", self._check_oracle),
            ("strata_counts", self._check_counts),
            ("golden_invariants_g3", self._check_golden),
            ("superspecial_dimensions", self._check_superspecial_dimensions),
            ("structural_properties", self._check_structure),
            ("invariants_separate_strata", self._check_injectivity),
            ("unitary_flag_identity", self._check_flag_identity),
            ("isotropic_flags", self._check_isotropic_flags),
            ("sesquilinearity", self._check_sesquilinearity),
            ("mass_integrality", self._check_mass),
        ):
            try:
                passed, detail = check(g_max)
            except KRStrataError as e:
                passed, detail = False, f"{type(e).__name__}: {e}"
            if passed:
                logger.info(f"check {name} passed: {detail}")
            else:
                logger.error(f"check {name} failed: {detail}")
            checks.append(VerifyCheck(name=name, passed=passed, detail=detail))
        return VerifyResponse(checks=checks, passed=all(c.passed for c in checks))

    def _check_oracle(self, g_max: int) -> Tuple[bool, str]:
        top = min(g_max, settings.ORACLE_MAX_GENUS)
        for g in range(1, top + 1):
            permissible = {rec.element for rec in admissible_enum.enumerate_admissible(g)}
            if permissible != admissible_enum.enumerate_admissible_oracle(g):
                return False, f"g={g}: Bruhat cone differs from the permissible set"
        return True, f"g=1..{top}"

    def _check_counts(self, g_max: int) -> Tuple[bool, str]:
        for g in range(1, g_max + 1):
            total = len(admissible_enum.enumerate_admissible(g))
            zero = admissible_enum.p_rank_histogram(g)[0]
            if (total, zero) != (KNOWN_STRATA_COUNTS[g], KNOWN_PRANK_ZERO_COUNTS[g]):
                return False, f"g={g}: {total} strata, {zero} of p-rank 0"
        return True, f"g=1..{g_max}"

    def _check_golden(self, g_max: int) -> Tuple[bool, str]:
        ctx = GroupContext.symplectic(3)
        by_element = {rec.element: rec for rec in admissible_enum.enumerate_admissible(3)}
        for letters, expected in GOLDEN_INVARIANTS_G3.items():
            x = weyl_core.evaluate_word(ctx, letters, weyl_core.tau(ctx))
            if x not in by_element:
                return False, f"word {list(letters)} is not admissible"
            got = golden_invariants(by_element[x])
            if got != expected:
                return False, f"word {list(letters)}: {got} != {expected}"
        return True, f"{len(GOLDEN_INVARIANTS_G3)} rows"

    def _check_superspecial_dimensions(self, g_max: int) -> Tuple[bool, str]:
        for g, expected in KNOWN_SUPERSPECIAL_DIMENSIONS.items():
            dim, argmax = stratum_invariants.superspecial_union_dimension(g)
            if dim != expected or len(argmax) != 1:
                return False, f"g={g}: dimension {dim} attained at {sorted(argmax)}"
        return True, f"g=1..{max(KNOWN_SUPERSPECIAL_DIMENSIONS)}"

    def _check_structure(self, g_max: int) -> Tuple[bool, str]:
        top = min(g_max, settings.INVARIANT_CHECK_MAX_GENUS)
        for g in range(1, top + 1):
            records = admissible_enum.enumerate_admissible(g)
            tau = weyl_core.tau(GroupContext.symplectic(g))
            histogram = admissible_enum.length_histogram(g)
            if histogram[-1] != 2 ** g or histogram[0] != 1:
                return False, f"g={g}: length histogram {histogram}"
            if not any(rec.dim == 0 and rec.element == tau for rec in records):
                return False, f"g={g}: tau missing at length 0"
            for rec in records:
                if rec.is_supersingular and rec.p_rank != 0:
                    return False, f"g={g}: supersingular stratum {rec.element} has positive p-rank"
                if rec.superspecial_at != stratum_invariants.superspecial_indices_by_support(rec.element):
                    return False, f"g={g}: superspecial tests disagree at {rec.element}"
        return True, f"g=1..{top}"

    def _check_injectivity(self, g_max: int) -> Tuple[bool, str]:
        top = min(g_max, settings.INVARIANT_CHECK_MAX_GENUS)
        for g in range(1, top + 1):
            if not stratum_invariants.invariants_separate_strata(g):
                return False, f"g={g}: two strata share an r-table"
        return True, f"g=1..{top}"

    def _check_flag_identity(self, g_max: int) -> Tuple[bool, str]:
        for g in range(1, settings.FLAG_IDENTITY_MAX_GENUS + 1):
            twisted = point_counts.twisted_flag_polynomial(point_counts.symmetric_group(g), point_counts.flip(g))
            closed = point_counts.unitary_flag_polynomial(g)
            if twisted != closed:
                return False, f"g={g}: {twisted} != {closed}"
        return True, f"g=1..{settings.FLAG_IDENTITY_MAX_GENUS}"

    def _check_isotropic_flags(self, g_max: int) -> Tuple[bool, str]:
        for g, q in HERMITIAN_CASES:
            oracle = hermitian_oracle.isotropic_flag_count(g, q)
            formula = point_counts.unitary_flag_count(g, q)
            if oracle != formula:
                return False, f"g={g}, q={q}: {oracle} isotropic flags, formula gives {formula}"
        return True, f"{len(HERMITIAN_CASES)} cases"

    def _check_sesquilinearity(self, g_max: int) -> Tuple[bool, str]:
        for g, q in HERMITIAN_CASES:
            if not hermitian_oracle.sesquilinearity_holds(hermitian_oracle.hermitian_space(g, q)):
                return False, f"g={g}, q={q}: form is not sesquilinear"
        return True, f"{len(HERMITIAN_CASES)} cases"

    def _check_mass(self, g_max: int) -> Tuple[bool, str]:
        top = min(g_max, settings.INVARIANT_CHECK_MAX_GENUS)
        # integrality is asserted inside the count functions
        for g in range(1, top + 1):
            for p in MASS_PRIMES:
                N = mass_level(p)
                point_counts.a_tau_count(g, p, N)
                point_counts.superspecial_component_report(g, p, N)
        return True, f"g=1..{top}, p in {list(MASS_PRIMES)}"
