"""Builders for the explicit witness sublattices and their reference Grams.

Every witness here is spanned by h2 together with one generator per "slot":

* ``U1`` / ``U2`` slots contribute ``e1 + n*e2`` from one hyperbolic plane;
* scaled slots contribute ``m * b`` where ``b`` is either an A2 generator or
  an E8 basis vector and ``n = m**2`` (so the generator has norm ``2n``).

A slot of residue 0 realizes a labelling of discriminant ``6n`` as is.  A slot
of residue 2 additionally receives a perturbation ``p`` from the I3 block with
``p . h2 = 1`` and ``(g + p)**2 = 2n + 1``, which moves the discriminant to
``6n + 2``.  For U and E8 slots the norm constraint forces ``p`` to be one of
the three I3 unit vectors; for A2 slots a bounded box search solves the norm
equation ``2m(b.p) + p.p = 1``.

Two realization modes:

* STRICT searches perturbation assignments whose full Gram reproduces a
  reference matrix entry for entry, and reports the best achievable delta
  when no assignment does.
* GOAL keeps only the per-slot constraints (so labelling discriminants are
  exact by construction) and searches for an assignment whose witness passes
  all four certification checks.  Several configurations provably cannot
  pass; those are detected up front and reported as NOT_REALIZABLE:

  - a scaled slot of residue 0 yields a coordinate column of content m >= 2,
    so the witness is never saturated;
  - two A2 slots plus h2 span the whole rationalized I3 block, so a saturated
    witness would contain the I3 unit vectors of norm 1, violating the
    minimum-norm check;
  - if more than two scaled slots share a prime divisor p of their scales
    (A2 slots count for every p), more than three coordinate columns become
    I3-resident mod p and cannot stay independent in a rank-3 space.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace
from enum import Enum
from typing import Sequence

from .criteria import satisfies_double_star, satisfies_star
from .lattice import (
    A1,
    A2,
    AmbientVector,
    H_SQUARED,
    Sublattice,
    e_vec,
    gram_of,
    i3_unit,
    i3_vector,
    inner_product,
    is_saturated,
    minimum,
    t_vec,
)
from .linalg import IntMatrix, integer_rank, is_positive_definite, quadratic_form
from .lattice import coordinate_matrix

SEARCH_NODE_CAP = 200_000


class CaseId(str, Enum):
    """Named witness constructions, keyed by rank and residue pattern mod 6."""

    R4_000 = "r4-000"
    R4_002 = "r4-002"
    R4_022 = "r4-022"
    R4_222 = "r4-222"
    R5_0000 = "r5-0000"
    R5_0002 = "r5-0002"
    R5_0022 = "r5-0022"
    R5_0222 = "r5-0222"
    R5_2222 = "r5-2222"
    R21_ALL0 = "r21-all0"
    R21_ALL2 = "r21-all2"
    GENERIC = "generic"


class Mode(str, Enum):
    STRICT = "strict"
    GOAL = "goal"


class RealizationStatus(str, Enum):
    REALIZED_STRICT = "REALIZED_STRICT"
    REALIZED_GOAL = "REALIZED_GOAL"
    NOT_REALIZABLE = "NOT_REALIZABLE"


_SCALED_BASES = {"A2_1": A1, "A2_2": A2}
for _copy in (1, 2):
    for _i in range(1, 9):
        _SCALED_BASES[f"E8_{_copy}_{_i}"] = t_vec(_copy, _i)

U_KINDS = ("U1", "U2")

# Scaled-slot assignment order for generic builds: the two A2 generators, then
# E8 basis vectors of both copies interleaved so that early slots avoid
# sharing diagram edges.
SLOT_POOL = (
    "A2_1",
    "A2_2",
    "E8_1_1",
    "E8_1_3",
    "E8_1_6",
    "E8_2_1",
    "E8_2_3",
    "E8_2_6",
    "E8_1_2",
    "E8_2_2",
    "E8_1_4",
    "E8_2_4",
    "E8_1_7",
    "E8_2_7",
    "E8_1_8",
    "E8_2_8",
    "E8_1_5",
    "E8_2_5",
)


@dataclass(frozen=True)
class SlotSpec:
    """One witness slot: which base vector, its parameter, and its residue."""

    kind: str
    n: int
    residue: int
    perturbation: AmbientVector | None = None

    def __post_init__(self):
        if self.kind not in U_KINDS and self.kind not in _SCALED_BASES:
            raise ValueError(f"unknown slot kind {self.kind!r}")
        if self.residue not in (0, 2):
            raise ValueError("slot residue must be 0 or 2")
        if self.n < 1:
            raise ValueError("slot parameter must be positive")
        if self.kind not in U_KINDS:
            m = math.isqrt(self.n)
            if m * m != self.n or m < 2:
                raise ValueError(
                    f"scaled slot needs a perfect-square parameter >= 4, got {self.n}"
                )
        if self.perturbation is not None and inner_product(self.perturbation, H_SQUARED) != 1:
            raise ValueError("perturbation must pair to 1 with h2")

    @property
    def scale(self) -> int:
        return 1 if self.kind in U_KINDS else math.isqrt(self.n)

    @property
    def target_d(self) -> int:
        return 6 * self.n + self.residue

    def bare_generator(self) -> AmbientVector:
        if self.kind in U_KINDS:
            copy = 1 if self.kind == "U1" else 2
            return e_vec(copy, 1) + self.n * e_vec(copy, 2)
        return self.scale * _SCALED_BASES[self.kind]

    def generator(self) -> AmbientVector:
        g = self.bare_generator()
        return g if self.perturbation is None else g + self.perturbation


@dataclass(frozen=True)
class Recipe:
    """A named construction instantiated at concrete parameters."""

    case_id: CaseId
    slots: tuple[SlotSpec, ...]
    target_gram: IntMatrix | None


@dataclass(frozen=True)
class RealizationOutcome:
    status: RealizationStatus
    basis: tuple[AmbientVector, ...] | None
    realized_gram: IntMatrix | None
    gram_delta: IntMatrix | None
    targets: tuple[int, ...]
    detail: str = ""


_CASE_PLANS: dict[CaseId, tuple[tuple[str, ...], tuple[int, ...]]] = {
    CaseId.R4_000: (("U1", "U2", "A2_1"), (0, 0, 0)),
    CaseId.R4_002: (("U1", "U2", "A2_1"), (0, 0, 2)),
    CaseId.R4_022: (("U1", "U2", "A2_1"), (0, 2, 2)),
    CaseId.R4_222: (("U1", "U2", "A2_1"), (2, 2, 2)),
    CaseId.R5_0000: (("U1", "U2", "A2_1", "A2_2"), (0, 0, 0, 0)),
    CaseId.R5_0002: (("U1", "U2", "A2_1", "A2_2"), (0, 0, 0, 2)),
    CaseId.R5_0022: (("U1", "U2", "A2_1", "A2_2"), (0, 0, 2, 2)),
    CaseId.R5_0222: (("U1", "U2", "A2_1", "A2_2"), (0, 2, 2, 2)),
    CaseId.R5_2222: (("U1", "U2", "A2_1", "A2_2"), (2, 2, 2, 2)),
    CaseId.R21_ALL0: (("U1", "U2") + SLOT_POOL, (0,) * 20),
    CaseId.R21_ALL2: (("U1", "U2") + SLOT_POOL, (2,) * 20),
}


def case_slots(case_id: CaseId, params: Sequence[int]) -> tuple[SlotSpec, ...]:
    """Instantiate the slots of a named case, validating parameter ranges."""
    if case_id not in _CASE_PLANS:
        raise ValueError(f"case {case_id} has no fixed slot plan")
    kinds, residues = _CASE_PLANS[case_id]
    if len(params) != len(kinds):
        raise ValueError(f"case {case_id.value} takes {len(kinds)} parameters")
    slots = []
    for kind, residue, n in zip(kinds, residues, params):
        if kind in U_KINDS:
            low = 2 if residue == 0 else 1
            if n < low:
                raise ValueError(
                    f"slot {kind} with residue {residue} needs parameter >= {low}, got {n}"
                )
        slots.append(SlotSpec(kind=kind, n=int(n), residue=residue))
    return tuple(slots)


def _sqrt_entry(ni: int, nj: int) -> int:
    # Both parameters are validated squares, so the product is a square too.
    root = math.isqrt(ni * nj)
    assert root * root == ni * nj
    return root


def ideal_gram(slots: Sequence[SlotSpec]) -> IntMatrix:
    """Gram matrix of a witness whose perturbations pair to zero everywhere.

    Cross terms between bare generators (A2 pairs, E8 diagram edges) are kept;
    every perturbation contributes only its forced diagonal and h2 entries.
    """
    bare = [s.bare_generator() for s in slots]
    g = gram_of([H_SQUARED] + bare).to_lists()
    for i, s in enumerate(slots):
        if s.residue == 2:
            g[0][i + 1] = g[i + 1][0] = 1
            g[i + 1][i + 1] += 1
    return IntMatrix(g)


def _r21_all2_gram(params: Sequence[int]) -> IntMatrix:
    """The displayed Gram of the rank-21 all-residue-2 construction.

    Transcribed literally; its perturbation cross terms are not realizable by
    the stated generators (STRICT reports the delta).
    """
    n = [0] + [int(x) for x in params]  # 1-based
    g = [[0] * 21 for _ in range(21)]
    g[0][0] = 3
    for i in range(1, 21):
        g[i][i] = 2 * n[i] + 1
        g[0][i] = g[i][0] = 1
    sq = lambda i, j: _sqrt_entry(n[i], n[j])
    entries = {
        (1, 4): 1,
        (1, 8): 1,
        (2, 3): 1,
        (2, 7): 1,
        (3, 4): sq(3, 4),
        (3, 7): 1,
        (4, 8): 1,
        (5, 6): 1,
        (5, 9): 1,
        (5, 10): 1,
        (6, 9): 1,
        (6, 10): 1,
        (9, 10): 1,
        (1, 15): 1,
        (1, 16): 1,
        (1, 17): 1,
        (1, 18): 1,
        (1, 19): 1,
        (1, 20): 1,
        (2, 14): 1,
        (3, 14): 1,
        (4, 15): 1,
        (4, 16): 1,
        (4, 17): 1,
        (4, 18): 1,
        (4, 19): 1,
        (4, 20): 1,
        (5, 11): 1 - sq(5, 11),
        (5, 12): 1,
        (5, 13): 1,
        (6, 11): 1 - sq(6, 11),
        (6, 12): 1,
        (6, 13): 1 - sq(6, 13),
        (6, 19): -sq(6, 19),
        (7, 14): 1,
        (7, 15): -sq(7, 15),
        (7, 19): -sq(7, 19),
        (8, 12): -sq(8, 12),
        (8, 15): 1,
        (8, 16): 1,
        (8, 17): 1,
        (8, 18): 1,
        (8, 19): 1,
        (8, 20): 1,
        (9, 11): 1,
        (9, 12): 1 - sq(9, 12),
        (9, 13): 1,
        (9, 14): -sq(9, 14),
        (9, 20): -sq(9, 20),
        (10, 11): 1,
        (10, 12): 1,
        (10, 13): 1,
        (10, 16): -sq(10, 16),
        (10, 20): -sq(10, 20),
        (11, 12): 1,
        (11, 13): 1,
        (12, 13): 1,
        (15, 17): -sq(15, 17),
        (16, 18): -sq(16, 18),
    }
    for (i, j), value in entries.items():
        g[i][j] = g[j][i] = value
    return IntMatrix(g)


def reference_gram(case_id: CaseId, params: Sequence[int]) -> IntMatrix:
    """Reference Gram matrix of a named case at concrete parameters."""
    if case_id == CaseId.R21_ALL2:
        case_slots(case_id, params)  # validate ranges
        return _r21_all2_gram(params)
    return ideal_gram(case_slots(case_id, params))


def recipe(case_id: CaseId, params: Sequence[int]) -> Recipe:
    slots = case_slots(case_id, params)
    return Recipe(case_id=case_id, slots=slots, target_gram=reference_gram(case_id, params))


_UNITS_SORTED = (i3_unit(3), i3_unit(2), i3_unit(1))  # lexicographic by coordinates


def candidate_perturbations(slot: SlotSpec, search_bound: int = 3) -> tuple[AmbientVector, ...]:
    """Admissible perturbations of one slot, unit vectors first then by coords.

    Residue-0 slots admit none.  U and E8 slots need p.p = 1, so only the
    unit vectors qualify at any bound.  A2 slots solve 2m(b.p) + p.p = 1 over
    the box [-search_bound, search_bound]^3 with coordinate sum 1.
    """
    if search_bound < 1:
        raise ValueError("search bound must be at least 1")
    if slot.residue == 0:
        return ()
    if slot.kind not in ("A2_1", "A2_2"):
        return _UNITS_SORTED
    base = _SCALED_BASES[slot.kind].i3_part()
    m = slot.scale
    units: list[tuple[int, int, int]] = []
    rest: list[tuple[int, int, int]] = []
    span = range(-search_bound, search_bound + 1)
    for x in span:
        for y in span:
            z = 1 - x - y
            if abs(z) > search_bound:
                continue
            pp = x * x + y * y + z * z
            bp = base[0] * x + base[1] * y + base[2] * z
            if 2 * m * bp + pp == 1:
                (units if pp == 1 else rest).append((x, y, z))
    ordered = sorted(units) + sorted(rest)
    return tuple(i3_vector(*p) for p in ordered)


def _assigned_slots(
    slots: Sequence[SlotSpec], assignment: Sequence[AmbientVector | None]
) -> tuple[SlotSpec, ...]:
    return tuple(
        replace(s, perturbation=p) if p is not None else s
        for s, p in zip(slots, assignment)
    )


def _basis_of(slots: Sequence[SlotSpec]) -> tuple[AmbientVector, ...]:
    return (H_SQUARED,) + tuple(s.generator() for s in slots)


def realize_perturbations(
    slots: Sequence[SlotSpec], target: IntMatrix, search_bound: int = 3
) -> RealizationOutcome:
    """Search perturbation assignments minimizing the distance to ``target``.

    Returns REALIZED_STRICT on an exact match (the lexicographically first
    one in candidate order), otherwise NOT_REALIZABLE carrying the best
    realized Gram and its delta.  Branch and bound on the accumulated
    entrywise deviation, with a deterministic node cap.
    """
    slots = tuple(slots)
    k = len(slots)
    if target.nrows != k + 1 or target.ncols != k + 1:
        raise ValueError("target Gram must be (k+1) x (k+1) including the h2 row")
    cands: list[tuple[AmbientVector | None, ...]] = [
        candidate_perturbations(s, search_bound) or (None,) for s in slots
    ]
    bare = [s.bare_generator() for s in slots]
    gens: list[AmbientVector] = list(bare)

    best_sum: int | None = None
    best_assignment: tuple[AmbientVector | None, ...] | None = None
    nodes = 0

    def partial_cost(i: int) -> int:
        g = gens[i]
        cost = abs(inner_product(H_SQUARED, g) - target[0][i + 1])
        cost += abs(inner_product(g, g) - target[i + 1][i + 1])
        for j in range(i):
            cost += abs(inner_product(gens[j], g) - target[j + 1][i + 1])
        return cost

    def dfs(i: int, acc: int) -> bool:
        nonlocal best_sum, best_assignment, nodes
        if best_sum is not None and acc >= best_sum:
            return False
        if i == k:
            best_sum = acc
            best_assignment = tuple(
                None if p is None else p for p in current
            )
            return acc == 0
        for p in cands[i]:
            nodes += 1
            if nodes > SEARCH_NODE_CAP:
                return False
            current[i] = p
            gens[i] = bare[i] if p is None else bare[i] + p
            if dfs(i + 1, acc + partial_cost(i)):
                return True
        current[i] = None
        gens[i] = bare[i]
        return False

    current: list[AmbientVector | None] = [None] * k
    dfs(0, abs(3 - target[0][0]))

    assert best_assignment is not None
    realized_slots = _assigned_slots(slots, best_assignment)
    basis = _basis_of(realized_slots)
    realized = gram_of(basis)
    delta = realized - target
    status = (
        RealizationStatus.REALIZED_STRICT if best_sum == 0 else RealizationStatus.NOT_REALIZABLE
    )
    detail = "" if best_sum == 0 else f"best assignment misses target by {best_sum}"
    return RealizationOutcome(
        status=status,
        basis=basis,
        realized_gram=realized,
        gram_delta=delta,
        targets=tuple(s.target_d for s in slots),
        detail=detail,
    )


def _goal_infeasibility(slots: Sequence[SlotSpec]) -> str | None:
    """A proof sketch of why no assignment can pass all checks, or None."""
    scaled = [s for s in slots if s.kind not in U_KINDS]
    for s in scaled:
        if s.residue == 0:
            return (
                f"slot {s.kind} (d={s.target_d}) contributes the column "
                f"{s.scale}*{s.kind}, whose content {s.scale} is a Smith invariant; "
                "the witness cannot be saturated"
            )
    a2_count = sum(1 for s in slots if s.kind in ("A2_1", "A2_2"))
    if a2_count >= 2:
        return (
            "two A2 slots and h2 span the rationalized I3 block, so a saturated "
            "witness would contain norm-1 unit vectors and fail the minimum check"
        )
    primes: set[int] = set()
    for s in scaled:
        m = s.scale
        f = 2
        while f * f <= m:
            if m % f == 0:
                primes.add(f)
                while m % f == 0:
                    m //= f
            f += 1
        if m > 1:
            primes.add(m)
    for p in sorted(primes):
        resident = 1 + a2_count + sum(
            1 for s in scaled if s.kind.startswith("E8") and s.scale % p == 0
        )
        if resident > 3:
            return (
                f"mod {p}, {resident} coordinate columns collapse into the rank-3 "
                "I3 block, so they cannot remain independent and saturation fails"
            )
    return None


def _goal_search(slots: Sequence[SlotSpec], search_bound: int = 3) -> RealizationOutcome:
    slots = tuple(slots)
    targets = tuple(s.target_d for s in slots)
    missing: list[str] = []
    cands: list[tuple[AmbientVector | None, ...]] = []
    for s in slots:
        options = candidate_perturbations(s, search_bound)
        if s.residue == 2 and not options:
            missing.append(
                f"slot {s.kind} (d={s.target_d}) has no admissible perturbation "
                f"within bound {search_bound}"
            )
        cands.append(options or (None,))

    canonical = _assigned_slots(slots, [c[0] for c in cands])
    reason = "; ".join(missing) if missing else _goal_infeasibility(slots)
    if reason is None:
        nodes = 0

        def dfs(i: int, chosen: list[AmbientVector | None]) -> tuple[SlotSpec, ...] | None:
            nonlocal nodes
            if i == len(slots):
                assigned = _assigned_slots(slots, chosen)
                basis = _basis_of(assigned)
                if integer_rank(coordinate_matrix(basis)) != len(basis):
                    return None
                sub = Sublattice(basis)
                if not is_positive_definite(sub.gram):
                    return None
                if not is_saturated(sub):
                    return None
                if minimum(sub.gram) < 3:
                    return None
                return assigned
            for p in cands[i]:
                nodes += 1
                if nodes > SEARCH_NODE_CAP:
                    return None
                chosen.append(p)
                hit = dfs(i + 1, chosen)
                chosen.pop()
                if hit is not None:
                    return hit
            return None

        winner = dfs(0, [])
        if winner is not None:
            basis = _basis_of(winner)
            return RealizationOutcome(
                status=RealizationStatus.REALIZED_GOAL,
                basis=basis,
                realized_gram=gram_of(basis),
                gram_delta=None,
                targets=targets,
            )
        reason = "no perturbation assignment passes all certification checks " \
                 f"within bound {search_bound}"

    basis = _basis_of(canonical)
    return RealizationOutcome(
        status=RealizationStatus.NOT_REALIZABLE,
        basis=basis,
        realized_gram=gram_of(basis),
        gram_delta=None,
        targets=targets,
        detail=reason,
    )


def build(
    case_id: CaseId, params: Sequence[int], mode: Mode = Mode.GOAL, search_bound: int = 3
) -> RealizationOutcome:
    """Assemble a named witness in the requested realization mode."""
    slots = case_slots(case_id, params)
    if mode == Mode.STRICT:
        return realize_perturbations(slots, reference_gram(case_id, params), search_bound)
    outcome = _goal_search(slots, search_bound)
    if outcome.realized_gram is not None:
        target = reference_gram(case_id, params)
        outcome = replace(outcome, gram_delta=outcome.realized_gram - target)
    return outcome


def generic_slots(targets: Sequence[int]) -> tuple[SlotSpec, ...]:
    """Slot assignment for arbitrary target discriminants.

    The first two targets take the hyperbolic slots and need condition (*);
    the rest take scaled slots in pool order and need (*) and (**).
    """
    ds = [int(d) for d in targets]
    if not 2 <= len(ds) <= 20:
        raise ValueError("between 2 and 20 target discriminants are supported")
    slots: list[SlotSpec] = []
    for position, d in enumerate(ds):
        star_ok = satisfies_star(d)
        if position < 2:
            if not star_ok:
                raise ValueError(f"d={d} fails condition (*): d >= 8 and d = 0,2 (mod 6)")
            residue = d % 6
            slots.append(SlotSpec(kind=U_KINDS[position], n=(d - residue) // 6, residue=residue))
        else:
            m = satisfies_double_star(d)
            broken = [name for name, ok in (("(*)", star_ok), ("(**)", m is not None)) if not ok]
            if broken:
                raise ValueError(
                    f"d={d} fails condition {' and '.join(broken)}: targets beyond the "
                    "second need d >= 8, d = 0,2 (mod 6), and d = 6m^2 or 6m^2+2 with m >= 2"
                )
            slots.append(SlotSpec(kind=SLOT_POOL[position - 2], n=m * m, residue=d % 6))
    return tuple(slots)


def build_generic(
    targets: Sequence[int], mode: Mode = Mode.GOAL, search_bound: int = 3
) -> RealizationOutcome:
    """Witness builder for 2 to 20 arbitrary admissible discriminants."""
    slots = generic_slots(targets)
    if mode == Mode.STRICT:
        return realize_perturbations(slots, ideal_gram(slots), search_bound)
    return _goal_search(slots, search_bound)


# ---------------------------------------------------------------------------
# Closed-form completed-squares identities for the rank-4 and rank-5 cases.

_IDENTITY_CASES = (
    CaseId.R4_000,
    CaseId.R4_002,
    CaseId.R4_022,
    CaseId.R4_222,
    CaseId.R5_0000,
    CaseId.R5_0002,
    CaseId.R5_0022,
    CaseId.R5_0222,
    CaseId.R5_2222,
)


def form_value(case_id: CaseId, params: Sequence[int], point: Sequence[int]) -> int:
    """Quadratic form of the case's reference Gram at an integer point."""
    g = reference_gram(case_id, params)
    if len(point) != g.nrows:
        raise ValueError("point dimension must match the case rank")
    return quadratic_form(g, point)


def squares_value(
    case_id: CaseId,
    params: Sequence[int],
    point: Sequence[int],
    corrected: bool = True,
) -> int:
    """Completed-squares expression of the case's form at an integer point.

    With ``corrected=False`` the all-residue-2 rank-4 case reproduces a known
    transcription slip (a product where a sum belongs); every other case is
    identical in both variants.
    """
    if case_id not in _IDENTITY_CASES:
        raise ValueError(f"no closed identity for case {case_id}")
    x = [int(v) for v in point]
    expected_dim = 4 if case_id.value.startswith("r4") else 5
    if len(x) != expected_dim:
        raise ValueError("point dimension must match the case rank")
    n = [int(v) for v in params]
    x1, x2, x3, x4 = x[0], x[1], x[2], x[3]
    if case_id == CaseId.R4_000:
        return 3 * x1**2 + 2 * n[0] * x2**2 + 2 * n[1] * x3**2 + 2 * n[2] * x4**2
    if case_id == CaseId.R4_002:
        return (
            2 * x1**2
            + 2 * n[0] * x2**2
            + 2 * n[1] * x3**2
            + 2 * n[2] * x4**2
            + (x1 + x4) ** 2
        )
    if case_id == CaseId.R4_022:
        return (
            x1**2
            + 2 * n[0] * x2**2
            + 2 * n[1] * x3**2
            + 2 * n[2] * x4**2
            + (x1 + x3) ** 2
            + (x1 + x4) ** 2
        )
    if case_id == CaseId.R4_222:
        tail = 2 * n[0] * x2**2 + 2 * n[1] * x3**2 + 2 * n[2] * x4**2
        if corrected:
            return tail + (x1 + x2) ** 2 + (x1 + x3) ** 2 + (x1 + x4) ** 2
        return tail + (x1 + x2) ** 2 * (x1 + x3) ** 2 + (x1 + x4) ** 2
    x5 = x[4]
    m3, m4 = math.isqrt(n[2]), math.isqrt(n[3])
    mixed = n[2] * x4**2 + n[3] * x5**2 + (m3 * x4 + m4 * x5) ** 2
    common = 2 * n[0] * x2**2 + 2 * n[1] * x3**2 + mixed
    if case_id == CaseId.R5_0000:
        return 3 * x1**2 + common
    if case_id == CaseId.R5_0002:
        return 2 * x1**2 + common + (x1 + x5) ** 2
    if case_id == CaseId.R5_0022:
        return x1**2 + common + (x1 + x5) ** 2 + (x1 + x4) ** 2
    if case_id == CaseId.R5_0222:
        return common + (x1 + x5) ** 2 + (x1 + x4) ** 2 + (x1 + x3) ** 2
    return (
        common
        + (x1 + x5) ** 2
        + (x1 + x4) ** 2
        + (x1 + x3) ** 2
        + (x1 + x2) ** 2
        - x1**2
    )


def identity_pair(
    case_id: CaseId,
    params: Sequence[int],
    point: Sequence[int],
    corrected: bool = True,
) -> tuple[int, int]:
    """Form value and completed-squares value at one point."""
    return (
        form_value(case_id, params, point),
        squares_value(case_id, params, point, corrected=corrected),
    )
