"""
Verification suites: exhaustive small-rank checks of every identity the
library relies on, one CaseQueue entry per (n, lambda) block.

Each suite function takes SuiteOptions and returns a VerifyReport; run_suite
dispatches by name and "all" merges every suite in a fixed order.
"""

import itertools
import logging
from dataclasses import dataclass
from typing import Callable, Dict, List, Sequence, Tuple

import numpy as np

from src.algebra.operators import (
    apply_word,
    coxeter_block_word,
    demazure_lascoux,
    divided_difference,
    grothendieck,
    key_from_operators,
    lascoux_of_composition,
    lascoux_w_lambda,
    schur,
)
from src.algebra.polynomial import (
    BetaPolynomial,
    Monomial,
    is_multiplicity_free,
    nonalternating_part,
    total_sum,
)
from src.cells.lascoux import efficient_cells, select_in_faces
from src.cells.tracks import enumerate_tracks, track_to_pattern
from src.cells.verification import verify_cellular
from src.enhanced.enumeration import enumerate_efficient, grothendieck_via_patterns
from src.enhanced.patterns import monomial
from src.gz.patterns import (
    character_of_points,
    enumerate_gz_patterns,
    maximal_vertex,
    shift_partition,
    weyl_dimension,
)
from src.kogan.faces import (
    empty_places_permutation,
    enumerate_reduced_faces,
    face_dimension,
    face_permutation,
    is_reduced_face,
    is_right_adjusted,
    right_adjusted_of,
)
from src.kogan.keys import in_face, key_polynomial
from src.kogan.moves import applicable_moves, move_orbit
from src.perm.permutation import (
    Permutation,
    all_permutations,
    bruhat_leq,
    bruhat_leq_subword,
    reduced_words,
    w0_word_coxeter,
)
from src.utils.error_handler import UsageError
from src.verification.report import VerifyReport, merge_reports
from src.verification.runner import CaseQueue, SuiteRunner

logger = logging.getLogger(__name__)

# reduced faces for n = 3
FACES_FOR_N3 = 7


@dataclass
class SuiteOptions:
    max_n: int = 3
    max_part: int = 3
    denominator: int = 2
    seed: int = 20240601
    random_polynomials: int = 100
    workers: int = 1
    show_progress: bool = False

    def ranks(self) -> range:
        return range(2, self.max_n + 1)

    def denominators(self) -> range:
        """Grid steps 1/1 up to 1/max(3, denominator)."""
        return range(1, max(3, self.denominator) + 1)


def partitions(n: int, max_part: int) -> List[Tuple[int, ...]]:
    """Every partition with n parts and lambda_1 <= max_part, in ascending order."""
    return sorted(itertools.combinations_with_replacement(range(max_part, -1, -1), n))


def random_polynomial(rng: np.random.Generator, n: int, terms: int = 4,
                      max_exp: int = 3, max_coeff: int = 3) -> BetaPolynomial:
    result: Dict[Monomial, int] = {}
    for _ in range(terms):
        exps = tuple(int(e) for e in rng.integers(0, max_exp + 1, size=n))
        beta_deg = int(rng.integers(0, 2))
        coeff = int(rng.integers(1, max_coeff + 1)) * (1 if rng.random() < 0.5 else -1)
        key = Monomial(beta_deg, exps)
        result[key] = result.get(key, 0) + coeff
    return BetaPolynomial(n, result)


def _run(suite: str, queue: CaseQueue, options: SuiteOptions) -> VerifyReport:
    runner = SuiteRunner(options.workers, options.show_progress)
    return runner.run(suite, queue)


# ---------------------------------------------------------------------------
# lemma checks


def check_multiplicity_free(n: int, max_part: int) -> VerifyReport:
    """Walk pi_1, ..., pi_k from x^mu and check every single step.

    Each monomial reached has mu_i >= mu_{i+1} when pi_i acts on it, so its
    image must be multiplicity free with positive coefficients
    ("single_step_multiplicity_free", "positive_block"). Whether the whole
    block pi_{c_k}(x^mu) is multiplicity free is noted as a
    "block_multiplicity_free" observation with the repeated monomials; it
    does not hold in general, e.g. pi_2 pi_1 (x1^2) has 2 beta x1 x2 x3.
    """
    report = VerifyReport("lemmas")
    for mu in partitions(n, max_part):
        for k in range(1, n):
            current = BetaPolynomial.monomial(n, mu)
            for i in range(1, k + 1):
                for mono, _ in current:
                    image = demazure_lascoux(BetaPolynomial(n, {mono: 1}), i)
                    report.record(is_multiplicity_free(image), check="single_step_multiplicity_free",
                                  mu=mu, k=k, generator=i, monomial=mono.render(), image=image.render())
                current = demazure_lascoux(current, i)
            report.record(all(coeff > 0 for _, coeff in current), check="positive_block",
                          mu=mu, k=k, image=current.render())
            repeated = [mono.render() for mono, coeff in current if coeff != 1]
            report.observe(not repeated, check="block_multiplicity_free", mu=mu, k=k,
                           repeated=repeated, image=current.render())
    return report


def check_kernel_identity(n: int, max_part: int) -> VerifyReport:
    """[pi_{c_{n-1}} x^lam]_lam is killed by pi_{c_1 ... c_{n-2}}."""
    report = VerifyReport("lemmas")
    rest = w0_word_coxeter(n - 1)
    for lam in partitions(n, max_part):
        block = apply_word(BetaPolynomial.monomial(n, lam), coxeter_block_word(n - 1))
        residue = apply_word(nonalternating_part(block, lam), rest)
        report.record(residue.is_zero(), check="kernel_identity", lam=lam, residue=residue.render())
    return report


# ---------------------------------------------------------------------------
# per-case bodies


def _operators_case(n: int, options: SuiteOptions) -> VerifyReport:
    report = VerifyReport("operators")
    rng = np.random.default_rng(options.seed + n)
    for _ in range(options.random_polynomials):
        p = random_polynomial(rng, n)
        for i in range(1, n):
            once = demazure_lascoux(p, i)
            report.record(demazure_lascoux(once, i) == once, check="idempotent", n=n, i=i, p=p.render())
            report.record(divided_difference(divided_difference(p, i), i).is_zero(),
                          check="divided_difference_square", n=n, i=i, p=p.render())
            if i + 1 < n:
                left = apply_word(p, (i, i + 1, i))
                right = apply_word(p, (i + 1, i, i + 1))
                report.record(left == right, check="braid", n=n, i=i, p=p.render())
            for j in range(i + 2, n):
                report.record(apply_word(p, (i, j)) == apply_word(p, (j, i)),
                              check="commute", n=n, i=i, j=j, p=p.render())

    for alpha in itertools.product(range(options.max_part + 1), repeat=n):
        first = lascoux_of_composition(alpha)
        last = lascoux_of_composition(alpha, pick_last=True)
        report.record(first == last, check="ascent_choice", alpha=alpha)

    staircase = tuple(range(n - 1, -1, -1))
    x_all = BetaPolynomial.monomial(n, (1,) * n)
    for w in all_permutations(n):
        values = {apply_word(BetaPolynomial.monomial(n, staircase), word) for word in reduced_words(w)}
        report.record(len(values) == 1, check="word_independence", w=w.render(), lam=staircase)
        shifted = lascoux_w_lambda(w, shift_partition(staircase, 1))
        report.record(shifted == x_all * lascoux_w_lambda(w, staircase), check="shift", w=w.render(), lam=staircase)
    return report


def _main1_case(lam: Tuple[int, ...]) -> VerifyReport:
    report = VerifyReport("main1")
    via_patterns = grothendieck_via_patterns(lam)
    via_operators = grothendieck(lam)
    report.record(via_patterns == via_operators, check="grothendieck", lam=lam,
                  patterns=via_patterns.render(), operators=via_operators.render())
    return report


def _main2_case(lam: Tuple[int, ...]) -> VerifyReport:
    report = VerifyReport("main2")
    n = len(lam)
    cells = efficient_cells(lam)
    for w in all_permutations(n):
        selected = select_in_faces(cells, enumerate_reduced_faces(n, w))
        via_cells = total_sum((monomial(p) for p in selected), n)
        via_operators = lascoux_w_lambda(w, lam)
        report.record(via_cells == via_operators, check="lascoux", lam=lam, w=w.render(),
                      cells=via_cells.render(), operators=via_operators.render())
    return report


def _key_case(lam: Tuple[int, ...]) -> VerifyReport:
    report = VerifyReport("key")
    n = len(lam)
    for w in all_permutations(n):
        report.record(key_polynomial(w, lam) == key_from_operators(w, lam), check="key", lam=lam, w=w.render())
    points = enumerate_gz_patterns(lam)
    report.record(character_of_points(lam, points) == schur(lam), check="schur", lam=lam)
    report.record(len(points) == weyl_dimension(lam), check="weyl_dimension", lam=lam,
                  points=len(points), expected=weyl_dimension(lam))
    return report


def _kogan_case(n: int) -> VerifyReport:
    report = VerifyReport("kogan")
    faces = enumerate_reduced_faces(n)
    by_perm: Dict[Permutation, List] = {}
    for face in faces:
        w = face_permutation(face)
        by_perm.setdefault(w, []).append(face)
        report.record(face_dimension(face) == w.length(), check="dimension",
                      n=n, edges=face.sorted_edges(), w=w.render())
        for moved in applicable_moves(face):
            report.record(is_reduced_face(moved) and face_permutation(moved) == w, check="move_preserves",
                          n=n, edges=face.sorted_edges(), moved=moved.sorted_edges())

    if n == 3:
        report.record(len(faces) == FACES_FOR_N3, check="face_count", n=n, faces=len(faces))

    vertex = maximal_vertex(tuple(range(n - 1, -1, -1)))
    for face in faces:
        report.record(in_face(vertex, face), check="maximal_vertex", n=n, edges=face.sorted_edges())

    for w in all_permutations(n):
        group = by_perm.get(w, [])
        adjusted = [face for face in group if is_right_adjusted(face)]
        expected = right_adjusted_of(w)
        report.record(adjusted == [expected], check="right_adjusted", n=n, w=w.render(),
                      found=[face.sorted_edges() for face in adjusted])
        report.record(empty_places_permutation(expected) == w, check="empty_places", n=n, w=w.render())
        report.record(set(move_orbit(expected)) == set(group), check="orbit", n=n, w=w.render(),
                      faces=len(group))
    return report


def _lemmas_case(n: int, max_part: int) -> VerifyReport:
    return check_multiplicity_free(n, max_part).merge(check_kernel_identity(n, max_part))


def _bruhat_order_case(n: int) -> VerifyReport:
    report = VerifyReport("bruhat")
    perms = all_permutations(n)
    for u, w in itertools.product(perms, repeat=2):
        report.record(bruhat_leq(u, w) == bruhat_leq_subword(u, w), check="criteria_agree",
                      u=u.render(), w=w.render())
    return report


def _bruhat_case(lam: Tuple[int, ...]) -> VerifyReport:
    report = VerifyReport("bruhat")
    n = len(lam)
    perms = all_permutations(n)
    cells = efficient_cells(lam)
    selected = {w: set(select_in_faces(cells, enumerate_reduced_faces(n, w))) for w in perms}
    values = {w: lascoux_w_lambda(w, lam) for w in perms}
    for u, w in itertools.product(perms, repeat=2):
        if not bruhat_leq(u, w):
            continue
        difference = values[w] - values[u]
        report.record(all(coeff > 0 for _, coeff in difference), check="positive_difference",
                      lam=lam, u=u.render(), w=w.render(), difference=difference.render())
        report.record(selected[u] <= selected[w], check="pattern_inclusion",
                      lam=lam, u=u.render(), w=w.render())
    return report


def _tracks_case(lam: Tuple[int, ...]) -> VerifyReport:
    report = VerifyReport("tracks")
    tracks = enumerate_tracks(lam)
    patterns = [track_to_pattern(track) for track in tracks]
    efficient = enumerate_efficient(lam)
    report.record(len(set(patterns)) == len(patterns) and set(patterns) == set(efficient),
                  check="bijection", lam=lam, tracks=len(tracks), efficient=len(efficient))
    for track, pattern in zip(tracks, patterns):
        final = BetaPolynomial(len(lam), {track.final: 1})
        report.record(monomial(pattern) == final, check="monomial", lam=lam, track=track.render())
    n = len(lam)
    summed = total_sum((BetaPolynomial(n, {track.final: 1}) for track in tracks), n)
    report.record(summed == grothendieck(lam), check="sum", lam=lam)
    return report


# ---------------------------------------------------------------------------
# suites


def _per_lambda(suite: str, options: SuiteOptions,
                body: Callable[[Tuple[int, ...]], VerifyReport]) -> VerifyReport:
    queue = CaseQueue()
    for n in options.ranks():
        for lam in partitions(n, options.max_part):
            queue.add_case(f"{suite} {lam}", lambda lam=lam: body(lam), n=n, lam=lam)
    return _run(suite, queue, options)


def suite_operators(options: SuiteOptions) -> VerifyReport:
    queue = CaseQueue()
    for n in options.ranks():
        queue.add_case(f"operators n={n}", lambda n=n: _operators_case(n, options), n=n, seed=options.seed + n)
    return _run("operators", queue, options)


def suite_main1(options: SuiteOptions) -> VerifyReport:
    return _per_lambda("main1", options, _main1_case)


def suite_main2(options: SuiteOptions) -> VerifyReport:
    return _per_lambda("main2", options, _main2_case)


def suite_key(options: SuiteOptions) -> VerifyReport:
    return _per_lambda("key", options, _key_case)


def suite_cellular(options: SuiteOptions) -> VerifyReport:
    """Grid check of the cell decomposition on every denominator; n is capped at 3."""
    queue = CaseQueue()
    for n in range(2, min(3, options.max_n) + 1):
        for lam in partitions(n, options.max_part):
            for d in options.denominators():
                queue.add_case(f"cellular {lam} 1/{d}", lambda lam=lam, d=d: verify_cellular(lam, d),
                               n=n, lam=lam, denominator=d)
    return _run("cellular", queue, options)


def suite_kogan(options: SuiteOptions) -> VerifyReport:
    queue = CaseQueue()
    for n in options.ranks():
        queue.add_case(f"kogan n={n}", lambda n=n: _kogan_case(n), n=n)
    return _run("kogan", queue, options)


def suite_lemmas(options: SuiteOptions) -> VerifyReport:
    queue = CaseQueue()
    for n in options.ranks():
        queue.add_case(f"lemmas n={n}", lambda n=n: _lemmas_case(n, options.max_part), n=n)
    return _run("lemmas", queue, options)


def suite_bruhat(options: SuiteOptions) -> VerifyReport:
    queue = CaseQueue()
    for n in options.ranks():
        queue.add_case(f"bruhat order n={n}", lambda n=n: _bruhat_order_case(n), n=n)
        for lam in partitions(n, options.max_part):
            queue.add_case(f"bruhat {lam}", lambda lam=lam: _bruhat_case(lam), n=n, lam=lam)
    return _run("bruhat", queue, options)


def suite_tracks(options: SuiteOptions) -> VerifyReport:
    return _per_lambda("tracks", options, _tracks_case)


SUITES: Dict[str, Callable[[SuiteOptions], VerifyReport]] = {
    "operators": suite_operators,
    "main1": suite_main1,
    "main2": suite_main2,
    "key": suite_key,
    "cellular": suite_cellular,
    "kogan": suite_kogan,
    "lemmas": suite_lemmas,
    "bruhat": suite_bruhat,
    "tracks": suite_tracks,
}

SUITE_NAMES: Tuple[str, ...] = tuple(SUITES) + ("all",)


def run_suite(name: str, options: SuiteOptions) -> VerifyReport:
    """Run one suite by name, or every suite for "all"."""
    if name == "all":
        reports = [suite(options) for suite in SUITES.values()]
        total = merge_reports("all", reports)
        total.wall_time = sum(r.wall_time for r in reports)
        return total
    if name not in SUITES:
        raise UsageError(f"Unknown suite {name!r}; choose from {', '.join(SUITE_NAMES)}")
    logger.info(f"Running suite {name} with {options}")
    return SUITES[name](options)


def run_suites(names: Sequence[str], options: SuiteOptions) -> VerifyReport:
    reports = [run_suite(name, options) for name in names]
    if len(reports) == 1:
        return reports[0]
    return merge_reports("+".join(names), reports)
