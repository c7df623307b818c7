"""
Sparse polynomials over the integers in a formal parameter beta and x1..xn.

Every character, key, Lascoux and Grothendieck value in the package is a
BetaPolynomial. Values are immutable once built.
"""

import logging
from typing import Dict, Iterable, Iterator, List, Mapping, NamedTuple, Optional, Sequence, Tuple, Union

from src.utils.error_handler import DimensionError, check_same_n

logger = logging.getLogger(__name__)


class Monomial(NamedTuple):
    """beta^beta_deg * x1^exps[0] * ... * xn^exps[n-1].

    Tuple ordering on (beta_deg, exps) is the canonical term order.
    """
    beta_deg: int
    exps: Tuple[int, ...]

    def render(self) -> str:
        factors = []
        if self.beta_deg == 1:
            factors.append("b")
        elif self.beta_deg > 1:
            factors.append(f"b^{self.beta_deg}")
        for k, e in enumerate(self.exps, start=1):
            if e == 1:
                factors.append(f"x{k}")
            elif e > 1:
                factors.append(f"x{k}^{e}")
        return "*".join(factors)


class BetaPolynomial:
    """Element of Z[beta][x1, ..., xn] stored as Monomial -> nonzero int."""

    __slots__ = ("_n", "_terms")

    def __init__(self, n: int, terms: Optional[Mapping[Monomial, int]] = None):
        if n < 0:
            raise DimensionError(f"Variable count must be nonnegative, got {n}")
        self._n = n
        cleaned: Dict[Monomial, int] = {}
        for mono, coeff in (terms or {}).items():
            mono = Monomial(int(mono[0]), tuple(int(e) for e in mono[1]))
            if len(mono.exps) != n:
                raise DimensionError(
                    f"Monomial {mono} has {len(mono.exps)} exponents, expected {n}"
                )
            if mono.beta_deg < 0 or any(e < 0 for e in mono.exps):
                raise DimensionError(f"Negative exponent in {mono}")
            if coeff:
                cleaned[mono] = int(coeff)
        self._terms = cleaned

    # -- constructors -----------------------------------------------------

    @classmethod
    def zero(cls, n: int) -> "BetaPolynomial":
        return cls(n)

    @classmethod
    def one(cls, n: int) -> "BetaPolynomial":
        return cls.monomial(n, (0,) * n)

    @classmethod
    def monomial(cls, n: int, exps: Sequence[int], beta_deg: int = 0,
                 coeff: int = 1) -> "BetaPolynomial":
        return cls(n, {Monomial(beta_deg, tuple(exps)): coeff})

    @classmethod
    def variable(cls, n: int, k: int) -> "BetaPolynomial":
        """The variable x_k (1-based)."""
        if not 1 <= k <= n:
            raise DimensionError(f"Variable x{k} does not exist for n={n}")
        exps = [0] * n
        exps[k - 1] = 1
        return cls.monomial(n, exps)

    @classmethod
    def beta(cls, n: int) -> "BetaPolynomial":
        return cls.monomial(n, (0,) * n, beta_deg=1)

    # -- access -----------------------------------------------------------

    @property
    def n(self) -> int:
        return self._n

    def terms(self) -> List[Tuple[Monomial, int]]:
        """Terms in canonical order (lexicographic on (beta_deg, exps))."""
        return sorted(self._terms.items())

    def __iter__(self) -> Iterator[Tuple[Monomial, int]]:
        return iter(self.terms())

    def __len__(self) -> int:
        return len(self._terms)

    def __contains__(self, mono) -> bool:
        return Monomial(mono[0], tuple(mono[1])) in self._terms

    def coefficient(self, mono: Union[Monomial, Tuple[int, Sequence[int]]]) -> int:
        return self._terms.get(Monomial(mono[0], tuple(mono[1])), 0)

    def is_zero(self) -> bool:
        return not self._terms

    def term_count(self) -> int:
        """Number of monomials counted with multiplicity (sum of coefficients)."""
        return sum(self._terms.values())

    def max_beta_degree(self) -> int:
        return max((m.beta_deg for m in self._terms), default=0)

    # -- arithmetic -------------------------------------------------------

    def __add__(self, other: "BetaPolynomial") -> "BetaPolynomial":
        if not isinstance(other, BetaPolynomial):
            return NotImplemented
        check_same_n(self._n, other._n)
        result = dict(self._terms)
        for mono, coeff in other._terms.items():
            result[mono] = result.get(mono, 0) + coeff
        return BetaPolynomial(self._n, result)

    def __neg__(self) -> "BetaPolynomial":
        return BetaPolynomial(self._n, {m: -c for m, c in self._terms.items()})

    def __sub__(self, other: "BetaPolynomial") -> "BetaPolynomial":
        if not isinstance(other, BetaPolynomial):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other: Union["BetaPolynomial", int]) -> "BetaPolynomial":
        if isinstance(other, int):
            return BetaPolynomial(self._n, {m: c * other for m, c in self._terms.items()})
        if not isinstance(other, BetaPolynomial):
            return NotImplemented
        check_same_n(self._n, other._n)
        result: Dict[Monomial, int] = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                key = Monomial(
                    m1.beta_deg + m2.beta_deg,
                    tuple(a + b for a, b in zip(m1.exps, m2.exps))
                )
                result[key] = result.get(key, 0) + c1 * c2
        return BetaPolynomial(self._n, result)

    def __rmul__(self, other: int) -> "BetaPolynomial":
        if isinstance(other, int):
            return self * other
        return NotImplemented

    def __pow__(self, k: int) -> "BetaPolynomial":
        result = BetaPolynomial.one(self._n)
        for _ in range(k):
            result = result * self
        return result

    def __eq__(self, other) -> bool:
        if not isinstance(other, BetaPolynomial):
            return NotImplemented
        return self._n == other._n and self._terms == other._terms

    def __hash__(self) -> int:
        return hash((self._n, tuple(self.terms())))

    # -- transformations --------------------------------------------------

    def swap(self, i: int) -> "BetaPolynomial":
        """s_i p: exchange x_i and x_{i+1}."""
        result = {}
        for mono, coeff in self._terms.items():
            exps = list(mono.exps)
            exps[i - 1], exps[i] = exps[i], exps[i - 1]
            result[Monomial(mono.beta_deg, tuple(exps))] = coeff
        return BetaPolynomial(self._n, result)

    def specialize_beta(self, b: int) -> "BetaPolynomial":
        result: Dict[Monomial, int] = {}
        for mono, coeff in self._terms.items():
            key = Monomial(0, mono.exps)
            result[key] = result.get(key, 0) + coeff * b ** mono.beta_deg
        return BetaPolynomial(self._n, result)

    def filter_terms(self, keep) -> "BetaPolynomial":
        """Sub-polynomial of the terms whose monomial satisfies keep(mono)."""
        return BetaPolynomial(self._n, {m: c for m, c in self._terms.items() if keep(m)})

    # -- serialization ----------------------------------------------------

    def to_json_dict(self) -> dict:
        return {
            "n": self._n,
            "terms": [
                {"beta": m.beta_deg, "exps": list(m.exps), "coeff": str(c)}
                for m, c in self.terms()
            ],
        }

    @classmethod
    def from_json_dict(cls, data: Mapping) -> "BetaPolynomial":
        n = int(data["n"])
        terms: Dict[Monomial, int] = {}
        for entry in data.get("terms", []):
            mono = Monomial(int(entry["beta"]), tuple(int(e) for e in entry["exps"]))
            terms[mono] = terms.get(mono, 0) + int(entry["coeff"])
        return cls(n, terms)

    def render(self) -> str:
        """Text form "b^k*x1^a1*..." with terms joined by " + "."""
        if not self._terms:
            return "0"
        parts = []
        for mono, coeff in self.terms():
            body = mono.render()
            if not body:
                parts.append(str(coeff))
            elif coeff == 1:
                parts.append(body)
            elif coeff == -1:
                parts.append(f"-{body}")
            else:
                parts.append(f"{coeff}*{body}")
        return " + ".join(parts)

    def __str__(self) -> str:
        return self.render()

    def __repr__(self) -> str:
        return f"BetaPolynomial(n={self._n}, {self.render()})"


def poly_add(p: BetaPolynomial, q: BetaPolynomial) -> BetaPolynomial:
    return p + q


def poly_mul(p: BetaPolynomial, q: BetaPolynomial) -> BetaPolynomial:
    return p * q


def specialize_beta(p: BetaPolynomial, b: int) -> BetaPolynomial:
    """Substitute beta = b; every resulting term has beta degree 0."""
    return p.specialize_beta(b)


def is_multiplicity_free(p: BetaPolynomial) -> bool:
    return all(coeff == 1 for _, coeff in p)


def is_alternating(exps: Sequence[int], lam: Sequence[int]) -> bool:
    """lam_1 >= mu_1 >= lam_2 >= ... >= mu_{n-1} >= lam_n.

    Only the first len(lam) - 1 exponents take part; the last one is free.
    """
    for k in range(len(lam) - 1):
        if not lam[k] >= exps[k] >= lam[k + 1]:
            return False
    return True


def nonalternating_part(p: BetaPolynomial, lam: Sequence[int]) -> BetaPolynomial:
    """[p]_lam: the terms whose x-exponents are not lam-alternating."""
    if len(lam) != p.n:
        raise DimensionError(f"Partition has {len(lam)} parts, polynomial has n={p.n}")
    return p.filter_terms(lambda m: not is_alternating(m.exps, lam))


def alternating_part(p: BetaPolynomial, lam: Sequence[int]) -> BetaPolynomial:
    if len(lam) != p.n:
        raise DimensionError(f"Partition has {len(lam)} parts, polynomial has n={p.n}")
    return p.filter_terms(lambda m: is_alternating(m.exps, lam))


def x_power(n: int, exps: Sequence[int]) -> BetaPolynomial:
    """x^exps with beta degree 0."""
    return BetaPolynomial.monomial(n, exps)


def total_sum(polys: Iterable[BetaPolynomial], n: int) -> BetaPolynomial:
    result = BetaPolynomial.zero(n)
    for p in polys:
        result = result + p
    return result
