"""The invariant suite run by ``artin-homology verify``.

Every check is a pure function of the presentation, the limits and a seeded
random generator, so a run is reproducible from its seed.
"""

import time
from dataclasses import dataclass
from itertools import product

import numpy as np

from artin_homology.artin_h import (
    ArtinH2Class,
    RelatorFactor,
    RelatorProduct,
    artin_h2_basis_lattice,
    class_of,
    coords_via_wedge,
    flatten,
)
from artin_homology.cohomology import Character, cup_table, hopf_pairing
from artin_homology.config import DEFAULT_SEED, Limits
from artin_homology.coxeter_h import (
    CoxH2Class,
    cox_h1,
    cox_pontryagin_chains,
    cox_pontryagin_independent,
    rho_star,
)
from artin_homology.coxmat import EvenPresentation, parse_matrix, serialize
from artin_homology.errors import ResourceLimitError
from artin_homology.logging import format_check_log, get_logger, summarize_matrix
from artin_homology.magnus import magnus2, wedge_image, wedge_of, wedge_vector_of
from artin_homology.oracle.bar import bar_h, boundaries_compose_to_zero, is_boundary
from artin_homology.oracle.groups import GroupTable
from artin_homology.oracle.coset import todd_coxeter
from artin_homology.oracle.smith import AbelianInvariants, rank
from artin_homology.pontryagin import bar_boundary, bilinearity_witness, pontryagin_chain
from artin_homology.words import (
    Word,
    comm_rel_pair,
    commutator,
    relator,
    w_lemma,
)

logger = get_logger("verify")

RANDOM_PRODUCTS = 50
LEMMA_CHECK_K = 6
PONTRYAGIN_ORDER_CAP = 16


@dataclass(frozen=True)
class CheckResult:
    name: str
    status: str  # passed | failed | skipped
    detail: str = ""
    duration_ms: int = 0

    def to_record(self) -> dict:
        return {"check": self.name, "status": self.status, "detail": self.detail,
                "duration_ms": self.duration_ms}


class CheckFailed(Exception):
    """Raised inside a check to report a mathematical failure."""


class CheckSkipped(Exception):
    """Raised inside a check when it cannot run on this input."""


def random_word(n: int, rng: np.random.Generator, max_len: int) -> Word:
    length = int(rng.integers(0, max_len + 1))
    gens = rng.integers(1, n + 1, size=length)
    signs = rng.choice((-1, 1), size=length)
    return Word(tuple(int(g * s) for g, s in zip(gens, signs)), n)


def random_relator_product(
    p: EvenPresentation,
    rng: np.random.Generator,
    max_factors: int = 8,
    max_conj: int = 6,
) -> RelatorProduct:
    if not p.B:
        return RelatorProduct(p, ())
    factors = []
    for _ in range(int(rng.integers(0, max_factors + 1))):
        pair = p.B[int(rng.integers(0, len(p.B)))]
        exp = int(rng.choice((-1, 1)))
        factors.append(RelatorFactor(pair, exp, random_word(p.n, rng, max_conj)))
    return RelatorProduct(p, tuple(factors))


def _expect(condition: bool, message: str) -> None:
    if not condition:
        raise CheckFailed(message)


def check_chain_identities(G: GroupTable, max_bar_order: int = 16) -> str:
    """Pontryagin identities over every commuting pair and triple of G.

    Cycles and antisymmetry hold on the chain level, bilinearity up to the
    boundary of bilinearity_witness, conjugation invariance up to im d_3.
    Raises CheckFailed on the first violation.
    """
    pairs = [(g, h) for g, h in product(G.elements(), repeat=2) if G.commute(g, h)]
    for g, h in pairs:
        c = pontryagin_chain(G, g, h)
        _expect(bar_boundary(c).is_zero(), f"<{g},{h}> is not a cycle")
        _expect((c + pontryagin_chain(G, h, g)).is_zero(), f"<{g},{h}> + <{h},{g}> != 0")
    triples = 0
    for g, h, k in product(G.elements(), repeat=3):
        if G.commute(g, h) and G.commute(g, k):
            lhs = bar_boundary(bilinearity_witness(G, g, h, k))
            rhs = (pontryagin_chain(G, g, G.mul(h, k)) - pontryagin_chain(G, g, h)
                   - pontryagin_chain(G, g, k))
            _expect(lhs == rhs, f"bilinearity fails at ({g},{h},{k})")
            triples += 1
    for g, h in pairs:
        c = pontryagin_chain(G, g, h)
        for k in G.elements():
            conj = pontryagin_chain(G, G.mul(G.mul(k, g), G.inv(k)), G.mul(G.mul(k, h), G.inv(k)))
            diff = conj - c
            if not diff.is_zero():
                _expect(is_boundary(diff, G, max_bar_order), f"<{g},{h}> conjugated by {k} is not homologous")
    _expect(all(pontryagin_chain(G, g, g).is_zero() for g in G.elements()), "<g,g> != 0")
    _expect(boundaries_compose_to_zero(G), "d2 d3 != 0")
    return f"{len(pairs)} pairs, {triples} triples"


class Verifier:
    """Runs the checks against one presentation."""

    def __init__(self, p: EvenPresentation, limits: Limits | None = None, seed: int = DEFAULT_SEED):
        self.p = p
        self.limits = limits or Limits()
        self.seed = seed
        self._group: GroupTable | None = None
        self._group_note: str | None = None

    def rng(self, salt: int) -> np.random.Generator:
        return np.random.default_rng([self.seed, salt])

    # presentation-level checks

    def check_roundtrip(self) -> str:
        cm = self.p.matrix()
        _expect(parse_matrix(serialize(cm)) == cm, "sparse serialization does not round-trip")
        _expect(parse_matrix(serialize(cm, full=True)) == cm, "full serialization does not round-trip")
        return "sparse and full forms round-trip"

    def check_relators(self) -> str:
        for i, j in self.p.B:
            r = relator(i, j, self.p)
            _expect(not any(r.abelianization()), f"r_{i}{j} has nonzero abelianization")
            a, b = comm_rel_pair(i, j, self.p)
            _expect(commutator(a, b) == r, f"[a_{i}, (a_{j}a_{i})_(2n-1)] != r_{i}{j}")
        return f"{len(self.p.B)} relators"

    def check_wedge_basis(self) -> str:
        for i, j in self.p.B:
            expected = wedge_vector_of([((i, j), self.p.half_label(i, j))])
            _expect(wedge_image(relator(i, j, self.p)) == expected, f"wedge image of r_{i}{j}")
        lattice = artin_h2_basis_lattice(self.p)
        _expect(rank(lattice, lattice.shape[1]) == len(self.p.B), "relator wedge images are dependent")
        return f"rank {len(self.p.B)}"

    def check_lemma_words(self) -> str:
        a, b = Word.generator(1, 2), Word.generator(2, 2)
        top = min(LEMMA_CHECK_K, self.limits.max_k)
        for k in range(1, top + 1):
            w = w_lemma(a, b, k, self.limits.max_k)
            lhs = (a * b) ** k * ((b * a) ** k) ** -1
            _expect(lhs == w * commutator(a, b) ** k, f"(ab)^{k}(ba)^-{k} != w_{k}[a,b]^{k}")
            _expect(magnus2(w).is_one(), f"w_{k} is not in [F,[F,F]]")
        return f"k = 1..{top}"

    def check_magnus_homomorphism(self) -> str:
        rng = self.rng(1)
        for _ in range(20):
            u, v = random_word(self.p.n, rng, 12), random_word(self.p.n, rng, 12)
            _expect(magnus2(u * v) == magnus2(u) * magnus2(v), "magnus2 is not multiplicative")
            _expect(wedge_image(commutator(u, v)) == wedge_of(u.abelianization(), v.abelianization()),
                    "wedge image of [u,v] is not u^ab ^ v^ab")
        return "20 random pairs"

    def check_hopf_oracle(self) -> str:
        rng = self.rng(2)
        for _ in range(RANDOM_PRODUCTS):
            rp = random_relator_product(self.p, rng)
            _expect(class_of(rp) == coords_via_wedge(flatten(rp), self.p),
                    "class_of disagrees with the wedge coordinates")
            shuffled = list(rp.factors)
            rng.shuffle(shuffled)
            reconj = [RelatorFactor(f.pair, f.exp, random_word(self.p.n, rng, 6)) for f in shuffled]
            _expect(class_of(RelatorProduct(self.p, tuple(reconj))) == class_of(rp),
                    "class_of depends on order or conjugators")
        return f"{RANDOM_PRODUCTS} random relator products"

    def check_cup(self) -> str:
        n, table = self.p.n, cup_table(self.p)
        for p_, q_ in self.p.B:
            k = self.p.half_label(p_, q_)
            comms = [(Word.generator(p_, n), Word.generator(q_, n))] * k
            for (i, j), coeff in table.entries:
                value = hopf_pairing(comms, Character.dual(i, n), Character.dual(j, n))
                expected = coeff if (i, j) == (p_, q_) else 0
                _expect(value == expected, f"pairing of beta_{i} cup beta_{j} on alpha_{p_}{q_}")
        _expect(all(table[pair] != 0 for pair in self.p.B), "cup map misses a basis direction")
        return f"{len(table.entries)} entries"

    def check_rho_star(self) -> str:
        for pair in self.p.B:
            _expect(rho_star(ArtinH2Class.unit(self.p, pair)) == CoxH2Class.unit(self.p, pair),
                    f"rho* moves the basis element at {pair}")
            _expect(rho_star(ArtinH2Class.unit(self.p, pair) + ArtinH2Class.unit(self.p, pair)).is_zero(),
                    f"rho* does not kill 2 alpha at {pair}")
        return f"{len(self.p.B)} basis elements"

    def check_cox_h1(self) -> str:
        h = cox_h1(self.p)
        _expect(h == AbelianInvariants(0, (2,) * self.p.n), f"H_1(W) = {h}")
        return str(h)

    # finite oracle checks

    def group(self) -> GroupTable:
        if self._group is None and self._group_note is None:
            pairs = self.p.n * (self.p.n - 1) // 2
            if len(self.p.B) < pairs:
                self._group_note = "infinite group: some label is inf"
            else:
                try:
                    self._group = todd_coxeter(self.p, self.limits.max_cosets)
                except ResourceLimitError as e:
                    self._group_note = str(e)
            if self._group is not None and self._group.order > self.limits.max_order:
                self._group_note = f"order {self._group.order} above max_order={self.limits.max_order}"
                self._group = None
        if self._group is None:
            raise CheckSkipped(self._group_note)
        return self._group

    def _small_group(self) -> GroupTable:
        G = self.group()
        if G.order > self.limits.max_bar_order:
            raise CheckSkipped(f"order {G.order} above max_bar_order={self.limits.max_bar_order}")
        return G

    def check_oracle_h1(self) -> str:
        G = self.group()
        h = bar_h(G, 1, self.limits.max_bar_order)
        _expect(h == cox_h1(self.p), f"bar H_1 = {h}, presentation gives {cox_h1(self.p)}")
        return f"order {G.order}: {h}"

    def check_oracle_h2(self) -> str:
        G = self._small_group()
        h = bar_h(G, 2, self.limits.max_bar_order)
        _expect(h == AbelianInvariants(0, (2,) * len(self.p.B)), f"bar H_2 = {h}, |B| = {len(self.p.B)}")
        return f"order {G.order}: {h}"

    def check_cox_pontryagin(self) -> str:
        G = self._small_group()
        _expect(all(bar_boundary(c).is_zero() for c in cox_pontryagin_chains(self.p, G)),
                "a Coxeter Pontryagin chain is not a cycle")
        _expect(cox_pontryagin_independent(self.p, G), "Pontryagin products are not a basis mod boundaries")
        return f"{len(self.p.B)} products independent"

    def check_pontryagin_identities(self) -> str:
        G = self._small_group()
        if G.order > PONTRYAGIN_ORDER_CAP:
            raise CheckSkipped(f"order {G.order} above {PONTRYAGIN_ORDER_CAP}")
        return check_chain_identities(G, self.limits.max_bar_order)

    CHECKS = (
        ("coxmat.roundtrip", check_roundtrip),
        ("words.relators", check_relators),
        ("magnus.wedge_basis", check_wedge_basis),
        ("words.lemma_words", check_lemma_words),
        ("magnus.homomorphism", check_magnus_homomorphism),
        ("artin_h.hopf_oracle", check_hopf_oracle),
        ("cohomology.cup", check_cup),
        ("coxeter_h.rho_star", check_rho_star),
        ("coxeter_h.h1", check_cox_h1),
        ("oracle.h1", check_oracle_h1),
        ("oracle.h2", check_oracle_h2),
        ("oracle.cox_pontryagin", check_cox_pontryagin),
        ("oracle.pontryagin_identities", check_pontryagin_identities),
    )

    def run(self) -> list[CheckResult]:
        results = []
        matrix = summarize_matrix(self.p)
        for name, check in self.CHECKS:
            start = time.time()
            try:
                detail = check(self)
                status, level, error = "passed", logger.info, None
            except (CheckSkipped, ResourceLimitError) as e:
                detail = str(e)
                status, level, error = "skipped", logger.warning, None
            except CheckFailed as e:
                detail = str(e)
                status, level, error = "failed", logger.error, str(e)
            duration_ms = int((time.time() - start) * 1000)
            level(format_check_log("verify", matrix, name, detail, status, duration_ms, error))
            results.append(CheckResult(name, status, detail, duration_ms))
        return results


def run_checks(p: EvenPresentation, limits: Limits | None = None, seed: int = DEFAULT_SEED) -> list[CheckResult]:
    return Verifier(p, limits, seed).run()
