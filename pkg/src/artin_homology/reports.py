"""Report builders shared by the CLI and the MCP tools.

Every function returns a plain dict with a ``kind`` field; renderers decide
whether it becomes a rich table, a JSON line or a tool response.
"""

from artin_homology.artin_h import (
    basis_records,
    class_of,
    coords_via_wedge,
    flatten,
    h1,
    h2,
    relator_product_from_text,
)
from artin_homology.cohomology import cup_cokernel, cup_table
from artin_homology.config import Limits
from artin_homology.coxeter_h import cox_h1, cox_h2, cox_pontryagin, cox_pontryagin_chains, rho_star_matrix
from artin_homology.coxmat import CoxeterMatrix, EvenPresentation, is_right_angled, serialize, to_even, to_record
from artin_homology.errors import MatrixValidationError, ResourceLimitError
from artin_homology.oracle.bar import bar_h
from artin_homology.oracle.coset import todd_coxeter
from artin_homology.oracle.groups import (
    GroupTable,
    dihedral,
    direct_product,
    elementary_abelian,
    order_profile,
)
from artin_homology.pontryagin import FreeGroup, pontryagin_artin, wedge_chain
from artin_homology.verify import run_checks
from artin_homology.words import format_word

SCHEMA = "artin-homology/1"


def validate_report(cm: CoxeterMatrix) -> dict:
    """Parsed matrix, B and the canonical sparse document.

    Odd labels are reported, not raised, so ``validate`` can describe any
    Coxeter matrix.
    """
    record = {"kind": "matrix", **to_record(cm)}
    odd = [{"i": i, "j": j, "m": m} for (i, j), m in cm.labels if m % 2]
    record["even"] = not odd
    record["odd_labels"] = odd
    if not odd:
        p = to_even(cm)
        record["B"] = [list(pair) for pair in p.B]
        record["right_angled"] = is_right_angled(p)
    record["canonical"] = serialize(cm)
    return record


def h1_report(p: EvenPresentation, group: str = "artin") -> dict:
    if group == "artin":
        desc = h1(p)
        return {"kind": "basis", "group": "artin", "degree": 1, "rank": desc.rank,
                "coefficients": desc.coefficients, "elements": basis_records(desc)}
    invariants = cox_h1(p)
    return {
        "kind": "invariants",
        "group": "coxeter",
        "degree": 1,
        "invariants": str(invariants),
        "free_rank": invariants.free_rank,
        "torsion": list(invariants.torsion),
        "elements": [{"label": f"gamma_{i}", "representative": f"s{i}"} for i in range(1, p.n + 1)],
    }


def h2_report(p: EvenPresentation, group: str = "artin") -> dict:
    desc = h2(p) if group == "artin" else cox_h2(p)
    record = {"kind": "basis", "group": desc.group, "degree": 2, "rank": desc.rank,
              "coefficients": desc.coefficients, "elements": basis_records(desc)}
    if group == "coxeter":
        record["rho_star"] = rho_star_matrix(p).tolist()
    return record


def cup_report(p: EvenPresentation) -> dict:
    table = cup_table(p)
    cokernel = cup_cokernel(p)
    return {"kind": "cup", "n": p.n, "entries": table.records(), "matrix": table.as_matrix(),
            "cokernel": cokernel.to_record()}


def _finite_realization(p: EvenPresentation, limits: Limits) -> GroupTable | None:
    """W_M as a Cayley table, or None when it is infinite or out of reach."""
    if len(p.B) < p.n * (p.n - 1) // 2:
        return None
    try:
        G = todd_coxeter(p, limits.max_cosets)
    except ResourceLimitError:
        return None
    return G if G.order <= limits.max_order else None


def pontryagin_report(p: EvenPresentation, group: str = "artin", limits: Limits | None = None) -> dict:
    """Commuting pairs, their classes and the chains [g|h] - [h|g].

    For the Coxeter group the chains are also evaluated in a Cayley table of
    W_M when one can be enumerated within ``limits``.
    """
    letter = "a" if group == "artin" else "s"
    free = FreeGroup(p.n)
    G = _finite_realization(p, limits or Limits()) if group == "coxeter" else None
    table_chains = cox_pontryagin_chains(p, G) if G is not None else None
    pairs = []
    for k, (i, j) in enumerate(p.B):
        if group == "artin":
            (g, h), cls = pontryagin_artin(i, j, p)
        else:
            (g, h), cls = cox_pontryagin(i, j, p)
        record = {
            "i": i,
            "j": j,
            "g": format_word(g, letter),
            "h": format_word(h, letter),
            "class": list(cls.coords),
            "chain": wedge_chain(free, g, h).rendered_terms(letter),
        }
        if table_chains is not None:
            record["table_chain"] = table_chains[k].rendered_terms()
        pairs.append(record)
    report = {"kind": "pontryagin", "group": group, "B": [list(q) for q in p.B], "pairs": pairs}
    if G is not None:
        report["order"] = G.order
    return report


def class_report(p: EvenPresentation, relator_text: str) -> dict:
    """Coordinates of a relator product, with the Magnus cross-check."""
    rp = relator_product_from_text(relator_text, p)
    counted = class_of(rp)
    wedged = coords_via_wedge(flatten(rp), p)
    return {
        "kind": "class",
        "factors": [
            {"i": f.pair[0], "j": f.pair[1], "exp": f.exp, "conj": format_word(f.conj)}
            for f in rp.factors
        ],
        "B": [list(q) for q in p.B],
        "coords": list(counted.coords),
        "wedge_coords": list(wedged.coords),
        "agrees": counted == wedged,
    }


def verify_report(p: EvenPresentation, limits: Limits, seed: int) -> dict:
    checks = [c.to_record() for c in run_checks(p, limits, seed)]
    counts = {s: sum(1 for c in checks if c["status"] == s) for s in ("passed", "failed", "skipped")}
    return {"kind": "verify", "seed": seed, "checks": checks, **counts}


def resolve_group(spec: str, p: EvenPresentation | None, limits: Limits) -> GroupTable:
    """Group named by ``dihedral:K``, ``elementary:K``, ``product:A,B`` or ``enumerate``."""
    spec = spec.strip()
    kind, _, arg = spec.partition(":")
    try:
        if kind == "dihedral":
            return dihedral(int(arg))
        if kind == "elementary":
            return elementary_abelian(int(arg))
        if kind == "product":
            left, sep, right = arg.partition(",")
            if not sep:
                raise MatrixValidationError(f"product needs two factors: {spec!r}")
            return direct_product(resolve_group(left, p, limits), resolve_group(right, p, limits),
                                  limits.max_order)
    except ValueError as e:
        raise MatrixValidationError(f"bad group spec {spec!r}: {e}")
    if kind == "enumerate":
        if p is None:
            raise MatrixValidationError("group spec 'enumerate' needs a matrix")
        G = todd_coxeter(p, limits.max_cosets)
        if G.order > limits.max_order:
            raise ResourceLimitError(f"enumerated group of order {G.order}", "max_order", limits.max_order)
        return G
    raise MatrixValidationError(f"unknown group spec {spec!r}")


def oracle_report(G: GroupTable, limits: Limits) -> dict:
    h1_inv = bar_h(G, 1, limits.max_bar_order)
    h2_inv = bar_h(G, 2, limits.max_bar_order)
    return {
        "kind": "oracle",
        "order": G.order,
        "order_profile": list(order_profile(G)),
        "h1": h1_inv.to_record(),
        "h2": h2_inv.to_record(),
        "h2_f2_rank": h2_inv.f2_rank(),
    }
