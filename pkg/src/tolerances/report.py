"""Build the structured analysis report for a tolerance or covering."""

from __future__ import annotations

from .blocks import DEFAULT_BLOCK_CAP, block_bitsets, blocks, brute_force_block_bitsets
from .coverings import (
    Covering,
    canonical_bases,
    irredundant_covering_of,
    is_irredundant,
    is_neighborhood_family,
    is_normal,
    normal_by_definition,
    NORMAL_ORACLE_MAX,
)
from .lattice import (
    FormalContext,
    SetLattice,
    brute_force_lower_family,
    brute_force_upper_family,
    check_c1_c2_c3,
    concept_lattice,
    is_ortholattice,
    lower_definable,
    upper_definable,
)
from .order import (
    HELLY_MAX,
    check_characterization,
    check_helly_theorem,
    check_main_equivalence,
    has_helly2,
    helly2_by_triples,
    helly_number,
)
from .relation import Subset, Tolerance, is_bounded_by_minimal, minimal_elements, quasiorder_of

LATTICE_MAX = 12
BASE_SEARCH_LIMIT = 1 << 16


def _labels(X: Subset) -> list[str]:
    return list(X.labels)


def _family(fam) -> list[list[str]]:
    return [_labels(X) for X in fam]


def _set_lattice_summary(L: SetLattice) -> dict:
    lat = L.lattice()
    return {
        "size": len(L),
        "atoms": _family(L.atoms()),
        "atomistic": lat.is_atomistic(),
        "boolean": lat.is_boolean(),
        "ortholattice": is_ortholattice(L),
    }


def _equivalence_classes(R: Tolerance) -> list[list[str]]:
    groups: dict[int, int] = {}
    for i, r in enumerate(R.rows):
        groups[r] = groups.get(r, 0) | 1 << i
    return sorted(_labels(Subset(R.universe, g)) for g in groups.values())


def analyze(
    R: Tolerance,
    covering: Covering | None = None,
    oracle: bool = False,
    block_cap: int = DEFAULT_BLOCK_CAP,
    base_limit: int = BASE_SEARCH_LIMIT,
) -> dict:
    """Everything the library can say about ``R``, as plain JSON-ready data.

    Key order is fixed and every set is sorted by label, so the result is a
    pure function of the input. ``covering`` is the input family when the
    tolerance came from a covering file.
    """
    u = R.universe
    Q = quasiorder_of(R)
    bl = blocks(R, block_cap)
    H = irredundant_covering_of(R)
    small = u.n <= LATTICE_MAX

    report: dict = {
        "universe": list(u.labels),
        "neighborhoods": {x: _labels(Subset(u, R.rows[i])) for i, x in enumerate(u.labels)},
        "blocks": bl.as_labels(),
        "quasiorder": {
            "minimal_elements": _labels(minimal_elements(Q)),
            "bounded_by_minimal": is_bounded_by_minimal(Q),
            "equivalence_classes": _equivalence_classes(R),
        },
    }

    if covering is not None:
        extra = [b for b in bl.blocks if b.bits not in covering.bitsets()]
        report["covering"] = {
            "sets": covering.as_labels(),
            "irredundant": is_irredundant(covering),
            "neighborhood_family": is_neighborhood_family(covering, R),
            "normal": is_normal(covering, cap=block_cap),
            "equals_blocks": bl.bitsets() == covering.bitsets(),
            "extra_blocks": _family(extra),
        }
    else:
        report["covering"] = None

    if H is not None:
        extra = [b for b in bl.blocks if b.bits not in H.bitsets()]
        report["irredundant_covering"] = {
            "sets": H.as_labels(),
            "normal": is_normal(H, cap=block_cap),
            "extra_blocks": _family(extra),
        }
    else:
        report["irredundant_covering"] = None

    report["canonical_bases"] = [_family(b) for b in canonical_bases(R, base_limit, block_cap)]
    report["helly"] = {
        "number": helly_number(Q) if u.n <= HELLY_MAX else None,
        "helly2": has_helly2(Q, block_cap),
        "by_triples": helly2_by_triples(Q),
    }

    if small:
        report["lattices"] = {
            "upper_definable": _set_lattice_summary(upper_definable(R)),
            "lower_definable": _set_lattice_summary(lower_definable(R)),
            "concept_lattice": _concept_summary(R),
        }
    else:
        report["lattices"] = None

    theorems = {
        "characterization": check_characterization(R).to_dict(),
        "helly": check_helly_theorem(Q, block_cap).to_dict(),
        "main": check_main_equivalence(R, cap=block_cap).to_dict() if H is not None else None,
        "c1c2c3": check_c1_c2_c3(R).to_dict() if small else None,
    }
    report["theorems"] = theorems

    if oracle:
        report["oracle"] = _oracle(R, covering, H, block_cap)
    return report


def _concept_summary(R: Tolerance) -> dict:
    lat = concept_lattice(FormalContext.complement_of(R))
    return {"size": len(lat), "atomistic": lat.is_atomistic(), "boolean": lat.is_boolean()}


def _oracle(R: Tolerance, covering, H, block_cap: int) -> dict:
    n = R.n
    out: dict = {}
    if n <= LATTICE_MAX:
        out["blocks_match_brute_force"] = sorted(block_bitsets(R, block_cap)) == sorted(
            brute_force_block_bitsets(R)
        )
        out["upper_family_matches"] = set(upper_definable(R).bitsets()) == brute_force_upper_family(R)
        out["lower_family_matches"] = set(lower_definable(R).bitsets()) == brute_force_lower_family(R)
    target = covering if covering is not None else H
    if target is not None and n <= NORMAL_ORACLE_MAX:
        out["normal_by_definition"] = normal_by_definition(target)
    return out


def render_table(report: dict) -> str:
    """A compact human-readable rendering of ``analyze`` output."""

    def fam(f) -> str:
        return " ".join("{" + ",".join(s) + "}" for s in f) if f else "-"

    lines = [f"universe        {' '.join(report['universe'])}"]
    lines.append("neighbourhoods")
    for x, hood in report["neighborhoods"].items():
        lines.append(f"  R({x}) = {{{','.join(hood)}}}")
    lines.append(f"blocks          {fam(report['blocks'])}")
    q = report["quasiorder"]
    lines.append(f"minimal         {' '.join(q['minimal_elements'])}")
    if report["covering"] is not None:
        c = report["covering"]
        lines.append(f"covering        {fam(c['sets'])}")
        lines.append(f"  irredundant   {c['irredundant']}")
        lines.append(f"  normal        {c['normal']}")
        lines.append(f"  extra blocks  {fam(c['extra_blocks'])}")
    irr = report["irredundant_covering"]
    lines.append(f"irredundant     {fam(irr['sets']) if irr else 'none'}")
    lines.append(f"canonical bases {len(report['canonical_bases'])}")
    for b in report["canonical_bases"]:
        lines.append(f"  {fam(b)}")
    h = report["helly"]
    lines.append(f"helly number    {h['number']}  (helly-2: {h['helly2']})")
    if report["lattices"] is not None:
        for name, s in report["lattices"].items():
            lines.append(
                f"{name:<16}size {s['size']}, atomistic {s['atomistic']}, boolean {s['boolean']}"
            )
    for name, t in report["theorems"].items():
        if t is None:
            lines.append(f"theorem {name:<12} n/a")
            continue
        vals = ", ".join(f"{k}={v}" for k, v in t["conditions"].items())
        lines.append(f"theorem {name:<12} {'consistent' if t['consistent'] else 'INCONSISTENT'}: {vals}")
    if "oracle" in report:
        for k, v in report["oracle"].items():
            lines.append(f"oracle {k:<24} {v}")
    return "\n".join(lines) + "\n"
