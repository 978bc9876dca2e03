"""Serialization: group files in, JSON/CSV/DOT artifacts out.

All JSON is emitted through canonical_json so identical inputs produce
byte-identical output (sorted keys, fixed separators, no volatile fields).
"""

from __future__ import annotations

import json
from typing import Optional, Sequence

from .characters import CharContext, get_context
from .cyclotomic import CycInt
from .errors import InputError
from .groups import DEFAULT_ORDER_CAP, GroupTable, Subgroup, from_cayley, from_permutations
from .poset import CharacterPoset, ComponentPartition, WitnessChain
from .verify import TheoremReport


def canonical_json(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2)


def cyc_to_json(z: CycInt) -> dict:
    return {"n": z.n, "coeffs": list(z.coeffs)}


# -- group ingestion -----------------------------------------------------------


def load_group_json(data: dict, cap: int = DEFAULT_ORDER_CAP) -> GroupTable:
    if not isinstance(data, dict):
        raise InputError("group file must contain a JSON object")
    name = data.get("name", "G")
    if "cayley" in data:
        table = data["cayley"]
        if not isinstance(table, list):
            raise InputError("'cayley' must be a list of rows")
        if len(table) > cap:
            raise InputError(f"table order {len(table)} exceeds cap {cap}")
        return from_cayley(table, name=str(name))
    if "perm_gens" in data:
        gens = data["perm_gens"]
        degree = data.get("degree")
        if not isinstance(gens, list) or not gens:
            raise InputError("'perm_gens' must be a nonempty list of permutations")
        if degree is not None:
            for i, g in enumerate(gens):
                if len(g) != degree:
                    raise InputError(f"perm_gens[{i}] has length {len(g)}, expected degree {degree}")
        return from_permutations(gens, name=str(name), cap=cap)
    raise InputError("group file needs either 'cayley' or 'perm_gens'")


def load_group_file(path: str, cap: int = DEFAULT_ORDER_CAP) -> GroupTable:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            data = json.load(fh)
    except OSError as err:
        raise InputError(f"cannot read {path}: {err}") from None
    except json.JSONDecodeError as err:
        raise InputError(f"malformed JSON in {path}: {err}") from None
    return load_group_json(data, cap)


# -- character tables -----------------------------------------------------------


def char_table_dict(ctx: CharContext, S: Subgroup) -> dict:
    cc = ctx.classes(S)
    G = ctx.group
    return {
        "order": len(S.elems),
        "elements": list(S.elems),
        "class_sizes": list(cc.sizes),
        "class_rep_orders": [G.elem_order[r] for r in cc.reps],
        "class_reps": list(cc.reps),
        "characters": [
            {"degree": ch.degree, "values": [cyc_to_json(v) for v in ch.values]}
            for ch in ctx.irr(S)
        ],
    }


def irr_json(G: GroupTable, include_subgroups: bool = False) -> dict:
    ctx = get_context(G)
    if include_subgroups:
        subs = ctx.lattice()
    else:
        subs = [ctx.whole]
    return {
        "group": G.name,
        "order": G.order,
        "exponent": G.exponent,
        "tables": [char_table_dict(ctx, S) for S in subs],
    }


# -- poset artifacts ---------------------------------------------------------------


def poset_json(poset: CharacterPoset, partition: ComponentPartition) -> dict:
    ctx = poset.ctx
    return {
        "group": poset.group.name,
        "p": poset.p,
        "e": poset.e,
        "strategy": poset.strategy,
        "subgroups": [
            {"id": i, "order": len(S.elems), "elements": list(S.elems)}
            for i, S in enumerate(poset.subgroups)
        ],
        "nodes": [
            {
                "id": poset.node_id(n),
                "subgroup": n.subgroup_id,
                "char": n.char_id,
                "degree": poset.char_of(n).degree,
            }
            for n in poset.nodes
        ],
        "edges": [list(e) for e in poset.edge_list()],
        "components": {
            "count": partition.count,
            "node_to_component": list(partition.node_to_component),
        },
    }


_PALETTE = (
    "#e6194b", "#3cb44b", "#4363d8", "#f58231", "#911eb4", "#46f0f0",
    "#f032e6", "#bcf60c", "#fabebe", "#008080", "#e6beff", "#9a6324",
    "#fffac8", "#800000", "#aaffc3", "#808000", "#ffd8b1", "#000075",
)


def poset_dot(poset: CharacterPoset, partition: ComponentPartition) -> str:
    lines = [
        f'graph "{poset.group.name}_p{poset.p}_e{poset.e}" {{',
        "  node [style=filled];",
    ]
    for n in poset.nodes:
        nid = poset.node_id(n)
        comp = partition.node_to_component[nid]
        color = _PALETTE[comp % len(_PALETTE)]
        S = poset.subgroup_of(n)
        deg = poset.char_of(n).degree
        label = f"H{n.subgroup_id}:χ{n.char_id} (|H|={len(S.elems)}, deg={deg})"
        lines.append(f'  n{nid} [label="{label}", fillcolor="{color}"];')
    for a, b in poset.edge_list():
        lines.append(f"  n{a} -- n{b};")
    lines.append("}")
    return "\n".join(lines)


def chain_json(poset: CharacterPoset, chain: WitnessChain, verified: bool) -> dict:
    return {
        "nodes": [
            {
                "subgroup": n.subgroup_id,
                "char": n.char_id,
                "subgroup_order": len(poset.subgroup_of(n).elems),
                "degree": poset.char_of(n).degree,
            }
            for n in chain.nodes
        ],
        "directions": list(chain.directions),
        "verified": verified,
    }


# -- verification reports -------------------------------------------------------------


def reports_json(reports: Sequence[TheoremReport], errors: Optional[Sequence[dict]] = None) -> dict:
    out = {"reports": [r.to_dict() for r in reports]}
    if errors is not None:
        out["errors"] = [dict(e) for e in errors]
    return out


CSV_HEADER = "group,p,e,I_order,IZ_order,irr_I,components,ok"


def reports_csv(reports: Sequence[TheoremReport]) -> str:
    lines = [CSV_HEADER]
    for r in reports:
        lines.append(
            f"{r.group},{r.p},{r.e},{r.I_order},{r.IZ_order},{r.irr_I},"
            f"{r.components},{str(r.ok).lower()}"
        )
    return "\n".join(lines)
