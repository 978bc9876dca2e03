"""Command-line front end.

Subcommands: groups, irr, poset, witness, verify, sweep.  Groups come from a
family descriptor ("Quaternion(8)") or a JSON file ("@path/to/group.json").
Exit codes: 0 success, 2 input error, 3 domain precondition, 4 witness
precondition, 5 internal assertion.
"""

from __future__ import annotations

import argparse
import os
import sys
from dataclasses import dataclass
from typing import Optional

from . import export
from .characters import get_context
from .errors import (
    CharposetError,
    DomainError,
    InputError,
    InternalCheckError,
    WitnessError,
)
from .families import FAMILY_HELP, builtin, builtin_catalog
from .groups import DEFAULT_ORDER_CAP, GroupTable, require_p_group, subgroups_of_order
from .poset import CharacterPoset, build_poset
from .verify import sweep as run_sweep
from .verify import theorem_report, valid_exponents

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_DOMAIN = 3
EXIT_WITNESS = 4
EXIT_INTERNAL = 5


@dataclass
class RunConfig:
    command: str
    group: Optional[str] = None
    p: Optional[int] = None
    e: Optional[int] = None
    strategy: str = "maximal"
    fmt: str = "json"
    out: Optional[str] = None
    cap: int = DEFAULT_ORDER_CAP
    subgroups: bool = False
    endpoints: Optional[str] = None
    max_order: Optional[int] = None
    primes: tuple = (2, 3, 5)


def _default_cap() -> int:
    env = os.environ.get("CHARPOSET_CAP")
    if env:
        try:
            return int(env)
        except ValueError:
            raise InputError(f"CHARPOSET_CAP must be an integer, got {env!r}") from None
    return DEFAULT_ORDER_CAP


def _resolve_group(source: str, cap: int) -> GroupTable:
    if source.startswith("@"):
        return export.load_group_file(source[1:], cap)
    return builtin(source, cap)


def _emit(text: str, out: Optional[str]) -> None:
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        print(text)


def _build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(prog="charposet", description=__doc__)
    sub = top.add_subparsers(dest="command", required=True)

    sub.add_parser("groups", help="list the built-in family catalog")

    def common(p, fmt_choices):
        p.add_argument("--group", required=True, help="family spec or @file.json")
        p.add_argument("--cap", type=int, default=None, help="group order cap")
        p.add_argument("--format", dest="fmt", choices=fmt_choices, default=fmt_choices[0])
        p.add_argument("--out", default=None, help="write the artifact to this path")

    p_irr = sub.add_parser("irr", help="irreducible character table(s)")
    common(p_irr, ["json"])
    p_irr.add_argument("--subgroups", action="store_true", help="tables for every subgroup")

    p_poset = sub.add_parser("poset", help="build the poset and count components")
    common(p_poset, ["json", "dot"])
    p_poset.add_argument("--p", type=int, default=None)
    p_poset.add_argument("--e", type=int, required=True)
    p_poset.add_argument("--strategy", choices=["maximal", "full"], default="maximal")

    p_wit = sub.add_parser("witness", help="connectivity witness chain between two nodes")
    common(p_wit, ["json"])
    p_wit.add_argument("--p", type=int, default=None)
    p_wit.add_argument("--e", type=int, required=True)
    p_wit.add_argument(
        "--endpoints",
        required=True,
        help="two nodes as subgroupId:charId,subgroupId:charId (ids from the poset output)",
    )

    p_ver = sub.add_parser("verify", help="bound/criterion report for one group")
    common(p_ver, ["json", "csv"])
    p_ver.add_argument("--p", type=int, default=None)
    p_ver.add_argument("--e", type=int, default=None, help="default: every valid e")
    p_ver.add_argument("--strategy", choices=["maximal", "full"], default="maximal")

    p_sw = sub.add_parser("sweep", help="verify the whole built-in catalog")
    p_sw.add_argument("--p", type=int, action="append", default=None, help="repeatable; default 2 3 5")
    p_sw.add_argument("--max-order", type=int, default=64)
    p_sw.add_argument("--cap", type=int, default=None)
    p_sw.add_argument("--strategy", choices=["maximal", "full"], default="maximal")
    p_sw.add_argument("--format", dest="fmt", choices=["json", "csv"], default="json")
    p_sw.add_argument("--out", default=None)
    return top


def cmd_groups() -> int:
    print("built-in families:")
    for spec, desc in FAMILY_HELP:
        print(f"  {spec:<28} {desc}")
    print()
    print("sweep catalog (p=2, order <= 64):")
    for spec in builtin_catalog(2, 64):
        print(f"  {spec}")
    return EXIT_OK


def cmd_irr(cfg: RunConfig) -> int:
    G = _resolve_group(cfg.group, cfg.cap)
    get_context(G, order_cap=cfg.cap)
    _emit(export.canonical_json(export.irr_json(G, cfg.subgroups)), cfg.out)
    return EXIT_OK


def cmd_poset(cfg: RunConfig) -> int:
    G = _resolve_group(cfg.group, cfg.cap)
    get_context(G, order_cap=cfg.cap)
    poset = build_poset(G, cfg.p, cfg.e, cfg.strategy)
    partition = poset.components()
    print(f"components: {partition.count}")
    if cfg.out:
        if cfg.fmt == "dot":
            _emit(export.poset_dot(poset, partition), cfg.out)
        else:
            _emit(export.canonical_json(export.poset_json(poset, partition)), cfg.out)
    return EXIT_OK


def _parse_endpoints(poset: CharacterPoset, text: str):
    parts = text.split(",")
    if len(parts) != 2:
        raise InputError("--endpoints needs exactly two nodes: sid:cid,sid:cid")
    out = []
    for part in parts:
        bits = part.split(":")
        if len(bits) != 2:
            raise InputError(f"bad endpoint {part!r}, expected sid:cid")
        try:
            sid, cid = int(bits[0]), int(bits[1])
        except ValueError:
            raise InputError(f"bad endpoint {part!r}, expected integers") from None
        if not 0 <= sid < len(poset.subgroups):
            raise InputError(f"subgroup id {sid} out of range")
        S = poset.subgroups[sid]
        chars = poset.ctx.irr(S)
        if not 0 <= cid < len(chars):
            raise InputError(f"char id {cid} out of range for subgroup {sid}")
        out.append((S, chars[cid]))
    return out


def cmd_witness(cfg: RunConfig) -> int:
    G = _resolve_group(cfg.group, cfg.cap)
    get_context(G, order_cap=cfg.cap)
    poset = build_poset(G, cfg.p, cfg.e)
    (H, alpha), (K, beta) = _parse_endpoints(poset, cfg.endpoints)
    try:
        chain = poset.witness_direct(alpha, beta)
    except WitnessError:
        order = poset.p ** (poset.e + 1)
        level = subgroups_of_order(G, order, poset.ctx.lattice())
        chain = poset.witness_sequence([H] + level + [K], alpha, beta)

    verified = poset.validate_chain(chain)
    pieces = []
    for i, node in enumerate(chain.nodes):
        S = poset.subgroup_of(node)
        deg = poset.char_of(node).degree
        pieces.append(f"(H{node.subgroup_id}:chi{node.char_id} |H|={len(S.elems)} deg={deg})")
        if i < len(chain.directions):
            pieces.append(f"--{chain.directions[i]}-->")
    print(" ".join(pieces))
    print(f"links: {len(chain.directions)}, verified: {str(verified).lower()}")
    if cfg.out:
        _emit(export.canonical_json(export.chain_json(poset, chain, verified)), cfg.out)
    return EXIT_OK if verified else EXIT_INTERNAL


def cmd_verify(cfg: RunConfig) -> int:
    G = _resolve_group(cfg.group, cfg.cap)
    get_context(G, order_cap=cfg.cap)
    p = require_p_group(G, cfg.p)
    levels = [cfg.e] if cfg.e is not None else valid_exponents(G, p)
    reports = [theorem_report(G, p, e, cfg.strategy) for e in levels]
    if cfg.fmt == "csv":
        _emit(export.reports_csv(reports), cfg.out)
    else:
        _emit(export.canonical_json(export.reports_json(reports)), cfg.out)
    return EXIT_OK


def cmd_sweep(cfg: RunConfig) -> int:
    specs = []
    for p in cfg.primes:
        specs.extend(builtin_catalog(p, cfg.max_order))
    result = run_sweep(specs, strategy=cfg.strategy, cap=cfg.cap)
    if cfg.fmt == "csv":
        _emit(export.reports_csv(result.reports), cfg.out)
    else:
        _emit(export.canonical_json(export.reports_json(result.reports, result.errors)), cfg.out)
    if result.violations:
        return EXIT_INTERNAL
    if result.errors:
        return EXIT_DOMAIN
    return EXIT_OK


def main(argv: Optional[list] = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        cap = _default_cap()
        if getattr(args, "cap", None):
            cap = args.cap
        if args.command == "groups":
            return cmd_groups()
        cfg = RunConfig(
            command=args.command,
            group=getattr(args, "group", None),
            p=getattr(args, "p", None) if args.command != "sweep" else None,
            e=getattr(args, "e", None),
            strategy=getattr(args, "strategy", "maximal"),
            fmt=getattr(args, "fmt", "json"),
            out=getattr(args, "out", None),
            cap=cap,
            subgroups=getattr(args, "subgroups", False),
            endpoints=getattr(args, "endpoints", None),
            max_order=getattr(args, "max_order", None),
        )
        if args.command == "sweep":
            cfg.primes = tuple(args.p) if args.p else (2, 3, 5)
            cfg.max_order = args.max_order
            return cmd_sweep(cfg)
        if args.command == "irr":
            return cmd_irr(cfg)
        if args.command == "poset":
            return cmd_poset(cfg)
        if args.command == "witness":
            return cmd_witness(cfg)
        if args.command == "verify":
            return cmd_verify(cfg)
        parser.error(f"unknown command {args.command!r}")
    except InputError as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_INPUT
    except WitnessError as err:
        print(f"witness precondition failed: {err}", file=sys.stderr)
        return EXIT_WITNESS
    except DomainError as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_DOMAIN
    except InternalCheckError as err:
        print(f"internal check failed: {err}", file=sys.stderr)
        return EXIT_INTERNAL
    except CharposetError as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_INPUT
    return EXIT_OK


if __name__ == "__main__":
    raise SystemExit(main())
