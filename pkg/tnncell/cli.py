"""
Interface en ligne de commande de tnncell.

Usage:
    python main.py classify matrice.json
    python main.py test matrice.json diagramme.txt [--scheme schema.json]
    python main.py census 3 3 --det-stats
    python main.py representative diagramme.txt [--random-seed 7]
    python main.py scheme diagramme.txt
    python main.py lacunary diagramme.txt 1 2 [--all]
    python main.py minors 3 3 --kind final
    python main.py bench 4 --trials 5 [--plot bench.png]

Codes de sortie : 0 verdict positif, 1 verdict négatif, 2 erreur d'entrée
ou d'usage, 3 incohérence interne.
"""

import argparse
import json
import logging
import sys
from pathlib import Path
from typing import Any, Optional, Sequence

import numpy as np

from . import __version__, get_logger, setup_logging
from .analysis import (
    all_lacunary_from,
    all_minor_specs,
    antidiagonal_reflect,
    build_scheme,
    cell_of,
    census,
    classify,
    final_minor_specs,
    initial_minor_specs,
    is_lacunary,
    lacunary_from,
    membership_test,
    random_cell_matrix,
    representative,
    reflect_spec,
    run_benchmark,
)
from .importers import get_importer
from .models import CapacityError, DomainError, InconsistencyError
from .utils.settings import get_settings
from .utils.system import log_system_info

logger = get_logger("cli")

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_INPUT_ERROR = 2
EXIT_INCONSISTENCY = 3


class InputError(Exception):
    """Fichier d'entrée illisible ou invalide."""


def _load(path: str, kind: str):
    result = get_importer(path, kind).import_file(Path(path))
    if not result.success:
        raise InputError(f"{path}: {result.error}")
    for warning in result.warnings:
        logger.warning(f"{path}: {warning}")
    return result.payload


def _emit(data: Any, text: str, fmt: str) -> None:
    """Écrit le résultat sur stdout (JSON trié ou texte)."""
    if fmt == "json":
        print(json.dumps(data, sort_keys=True, indent=2, ensure_ascii=False))
    else:
        print(text.rstrip("\n"))


# ---------------------------------------------------------------------------
# Commandes
# ---------------------------------------------------------------------------


def cmd_classify(args) -> int:
    M = _load(args.matrix, "matrix")
    if args.confirm:
        # Double chemin : réduction puis test des m·p mineurs
        cell_of(M)
    assignment = classify(M)
    data = assignment.to_dict()
    lines = [f"tnn: {'oui' if assignment.is_tnn else 'non'}"]
    if assignment.diagram is not None:
        lines.append("diagramme:")
        lines.extend(assignment.diagram.to_lines())
    lines.append("t:")
    lines.append(str(assignment.t_matrix))
    _emit(data, "\n".join(lines), args.format)
    return EXIT_OK if assignment.is_tnn else EXIT_NEGATIVE


def cmd_test(args) -> int:
    M = _load(args.matrix, "matrix")
    C = _load(args.diagram, "diagram")
    if args.scheme:
        scheme = _load(args.scheme, "scheme")
        if scheme.diagram != C:
            raise DomainError("Le schéma ne porte pas sur le diagramme fourni")
    else:
        scheme = build_scheme(C)

    report = membership_test(M, scheme)
    lines = []
    for r in report.per_box:
        status = "ok" if r.passed else "ÉCHEC"
        lines.append(f"{r.box} {r.spec.label()} = {r.value} (attendu {r.expected.value}) {status}")
    verdict = "appartient" if report.verdict else "n'appartient pas"
    lines.append(f"verdict: {verdict} à la cellule")
    _emit(report.to_dict(), "\n".join(lines), args.format)
    return EXIT_OK if report.verdict else EXIT_NEGATIVE


def cmd_census(args) -> int:
    result = census(args.m, args.p, det_stats=args.det_stats, per_diagram=args.list)
    lines = [f"diagrammes {args.m}x{args.p}: {result.total}"]
    if result.det_vanishing is not None:
        lines.append(f"cellules contenant le déterminant: {result.det_vanishing}")
    if result.per_diagram is not None:
        lines.extend(
            fp if flag is None else f"{fp} det={'0' if flag else '≠0'}"
            for fp, flag in result.per_diagram
        )
    _emit(result.to_dict(), "\n".join(lines), args.format)
    return EXIT_OK


def cmd_representative(args) -> int:
    C = _load(args.diagram, "diagram")
    if args.random_seed is None:
        M = representative(C)
    else:
        rng = np.random.default_rng(args.random_seed)
        M = random_cell_matrix(C, rng, get_settings().random_t_max)
    _emit(M.to_dict(), str(M), args.format)
    return EXIT_OK


def cmd_scheme(args) -> int:
    C = _load(args.diagram, "diagram")
    scheme = build_scheme(C)
    lines = [f"{box} {scheme.per_box[box]} -> {scheme.spec(box).label()}" for box in scheme.boxes()]
    _emit(scheme.to_dict(), "\n".join(lines), args.format)
    return EXIT_OK


def cmd_lacunary(args) -> int:
    C = _load(args.diagram, "diagram")
    if args.check is not None:
        try:
            decoded = json.loads(args.check)
        except json.JSONDecodeError as e:
            raise InputError(f"Suite invalide {args.check!r}: {e}") from e
        if not isinstance(decoded, list) or not all(
            isinstance(pt, list) and len(pt) == 2 and all(type(x) is int for x in pt)
            for pt in decoded
        ):
            raise InputError(f"Suite invalide {args.check!r}: liste de couples d'entiers attendue")
        points = [tuple(pt) for pt in decoded]
        ok = is_lacunary(C, points)
        _emit({"sequence": [list(pt) for pt in points], "lacunary": ok}, f"lacunaire: {ok}", args.format)
        return EXIT_OK if ok else EXIT_NEGATIVE

    if args.all:
        sequences = all_lacunary_from(C, args.j, args.beta)
    else:
        sequences = [lacunary_from(C, args.j, args.beta)]
    data = {
        "start": [args.j, args.beta],
        "sequences": [
            {"sequence": seq.to_list(), "minor": seq.spec.label()} for seq in sequences
        ],
    }
    _emit(data, "\n".join(f"{seq} -> {seq.spec.label()}" for seq in sequences), args.format)
    return EXIT_OK


def cmd_minors(args) -> int:
    builders = {
        "all": all_minor_specs,
        "initial": initial_minor_specs,
        "final": final_minor_specs,
    }
    specs = builders[args.kind](args.m, args.p)
    data: dict[str, Any] = {
        "m": args.m,
        "p": args.p,
        "kind": args.kind,
        "count": len(specs),
        "minors": [spec.label() for spec in specs],
    }
    if args.reflect:
        # Mineur de M^ρ (forme p×m) -> mineur de M
        data["reflected"] = [reflect_spec(spec, args.p, args.m).label() for spec in specs]
    _emit(data, "\n".join(data["minors"]), args.format)
    return EXIT_OK


def cmd_bench(args) -> int:
    log_system_info()
    result = run_benchmark(args.n, trials=args.trials, seed=args.seed)
    data = result.to_dict()
    text = result.table.to_string(index=False) + f"\naccélération: x{result.speedup:.1f}"

    if args.plot:
        from .visualization import benchmark_bar_chart

        png = benchmark_bar_chart(result)
        if png is None:
            logger.warning("matplotlib non disponible - graphique ignoré")
        else:
            Path(args.plot).write_bytes(png)
            data["plot"] = args.plot

    _emit(data, text, args.format)
    return EXIT_OK


def cmd_reflect(args) -> int:
    M = _load(args.matrix, "matrix")
    R = antidiagonal_reflect(M)
    _emit(R.to_dict(), str(R), args.format)
    return EXIT_OK


# ---------------------------------------------------------------------------
# Analyseur
# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    settings = get_settings()
    parser = argparse.ArgumentParser(
        prog="tnncell",
        description="Reconnaissance des cellules totalement positives par m·p mineurs",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="""
Exemples:
  python main.py classify matrice.json
  python main.py test matrice.json diagramme.txt
  python main.py census 3 3 --det-stats
  python main.py bench 8 --trials 3

Variable d'environnement:
  TNN_MAX_CELLS  remplace les gardes sur le nombre de cases
        """,
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument(
        "--format",
        choices=["json", "text"],
        default=settings.default_format,
        help=f"Format de sortie (défaut: {settings.default_format})",
    )
    parser.add_argument("--verbose", "-v", action="store_true", help="Logs détaillés (INFO)")
    parser.add_argument("--debug", action="store_true", help="Logs de débogage (DEBUG)")
    parser.add_argument("--log-dir", type=Path, default=None, help="Dossier des fichiers de log")

    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", help="Décide si une matrice est tnn et calcule sa cellule")
    p.add_argument("matrix", help="Fichier matrice JSON")
    p.add_argument("--confirm", action="store_true", help="Confirme par le test des m·p mineurs")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("test", help="Teste l'appartenance à la cellule d'un diagramme")
    p.add_argument("matrix", help="Fichier matrice JSON")
    p.add_argument("diagram", help="Diagramme ASCII ('#' noir, '.' blanc)")
    p.add_argument("--scheme", default=None, help="Schéma JSON remplaçant les suites par défaut")
    p.set_defaults(func=cmd_test)

    p = sub.add_parser("census", help="Compte les diagrammes de Cauchon m×p")
    p.add_argument("m", type=int)
    p.add_argument("p", type=int)
    p.add_argument("--det-stats", action="store_true", help="Cellules contenant le déterminant (m = p)")
    p.add_argument("--list", action="store_true", help="Liste les empreintes des diagrammes")
    p.set_defaults(func=cmd_census)

    p = sub.add_parser("representative", help="Matrice tnn de la cellule d'un diagramme")
    p.add_argument("diagram", help="Diagramme ASCII")
    p.add_argument("--random-seed", type=int, default=None, help="Valeurs t aléatoires reproductibles")
    p.set_defaults(func=cmd_representative)

    p = sub.add_parser("scheme", help="Exporte le schéma de mineurs par défaut d'un diagramme")
    p.add_argument("diagram", help="Diagramme ASCII")
    p.set_defaults(func=cmd_scheme)

    p = sub.add_parser("lacunary", help="Suites lacunaires partant d'une case")
    p.add_argument("diagram", help="Diagramme ASCII")
    p.add_argument("j", type=int, nargs="?", default=1)
    p.add_argument("beta", type=int, nargs="?", default=1)
    p.add_argument("--all", action="store_true", help="Toutes les suites (recherche exhaustive)")
    p.add_argument("--check", default=None, help="Vérifie une suite JSON, ex: '[[1,2],[3,3]]'")
    p.set_defaults(func=cmd_lacunary)

    p = sub.add_parser("minors", help="Liste des mineurs d'une matrice m×p")
    p.add_argument("m", type=int)
    p.add_argument("p", type=int)
    p.add_argument("--kind", choices=["all", "initial", "final"], default="all")
    p.add_argument("--reflect", action="store_true", help="Ajoute l'image par la réflexion antidiagonale")
    p.set_defaults(func=cmd_minors)

    p = sub.add_parser("reflect", help="Réflexion antidiagonale d'une matrice")
    p.add_argument("matrix", help="Fichier matrice JSON")
    p.set_defaults(func=cmd_reflect)

    p = sub.add_parser("bench", help="Compare le test m·p mineurs et l'oracle tous-mineurs")
    p.add_argument("n", type=int)
    p.add_argument("--trials", "-k", type=int, default=settings.bench_trials)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--plot", default=None, help="Écrit un graphique PNG")
    p.set_defaults(func=cmd_bench)

    return parser


def run_cli(argv: Optional[Sequence[str]] = None) -> int:
    """Point d'entrée testable : analyse argv et retourne le code de sortie."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        # argparse sort avec 2 sur erreur d'usage, 0 pour --help
        return int(e.code) if e.code is not None else EXIT_OK

    level = logging.DEBUG if args.debug else logging.INFO if args.verbose else logging.WARNING
    setup_logging(args.log_dir, level)

    try:
        return args.func(args)
    except InconsistencyError as e:
        logger.error(f"Incohérence interne: {e}")
        return EXIT_INCONSISTENCY
    except (InputError, DomainError, CapacityError) as e:
        print(f"Erreur: {e}", file=sys.stderr)
        return EXIT_INPUT_ERROR


def main() -> None:
    sys.exit(run_cli())


if __name__ == "__main__":
    main()
