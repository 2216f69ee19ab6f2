#!/usr/bin/env python3
"""
Pure Metacyclic Field Toolkit
Main entry point: classification, catalog, dataset verification and statistics
"""

import os
import sys
import logging
import argparse
from typing import Any, Dict, List, Optional

import ujson

from modules.config import ConfigManager, LoggingConfig, reload_configuration
from modules.arith import factorize
from modules.radicand import Radicand, coradicands, enumerate_normalized, homogeneous_components, normalize
from modules.invariants import compute_invariants, different_exponents, prime_roles
from modules.dpf import (
    admissible_types,
    cubic_type_by_name,
    dimension_bounds,
    eligibility_pattern,
    polya_candidates,
)
from modules.algebra import idempotents, kernel_line_census, primitive_ambiguous_orders, selftest
from modules.relations import (
    SUPPORTED_PRIMES,
    ValuationTriple,
    kobayashi_Qplus,
    scholz_check,
    scholz_cubic_types,
    triple_violations,
    unit_index_bound,
    walter_predict_VN,
    zeta_norm_density,
)
from modules.dataset import (
    FREQUENCY_COLUMNS,
    FieldRecord,
    catalog,
    frequency_table,
    load_dataset,
    range_counts,
    verify_dataset,
)
from modules.exceptions import QuinticFieldError

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2


def setup_logging(config: LoggingConfig):
    """Logs go to stderr so stdout carries only command output"""
    handlers: List[logging.Handler] = [logging.StreamHandler(sys.stderr)]
    if config.enable_file_logging and config.log_dir:
        os.makedirs(config.log_dir, exist_ok=True)
        handlers.append(logging.FileHandler(os.path.join(config.log_dir, "quintic.log")))
    logging.basicConfig(
        level=getattr(logging, config.level, logging.INFO),
        format=config.format,
        handlers=handlers,
        force=True
    )


class QuinticFieldApp:
    """Runs the analysis commands against one configuration"""

    def __init__(self, config: ConfigManager, unicode: Optional[bool] = None):
        self.config = config
        self.unicode = config.output.unicode if unicode is None else unicode
        self._records: Dict[str, List[FieldRecord]] = {}

    def records(self, dataset: Optional[str] = None) -> List[FieldRecord]:
        source = dataset or self.config.analysis.dataset_path
        key = source or "embedded"
        if key not in self._records:
            self._records[key] = load_dataset(source)
        return self._records[key]

    def _dump(self, payload: Any):
        print(ujson.dumps(payload, indent=self.config.output.json_indent, ensure_ascii=False))

    def classify(self, D: int, as_json: bool = False) -> int:
        """Full invariant report for one radicand"""
        radicand = Radicand.from_factorization(factorize(D, self.config.analysis.factor_cap))
        inv = compute_invariants(radicand)
        result = admissible_types(inv)
        polya = polya_candidates(inv)
        record = next((r for r in self.records() if r.D == inv.D.value), None)
        pattern = eligibility_pattern(inv, record.dpf_type if record else None)
        compatible = record is not None and result.contains(record.dpf_type)
        u = self.unicode

        if as_json:
            self._dump({
                "input": D,
                "normalized": inv.D.value,
                "species": inv.species.tag,
                "f4": inv.f4.format(),
                "discriminants": {"L": inv.dL.format(), "M": inv.dM.format(), "N": inv.dN.format()},
                "counters": inv.counters_dict(),
                "refined_species": inv.refined().to_dict(),
                "m": inv.m,
                "admissible_types": result.names,
                "polya": polya,
                "pattern": pattern.format(),
                "recorded_type": record.dpf_type.name if record else None,
                "recorded_compatible": compatible if record else None
            })
            return EXIT_OK

        label = {t.name: t.label(u) for t in result.admissible}
        bounds = dimension_bounds(inv)
        orders = primitive_ambiguous_orders(inv)
        different = {q: e for q, e in different_exponents(inv.D).items() if e}
        print(f"D = {inv.D.value}" + (f" (normalized from {D})" if inv.D.value != D else ""))
        print(f"factorization: {inv.D.factorization.format(u, lead=None)}")
        print(f"species: {inv.species.tag} (e0 = {inv.species.e0})")
        print(f"f4: {inv.f4.format(u)}")
        print(f"discriminants: dL = {inv.dL.format(u)}, dM = {inv.dM.format(u)}, dN = {inv.dN.format(u)}")
        print("counters: " + " ".join(f"{k}={v}" for k, v in inv.counters_dict().items()))
        print(f"refined species: {inv.refined()}")
        print(f"multiplicity: {inv.m}")
        print("prime roles: " + ", ".join(f"{r.q} {r.role} ({r.mod5})" for r in prime_roles(inv.D)))
        print("different exponents N/K: " + ", ".join(f"{q}:{e}" for q, e in different.items()))
        print(f"dimension bounds: A<={bounds.A} I<={bounds.I} R<={bounds.R}")
        print("ambiguous orders: " + " ".join(f"{k}={v}" for k, v in orders.items()))
        print(f"eligibility: {pattern.format(u)}")
        print("admissible: " + " ".join(label[name] for name in result.names))
        if result.reasons:
            print("excluded: " + ", ".join(f"{name} ({rule})" for name, rule in result.reasons))
        print("polya: " + " ".join(f"{label[name]}={'yes' if v else 'no'}" for name, v in polya.items()))
        if record is None:
            print("recorded type: none")
        else:
            verdict = "recorded-type-compatible" if compatible else "recorded-type-incompatible"
            print(f"recorded type: {record.dpf_type.label(u)} ({verdict})")
        return EXIT_OK

    def table(self, limit: int, start: int = 2, tsv: bool = False) -> int:
        frame = catalog(limit, self.records(), start=start, unicode=self.unicode,
                        workers=self.config.analysis.workers)
        if tsv:
            sys.stdout.write(frame.to_csv(sep="\t", index=False, lineterminator="\n"))
        else:
            print(frame.to_string(index=False))
        return EXIT_OK

    def verify(self, dataset: Optional[str] = None, as_json: bool = False, sweep: bool = True) -> int:
        report = verify_dataset(
            self.records(dataset),
            sweep_limit=self.config.analysis.sweep_limit if sweep else None,
            workers=self.config.analysis.workers
        )
        if as_json:
            self._dump(report.to_dict())
        else:
            print(report.format_text())
        return EXIT_OK if report.passed else EXIT_FAILURE

    def stats(self, D_max: Optional[int] = None, ranges: bool = False) -> int:
        columns = [D_max] if D_max is not None else FREQUENCY_COLUMNS
        frame = frequency_table(self.records(), columns, unicode=self.unicode)
        print(frame.to_string())
        if ranges:
            print()
            for label, count in range_counts(self.config.analysis.table_max).items():
                print(f"{label}: {count}")
        return EXIT_OK

    def density(self, t: int) -> int:
        print(zeta_norm_density(t))
        return EXIT_OK

    def normal_form(self, D: int, p: Optional[int] = None, below: Optional[int] = None,
                    as_json: bool = False) -> int:
        """Homogeneous components, co-radicands and normalized representative of D"""
        p = p or self.config.analysis.prime
        radicand = Radicand.from_factorization(factorize(D, self.config.analysis.factor_cap), p)
        normalized, k0 = normalize(radicand)
        components = homogeneous_components(radicand)
        values = coradicands(radicand)
        count = None
        if below is not None:
            count = len(enumerate_normalized(below, p, self.config.analysis.workers))

        if as_json:
            self._dump({
                "input": D,
                "p": p,
                "radicand": radicand.to_dict(),
                "components": components.to_dict(),
                "coradicands": values,
                "normalized": normalized.value,
                "k0": k0,
                "normalized_below": count
            })
            return EXIT_OK

        print(f"p = {p}")
        print(f"D = {radicand.value} = {radicand.factorization.format(self.unicode, lead=None)}")
        print("components: " + " ".join(f"{k}={v}" for k, v in components.to_dict().items()))
        print("co-radicands: " + " ".join(str(v) for v in values))
        print(f"normalized: {normalized.value} (k0 = {k0})")
        if count is not None:
            print(f"normalized radicands below {below}: {count}")
        return EXIT_OK

    def relations(self, V_L: int, V_M: Optional[int] = None, V_N: Optional[int] = None,
                  E: Optional[int] = None, p: Optional[int] = None) -> int:
        """Class number identities for the configured prime; exit 1 when a complete input violates one"""
        p = p or self.config.analysis.prime
        print(f"p = {p}")
        print(f"unit index bound: E <= {unit_index_bound(p)}")

        if p == 3:
            labels = [cubic_type_by_name(name).label(self.unicode) for name in scholz_cubic_types(V_L)]
            print("cubic types: " + " ".join(labels))
            if E is not None:
                print(f"predicted V_N: {walter_predict_VN(3, V_L, E)}")
            if V_N is None or E is None:
                return EXIT_OK
            consistent = scholz_check(V_L, V_N, E)
            print(f"scholz: {'ok' if consistent else 'violated'}")
            return EXIT_OK if consistent else EXIT_FAILURE

        if V_M is not None and V_N is not None and E is not None:
            violations = triple_violations(ValuationTriple(V_L, V_M, V_N, E))
            print("violations: " + (" ".join(violations) or "none"))
            return EXIT_FAILURE if violations else EXIT_OK
        if E is not None:
            print(f"predicted V_N: {walter_predict_VN(p, V_L, E)}")
        if V_M is not None:
            print(f"Q+ = {kobayashi_Qplus(V_L, V_M)}")
        return EXIT_OK

    def algebra(self, run_selftest: bool = False) -> int:
        if run_selftest:
            results = selftest()
            for name, passed in results:
                print(f"{'ok' if passed else 'FAILED':<7} {name}")
            return EXIT_OK if all(passed for _, passed in results) else EXIT_FAILURE

        for p in (5, 3):
            print(f"idempotents of F{p}[C{p - 1}]:")
            for j, element in enumerate(idempotents(p)):
                print(f"  psi_{j} = {list(element.coeffs)}")
        print("tau-stable lines in the N/M norm kernel: "
              + " ".join(str(v) for v in kernel_line_census()))
        return EXIT_OK


def create_sample_config():
    """Create a sample configuration file"""
    sample_config = {
        "analysis": {
            "prime": 5,
            "table_max": 1000,
            "dataset_path": None,
            "sweep_limit": 1000,
            "workers": 1,
            "factor_cap": 10**9
        },
        "output": {
            "unicode": False,
            "json_indent": 2
        },
        "logging": {
            "level": "INFO",
            "enable_file_logging": False,
            "log_dir": "./logs"
        }
    }

    config_file = "config.json"
    try:
        with open(config_file, 'w') as f:
            f.write(ujson.dumps(sample_config, indent=2))
        print(f"Sample configuration created: {config_file}")
        return config_file
    except Exception as e:
        print(f"Failed to create sample config: {e}", file=sys.stderr)
        return None


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        description="Classification of pure metacyclic fields Q(zeta_5, D^(1/5))"
    )
    parser.add_argument("--config", "-c", help="Configuration file path")
    parser.add_argument("--create-config", action="store_true", help="Create sample configuration file")
    parser.add_argument("--validate-config", action="store_true", help="Validate configuration and exit")
    output = argparse.ArgumentParser(add_help=False)
    output.add_argument("--unicode", action="store_true", default=None,
                        help="Render Greek type names, pattern glyphs and superscripts")

    commands = parser.add_subparsers(dest="command")

    classify = commands.add_parser("classify", parents=[output], help="Invariants and admissible types of one radicand")
    classify.add_argument("D", type=int, help="Radicand (normalized first)")
    classify.add_argument("--json", action="store_true", help="Emit a JSON object")

    table = commands.add_parser("table", parents=[output], help="Catalog of normalized radicands")
    table.add_argument("--max", type=int, dest="limit", help="Exclusive upper bound (default from config)")
    table.add_argument("--min", type=int, dest="start", default=2, help="Inclusive lower bound")
    table.add_argument("--tsv", action="store_true", help="Tab-separated output")

    verify = commands.add_parser("verify", parents=[output], help="Cross-check every derivable dataset column")
    verify.add_argument("--dataset", help="TSV file (default: embedded tables)")
    verify.add_argument("--json", action="store_true", help="Emit the report as JSON")
    verify.add_argument("--no-sweep", action="store_true", help="Skip the conductor multiplicity sweep")

    stats = commands.add_parser("stats", parents=[output], help="DPF type frequencies")
    stats.add_argument("--max", type=int, dest="D_max", help="Count rows with D < max only")
    stats.add_argument("--ranges", action="store_true", help="Also print normalized radicand counts")

    density = commands.add_parser("density", parents=[output], help="Density of conductors admitting zeta-norm types")
    density.add_argument("--t", type=int, required=True, help="Number of conductor primes other than 5")

    normal = commands.add_parser("normalize", parents=[output], help="Normalized radicand for the configured prime")
    normal.add_argument("D", type=int, help="Radicand")
    normal.add_argument("--prime", type=int, choices=SUPPORTED_PRIMES, help="Degree p (default from config)")
    normal.add_argument("--below", type=int, help="Also count normalized radicands below this bound")
    normal.add_argument("--json", action="store_true", help="Emit a JSON object")

    relations = commands.add_parser("relations", parents=[output], help="Class number identities for the configured prime")
    relations.add_argument("--VL", type=int, required=True, dest="V_L", help="p-valuation of h_L")
    relations.add_argument("--VM", type=int, dest="V_M", help="p-valuation of h_M (p = 5)")
    relations.add_argument("--VN", type=int, dest="V_N", help="p-valuation of h_N")
    relations.add_argument("--E", type=int, dest="E", help="Logarithmic subfield unit index")
    relations.add_argument("--prime", type=int, choices=SUPPORTED_PRIMES, help="Degree p (default from config)")

    algebra = commands.add_parser("algebra", parents=[output], help="Group ring idempotents and tau-orbit checks")
    algebra.add_argument("--selftest", action="store_true", help="Run the algebra property suite")

    return parser


def run(args: argparse.Namespace, parser: argparse.ArgumentParser) -> int:
    config = reload_configuration(args.config)
    setup_logging(config.logging)

    if args.validate_config:
        config.print_configuration_status()
        return EXIT_FAILURE if config.validate()["critical"] else EXIT_OK

    if not args.command:
        parser.print_usage(sys.stderr)
        return EXIT_USAGE

    validation = config.validate()
    if validation["critical"]:
        logger.critical("Invalid configuration:")
        for problem in validation["critical"]:
            logger.critical(f"  - {problem}")
        return EXIT_USAGE

    app = QuinticFieldApp(config, unicode=getattr(args, "unicode", None))
    if args.command == "classify":
        return app.classify(args.D, as_json=args.json)
    if args.command == "table":
        return app.table(args.limit or config.analysis.table_max, start=args.start, tsv=args.tsv)
    if args.command == "verify":
        return app.verify(args.dataset, as_json=args.json, sweep=not args.no_sweep)
    if args.command == "stats":
        return app.stats(args.D_max, ranges=args.ranges)
    if args.command == "density":
        return app.density(args.t)
    if args.command == "normalize":
        return app.normal_form(args.D, p=args.prime, below=args.below, as_json=args.json)
    if args.command == "relations":
        return app.relations(args.V_L, args.V_M, args.V_N, args.E, p=args.prime)
    return app.algebra(run_selftest=args.selftest)


def main(argv: Optional[List[str]] = None) -> int:
    """Main entry point"""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else EXIT_USAGE

    if args.create_config:
        return EXIT_OK if create_sample_config() else EXIT_FAILURE

    try:
        return run(args, parser)
    except QuinticFieldError as e:
        logger.error(f"{e}")
        return EXIT_USAGE
    except KeyboardInterrupt:
        logger.info("Interrupted by user")
        return EXIT_FAILURE


if __name__ == "__main__":
    sys.exit(main())
