"""Command-line surface: subcommands reading and writing JSON sequence documents."""

import argparse
import logging
import sys
from fractions import Fraction
from typing import Optional, Sequence, TextIO

from pydantic import BaseModel

from eigen_sequences.cli.configs.cli_config import CliConfig
from eigen_sequences.cli.parsers.operator_chain_parser import OperatorChainParser
from eigen_sequences.cli.parsers.rational_parser import parse_rational
from eigen_sequences.cli.schemas.family_document import FamilyDocument
from eigen_sequences.cli.schemas.identity_report_document import IdentityReportDocument
from eigen_sequences.cli.schemas.poly_sequence_document import PolySequenceDocument
from eigen_sequences.cli.schemas.sequence_document import SequenceDocument
from eigen_sequences.configs.app_config import AppConfig
from eigen_sequences.domain.entities.fixed_family import FixedFamily
from eigen_sequences.domain.entities.fixed_family_kind import FixedFamilyKind
from eigen_sequences.domain.entities.identity_report import IdentityReport
from eigen_sequences.domain.entities.number_sequence import NumberSequence
from eigen_sequences.domain.entities.operator_chain import OperatorChain
from eigen_sequences.domain.entities.operator_spec import OperatorSpec
from eigen_sequences.domain.exceptions.eigen_sequences_error import EigenSequencesError
from eigen_sequences.domain.services.eigen_sequence_service import EigenSequenceService
from eigen_sequences.domain.services.identity_verification_service import IdentityVerificationService
from eigen_sequences.domain.services.operator_chain_service import OperatorChainService
from eigen_sequences.domain.services.sequence_catalog import SequenceCatalog
from eigen_sequences.domain.services.sequence_operators import gen_binomial
from eigen_sequences.domain.services.worpitzky_transform_service import WorpitzkyTransformService

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_USAGE_ERROR = 2

_FAMILY_KINDS = ("generic", "even-seed", "phi", "lucas-half", "il", "rev-l", "rev-i")


def _rational_argument(text: str) -> Fraction:
    """argparse type for exact rationals."""
    try:
        return parse_rational(text)
    except EigenSequencesError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from exc


class CommandLineInterface:
    """
    Parses arguments, runs exactly one subcommand and writes its result.

    Standard output receives only the deterministic payload; diagnostics go
    through logging to standard error.
    """

    def __init__(
        self,
        app_config: AppConfig,
        config: CliConfig,
        catalog: SequenceCatalog,
        chain_service: OperatorChainService,
        eigen_service: EigenSequenceService,
        worpitzky_service: WorpitzkyTransformService,
        identity_service: IdentityVerificationService,
        chain_parser: OperatorChainParser,
        stdin: Optional[TextIO] = None,
        stdout: Optional[TextIO] = None,
    ) -> None:
        """
        Initialize the interface with its services.

        Args:
            app_config: Program name and logging settings.
            config: Defaults and messages of the subcommands.
            catalog: Named sequences for --in.
            chain_service: Applies operator chains.
            eigen_service: Builds and checks fixed sequences.
            worpitzky_service: Worpitzky transform and worpification.
            identity_service: Identity sweeps.
            chain_parser: Parser for --op / --chain.
            stdin: Stream read for "--file -"; defaults to sys.stdin.
            stdout: Stream receiving results; defaults to sys.stdout.
        """
        self._app_config = app_config
        self._config = config
        self._catalog = catalog
        self._chain_service = chain_service
        self._eigen_service = eigen_service
        self._worpitzky_service = worpitzky_service
        self._identity_service = identity_service
        self._chain_parser = chain_parser
        self._stdin = stdin
        self._stdout = stdout

    def run(self, argv: Sequence[str]) -> int:
        """
        Execute one subcommand.

        Returns:
            0 on success, 1 when a fixed-point or identity check fails,
            2 on usage, parse or domain errors.
        """
        parser = self.create_parser()
        try:
            args = parser.parse_args(list(argv))
        except SystemExit as exc:
            return EXIT_OK if exc.code in (0, None) else EXIT_USAGE_ERROR

        self._configure_logging(args.verbose)
        try:
            return args.handler(args)
        except (EigenSequencesError, ValueError) as exc:
            logger.error("%s failed: %s", args.command, exc)
            return EXIT_USAGE_ERROR
        except OSError as exc:
            logger.error("%s could not read input: %s", args.command, exc)
            return EXIT_USAGE_ERROR

    def create_parser(self) -> argparse.ArgumentParser:
        """Build the argument parser with every subcommand registered."""
        parser = argparse.ArgumentParser(
            prog=self._app_config.program_name, description=self._app_config.description
        )
        parser.add_argument("--verbose", action="store_true", help="Log debug records to stderr.")
        subparsers = parser.add_subparsers(dest="command", required=True)

        input_parent = argparse.ArgumentParser(add_help=False)
        source = input_parent.add_mutually_exclusive_group(required=True)
        source.add_argument("--in", dest="name", help="Catalog sequence name.")
        source.add_argument("--file", help="SequenceDocument JSON path, or - for stdin.")
        input_parent.add_argument("--terms", type=int, help="Number of terms to use.")

        emit = subparsers.add_parser("emit", help="Emit a catalog sequence.")
        emit.add_argument("--name", "--in", dest="name", required=True, help="Catalog sequence name.")
        emit.add_argument("--terms", type=int, help="Number of terms.")
        emit.set_defaults(handler=self._handle_emit)

        transform = subparsers.add_parser("transform", parents=[input_parent], help="Apply a chain.")
        self._add_chain_argument(transform)
        transform.set_defaults(handler=self._handle_transform)

        fixed_check = subparsers.add_parser("fixed-check", parents=[input_parent], help="Check fixedness.")
        self._add_chain_argument(fixed_check)
        fixed_check.set_defaults(handler=self._handle_fixed_check)

        worpitzky = subparsers.add_parser("worpitzky", parents=[input_parent], help="Worpitzky transform.")
        worpitzky.set_defaults(handler=self._handle_worpitzky)

        worpify = subparsers.add_parser("worpify", parents=[input_parent], help="Solve W(a)(0) = b.")
        worpify.set_defaults(handler=self._handle_worpify)

        eval_poly = subparsers.add_parser("eval-poly", help="Evaluate a polynomial sequence.")
        eval_poly.add_argument("--file", required=True, help="PolySequenceDocument JSON path, or -.")
        eval_poly.add_argument("--at", type=_rational_argument, required=True, help="Evaluation point.")
        eval_poly.set_defaults(handler=self._handle_eval_poly)

        revert = subparsers.add_parser("revert", parents=[input_parent], help="Apply the Revert operator.")
        revert.set_defaults(handler=self._handle_revert)

        invert = subparsers.add_parser("invert", parents=[input_parent], help="Apply I^(x).")
        invert.add_argument("--x", type=_rational_argument, default=Fraction(1), help="Invert parameter.")
        invert.set_defaults(handler=self._handle_invert)

        identity = subparsers.add_parser("identity", help="Verify a named identity.")
        checks = identity.add_subparsers(dest="check", required=True)
        ff = checks.add_parser("ff", parents=[input_parent], help="Relation between b and L^(h,y)(b).")
        ff.add_argument("--h", type=_rational_argument, default=Fraction(1))
        ff.add_argument("--y", type=_rational_argument, default=Fraction(1))
        ff.add_argument("--image", help="Catalog name of a; defaults to L^(h,y)(b).")
        ff.set_defaults(handler=self._handle_identity_ff)
        catalan_motzkin = checks.add_parser("catalan-motzkin", help="sum_k C(i,2k) C_k = M_i.")
        catalan_motzkin.add_argument("--terms", type=int)
        catalan_motzkin.set_defaults(handler=self._handle_identity_catalan_motzkin)
        self_binomial = checks.add_parser("self-binomial", parents=[input_parent], help="L^(-1,2)(a) = a.")
        self_binomial.set_defaults(handler=self._handle_identity_self_binomial)

        family = subparsers.add_parser("family", help="Build a fixed sequence and its fixing chain.")
        family.add_argument("--kind", choices=_FAMILY_KINDS, required=True)
        family.add_argument("--h", type=_rational_argument, default=Fraction(1))
        family.add_argument("--y", type=_rational_argument, default=Fraction(0))
        family.add_argument("--x", type=_rational_argument, default=Fraction(0))
        family.add_argument("--alpha", type=_rational_argument, default=Fraction(1, 2))
        family.add_argument("--c", type=_rational_argument, help="Free constant for il with h = 1.")
        family.add_argument("--seed", help="Catalog name of the even seed for even-seed.")
        family.add_argument("--shift", type=int, default=0, help="Shift by 2*shift positions.")
        family.add_argument("--terms", type=int)
        family.set_defaults(handler=self._handle_family)
        return parser

    def _handle_emit(self, args: argparse.Namespace) -> int:
        sequence = self._catalog.get_sequence(args.name, self._terms(args))
        self._write(SequenceDocument.from_sequence(sequence))
        return EXIT_OK

    def _handle_transform(self, args: argparse.Namespace) -> int:
        sequence, offset = self._load_sequence(args)
        result = self._chain_service.apply_chain(self._chain(args), sequence)
        self._write(SequenceDocument.from_sequence(result.renamed(sequence.name), offset))
        return EXIT_OK

    def _handle_fixed_check(self, args: argparse.Namespace) -> int:
        sequence, _ = self._load_sequence(args)
        result = self._eigen_service.is_fixed(self._chain(args), sequence)
        if result:
            self._write_text(self._config.fixed_message)
            return EXIT_OK
        self._write_text(self._config.not_fixed_message.format(index=result.first_mismatch))
        return EXIT_CHECK_FAILED

    def _handle_worpitzky(self, args: argparse.Namespace) -> int:
        sequence, offset = self._load_sequence(args)
        self._write(PolySequenceDocument.from_poly_sequence(self._worpitzky_service.worpitzky(sequence), offset))
        return EXIT_OK

    def _handle_worpify(self, args: argparse.Namespace) -> int:
        sequence, offset = self._load_sequence(args)
        self._write(SequenceDocument.from_sequence(self._worpitzky_service.worpify(sequence), offset))
        return EXIT_OK

    def _handle_eval_poly(self, args: argparse.Namespace) -> int:
        document = PolySequenceDocument.model_validate_json(self._read(args.file))
        values = self._worpitzky_service.poly_eval_sequence(document.to_poly_sequence(), args.at)
        self._write(SequenceDocument.from_sequence(values, document.offset))
        return EXIT_OK

    def _handle_revert(self, args: argparse.Namespace) -> int:
        return self._apply_single(args, OperatorSpec.revert())

    def _handle_invert(self, args: argparse.Namespace) -> int:
        return self._apply_single(args, OperatorSpec.invert(args.x))

    def _handle_identity_ff(self, args: argparse.Namespace) -> int:
        seed, _ = self._load_sequence(args)
        if args.image is not None:
            image = self._catalog.get_sequence(args.image, len(seed))
        else:
            image = gen_binomial(seed, args.h, args.y)
        return self._report(self._identity_service.check_ff(seed, image, args.h, args.y, len(seed)))

    def _handle_identity_catalan_motzkin(self, args: argparse.Namespace) -> int:
        return self._report(self._identity_service.check_catalan_motzkin(self._terms(args)))

    def _handle_identity_self_binomial(self, args: argparse.Namespace) -> int:
        sequence, _ = self._load_sequence(args)
        return self._report(self._identity_service.check_self_binomial(sequence, len(sequence)))

    def _handle_family(self, args: argparse.Namespace) -> int:
        family = self._family(args)
        sequence = self._eigen_service.build(family, self._terms(args)).renamed(family.kind.value)
        chain = self._eigen_service.fixing_chain(family)
        self._write(FamilyDocument(
            kind=family.kind.value,
            chain=chain.describe(),
            sequence=SequenceDocument.from_sequence(sequence),
        ))
        return EXIT_OK

    def _family(self, args: argparse.Namespace) -> FixedFamily:
        """
        Raises:
            ValueError: If the parameters do not select a family member.
        """
        seed = None
        if args.kind == "even-seed":
            if args.seed is None:
                raise ValueError("--seed is required for --kind even-seed")
            seed = self._catalog.get_sequence(args.seed, self._terms(args))
        family = FixedFamily(
            FixedFamilyKind(args.kind),
            h=args.h, y=args.y, x=args.x, alpha=args.alpha, c=args.c, seed=seed,
        )
        if args.shift < 0:
            raise ValueError(f"--shift must be >= 0, got {args.shift}")
        if args.shift:
            family = FixedFamily(FixedFamilyKind.SHIFTED, base=family, m=args.shift)
        return family

    def _apply_single(self, args: argparse.Namespace, spec: OperatorSpec) -> int:
        sequence, offset = self._load_sequence(args)
        result = self._chain_service.apply_chain(OperatorChain.of(spec), sequence)
        self._write(SequenceDocument.from_sequence(result.renamed(sequence.name), offset))
        return EXIT_OK

    def _report(self, report: IdentityReport) -> int:
        self._write(IdentityReportDocument.from_report(report))
        return EXIT_OK if report.holds else EXIT_CHECK_FAILED

    def _load_sequence(self, args: argparse.Namespace) -> tuple[NumberSequence, int]:
        """
        Read the input sequence from the catalog or a document.

        Catalog inputs default to the configured number of terms; documents
        keep all their terms unless --terms is given.

        Returns:
            The sequence and the offset of its first term.
        """
        if args.name is not None:
            return self._catalog.get_sequence(args.name, self._terms(args)), 0
        document = SequenceDocument.model_validate_json(self._read(args.file))
        sequence = document.to_sequence()
        if args.terms is not None:
            sequence = sequence.truncate(args.terms)
        return sequence, document.offset

    def _chain(self, args: argparse.Namespace) -> OperatorChain:
        return self._chain_parser.parse(args.chain)

    def _terms(self, args: argparse.Namespace) -> int:
        terms = self._config.default_terms if args.terms is None else args.terms
        if terms < 0:
            raise ValueError(f"--terms must be >= 0, got {terms}")
        return terms

    def _read(self, path: str) -> str:
        if path == self._config.stdin_marker:
            return (self._stdin or sys.stdin).read()
        with open(path, encoding="utf-8") as handle:
            return handle.read()

    def _write(self, document: BaseModel) -> None:
        self._write_text(document.model_dump_json(indent=self._config.json_indent))

    def _write_text(self, text: str) -> None:
        stream = self._stdout or sys.stdout
        stream.write(text + "\n")

    def _add_chain_argument(self, subparser: argparse.ArgumentParser) -> None:
        group = subparser.add_mutually_exclusive_group(required=True)
        group.add_argument("--op", dest="chain", help="Operator chain, e.g. L:h=1,y=1.")
        group.add_argument("--chain", dest="chain", help="Operator chain, e.g. R,L:h=1,y=2.")

    def _configure_logging(self, verbose: bool) -> None:
        level = logging.DEBUG if verbose else self._app_config.log_level
        logging.basicConfig(level=level, format=self._app_config.log_format, stream=sys.stderr, force=True)
