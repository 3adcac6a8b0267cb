import json

from django.core.management.base import BaseCommand, CommandError

from core.errors import all_errors
from kernel.errors.custom_error import ErrorBase, custom_exception_handler
from quantum_harmonic.experiments import (
    load_config,
    run,
    suite,
    write_report,
)
from quantum_harmonic.experiments.runner import SUITE
from quantum_harmonic.models.helper.enums import Experiment_Choices

ERRORS = 'errors'


class Command(BaseCommand):
    help = 'Run quantum harmonic analysis experiments and write reports'
    requires_system_checks = []

    def add_arguments(self, parser):
        parser.add_argument(
            'subcommand',
            choices=[*Experiment_Choices.values, SUITE, ERRORS],
        )
        parser.add_argument('--config', help='YAML experiment configuration')
        parser.add_argument('--out', help='Report directory')
        parser.add_argument('--seed', type=int, help='Root random seed')

    def handle(self, *args, **options):
        subcommand = options['subcommand']
        if subcommand == ERRORS:
            self.list_errors()
            return

        context = {'experiment': subcommand, 'config': options['config']}
        try:
            config = load_config(
                options['config'], options['seed'], options['out']
            )
            if subcommand == SUITE:
                report, parts = suite(config)
            else:
                report, parts = run(subcommand, config), []
            for part in parts:
                write_report(part, config.output_dir)
            paths = write_report(report, config.output_dir)
        except ErrorBase as exc:
            payload = custom_exception_handler(exc, context)
            self.stderr.write(json.dumps(payload, indent=2))
            raise CommandError(
                exc.message, returncode=payload['exit_code']
            ) from exc

        self.print_verdicts(report)
        self.stdout.write(f'report: {paths[0]}')
        if not report.passed:
            failed = ', '.join(v.name for v in report.failed_verdicts())
            raise CommandError(f'failed: {failed}', returncode=1)

    def print_verdicts(self, report):
        for verdict in report.verdicts:
            line = (
                f'{verdict.name}: {verdict.value!r} {verdict.comparison} '
                f'{verdict.tolerance!r}'
            )
            if verdict.passed:
                self.stdout.write(self.style.SUCCESS(f'PASS {line}'))
            elif verdict.primary:
                self.stdout.write(self.style.ERROR(f'FAIL {line}'))
            else:
                self.stdout.write(self.style.WARNING(f'WARN {line}'))
        for warning in report.warnings:
            self.stdout.write(self.style.WARNING(warning))

    def list_errors(self):
        for error in sorted(all_errors, key=lambda e: e.code):
            data = error.to_representation()
            self.stdout.write(
                f"{data['code']}  {data['title']:<24} exit {data['status']}"
                f"  {data['detail']}"
            )
