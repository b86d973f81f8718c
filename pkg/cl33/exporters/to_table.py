from tabulate import tabulate

from ..core.exceptions import BadType, handler
from ..core.report import VerificationReport


class ToTable:
    def __init__(self, tablefmt='simple', failures_only=False):
        """
            Sets up the human readable summary of a report

            :param tablefmt: any tabulate table format
            :param failures_only: list only failing entries
        """
        self.tablefmt = tablefmt
        self.failures_only = failures_only

    def to_str(self, report):
        """
            :param report: VerificationReport
            :returns: a table of name, status, residual and tolerance,
                followed by the overall status
        """
        if not isinstance(report, VerificationReport):
            handler(type(self).__name__, '{!r} is not a VerificationReport'
                    .format(report))
            raise BadType('ToTable summarizes VerificationReport objects')
        rows = []
        for check in report.checks:
            if self.failures_only and check.passed:
                continue
            residual = 'exact-zero' if check.exact_zero else check.residual
            rows.append([check.name, check.status, residual, check.tolerance])
        table = tabulate(rows, headers=['check', 'status', 'residual',
                                        'tolerance'],
                         tablefmt=self.tablefmt)
        return '{}\n\n{}: {} ({} checks, {} failed)'.format(
            table, report.command, report.status, len(report.checks),
            len(report.failures()))
