from fractions import Fraction
import json
import numbers

from .config import ENGINE_VERSION, REPORT_VERSION, get_tolerance
from .exceptions import BadInput, handler, categoryChecker, typeChecker
from .ring import RATIONAL

STATUSES = ('pass', 'fail', 'info')


def _residual_of(value):
    """
        Reduces a residual object to (max_abs, exact_ring, exact_zero)
    """
    if hasattr(value, 'max_abs') and hasattr(value, 'is_zero'):
        exact = getattr(value, 'ring', RATIONAL) == RATIONAL
        zero = value.is_zero(0.0) if not exact else value.is_zero()
        return value.max_abs(), exact, zero
    if isinstance(value, (int, Fraction)) and not isinstance(value, bool):
        return abs(float(value)), True, value == 0
    if isinstance(value, numbers.Number):
        return abs(complex(value)), False, value == 0
    if isinstance(value, (list, tuple)):
        worst, exact, zero = 0.0, True, True
        for entry in value:
            r, e, z = _residual_of(entry)
            worst = max(worst, r)
            exact = exact and e
            zero = zero and z
        return worst, exact, zero
    handler('report', '{!r} cannot be measured'.format(value))
    raise BadInput('cannot measure a residual of type {}'.format(type(value)))


class Check:
    def __init__(self, name, status, residual=None, exact_zero=False,
                 tolerance=None, detail=None):
        """
            Initialization - one named entry of a verification report

            :param name: check name
            :param status: pass, fail or info
            :param residual: max-abs residual (float) or None
            :param exact_zero: True when the residual vanished exactly
            :param tolerance: tolerance the residual was judged against
            :param detail: optional JSON-serializable context
        """
        typeChecker(type(self).__name__, name, str, 'name')
        categoryChecker(type(self).__name__, status, STATUSES, 'status')
        self.name = name
        self.status = status
        self.residual = None if residual is None else float(residual)
        self.exact_zero = bool(exact_zero)
        self.tolerance = tolerance
        self.detail = detail

    @classmethod
    def info(cls, name, detail=None, residual=None):
        return cls(name, 'info', residual=residual, detail=detail)

    @classmethod
    def flag(cls, name, ok, detail=None):
        """
            A boolean check; residual is 0 when it holds and 1 otherwise
        """
        return cls(name, 'pass' if ok else 'fail', residual=0.0 if ok else 1.0,
                   exact_zero=bool(ok), detail=detail)

    @property
    def passed(self):
        return self.status != 'fail'

    def get_dict(self):
        out = {
            'name': self.name,
            'status': self.status,
            'residual': 'exact-zero' if self.exact_zero else self.residual,
            'exact_zero': self.exact_zero,
            'tolerance': self.tolerance,
        }
        if self.detail is not None:
            out['detail'] = self.detail
        return out

    def __repr__(self):
        return 'Check({!r}, {!r}, residual={!r})'.format(
            self.name, self.status, self.residual)


def measure(name, value, tol=None, detail=None):
    """
        Judges a residual: exact-ring residuals must vanish exactly, double
            ring residuals must stay within tol

        :param name: check name
        :param value: Multivector, MultivectorField, TrigPoly, number or a
            sequence of those
        :param tol: tolerance for double residuals (default: configured)
        :param detail: optional context for the report
        :returns: a Check
    """
    tol = get_tolerance() if tol is None else tol
    residual, exact, zero = _residual_of(value)
    if exact:
        ok = zero
    else:
        ok = residual <= tol
    return Check(name, 'pass' if ok else 'fail', residual=residual,
                 exact_zero=zero, tolerance=None if exact else tol,
                 detail=detail)


def prefixed(prefix, checks):
    """
        Renames checks to prefix.name, in place
    """
    for check in checks:
        check.name = '{}.{}'.format(prefix, check.name)
    return checks


class VerificationReport:
    def __init__(self, command, seed=None, checks=None):
        """
            Initialization - the machine readable outcome of one command

            :param command: command name
            :param seed: random seed, if the command used one
            :param checks: optional initial list of Check entries
        """
        self.command = command
        self.seed = seed
        self.__checks = []
        for check in checks or []:
            self.add(check)

    @property
    def checks(self):
        return list(self.__checks)

    def add(self, check):
        typeChecker(type(self).__name__, check, Check, 'check')
        self.__checks.append(check)
        return check

    def extend(self, checks):
        for check in checks:
            self.add(check)

    def get(self, name):
        for check in self.__checks:
            if check.name == name:
                return check
        return None

    @property
    def status(self):
        return 'pass' if all(c.passed for c in self.__checks) else 'fail'

    @property
    def passed(self):
        return self.status == 'pass'

    @property
    def exit_code(self):
        return 0 if self.passed else 1

    def failures(self):
        return [c for c in self.__checks if not c.passed]

    def get_dict(self):
        return {
            'report_version': REPORT_VERSION,
            'command': self.command,
            'engine_version': ENGINE_VERSION,
            'seed': self.seed,
            'status': self.status,
            'checks': [c.get_dict() for c in self.__checks],
        }

    def to_dict(self):
        return self.get_dict()

    def to_str(self):
        """
            :returns: deterministic JSON text of the report
        """
        return json.dumps(self.get_dict(), indent=4)

    def to_file(self, filename):
        """
            saves the report as JSON to the file specified by filename
        """
        with open(filename, 'w', newline='\n') as fio:
            fio.write(self.to_str())
            fio.write('\n')

    @classmethod
    def from_dict(cls, data):
        report = cls(data['command'], seed=data.get('seed'))
        for entry in data.get('checks', []):
            residual = entry.get('residual')
            exact = entry.get('exact_zero', residual == 'exact-zero')
            report.add(Check(entry['name'], entry['status'],
                             residual=0.0 if residual == 'exact-zero'
                             else residual,
                             exact_zero=exact,
                             tolerance=entry.get('tolerance'),
                             detail=entry.get('detail')))
        return report

    @classmethod
    def from_str(cls, text):
        return cls.from_dict(json.loads(text))
