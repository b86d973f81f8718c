import csv

from ..core.exceptions import BadType, handler
from ..waves.packet import SampledField

CSV_HEADER = ['u',
              'ReE1', 'ImE1', 'ReE2', 'ImE2', 'ReE3', 'ImE3',
              'ReB1', 'ImB1', 'ReB2', 'ImB2', 'ReB3', 'ImB3']


class ToCsv:
    def __init__(self, fmt='{:.17g}'):
        """
            Sets up the CSV writer

            :param fmt: number format; the default round-trips doubles
        """
        self.fmt = fmt

    def rows(self, sampled):
        """
            :returns: generator of formatted rows, header first
        """
        yield CSV_HEADER
        for row in sampled.rows():
            yield [self.fmt.format(value) for value in row]

    def to_csv(self, sampled, filepath='packet.csv'):
        """
            Exports a sampled field to the file specified

            :param sampled: SampledField
            :param filepath: the location to write the CSV file to
        """
        if not isinstance(sampled, SampledField):
            handler(type(self).__name__, '{!r} is not a SampledField'.format(
                sampled))
            raise BadType('ToCsv exports SampledField objects')
        with open(filepath, 'w', newline='') as fio:
            writer = csv.writer(fio, lineterminator='\n')
            writer.writerows(self.rows(sampled))
