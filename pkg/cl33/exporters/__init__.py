from .to_csv import ToCsv
from .to_table import ToTable
