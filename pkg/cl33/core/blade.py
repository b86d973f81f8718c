from .exceptions import BadInput, BadType, handler, typeChecker

GENERATORS = ('t1', 't2', 't3', 's1', 's2', 's3')
STANDARD_SQUARES = (1, 1, 1, -1, -1, -1)
FULL_MASK = 0b111111


def grade(mask):
    """
        :returns: number of generators in the blade mask
    """
    return bin(mask).count('1')


def reorder_sign(a, b):
    """
        Parity of the swaps needed to bring the generators of a·b into
            canonical order

        :param a: left blade mask
        :param b: right blade mask
        :returns: +1 or -1
    """
    a >>= 1
    swaps = 0
    while a:
        swaps += grade(a & b)
        a >>= 1
    return -1 if swaps & 1 else 1


def blade_text(mask):
    """
        Canonical text form of a blade, e.g. "t1t2s3"; the scalar blade is "1"
    """
    if mask == 0:
        return '1'
    return ''.join(GENERATORS[n] for n in range(6) if (mask >> n) & 1)


def parse_blade(text):
    """
        Parses a blade text form back to a (mask, sign) pair. Generators may
            appear in any order, the sign absorbs the reordering

        :param text: e.g. "t1t2", "s2t1" or "1"
        :returns: (mask, sign)
        :raises BadInput: unknown generator or a repeated generator
    """
    typeChecker('blade', text, str, 'blade text')
    text = text.strip()
    if text == '1':
        return 0, 1
    if len(text) == 0 or len(text) % 2:
        handler('blade', '{!r} is not a blade'.format(text))
        raise BadInput('{!r} is not a blade'.format(text))
    mask, sign = 0, 1
    for pos in range(0, len(text), 2):
        name = text[pos:pos + 2]
        if name not in GENERATORS:
            handler('blade', '{!r} is not a generator'.format(name))
            raise BadInput('{!r} is not a generator'.format(name))
        bit = 1 << GENERATORS.index(name)
        if mask & bit:
            handler('blade', 'generator {} repeated in {!r}'.format(name, text))
            raise BadInput('generator {} repeated in {!r}'.format(name, text))
        sign *= reorder_sign(mask, bit)
        mask |= bit
    return mask, sign


class MetricSignature:
    def __init__(self, squares=STANDARD_SQUARES):
        """
            Initialization - a diagonal metric over the fixed generator order

            :param squares: six values of +1/-1, the squares of t1..s3
        """
        if not isinstance(squares, (list, tuple)) or len(squares) != 6:
            handler(type(self).__name__, '{} is not six squares'.format(squares))
            raise BadType('a metric needs exactly 6 generator squares')
        for sq in squares:
            if sq not in (1, -1):
                handler(type(self).__name__, '{} is not +1/-1'.format(sq))
                raise BadInput('generator squares must be +1 or -1')
        self.__squares = tuple(int(sq) for sq in squares)
        self.__table = [[self._multiply(a, b) for b in range(64)]
                        for a in range(64)]

    @property
    def generator_order(self):
        return GENERATORS

    @property
    def squares(self):
        return self.__squares

    @property
    def is_standard(self):
        return self.__squares == STANDARD_SQUARES

    def _multiply(self, a, b):
        sign = reorder_sign(a, b)
        shared = a & b
        for n in range(6):
            if (shared >> n) & 1:
                sign *= self.__squares[n]
        return a ^ b, sign

    def product(self, a, b):
        """
            :returns: (mask, sign) of the product of two unit blades
        """
        return self.__table[a][b]

    def __eq__(self, other):
        return isinstance(other, MetricSignature) and \
            self.squares == other.squares

    def __hash__(self):
        return hash(self.__squares)

    def __repr__(self):
        return 'MetricSignature({})'.format(self.__squares)


METRIC = MetricSignature()


class Blade:
    def __init__(self, mask, sign=1):
        """
            Initialization - a signed canonical blade

            :param mask: 6-bit generator inclusion set (or blade text)
            :param sign: +1 or -1
        """
        if isinstance(mask, str):
            mask, parsed = parse_blade(mask)
            sign *= parsed
        typeChecker(type(self).__name__, mask, int, 'mask')
        if not 0 <= mask <= FULL_MASK:
            handler(type(self).__name__, '{} is outside 0..63'.format(mask))
            raise BadInput('blade mask {} outside 0..63'.format(mask))
        if sign not in (1, -1):
            handler(type(self).__name__, '{} is not a sign'.format(sign))
            raise BadInput('blade sign must be +1 or -1')
        self.__mask = mask
        self.__sign = sign

    @property
    def mask(self):
        return self.__mask

    @property
    def sign(self):
        return self.__sign

    @property
    def grade(self):
        return grade(self.__mask)

    def __eq__(self, other):
        return isinstance(other, Blade) and self.mask == other.mask and \
            self.sign == other.sign

    def __hash__(self):
        return hash((self.__mask, self.__sign))

    def __neg__(self):
        return Blade(self.__mask, -self.__sign)

    def __mul__(self, other):
        return blade_product(self, other)

    def __str__(self):
        return ('-' if self.__sign < 0 else '') + blade_text(self.__mask)

    def __repr__(self):
        return 'Blade({!r})'.format(str(self))


def blade_product(a, b, metric=METRIC):
    """
        Product of two canonical blades

        :param a: left Blade
        :param b: right Blade
        :param metric: the MetricSignature supplying generator squares
        :returns: the canonical Blade a·b
    """
    mask, sign = metric.product(a.mask, b.mask)
    return Blade(mask, sign * a.sign * b.sign)
