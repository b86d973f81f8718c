import logging

logger = logging.getLogger('cl33')


class BadInput(Exception):
    pass


class BadType(Exception):
    pass


class RingMismatch(Exception):
    pass


class DomainError(Exception):
    pass


class ParityError(Exception):
    pass


class NonConvergence(Exception):
    pass


class Undersampled(Exception):
    pass


class NonResonant(Exception):
    pass


class ParseError(Exception):
    def __init__(self, msg, offset=0):
        """
            Initialization - a parse failure at a byte offset

            :param msg: description of the failure
            :param offset: byte offset into the parsed text
        """
        super().__init__('{} (at byte {})'.format(msg, offset))
        self.msg = msg
        self.offset = offset


def handler(caller, msg, level=logging.WARNING):
    """
        Logs a debug/warning/error message
        :param caller: the entity that called this function
        :param msg: the message to log
        :param level: logging level for the message
    """
    logger.log(level, '[{}] - {}'.format(caller, msg))


def typeChecker(caller, testee, type, field):
    """
        Verifies that the tested object is of the correct type
        :param caller: the entity that called this function (used for error
            messages)
        :param testee: the element to test
        :param type: the type (or tuple of types) the element should be
        :param field: what the element is to be used as (used for error
            messages)
        :raises BadType: error denoting the testee element is not of the
            correct type
    """
    if isinstance(testee, bool) or not isinstance(testee, type):
        handler(caller, '{} [{}] is not a {}'.format(testee, field,
                                                     str(type)))
        raise BadType('{} must be {}'.format(field, type))


def typeCheckerArray(caller, testee, type, field, length=None):
    """
        Verifies that the tested object is a sequence of the correct type
        :param caller: the entity that called this function (used for error
            messages)
        :param testee: the element to test
        :param type: the type every entry should be
        :param field: what the element is to be used as (used for error
            messages)
        :param length: required number of entries, if any
        :raises BadType: error denoting the testee element is not of the
            correct type
    """
    if not isinstance(testee, (list, tuple)):
        handler(caller, '{} [{}] is not a {}'.format(testee, field,
                                                     "sequence"))
        raise BadType('{} must be a sequence'.format(field))
    if length is not None and len(testee) != length:
        handler(caller, '{} [{}] does not have {} entries'.format(
            testee, field, length))
        raise BadType('{} must have {} entries'.format(field, length))
    for entry in testee:
        if isinstance(entry, bool) or not isinstance(entry, type):
            handler(caller, '{} [{}] is not a {}'.format(
                testee, field, "sequence of " + str(type)))
            raise BadType('{} must hold {}'.format(field, type))


def categoryChecker(caller, testee, valid, field):
    """
        Verifies that the tested object is one of a set of valid values
        :param caller: the entity that called this function (used for error
            messages)
        :param testee: the element to test
        :param valid: a list of valid values for the testee
        :param field: what the element is to be used as (used for error
            messages)
        :raises BadInput: error denoting the testee element is not one of
            the valid options
    """
    if testee not in valid:
        handler(caller, '{} not a valid value for {}'.format(testee, field))
        raise BadInput('{} not a valid value for {}'.format(testee, field))
